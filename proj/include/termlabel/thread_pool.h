// Copyright 2026 The termlabel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TERMLABEL_THREAD_POOL_H_
#define TERMLABEL_THREAD_POOL_H_

#include <cstddef>
#include <functional>

namespace termlabel {

// Resolves a --threads value: 0 means available parallelism.
int ResolveThreads(int requested);

// Runs fn(i, worker) for i in [0, n) on `threads` workers (worker in
// [0, threads)). Items are handed out dynamically; the first exception thrown
// by fn is rethrown after all workers stop.
void ParallelFor(size_t n, int threads,
                 const std::function<void(size_t i, int worker)>& fn);

}  // namespace termlabel

#endif  // TERMLABEL_THREAD_POOL_H_
