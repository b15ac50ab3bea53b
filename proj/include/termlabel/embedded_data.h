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

#ifndef TERMLABEL_EMBEDDED_DATA_H_
#define TERMLABEL_EMBEDDED_DATA_H_

#include <string_view>

namespace termlabel {
namespace embedded {

// Contents of a file from data/ compiled into the library, or an empty view
// for unknown names.
std::string_view Get(std::string_view name);

}  // namespace embedded
}  // namespace termlabel

#endif  // TERMLABEL_EMBEDDED_DATA_H_
