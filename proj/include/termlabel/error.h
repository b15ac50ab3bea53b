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

#ifndef TERMLABEL_ERROR_H_
#define TERMLABEL_ERROR_H_

#include <stdexcept>
#include <string>

namespace termlabel {

// Fatal error raised by any module. The code decides the CLI exit status:
// kUsage maps to 2 (bad flags, missing paths), everything else to 1.
class Error : public std::runtime_error {
 public:
  enum class Code { kUsage, kNotFound, kInvalidData, kFailedPrecondition };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace termlabel

#endif  // TERMLABEL_ERROR_H_
