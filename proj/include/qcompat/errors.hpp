// Copyright 2026 The qcompat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOMPAT_ERRORS_HPP
#define QCOMPAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcompat {

// Raised when an operation would exceed a hard size cap (dense matrices,
// exhaustive term lists). Distinct from invalid_argument so callers can map
// "too big" to a different exit path than "malformed".
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcompat

#endif
