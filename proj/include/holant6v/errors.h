// Copyright 2026 The holant6v Authors
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

#ifndef HOLANT6V_ERRORS_H
#define HOLANT6V_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace holant6v {

/// Malformed input: parse failures, invalid grids, precondition violations
/// on caller-supplied data. The CLI maps these to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact division by zero in the scalar field.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {
    }
};

/// A computation was refused because it exceeds a configured cap
/// (brute-force edge cap, contraction rank cap). CLI exit code 1.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A grid failed validation. Carries one diagnostic per offending port.
struct ValidationError : InputError {
    explicit ValidationError(std::vector<std::string> diagnostics);
    std::vector<std::string> diagnostics;
};

}  // namespace holant6v

#endif
