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

#ifndef HOLANT6V_ACCEPTANCE_H
#define HOLANT6V_ACCEPTANCE_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "holant6v/io.h"

namespace holant6v {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance checks in order, reporting each one to `on_result`
/// as soon as it finishes.
std::vector<CriterionResult> run_acceptance(const Config &cfg,
                                            const std::function<void(const CriterionResult &)> &on_result = {});

std::string format_result(const CriterionResult &r);

}  // namespace holant6v

#endif
