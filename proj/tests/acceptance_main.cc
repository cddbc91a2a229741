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

#include <iostream>

#include "holant6v/acceptance.h"

int main() {
    holant6v::Config cfg = holant6v::load_config_from_env();
    bool all = true;
    holant6v::run_acceptance(cfg, [&](const holant6v::CriterionResult &r) {
        std::cout << holant6v::format_result(r) << std::endl;
        all = all && r.passed;
    });
    std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
