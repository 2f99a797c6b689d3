// Copyright 2026 The dosqtda Authors
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


#ifndef DOSQTDA_LBFGS_HPP_
#define DOSQTDA_LBFGS_HPP_

#include <functional>
#include <vector>

namespace dosqtda {

struct LbfgsOptions {
    int max_iterations = 100000;
    double grad_tol = 1e-8;
    int memory = 10;
};

struct LbfgsResult {
    std::vector<double> x;
    double f = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool converged = false;  // gradient test or `stop` fired
};

/// Fills `grad` and returns f(x).
using Objective = std::function<double(const std::vector<double>& x, std::vector<double>& grad)>;

/// Limited-memory BFGS with Armijo backtracking. `stop`, when given, is polled
/// after every accepted step and ends the search early when it returns true.
LbfgsResult lbfgs_minimize(const Objective& fg, std::vector<double> x0, const LbfgsOptions& options,
                           const std::function<bool(const std::vector<double>&)>& stop = {});

}  // namespace dosqtda

#endif  // DOSQTDA_LBFGS_HPP_
