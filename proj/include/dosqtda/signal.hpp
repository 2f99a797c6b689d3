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


#ifndef DOSQTDA_SIGNAL_HPP_
#define DOSQTDA_SIGNAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dosqtda/types.hpp"

namespace dosqtda {

struct SignalMeta {
    std::string protocol = "exact";
    std::int64_t shots = 0;  // 0 means analytic
    double p1 = 0.0;
    double p2 = 0.0;
    std::uint64_t seed = 0;
};

/// Sampled S(t) = tr exp(-i H t) on a uniform grid starting at t = 0.
struct TraceSignal {
    std::vector<double> times;
    std::vector<cplx> values;
    SignalMeta meta;

    std::size_t size() const { return times.size(); }
};

}  // namespace dosqtda

#endif  // DOSQTDA_SIGNAL_HPP_
