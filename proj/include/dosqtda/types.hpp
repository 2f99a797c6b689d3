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

#ifndef DOSQTDA_TYPES_HPP_
#define DOSQTDA_TYPES_HPP_

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dosqtda {

// Bit q of a mask is qubit q, which is vertex q+1. Basis-state index == mask.
using Mask = std::uint64_t;
using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 63;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool parity(Mask m) { return (std::popcount(m) & 1) != 0; }

/// Failure that carries the pipeline stage it came from.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace dosqtda

#endif  // DOSQTDA_TYPES_HPP_
