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

#ifndef DOSQTDA_KERNELS_HPP_
#define DOSQTDA_KERNELS_HPP_

#include <array>
#include <span>
#include <vector>

#include "dosqtda/pauli.hpp"

// Hot loops in two flavours. `serial` is the reference used by tests;
// `parallel` is the OpenMP version used by the library. Both produce
// bit-identical results: parallel regions only compute independent pieces and
// every floating-point reduction happens afterwards in serial order.
namespace dosqtda::kernels {

using Gate1q = std::array<cplx, 4>;  // row-major 2x2

namespace serial {

PauliSum multiply(const PauliSum& a, const PauliSum& b);

/// For each j < i: the commutator key of basis[i] with basis[j], or nothing.
std::vector<std::optional<PauliKey>> commutator_row(std::span<const PauliKey> basis, std::size_t i);

void apply_1q(std::span<cplx> psi, int q, const Gate1q& u);
void apply_cnot(std::span<cplx> psi, int control, int target);
void apply_pauli(std::span<cplx> psi, const PauliKey& p);

}  // namespace serial

namespace parallel {

PauliSum multiply(const PauliSum& a, const PauliSum& b);
std::vector<std::optional<PauliKey>> commutator_row(std::span<const PauliKey> basis, std::size_t i);
void apply_1q(std::span<cplx> psi, int q, const Gate1q& u);
void apply_cnot(std::span<cplx> psi, int control, int target);
void apply_pauli(std::span<cplx> psi, const PauliKey& p);

}  // namespace parallel

}  // namespace dosqtda::kernels

#endif  // DOSQTDA_KERNELS_HPP_
