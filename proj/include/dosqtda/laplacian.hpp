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


#ifndef DOSQTDA_LAPLACIAN_HPP_
#define DOSQTDA_LAPLACIAN_HPP_

#include <span>

#include "dosqtda/complex.hpp"
#include "dosqtda/pauli.hpp"

namespace dosqtda {

/// Largest register for which projectors are expanded into Pauli strings.
inline constexpr int kMaxProjectorQubits = 24;

/// B = X_1 + Z_1 X_2 + Z_1 Z_2 X_3 + ...
PauliSum boundary_operator(int n);

/// Sum of |b><b| over `basis`, expanded into Z-strings by a Walsh-Hadamard transform.
PauliSum diagonal_projector(std::span<const Mask> basis, int n);

struct Laplacian {
    PauliSum op;
    int k = 0;
    std::size_t s_k = 0;  // |S_k|, the rank of the outer projector

    bool empty_block() const { return s_k == 0; }
};

/// P_{G,k} B P_G B P_{G,k}, built by Pauli-sum products.
Laplacian combinatorial_laplacian(const SimplicialComplex& complex, int k);

}  // namespace dosqtda

#endif  // DOSQTDA_LAPLACIAN_HPP_
