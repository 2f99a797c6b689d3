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


#include "dosqtda/laplacian.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dosqtda {

PauliSum boundary_operator(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("boundary operator needs 1 <= n <= 63");
    PauliSum b(n);
    for (int i = 0; i < n; ++i) b.add(PauliKey{Mask{1} << i, (Mask{1} << i) - 1}, 1.0);
    return b;
}

PauliSum diagonal_projector(std::span<const Mask> basis, int n) {
    if (n < 1 || n > kMaxProjectorQubits) throw std::invalid_argument("projector register too large");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> d(dim, 0.0);
    for (Mask b : basis) {
        if (b >= dim) throw std::invalid_argument("basis index out of range");
        d[b] = 1.0;
    }
    // In-place fast Walsh-Hadamard transform: d[z] <- sum_b (-1)^{|b&z|} d[b].
    for (std::size_t h = 1; h < dim; h <<= 1)
        for (std::size_t i = 0; i < dim; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                double a = d[j], c = d[j + h];
                d[j] = a + c;
                d[j + h] = a - c;
            }
    PauliSum p(n);
    const double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t z = 0; z < dim; ++z)
        if (std::abs(d[z] * scale) > kPruneTolerance) p.add(PauliKey{0, z}, d[z] * scale);
    return p;
}

Laplacian combinatorial_laplacian(const SimplicialComplex& complex, int k) {
    const int n = complex.n_vertices();
    if (n > kMaxProjectorQubits) throw std::invalid_argument("complex too large for projector expansion");
    auto s_k = projector_basis(complex, k);
    Laplacian out;
    out.k = k;
    out.s_k = s_k.size();
    if (s_k.empty()) {
        out.op = PauliSum(n);
        return out;
    }
    PauliSum pk = diagonal_projector(s_k, n);
    PauliSum pg = diagonal_projector(complex.simplices(), n);
    PauliSum b = boundary_operator(n);
    PauliSum op = pk * b * pg * b * pk;
    PauliSum::Terms real_terms;
    for (const auto& [key, c] : op.terms()) real_terms.emplace(key, cplx{c.real(), 0.0});
    out.op = PauliSum(n, std::move(real_terms));
    return out;
}

}  // namespace dosqtda
