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

#include "dosqtda/kernels.hpp"

#include <cstdint>
#include <utility>

namespace dosqtda::kernels {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Below this many amplitudes the fork/join overhead dominates.
constexpr std::int64_t kParallelAmplitudes = std::int64_t{1} << 14;

struct Term {
    PauliKey key;
    cplx coeff;
};

std::vector<Term> flatten(const PauliSum& s) {
    std::vector<Term> out;
    out.reserve(s.size());
    for (const auto& [k, c] : s.terms()) out.push_back({k, c});
    return out;
}

inline Term term_product(const Term& a, const Term& b) {
    PauliKey c{a.key.x ^ b.key.x, a.key.z ^ b.key.z};
    return {c, a.coeff * b.coeff * kIPow[product_phase(a.key, b.key)]};
}

inline std::int64_t insert_zero_bit(std::int64_t k, int q) {
    std::int64_t low = k & ((std::int64_t{1} << q) - 1);
    return ((k >> q) << (q + 1)) | low;
}

inline cplx pauli_factor(const PauliKey& p, Mask b) {
    cplx f = kIPow[p.y_count() & 3];
    return parity(b & p.z) ? -f : f;
}

}  // namespace

namespace serial {

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
    auto ta = flatten(a), tb = flatten(b);
    PauliSum out(std::max(a.n_qubits(), b.n_qubits()));
    for (const auto& x : ta)
        for (const auto& y : tb) {
            Term t = term_product(x, y);
            out.add(t.key, t.coeff);
        }
    out.prune();
    return out;
}

std::vector<std::optional<PauliKey>> commutator_row(std::span<const PauliKey> basis, std::size_t i) {
    std::vector<std::optional<PauliKey>> row(i);
    for (std::size_t j = 0; j < i; ++j)
        if (anticommutes(basis[i], basis[j])) row[j] = PauliKey{basis[i].x ^ basis[j].x, basis[i].z ^ basis[j].z};
    return row;
}

void apply_1q(std::span<cplx> psi, int q, const Gate1q& u) {
    const std::int64_t half = static_cast<std::int64_t>(psi.size() / 2);
    const std::int64_t bit = std::int64_t{1} << q;
    for (std::int64_t k = 0; k < half; ++k) {
        std::int64_t i0 = insert_zero_bit(k, q), i1 = i0 | bit;
        cplx a = psi[i0], b = psi[i1];
        psi[i0] = u[0] * a + u[1] * b;
        psi[i1] = u[2] * a + u[3] * b;
    }
}

void apply_cnot(std::span<cplx> psi, int control, int target) {
    const std::int64_t half = static_cast<std::int64_t>(psi.size() / 2);
    const std::int64_t cbit = std::int64_t{1} << control, tbit = std::int64_t{1} << target;
    for (std::int64_t k = 0; k < half; ++k) {
        std::int64_t i0 = insert_zero_bit(k, target);
        if (i0 & cbit) std::swap(psi[i0], psi[i0 | tbit]);
    }
}

void apply_pauli(std::span<cplx> psi, const PauliKey& p) {
    const std::int64_t dim = static_cast<std::int64_t>(psi.size());
    if (p.x == 0) {
        for (std::int64_t b = 0; b < dim; ++b) psi[b] *= pauli_factor(p, static_cast<Mask>(b));
        return;
    }
    const int top = 63 - std::countl_zero(p.x);
    for (std::int64_t k = 0; k < dim / 2; ++k) {
        Mask b0 = static_cast<Mask>(insert_zero_bit(k, top)), b1 = b0 ^ p.x;
        cplx a0 = psi[b0], a1 = psi[b1];
        psi[b1] = pauli_factor(p, b0) * a0;
        psi[b0] = pauli_factor(p, b1) * a1;
    }
}

}  // namespace serial

namespace parallel {

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
    auto ta = flatten(a), tb = flatten(b);
    const std::int64_t na = static_cast<std::int64_t>(ta.size());
    const std::size_t nb = tb.size();
    std::vector<Term> products(ta.size() * nb);
#pragma omp parallel for schedule(static) if (ta.size() * nb > 4096)
    for (std::int64_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) products[i * nb + j] = term_product(ta[i], tb[j]);
    PauliSum out(std::max(a.n_qubits(), b.n_qubits()));
    for (const auto& t : products) out.add(t.key, t.coeff);
    out.prune();
    return out;
}

std::vector<std::optional<PauliKey>> commutator_row(std::span<const PauliKey> basis, std::size_t i) {
    std::vector<std::optional<PauliKey>> row(i);
    const std::int64_t n = static_cast<std::int64_t>(i);
#pragma omp parallel for schedule(static) if (n > 2048)
    for (std::int64_t j = 0; j < n; ++j)
        if (anticommutes(basis[i], basis[j])) row[j] = PauliKey{basis[i].x ^ basis[j].x, basis[i].z ^ basis[j].z};
    return row;
}

void apply_1q(std::span<cplx> psi, int q, const Gate1q& u) {
    const std::int64_t half = static_cast<std::int64_t>(psi.size() / 2);
    const std::int64_t bit = std::int64_t{1} << q;
#pragma omp parallel for schedule(static) if (half >= kParallelAmplitudes)
    for (std::int64_t k = 0; k < half; ++k) {
        std::int64_t i0 = insert_zero_bit(k, q), i1 = i0 | bit;
        cplx a = psi[i0], b = psi[i1];
        psi[i0] = u[0] * a + u[1] * b;
        psi[i1] = u[2] * a + u[3] * b;
    }
}

void apply_cnot(std::span<cplx> psi, int control, int target) {
    const std::int64_t half = static_cast<std::int64_t>(psi.size() / 2);
    const std::int64_t cbit = std::int64_t{1} << control, tbit = std::int64_t{1} << target;
#pragma omp parallel for schedule(static) if (half >= kParallelAmplitudes)
    for (std::int64_t k = 0; k < half; ++k) {
        std::int64_t i0 = insert_zero_bit(k, target);
        if (i0 & cbit) std::swap(psi[i0], psi[i0 | tbit]);
    }
}

void apply_pauli(std::span<cplx> psi, const PauliKey& p) {
    const std::int64_t dim = static_cast<std::int64_t>(psi.size());
    if (p.x == 0) {
#pragma omp parallel for schedule(static) if (dim >= kParallelAmplitudes)
        for (std::int64_t b = 0; b < dim; ++b) psi[b] *= pauli_factor(p, static_cast<Mask>(b));
        return;
    }
    const int top = 63 - std::countl_zero(p.x);
#pragma omp parallel for schedule(static) if (dim >= 2 * kParallelAmplitudes)
    for (std::int64_t k = 0; k < dim / 2; ++k) {
        Mask b0 = static_cast<Mask>(insert_zero_bit(k, top)), b1 = b0 ^ p.x;
        cplx a0 = psi[b0], a1 = psi[b1];
        psi[b1] = pauli_factor(p, b0) * a0;
        psi[b0] = pauli_factor(p, b1) * a1;
    }
}

}  // namespace parallel

}  // namespace dosqtda::kernels
