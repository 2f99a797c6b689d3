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

#include "dosqtda/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dosqtda/kernels.hpp"

namespace dosqtda {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

cplx PauliString::phase_factor() const { return kIPow[phase & 3]; }

int product_phase(const PauliKey& a, const PauliKey& b) {
    PauliKey c{a.x ^ b.x, a.z ^ b.z};
    return (a.y_count() + b.y_count() - c.y_count() + 2 * popcount(a.z & b.x)) & 3;
}

PauliString pauli_product(const PauliString& a, const PauliString& b) {
    PauliKey c{a.key.x ^ b.key.x, a.key.z ^ b.key.z};
    return PauliString{c, (a.phase + b.phase + product_phase(a.key, b.key)) & 3};
}

std::optional<PauliString> commutator_string(const PauliString& a, const PauliString& b) {
    if (commutes(a.key, b.key)) return std::nullopt;
    return PauliString{PauliKey{a.key.x ^ b.key.x, a.key.z ^ b.key.z}, 0};
}

std::string pauli_label(const PauliKey& key, int n_qubits) {
    std::string out(static_cast<std::size_t>(n_qubits), 'I');
    for (int q = 0; q < n_qubits; ++q) {
        bool x = (key.x >> q) & 1, z = (key.z >> q) & 1;
        out[q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

PauliKey parse_pauli_label(std::string_view label) {
    if (label.size() > static_cast<std::size_t>(kMaxQubits)) throw std::invalid_argument("label too long");
    PauliKey k;
    for (std::size_t q = 0; q < label.size(); ++q) {
        Mask bit = Mask{1} << q;
        switch (label[q]) {
            case 'I': break;
            case 'X': k.x |= bit; break;
            case 'Y': k.x |= bit; k.z |= bit; break;
            case 'Z': k.z |= bit; break;
            default: throw std::invalid_argument("bad Pauli label character");
        }
    }
    return k;
}

PauliSum::PauliSum(int n_qubits, Terms terms) : n_qubits_(n_qubits), terms_(std::move(terms)) { prune(); }

void PauliSum::add(const PauliKey& key, cplx coeff) {
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) it->second += coeff;
}

cplx PauliSum::coeff(const PauliKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? cplx{} : it->second;
}

PauliSum PauliSum::without_identity() const {
    PauliSum out = *this;
    out.terms_.erase(PauliKey{});
    return out;
}

void PauliSum::prune(double tol) {
    std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& [k, c] : terms_)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

bool PauliSum::all_commuting() const {
    std::vector<PauliKey> keys;
    for (const auto& [k, c] : terms_) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (anticommutes(keys[i], keys[j])) return false;
    return true;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
    PauliSum out(std::max(n_qubits_, other.n_qubits_), terms_);
    for (const auto& [k, c] : other.terms_) out.add(k, c);
    out.prune();
    return out;
}

PauliSum PauliSum::operator*(const PauliSum& other) const { return kernels::parallel::multiply(*this, other); }

PauliSum PauliSum::scaled(cplx s) const {
    PauliSum out = *this;
    for (auto& [k, c] : out.terms_) c *= s;
    out.prune();
    return out;
}

std::string PauliSum::to_text() const {
    std::ostringstream out;
    char buf[64];
    for (const auto& [k, c] : terms_) {
        std::snprintf(buf, sizeof buf, "%+.12g", c.real());
        out << buf << ' ' << pauli_label(k, n_qubits_) << '\n';
    }
    return out.str();
}

double trace_inner(const PauliSum& a, const PauliSum& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    double acc = 0.0;
    for (const auto& [k, c] : small.terms()) acc += (std::conj(c) * large.coeff(k)).real();
    return acc;
}

}  // namespace dosqtda
