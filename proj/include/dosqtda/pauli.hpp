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

#ifndef DOSQTDA_PAULI_HPP_
#define DOSQTDA_PAULI_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dosqtda/types.hpp"

namespace dosqtda {

inline constexpr double kPruneTolerance = 1e-12;

/// Phaseless Pauli string in symplectic form.
///
/// The key (x, z) denotes the Hermitian operator i^{|x&z|} X^x Z^z, i.e. the
/// tensor product of I/X/Y/Z factors read off bit by bit. Ordering is by x
/// first, so all Z-type strings sort ahead of anything with X or Y support.
struct PauliKey {
    Mask x = 0;
    Mask z = 0;

    int y_count() const { return popcount(x & z); }
    bool is_identity() const { return x == 0 && z == 0; }
    Mask support() const { return x | z; }
    friend auto operator<=>(const PauliKey&, const PauliKey&) = default;
};

/// A phaseless string times i^phase.
struct PauliString {
    PauliKey key;
    int phase = 0;  // exponent of i, in [0, 4)

    cplx phase_factor() const;
    friend bool operator==(const PauliString&, const PauliString&) = default;
};

inline bool anticommutes(const PauliKey& a, const PauliKey& b) {
    return parity((a.x & b.z) ^ (a.z & b.x));
}
inline bool commutes(const PauliKey& a, const PauliKey& b) { return !anticommutes(a, b); }

PauliString pauli_product(const PauliString& a, const PauliString& b);

/// Phase exponent e with key(a)*key(b) = i^e key(a^b).
int product_phase(const PauliKey& a, const PauliKey& b);

/// The phaseless string proportional to [a, b], or nothing when a and b commute.
std::optional<PauliString> commutator_string(const PauliString& a, const PauliString& b);

/// Text label with qubit 1 leftmost, e.g. "ZXIY".
std::string pauli_label(const PauliKey& key, int n_qubits);
PauliKey parse_pauli_label(std::string_view label);

/// Sparse sum of phaseless strings with complex coefficients.
///
/// Hermitian operators have real coefficients; intermediate products of
/// Hermitian factors do not, so storage stays complex.
class PauliSum {
public:
    using Terms = std::map<PauliKey, cplx>;

    PauliSum() = default;
    explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}
    PauliSum(int n_qubits, Terms terms);

    int n_qubits() const { return n_qubits_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add(const PauliKey& key, cplx coeff);
    cplx coeff(const PauliKey& key) const;
    double identity_coeff() const { return coeff(PauliKey{}).real(); }
    PauliSum without_identity() const;

    void prune(double tol = kPruneTolerance);
    bool is_hermitian(double tol = 1e-10) const;
    bool all_commuting() const;

    PauliSum operator+(const PauliSum& other) const;
    PauliSum operator*(const PauliSum& other) const;
    PauliSum scaled(cplx s) const;

    /// One term per line: `+0.25 ZXIZ`. Real parts only.
    std::string to_text() const;

private:
    int n_qubits_ = 0;
    Terms terms_;
};

/// Trace inner product normalized by 2^N: sum of coeff_a * coeff_b over shared
/// strings (real parts).
double trace_inner(const PauliSum& a, const PauliSum& b);

}  // namespace dosqtda

#endif  // DOSQTDA_PAULI_HPP_
