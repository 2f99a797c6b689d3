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


#ifndef DOSQTDA_CARTAN_HPP_
#define DOSQTDA_CARTAN_HPP_

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "dosqtda/complex.hpp"
#include "dosqtda/lbfgs.hpp"
#include "dosqtda/pauli.hpp"

namespace dosqtda {

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// Basis of the Lie algebra generated by a Hamiltonian's strings.
///
/// Seed strings come first in key order, then new commutators in discovery
/// order. The identity is included when the seed carries a nonzero identity
/// coefficient; it is central and never generates anything.
struct LieBasis {
    int n_qubits = 0;
    std::vector<PauliKey> strings;

    std::size_t dim() const { return strings.size(); }
};

LieBasis lie_closure(const PauliSum& seed, std::size_t cap = kDefaultClosureCap);

/// Reference closure using the serial commutator kernel.
LieBasis lie_closure_serial(const PauliSum& seed, std::size_t cap = kDefaultClosureCap);

/// g = l + m under theta(g) = -g^T, plus a Cartan subalgebra h of m.
struct CartanSplit {
    int n_qubits = 0;
    std::vector<PauliKey> l;  // odd number of Y factors
    std::vector<PauliKey> m;  // even number of Y factors
    std::vector<PauliKey> h;  // maximal abelian subset of m, identity excluded
};

/// Splits by Y-parity and checks [l,l] in l, [m,m] in l, [l,m] in m on every pair.
CartanSplit involution_split(const LieBasis& basis);

/// Greedy maximal abelian subalgebra: the Hamiltonian's own m-strings first
/// (key order), then the rest of m in basis order.
CartanSplit select_cartan_subalgebra(CartanSplit split, const PauliSum& hamiltonian);

struct KhkOptions {
    double gamma = std::numbers::pi;
    int max_restarts = 5;
    double accept_residual = 1e-6;
    double target_residual = 1e-10;
    double h_term_tolerance = 1e-8;
    std::uint64_t seed = 0;
    LbfgsOptions lbfgs;
};

struct KhkResult {
    double gamma = std::numbers::pi;
    std::vector<PauliKey> l;     // generator order of K
    std::vector<double> theta;   // one angle per element of l
    PauliSum h_sum;              // K^dag H K restricted to h, identity included
    double identity_coeff = 0.0;
    double residual = 0.0;       // norm of K^dag H K outside h
    int restarts_used = 0;
    bool converged = false;
};

/// Finds K = prod_i exp(i theta_i l_i) with K^dag H K inside span(h) by
/// extremizing <K v K^dag, H>, v = sum_j gamma^j h_j. The identity term of H
/// is set aside and re-attached to h_sum.
KhkResult khk_optimize(const PauliSum& hamiltonian, const CartanSplit& split, const KhkOptions& options = {});

/// K^dag op K for K = prod_i exp(i theta_i l_i), applied string by string.
PauliSum conjugate_by_k(const PauliSum& op, std::span<const PauliKey> l, std::span<const double> theta);

std::string khk_to_json(const KhkResult& result, int n_qubits);

enum class ScanFamily { all_complexes, clique_complexes };

/// Every complex on n labelled vertices (all vertices present), in a fixed order.
std::vector<SimplicialComplex> enumerate_complexes(int n, ScanFamily family);

struct LieDimRow {
    int edges = 0;
    int k = 0;
    double mean_dim = 0.0;
    std::size_t count = 0;
    std::size_t max_dim = 0;
};

/// Mean closure dimension of the k-Laplacian grouped by edge count.
std::vector<LieDimRow> lie_dim_scan(int n, ScanFamily family = ScanFamily::all_complexes);

}  // namespace dosqtda

#endif  // DOSQTDA_CARTAN_HPP_
