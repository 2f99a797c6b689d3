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


#include "dosqtda/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dosqtda/laplacian.hpp"

namespace dosqtda {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_size(int n) {
    if (n > kMaxOracleQubits) throw std::invalid_argument("dense oracle limited to 14 qubits");
}

// <row| P |col> for the phaseless string P, zero unless row = col ^ x.
inline cplx element(const PauliKey& p, Mask col) {
    cplx f = kIPow[p.y_count() & 3];
    return parity(col & p.z) ? -f : f;
}

int find(std::vector<std::uint32_t>& parent, std::uint32_t a) {
    while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    return static_cast<int>(a);
}

}  // namespace

Eigen::MatrixXcd to_dense(const PauliSum& op) {
    check_size(op.n_qubits());
    const Mask dim = Mask{1} << op.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [p, c] : op.terms())
        for (Mask b = 0; b < dim; ++b) m(b ^ p.x, b) += c * element(p, b);
    return m;
}

SpectrumOracle exact_spectrum(const PauliSum& op) {
    const int n = op.n_qubits();
    check_size(n);
    const std::uint32_t dim = std::uint32_t{1} << n;
    std::vector<std::uint32_t> parent(dim);
    std::iota(parent.begin(), parent.end(), 0u);
    for (const auto& [p, c] : op.terms()) {
        if (p.x == 0) continue;
        for (std::uint32_t b = 0; b < dim; ++b) {
            int ra = find(parent, b), rb = find(parent, b ^ static_cast<std::uint32_t>(p.x));
            if (ra != rb) parent[std::max(ra, rb)] = static_cast<std::uint32_t>(std::min(ra, rb));
        }
    }
    std::vector<std::vector<std::uint32_t>> blocks(dim);
    for (std::uint32_t b = 0; b < dim; ++b) blocks[find(parent, b)].push_back(b);

    SpectrumOracle out;
    out.eigenvalues.reserve(dim);
    std::vector<int> local(dim, -1);
    for (const auto& block : blocks) {
        if (block.empty()) continue;
        const auto m = static_cast<Eigen::Index>(block.size());
        for (Eigen::Index i = 0; i < m; ++i) local[block[i]] = static_cast<int>(i);
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
        for (const auto& [p, c] : op.terms())
            for (Eigen::Index j = 0; j < m; ++j) {
                Mask col = block[j];
                h(local[col ^ p.x], j) += c * element(p, col);
            }
        if (m == 1) {
            out.eigenvalues.push_back(h(0, 0).real());
        } else {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
            for (Eigen::Index i = 0; i < m; ++i) out.eigenvalues.push_back(es.eigenvalues()(i));
        }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.rank = static_cast<std::size_t>(std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(),
                                                      [](double v) { return std::abs(v) > kZeroEigenvalue; }));
    out.kernel_dim = dim - out.rank;
    return out;
}

int exact_betti(const SimplicialComplex& complex, int k) {
    auto lap = combinatorial_laplacian(complex, k);
    if (lap.empty_block()) return 0;
    auto spec = exact_spectrum(lap.op);
    return static_cast<int>(lap.s_k) - static_cast<int>(spec.rank);
}

TraceSignal exact_trace_signal(const SpectrumOracle& spectrum, std::span<const double> times) {
    TraceSignal s;
    s.times.assign(times.begin(), times.end());
    s.values.reserve(times.size());
    for (double t : times) {
        cplx acc{};
        for (double lam : spectrum.eigenvalues) acc += std::polar(1.0, -lam * t);
        s.values.push_back(acc);
    }
    return s;
}

DenseEvolution::DenseEvolution(const PauliSum& op) : n_qubits_(op.n_qubits()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(op));
    values_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
}

Eigen::MatrixXcd DenseEvolution::at(double t) const {
    Eigen::VectorXcd phases(values_.size());
    for (Eigen::Index i = 0; i < values_.size(); ++i) phases(i) = std::polar(1.0, -values_(i) * t);
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

}  // namespace dosqtda
