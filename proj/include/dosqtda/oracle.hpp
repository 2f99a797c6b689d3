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


#ifndef DOSQTDA_ORACLE_HPP_
#define DOSQTDA_ORACLE_HPP_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dosqtda/complex.hpp"
#include "dosqtda/pauli.hpp"
#include "dosqtda/signal.hpp"

namespace dosqtda {

inline constexpr int kMaxOracleQubits = 14;
inline constexpr double kZeroEigenvalue = 1e-9;

Eigen::MatrixXcd to_dense(const PauliSum& op);

struct SpectrumOracle {
    std::vector<double> eigenvalues;  // ascending, 2^N entries
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};

/// Full spectrum of a Hermitian Pauli sum. The operator is split into the
/// invariant blocks generated by its X-masks and each block is diagonalized
/// densely.
SpectrumOracle exact_spectrum(const PauliSum& op);

/// |S_k| - rank(Laplacian_k).
int exact_betti(const SimplicialComplex& complex, int k);

/// sum_v exp(-i lambda_v t) over the whole spectrum.
TraceSignal exact_trace_signal(const SpectrumOracle& spectrum, std::span<const double> times);

/// Dense eigendecomposition kept around to build exp(-i H t) for many t.
class DenseEvolution {
public:
    explicit DenseEvolution(const PauliSum& op);

    int n_qubits() const { return n_qubits_; }
    Eigen::MatrixXcd at(double t) const;
    const Eigen::VectorXd& eigenvalues() const { return values_; }

private:
    int n_qubits_;
    Eigen::VectorXd values_;
    Eigen::MatrixXcd vectors_;
};

}  // namespace dosqtda

#endif  // DOSQTDA_ORACLE_HPP_
