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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "dosqtda/laplacian.hpp"

namespace dosqtda {
namespace {

constexpr double kPi = std::numbers::pi;

SimplicialComplex square_with_diagonal() { return parse_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}); }

TEST(ExactSpectrum, SquareWithDiagonalEdges) {
    auto spec = exact_spectrum(combinatorial_laplacian(square_with_diagonal(), 1).op);
    ASSERT_EQ(spec.eigenvalues.size(), 16u);
    EXPECT_EQ(spec.rank, 3u);
    EXPECT_EQ(spec.kernel_dim, 13u);
    EXPECT_NEAR(spec.eigenvalues[13], 2.0, 1e-12);
    EXPECT_NEAR(spec.eigenvalues[14], 4.0, 1e-12);
    EXPECT_NEAR(spec.eigenvalues[15], 4.0, 1e-12);
}

TEST(ExactBetti, SmallComplexes) {
    EXPECT_EQ(exact_betti(parse_complex(4, {{1, 2}, {3, 4}}), 0), 2);
    EXPECT_EQ(exact_betti(parse_complex(3, {{1, 2, 3}}), 1), 0);
    EXPECT_EQ(exact_betti(square_with_diagonal(), 1), 2);
    EXPECT_EQ(exact_betti(parse_complex(1, {{1}}), 0), 1);
    EXPECT_EQ(exact_betti(parse_complex(3, {{1, 2}, {2, 3}, {1, 3}}), 1), 1);
}

TEST(ExactTrace, KnownValues) {
    auto spec = exact_spectrum(combinatorial_laplacian(square_with_diagonal(), 1).op);
    std::vector<double> times{0.0, kPi / 2, kPi};
    auto sig = exact_trace_signal(spec, times);
    EXPECT_NEAR(std::abs(sig.values[0] - cplx{16.0}), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(sig.values[1] - cplx{14.0}), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(sig.values[2] - cplx{16.0}), 0.0, 1e-12);
}

TEST(ExactSpectrumProperty, BlocksMatchFullDiagonalization) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Mask> m(0, 31);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        PauliSum op(5);
        for (int i = 0; i < 1 + trial % 6; ++i) op.add(PauliKey{m(rng), m(rng)}, g(rng));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(op));
        auto spec = exact_spectrum(op);
        for (int i = 0; i < 32; ++i) EXPECT_NEAR(spec.eigenvalues[i], es.eigenvalues()[i], 1e-9);
    }
}

TEST(DenseEvolution, UnitaryAndConsistent) {
    auto op = combinatorial_laplacian(square_with_diagonal(), 1).op;
    DenseEvolution ev(op);
    Eigen::MatrixXcd u = ev.at(0.7);
    EXPECT_LT((u * u.adjoint() - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-12);
    EXPECT_LT((ev.at(0.0) - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-12);
    auto spec = exact_spectrum(op);
    std::vector<double> t{0.7};
    EXPECT_NEAR(std::abs(u.trace() - exact_trace_signal(spec, t).values[0]), 0.0, 1e-10);
}

TEST(Oracle, RejectsLargeRegisters) {
    PauliSum op(kMaxOracleQubits + 1);
    op.add(PauliKey{1, 0}, 1.0);
    EXPECT_THROW(exact_spectrum(op), std::exception);
}

}  // namespace
}  // namespace dosqtda
