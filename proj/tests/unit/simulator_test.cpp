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


#include "dosqtda/simulator.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <random>

namespace dosqtda {
namespace {

Circuit random_circuit(std::mt19937_64& rng, int n, int depth) {
    std::uniform_int_distribution<int> q(0, n - 1), kind(0, 4);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Circuit c(n);
    for (int i = 0; i < depth; ++i) {
        int a = q(rng);
        switch (kind(rng)) {
            case 0: c.h(a); break;
            case 1: c.s(a); break;
            case 2: c.rz(a, angle(rng)); break;
            case 3: c.x(a); break;
            default: {
                int b = q(rng);
                if (b != a) c.cnot(a, b);
            }
        }
    }
    return c;
}

double frequency(const SimulationResult& r, Mask m) {
    auto it = r.counts.find(m);
    return it == r.counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(r.shots);
}

TEST(Statevector, BellState) {
    Circuit c(2);
    c.h(0).cnot(0, 1);
    auto r = simulate(c, {}, 0, 0);
    EXPECT_NEAR(r.probabilities[0], 0.5, 1e-12);
    EXPECT_NEAR(r.probabilities[3], 0.5, 1e-12);
}

TEST(Statevector, GlobalPhaseAndRz) {
    Circuit c(1);
    c.h(0).rz(0, 0.4).gphase(0.3);
    auto psi = run_statevector(c);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(psi[0] - r * std::exp(cplx(0, 0.3 - 0.2))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(psi[1] - r * std::exp(cplx(0, 0.3 + 0.2))), 0.0, 1e-12);
}

TEST(Statevector, DenseBlockWithOffset) {
    auto x = std::make_shared<Eigen::MatrixXcd>(Eigen::MatrixXcd::Zero(2, 2));
    (*x)(0, 1) = (*x)(1, 0) = 1.0;
    Program p(3);
    p.append_dense(x, 2);
    auto psi = run_statevector(p);
    EXPECT_NEAR(std::abs(psi[0b100]), 1.0, 1e-12);
}

TEST(Statevector, SerialMatchesParallel) {
    int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    std::mt19937_64 rng(8);
    auto c = random_circuit(rng, 16, 200);
    EXPECT_TRUE(run_statevector(c) == run_statevector_serial(c));
    omp_set_num_threads(saved);
}

TEST(Shots, ConvergeToBornProbabilities) {
    std::mt19937_64 rng(9);
    auto c = random_circuit(rng, 3, 30);
    auto exact = simulate(c, {}, 0, 0);
    auto sampled = simulate(c, {}, 40000, 17);
    for (Mask m = 0; m < 8; ++m) {
        double p = exact.probabilities[m];
        double sigma = std::sqrt(p * (1 - p) / 40000.0);
        EXPECT_NEAR(frequency(sampled, m), p, 5 * sigma + 1e-12);
    }
}

TEST(Shots, DeterministicForSeed) {
    std::mt19937_64 rng(10);
    auto c = random_circuit(rng, 4, 40);
    NoiseModel noise{0.01, 0.05};
    EXPECT_EQ(simulate(c, noise, 500, 3).counts, simulate(c, noise, 500, 3).counts);
}

TEST(Noise, SingleQubitChannelAtFullStrength) {
    Circuit c(1);
    c.x(0);
    auto r = simulate(c, NoiseModel{1.0, 0.0}, 60000, 5);
    // X and Y errors undo the flip, Z does not.
    EXPECT_NEAR(frequency(r, 0), 2.0 / 3.0, 0.01);
}

TEST(Noise, TwoQubitChannelAtFullStrength) {
    Circuit c(2);
    c.cnot(0, 1);
    auto r = simulate(c, NoiseModel{0.0, 1.0}, 60000, 6);
    EXPECT_NEAR(frequency(r, 0), 3.0 / 15.0, 0.01);
    for (Mask m = 1; m < 4; ++m) EXPECT_NEAR(frequency(r, m), 4.0 / 15.0, 0.01);
}

TEST(Noise, Validation) {
    Circuit c(1);
    c.h(0);
    EXPECT_THROW(simulate(c, NoiseModel{0.1, 0.0}, 0, 0), std::invalid_argument);
    EXPECT_THROW(simulate(c, NoiseModel{1.5, 0.0}, 10, 0), std::invalid_argument);
    EXPECT_THROW(simulate(c, NoiseModel{-0.1, 0.0}, 10, 0), std::invalid_argument);
}

TEST(Overlap, SwapAgreesWithMirror) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + trial % 3;
        auto a = random_circuit(rng, n, 12), b = random_circuit(rng, n, 12);
        auto m = mirror_probability(a, Program(n), b, {}, 0, 0);
        auto s = destructive_swap_probability(a, b, {}, 0, 0);
        auto psi = run_statevector(a), phi = run_statevector(b);
        cplx dot = 0;
        for (std::size_t i = 0; i < psi.size(); ++i) dot += std::conj(phi[i]) * psi[i];
        EXPECT_NEAR(m.probability, std::norm(dot), 1e-10);
        EXPECT_NEAR(s.probability, std::norm(dot), 1e-10);
        EXPECT_TRUE(m.analytic());
    }
}

TEST(Overlap, MirrorShotsWithinError) {
    std::mt19937_64 rng(14);
    auto a = random_circuit(rng, 3, 20), b = random_circuit(rng, 3, 20);
    auto exact = mirror_probability(a, Program(3), b, {}, 0, 0);
    auto est = mirror_probability(a, Program(3), b, {}, 20000, 2);
    EXPECT_EQ(est.shots, 20000);
    EXPECT_NEAR(est.probability, exact.probability, 5 * std::sqrt(0.25 / 20000));
}

}  // namespace
}  // namespace dosqtda
