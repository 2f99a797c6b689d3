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

#include <gtest/gtest.h>
#include <omp.h>

#include <random>

namespace dosqtda {
namespace {

namespace ks = kernels::serial;
namespace kp = kernels::parallel;

class Kernels : public ::testing::Test {
protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(4);
    }
    void TearDown() override { omp_set_num_threads(saved_); }

    std::mt19937_64 rng_{99};

private:
    int saved_ = 1;
};

std::vector<cplx> random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    std::vector<cplx> psi(std::size_t{1} << n);
    for (auto& a : psi) a = {g(rng), g(rng)};
    return psi;
}

TEST_F(Kernels, MultiplyIdentical) {
    std::uniform_int_distribution<Mask> m(0, (Mask{1} << 8) - 1);
    std::normal_distribution<double> g;
    PauliSum a(8), b(8);
    for (int i = 0; i < 120; ++i) {
        a.add(PauliKey{m(rng_), m(rng_)}, g(rng_));
        b.add(PauliKey{m(rng_), m(rng_)}, g(rng_));
    }
    auto s = ks::multiply(a, b), p = kp::multiply(a, b);
    ASSERT_EQ(s.size(), p.size());
    EXPECT_TRUE(s.terms() == p.terms());
}

TEST_F(Kernels, CommutatorRowIdentical) {
    std::uniform_int_distribution<Mask> m(0, (Mask{1} << 10) - 1);
    std::vector<PauliKey> basis;
    for (int i = 0; i < 5000; ++i) basis.push_back({m(rng_), m(rng_)});
    for (std::size_t i : {std::size_t{0}, std::size_t{10}, std::size_t{4999}})
        EXPECT_EQ(ks::commutator_row(basis, i), kp::commutator_row(basis, i));
}

TEST_F(Kernels, StatevectorGatesIdentical) {
    const int n = 16;
    auto s = random_state(rng_, n);
    auto p = s;
    const double r = 1.0 / std::sqrt(2.0);
    kernels::Gate1q h{cplx{r}, cplx{r}, cplx{r}, cplx{-r}};
    for (int q = 0; q < n; q += 3) {
        ks::apply_1q(s, q, h);
        kp::apply_1q(p, q, h);
        ks::apply_cnot(s, q, (q + 5) % n);
        kp::apply_cnot(p, q, (q + 5) % n);
    }
    PauliKey pk{0b1010000000010110, 0b0110000011000011};
    ks::apply_pauli(s, pk);
    kp::apply_pauli(p, pk);
    ks::apply_pauli(s, PauliKey{0, 0b1001});
    kp::apply_pauli(p, PauliKey{0, 0b1001});
    EXPECT_TRUE(s == p);
}

TEST_F(Kernels, CnotPermutesBasisStates) {
    std::vector<cplx> psi(8);
    psi[0b011] = 1.0;
    kp::apply_cnot(psi, 0, 2);
    EXPECT_EQ(psi[0b111], cplx{1.0});
    kp::apply_cnot(psi, 1, 0);
    EXPECT_EQ(psi[0b110], cplx{1.0});
}

TEST_F(Kernels, PauliActionOnBasisState) {
    // Y|0> = i|1>
    std::vector<cplx> psi{1.0, 0.0};
    ks::apply_pauli(psi, PauliKey{1, 1});
    EXPECT_EQ(psi[1], cplx(0, 1));
    EXPECT_EQ(psi[0], cplx(0));
}

}  // namespace
}  // namespace dosqtda
