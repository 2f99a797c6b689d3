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


#include "dosqtda/dos.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "dosqtda/cartan.hpp"
#include "dosqtda/laplacian.hpp"

namespace dosqtda {
namespace {

constexpr double kPi = std::numbers::pi;

SimplicialComplex square_with_diagonal() { return parse_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}); }

PauliSum edge_laplacian() { return combinatorial_laplacian(square_with_diagonal(), 1).op; }

TraceSignal synthetic(const SamplingPlan& plan, const std::vector<std::pair<double, double>>& lines) {
    TraceSignal s;
    for (int j = 0; j < plan.grid_points(); ++j) {
        double t = j * plan.dt();
        cplx v{};
        for (auto [lambda, weight] : lines) v += weight * std::polar(1.0, -lambda * t);
        s.times.push_back(t);
        s.values.push_back(v);
    }
    return s;
}

TEST(Plan, DefaultsFollowRegisterSize) {
    auto p4 = make_plan(4);
    EXPECT_EQ(p4.f_s, 13);
    EXPECT_EQ(p4.samples_per_period, 25);
    EXPECT_EQ(p4.sample_times().size(), 13u);
    EXPECT_DOUBLE_EQ(p4.period, 2 * kPi);
    EXPECT_FALSE(p4.below_nyquist);
    EXPECT_EQ(make_plan(10).f_s, 32);
    auto p2 = make_plan(4, {std::nullopt, 2});
    EXPECT_EQ(p2.grid_points(), 50);
    EXPECT_EQ(p2.sample_times().size(), 26u);
    EXPECT_NEAR(p2.dt(), 4 * kPi / 50, 1e-15);
    EXPECT_TRUE(make_plan(4, {5, 1}).below_nyquist);
    EXPECT_THROW(make_plan(4, {std::nullopt, 0}), std::invalid_argument);
}

TEST(Reconstruct, Identities) {
    // Reference amplitude 1, target amplitude z.
    for (cplx z : {cplx(0.3, -0.4), cplx(-1.0, 0.0), cplx(0.0, 1.0)}) {
        double p0 = std::norm(z);
        double pp = std::norm(1.0 + z) / 4.0;
        double pi = std::norm(1.0 + cplx(0, -1) * z) / 4.0;
        EXPECT_NEAR(std::abs(reconstruct_element(p0, pp, pi) - z), 0.0, 1e-12);
    }
}

TEST(MeasureDiagonal, DirectReconstructionIsExact) {
    auto ev = Evolution::direct(edge_laplacian());
    DenseEvolution dense(edge_laplacian());
    for (Protocol proto : {Protocol::mirror, Protocol::swap, Protocol::exact}) {
        TraceOptions opt;
        opt.protocol = proto;
        opt.shots = 0;
        for (double t : {0.3, 1.7, 4.0}) {
            Eigen::MatrixXcd u = dense.at(t);
            for (Mask b = 1; b < 16; ++b)
                EXPECT_NEAR(std::abs(measure_diagonal(ev, t, b, opt, 0) - u(b, b)), 0.0, 1e-9)
                    << protocol_name(proto) << " t=" << t << " b=" << b;
        }
    }
}

TEST(MeasureDiagonal, MirrorShotNoiseWithinFiveSigma) {
    auto ev = Evolution::direct(edge_laplacian());
    DenseEvolution dense(edge_laplacian());
    TraceOptions opt;
    opt.shots = 1000;
    const double sigma = std::sqrt(4 * 0.25 / 1000 + 0.25 * 0.25 / 1000) * std::sqrt(2.0);
    for (Mask b : {Mask{3}, Mask{5}, Mask{12}}) {
        cplx got = measure_diagonal(ev, 1.1, b, opt, 77 + b);
        EXPECT_NEAR(std::abs(got - dense.at(1.1)(b, b)), 0.0, 5 * sigma);
    }
}

TEST(EstimateTrace, ExactProtocolMatchesOracle) {
    auto op = edge_laplacian();
    auto plan = make_plan(4);
    TraceOptions opt;
    opt.protocol = Protocol::exact;
    auto sig = estimate_trace(Evolution::direct(op), plan, opt);
    auto want = exact_trace_signal(exact_spectrum(op), sig.times);
    for (std::size_t j = 0; j < sig.size(); ++j) EXPECT_NEAR(std::abs(sig.values[j] - want.values[j]), 0.0, 1e-9);
}

TEST(EstimateTrace, CartanEvolutionMatchesOracle) {
    auto op = edge_laplacian();
    auto split = select_cartan_subalgebra(involution_split(lie_closure(op)), op);
    auto khk = khk_optimize(op, split);
    ASSERT_TRUE(khk.converged);
    auto plan = make_plan(4);
    auto want = exact_trace_signal(exact_spectrum(op), plan.sample_times());
    for (Protocol proto : {Protocol::exact, Protocol::mirror}) {
        TraceOptions opt;
        opt.protocol = proto;
        opt.shots = 0;
        auto sig = estimate_trace(Evolution::cartan(khk.h_sum), plan, opt);
        for (std::size_t j = 0; j < sig.size(); ++j)
            EXPECT_NEAR(std::abs(sig.values[j] - want.values[j]), 0.0, 1e-5) << protocol_name(proto);
    }
}

TEST(EstimateTrace, ComplexOnlyNeedsDirectEvolution) {
    PauliSum h(2);
    h.add(parse_pauli_label("ZI"), 1.0);
    TraceOptions opt;
    opt.scope = BasisScope::complex_only;
    EXPECT_THROW(estimate_trace(Evolution::cartan(h), make_plan(2), opt), std::invalid_argument);
}

TEST(Postprocess, ShiftAndMirror) {
    auto plan = make_plan(2, {std::nullopt, 2});  // G = 26, even
    TraceSignal raw;
    raw.times = plan.sample_times();
    for (std::size_t j = 0; j < raw.times.size(); ++j) raw.values.push_back(cplx(1.0 + j, 0.5 * j));
    raw.values[0] = cplx(3.0, 0.25);
    auto post = postprocess(raw, 2, plan);
    ASSERT_EQ(post.size(), 26u);
    const cplx shift(4.0 - 3.0, -0.25);
    EXPECT_EQ(post.values[0], cplx(4.0, 0.0));
    EXPECT_EQ(post.values[5], raw.values[5] + shift);
    EXPECT_EQ(post.values[21], std::conj(raw.values[5] + shift));
    EXPECT_EQ(post.values[13].imag(), 0.0);
    EXPECT_NEAR(post.times[25], 25 * plan.dt(), 1e-12);
}

TEST(Interpolant, TrigBinsAndCoefficients) {
    auto plan = make_plan(4);
    auto sig = synthetic(plan, {{0.0, 13.0}, {2.0, 1.0}, {4.0, 2.0}});
    Interpolant it(sig, InterpolationMode::trig);
    const auto& bins = it.bins();
    ASSERT_EQ(bins.size(), 25u);
    EXPECT_NEAR(std::abs(bins[0] - 13.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(bins[23] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(bins[21] - 2.0), 0.0, 1e-12);
    auto spec = fourier_coefficients(it, 4);
    std::vector<double> want{13, 0, 1, 0, 2};
    for (int k = 0; k <= 4; ++k) EXPECT_NEAR(spec.c[k], want[k], 1e-12);
    EXPECT_NEAR(spec.rank_sum, 3.0, 1e-12);
    EXPECT_NEAR(spec.rank_c0, 3.0, 1e-12);
    EXPECT_NEAR(spec.residual_energy, 0.0, 1e-12);
    EXPECT_NEAR(std::abs(it(0.37) - (13.0 + std::polar(1.0, -0.74) + 2.0 * std::polar(1.0, -1.48))), 0.0, 1e-10);
}

TEST(Interpolant, LeakingSplitsAcrossNeighbours) {
    for (int n : {4, 10}) {
        auto plan = make_plan(n, {std::nullopt, 2});
        auto spec = fourier_coefficients(Interpolant(synthetic(plan, {{2.5, 1.0}}), InterpolationMode::trig), n);
        EXPECT_NEAR(spec.c[2], 0.5, 1e-9);
        EXPECT_NEAR(spec.c[3], 0.5, 1e-9);
        EXPECT_NEAR(spec.c[2] + spec.c[3], 1.0, 1e-9);
    }
}

TEST(Interpolant, SinglePeriodLeakingMatchesDirichletKernel) {
    auto plan = make_plan(4);
    const int g = plan.grid_points();
    Interpolant it(synthetic(plan, {{2.5, 1.0}}), InterpolationMode::trig);
    for (int m = 0; m <= 4; ++m) {
        cplx q = std::polar(1.0, 2 * kPi * (m - 2.5) / g);
        cplx want = (1.0 - std::pow(q, g)) / (1.0 - q) / static_cast<double>(g);
        EXPECT_NEAR(std::abs(it.coefficient(m) - want), 0.0, 1e-12) << m;
    }
}

TEST(Interpolant, PeriodicSplineInterpolatesSamples) {
    auto plan = make_plan(4);
    auto sig = synthetic(plan, {{0.0, 13.0}, {2.0, 1.0}, {4.0, 2.0}});
    Interpolant it(sig, InterpolationMode::periodic_spline);
    for (std::size_t j = 0; j < sig.size(); ++j) EXPECT_NEAR(std::abs(it(sig.times[j]) - sig.values[j]), 0.0, 1e-10);
    auto spec = fourier_coefficients(it, 4);
    EXPECT_NEAR(spec.c[0], 13.0, 0.5);
    EXPECT_EQ(betti_estimate(5, spec, 4, 1).beta_c0, 2);
}

TEST(Interpolant, RejectsBadGrids) {
    TraceSignal s;
    s.times = {0.0, 1.0};
    s.values = {1.0, 1.0};
    EXPECT_THROW(Interpolant(s, InterpolationMode::trig), std::invalid_argument);
    s.times = {0.0, 1.0, 2.5};
    s.values = {1.0, 1.0, 1.0};
    EXPECT_THROW(Interpolant(s, InterpolationMode::trig), std::invalid_argument);
}

TEST(Betti, RoundingExamples) {
    SpectrumEstimate s;
    s.rank_sum = 3.16;
    s.rank_c0 = 16.0 - 12.63;
    auto r = betti_estimate(5, s, 4, 1);
    EXPECT_EQ(r.beta_sum, 2);
    EXPECT_EQ(r.beta_c0, 2);
    EXPECT_NEAR(r.rank_c0, 3.37, 1e-12);
    s.rank_sum = 35.35;
    EXPECT_EQ(betti_estimate(44, s, 8, 1).beta_sum, 9);
    s.rank_sum = 7.0;
    EXPECT_EQ(betti_estimate(5, s, 4, 1).beta_sum, 0);
}

TEST(Serialization, SpectrumAndSignal) {
    auto plan = make_plan(2);
    auto raw = synthetic(plan, {{1.0, 1.0}});
    raw.times.resize(plan.sample_times().size());
    raw.values.resize(raw.times.size());
    auto post = postprocess(raw, 2, plan);
    auto csv = signal_to_csv(raw, post);
    EXPECT_EQ(csv.rfind("t,re_raw,im_raw,re_post,im_post\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + plan.grid_points());
    auto json = spectrum_to_json(fourier_coefficients(Interpolant(post, InterpolationMode::trig), 2));
    EXPECT_NE(json.find("\"rank_c0\""), std::string::npos);
}

}  // namespace
}  // namespace dosqtda
