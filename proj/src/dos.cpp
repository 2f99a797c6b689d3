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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "dosqtda/circuit.hpp"
#include "dosqtda/rng.hpp"

namespace dosqtda {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSimpsonOversampling = 32;

}  // namespace

std::vector<double> SamplingPlan::sample_times() const {
    std::vector<double> t;
    for (int j = 0; j <= grid_points() / 2; ++j) t.push_back(j * dt());
    return t;
}

SamplingPlan make_plan(int n, const PlanOverrides& overrides) {
    if (n < 1) throw std::invalid_argument("plan needs n >= 1");
    if (overrides.period_multiplier < 1) throw std::invalid_argument("period multiplier must be >= 1");
    SamplingPlan plan;
    plan.n_qubits = n;
    const int nyquist = static_cast<int>(std::ceil(n * std::numbers::pi));
    plan.f_s = overrides.f_s.value_or(nyquist);
    if (plan.f_s < 1) throw std::invalid_argument("f_s must be >= 1");
    plan.below_nyquist = plan.f_s < nyquist;
    plan.samples_per_period = 2 * plan.f_s - 1;
    plan.period = kTwoPi;
    plan.period_multiplier = overrides.period_multiplier;
    return plan;
}

Protocol parse_protocol(std::string_view name) {
    if (name == "mirror") return Protocol::mirror;
    if (name == "swap" || name == "destructive_swap") return Protocol::swap;
    if (name == "exact") return Protocol::exact;
    throw std::invalid_argument("unknown protocol: " + std::string(name));
}

std::string_view protocol_name(Protocol protocol) {
    switch (protocol) {
        case Protocol::mirror: return "mirror";
        case Protocol::swap: return "swap";
        case Protocol::exact: return "exact";
    }
    return "?";
}

BasisScope parse_basis_scope(std::string_view name) {
    if (name == "all") return BasisScope::all;
    if (name == "complex_only") return BasisScope::complex_only;
    throw std::invalid_argument("unknown basis scope: " + std::string(name));
}

std::string_view basis_scope_name(BasisScope scope) { return scope == BasisScope::all ? "all" : "complex_only"; }

Evolution Evolution::cartan(PauliSum h_sum) {
    if (!h_sum.all_commuting()) throw std::invalid_argument("Cartan evolution needs commuting terms");
    Evolution e;
    e.hamiltonian_ = std::move(h_sum);
    return e;
}

Evolution Evolution::direct(const PauliSum& op) {
    Evolution e;
    e.hamiltonian_ = op;
    e.dense_ = std::make_shared<DenseEvolution>(op);
    return e;
}

Program Evolution::program(double t) const {
    if (!dense_) return Program(synthesize_evolution(hamiltonian_, t));
    Program p(n_qubits());
    p.append_dense(std::make_shared<const Eigen::MatrixXcd>(dense_->at(t)));
    return p;
}

double Evolution::diagonal(Mask b) const {
    double acc = 0.0;
    for (const auto& [k, c] : hamiltonian_.terms()) {
        if (k.x != 0) continue;
        acc += parity(b & k.z) ? -c.real() : c.real();
    }
    return acc;
}

cplx reconstruct_element(double p0, double p_plus, double p_i) {
    const double base = 0.5 * (1.0 + p0);
    return {2.0 * p_plus - base, 2.0 * p_i - base};
}

cplx measure_diagonal(const Evolution& evolution, double t, Mask target, const TraceOptions& options,
                      std::uint64_t job_seed) {
    const int n = evolution.n_qubits();
    const Program u = evolution.program(t);
    const Circuit hot = prep_circuit(n, target, PrepMode::hot);
    if (options.protocol == Protocol::exact) {
        Program p(n);
        p.append(hot).append(u);
        return run_statevector(p)[target];
    }
    const Mask ref = reference_for(target);
    const Circuit plus = prep_circuit(n, target, PrepMode::plus, ref);
    const Circuit iph = prep_circuit(n, target, PrepMode::i_phase, ref);
    auto overlap = [&](const Circuit& prep1, const Circuit& prep2, std::uint64_t tag) {
        const std::uint64_t seed = derive_seed(job_seed, {tag});
        if (options.protocol == Protocol::mirror)
            return mirror_probability(Program(prep1), u, prep2, options.noise, options.shots, seed).probability;
        Program state1(n);
        state1.append(prep1).append(u);
        return destructive_swap_probability(state1, Program(prep2), options.noise, options.shots, seed).probability;
    };
    const double p0 = overlap(hot, hot, 0);
    const double pp = overlap(plus, plus, 1);
    const double pi = overlap(plus, iph, 2);
    return reconstruct_element(p0, pp, pi) * std::polar(1.0, -evolution.diagonal(ref) * t);
}

TraceSignal estimate_trace(const Evolution& evolution, const SamplingPlan& plan, const TraceOptions& options) {
    const int n = evolution.n_qubits();
    if (n != plan.n_qubits) throw std::invalid_argument("plan and evolution disagree on N");
    std::vector<Mask> basis;
    if (options.scope == BasisScope::all) {
        for (Mask b = 0; b < (Mask{1} << n); ++b) basis.push_back(b);
    } else {
        if (!evolution.is_direct())
            throw std::invalid_argument("complex_only scope is only valid for direct evolution");
        basis = options.basis;
    }
    if (options.protocol != Protocol::exact && options.shots < 0) throw std::invalid_argument("shots must be >= 0");

    TraceSignal sig;
    sig.times = plan.sample_times();
    sig.meta.protocol = std::string(protocol_name(options.protocol));
    sig.meta.shots = options.protocol == Protocol::exact ? 0 : options.shots;
    sig.meta.p1 = options.noise.p1;
    sig.meta.p2 = options.noise.p2;
    sig.meta.seed = options.seed;

    const std::int64_t nt = static_cast<std::int64_t>(sig.times.size());
    const std::int64_t nb = static_cast<std::int64_t>(basis.size());
    std::vector<cplx> elements(static_cast<std::size_t>(nt * nb));
#pragma omp parallel for schedule(dynamic) collapse(2)
    for (std::int64_t ti = 0; ti < nt; ++ti)
        for (std::int64_t bi = 0; bi < nb; ++bi) {
            const std::uint64_t job = derive_seed(options.seed, {static_cast<std::uint64_t>(ti), basis[bi]});
            elements[ti * nb + bi] = measure_diagonal(evolution, sig.times[ti], basis[bi], options, job);
        }
    sig.values.assign(sig.times.size(), cplx{});
    for (std::int64_t ti = 0; ti < nt; ++ti)
        for (std::int64_t bi = 0; bi < nb; ++bi) sig.values[ti] += elements[ti * nb + bi];
    return sig;
}

TraceSignal postprocess(const TraceSignal& raw, int n, const SamplingPlan& plan) {
    const int g = plan.grid_points();
    if (raw.times.empty() || raw.times.front() != 0.0) throw std::invalid_argument("raw signal lacks the t = 0 sample");
    if (static_cast<int>(raw.size()) < g / 2 + 1) throw std::invalid_argument("raw signal does not cover half the grid");
    const double shift_re = std::ldexp(1.0, n) - raw.values[0].real();
    const double shift_im = -raw.values[0].imag();
    TraceSignal out;
    out.meta = raw.meta;
    out.times.resize(g);
    out.values.resize(g);
    for (int j = 0; j < g; ++j) {
        out.times[j] = j * plan.dt();
        const int src = j <= g / 2 ? j : g - j;
        cplx v = raw.values[src] + cplx{shift_re, shift_im};
        if (j > g / 2) v = std::conj(v);
        if (2 * j == g) v = v.real();
        out.values[j] = v;
    }
    return out;
}

InterpolationMode parse_interpolation_mode(std::string_view name) {
    if (name == "trig") return InterpolationMode::trig;
    if (name == "periodic_spline" || name == "spline") return InterpolationMode::periodic_spline;
    throw std::invalid_argument("unknown interpolation mode: " + std::string(name));
}

std::string_view interpolation_mode_name(InterpolationMode mode) {
    return mode == InterpolationMode::trig ? "trig" : "periodic_spline";
}

Interpolant::Interpolant(const TraceSignal& signal, InterpolationMode mode) : mode_(mode), samples_(signal.values) {
    const std::size_t g = signal.size();
    if (g < 3) throw std::invalid_argument("interpolation needs at least 3 samples");
    if (signal.times.front() != 0.0) throw std::invalid_argument("grid must start at t = 0");
    dt_ = signal.times[1] - signal.times[0];
    for (std::size_t j = 1; j < g; ++j)
        if (std::abs(signal.times[j] - j * dt_) > 1e-9 * std::max(1.0, signal.times[j]))
            throw std::invalid_argument("interpolation grid is not uniform");
    period_ = dt_ * static_cast<double>(g);

    if (mode == InterpolationMode::trig) {
        bins_.assign(g, cplx{});
        for (std::size_t m = 0; m < g; ++m) {
            cplx acc{};
            for (std::size_t j = 0; j < g; ++j)
                acc += samples_[j] * std::polar(1.0, -kTwoPi * static_cast<double>((m * j) % g) / g);
            bins_[m] = acc / static_cast<double>(g);
        }
        return;
    }

    // Periodic cubic spline: M_{j-1} + 4 M_j + M_{j+1} = 6 (y_{j+1} - 2 y_j + y_{j-1}) / h^2.
    const auto n = static_cast<Eigen::Index>(g);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd rhs(n, 2);
    for (Eigen::Index j = 0; j < n; ++j) {
        a(j, j) = 4.0;
        a(j, (j + 1) % n) += 1.0;
        a(j, (j + n - 1) % n) += 1.0;
        cplx d2 = (samples_[(j + 1) % n] - 2.0 * samples_[j] + samples_[(j + n - 1) % n]) * (6.0 / (dt_ * dt_));
        rhs(j, 0) = d2.real();
        rhs(j, 1) = d2.imag();
    }
    Eigen::MatrixXd sol = a.partialPivLu().solve(rhs);
    second_.resize(g);
    for (Eigen::Index j = 0; j < n; ++j) second_[j] = {sol(j, 0), sol(j, 1)};
}

cplx Interpolant::spline_at(double t) const {
    const std::size_t g = samples_.size();
    double u = std::fmod(t, period_);
    if (u < 0) u += period_;
    std::size_t j = std::min(static_cast<std::size_t>(u / dt_), g - 1);
    const std::size_t k = (j + 1) % g;
    const double b = (u - j * dt_) / dt_, a = 1.0 - b;
    return a * samples_[j] + b * samples_[k] +
           ((a * a * a - a) * second_[j] + (b * b * b - b) * second_[k]) * (dt_ * dt_ / 6.0);
}

cplx Interpolant::operator()(double t) const {
    if (mode_ == InterpolationMode::periodic_spline) return spline_at(t);
    // Shifted trigonometric polynomial: frequencies -(G-1)/2 .. (G-1)/2, with
    // the Nyquist bin of an even grid split evenly between +-G/2.
    const std::size_t g = bins_.size();
    cplx acc{};
    for (std::size_t m = 0; m < g; ++m) {
        const double w = kTwoPi * t / period_;
        if (2 * m == g) {
            acc += bins_[m] * std::cos(w * static_cast<double>(m));
            continue;
        }
        const double freq = 2 * m < g ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(g);
        acc += bins_[m] * std::polar(1.0, w * freq);
    }
    return acc;
}

cplx Interpolant::coefficient(double f) const {
    if (mode_ == InterpolationMode::trig) {
        const std::size_t g = samples_.size();
        cplx acc{};
        for (std::size_t j = 0; j < g; ++j) acc += samples_[j] * std::polar(1.0, f * dt_ * static_cast<double>(j));
        return acc / static_cast<double>(g);
    }
    const std::size_t intervals = samples_.size() * kSimpsonOversampling;
    const double h = period_ / static_cast<double>(intervals);
    cplx acc{};
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double t = h * static_cast<double>(i);
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * spline_at(t) * std::polar(1.0, f * t);
    }
    return acc * (h / 3.0) / period_;
}

SpectrumEstimate fourier_coefficients(const Interpolant& interpolant, int n) {
    const int p = std::max(1, static_cast<int>(std::lround(interpolant.period() / kTwoPi)));
    SpectrumEstimate spec;
    spec.c.assign(n + 1, 0.0);
    spec.c_imag.assign(n + 1, 0.0);
    for (int m = 0; m <= n * p; ++m) {
        const cplx r = interpolant.coefficient(static_cast<double>(m) / p);
        const int lo = m / p, hi = (m + p - 1) / p;
        const double w = static_cast<double>(m - lo * p) / p;
        spec.c[lo] += (1.0 - w) * r.real();
        spec.c_imag[lo] += (1.0 - w) * r.imag();
        if (hi != lo) {
            spec.c[hi] += w * r.real();
            spec.c_imag[hi] += w * r.imag();
        }
    }
    const double total = interpolant(0.0).real();
    double mass = 0.0;
    for (double c : spec.c) mass += c;
    for (int k = 1; k <= n; ++k) spec.rank_sum += spec.c[k];
    spec.rank_c0 = std::ldexp(1.0, n) - spec.c[0];
    spec.residual_energy = total - mass;
    return spec;
}

BettiReport betti_estimate(std::size_t s_k, const SpectrumEstimate& spec, [[maybe_unused]] int n_qubits, int k) {
    BettiReport r;
    r.k = k;
    r.s_k = s_k;
    r.rank_sum = spec.rank_sum;
    r.rank_c0 = spec.rank_c0;
    auto to_beta = [s_k](double rank) {
        return std::max(0, static_cast<int>(std::round(static_cast<double>(s_k) - rank)));
    };
    r.beta_sum = to_beta(spec.rank_sum);
    r.beta_c0 = to_beta(spec.rank_c0);
    return r;
}

std::string spectrum_to_json(const SpectrumEstimate& spec) {
    nlohmann::ordered_json j;
    j["c"] = spec.c;
    j["c_imag"] = spec.c_imag;
    j["rank_sum"] = spec.rank_sum;
    j["rank_c0"] = spec.rank_c0;
    j["residual_energy"] = spec.residual_energy;
    return j.dump(2);
}

std::string signal_to_csv(const TraceSignal& raw, const TraceSignal& post) {
    std::ostringstream out;
    out << "t,re_raw,im_raw,re_post,im_post\n";
    char buf[160];
    for (std::size_t j = 0; j < post.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,", post.times[j]);
        out << buf;
        if (j < raw.size()) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,", raw.values[j].real(), raw.values[j].imag());
            out << buf;
        } else {
            out << ",,";
        }
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", post.values[j].real(), post.values[j].imag());
        out << buf;
    }
    return out.str();
}

}  // namespace dosqtda
