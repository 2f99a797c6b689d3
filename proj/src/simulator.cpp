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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "dosqtda/kernels.hpp"
#include "dosqtda/rng.hpp"

namespace dosqtda {

namespace {

using kernels::Gate1q;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Gate1q kH = {cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{-kInvSqrt2}};
const Gate1q kX = {cplx{0}, cplx{1}, cplx{1}, cplx{0}};
const Gate1q kS = {cplx{1}, cplx{0}, cplx{0}, cplx{0, 1}};
const Gate1q kSdg = {cplx{1}, cplx{0}, cplx{0}, cplx{0, -1}};

// Keeps the trajectory cache under ~64 MB.
constexpr std::size_t kMaxCachedAmplitudes = std::size_t{1} << 22;
constexpr std::size_t kMaxMemoAmplitudes = 4096;

enum class NoiseSite { none, one, two };

NoiseSite site_of(const Program::Step& s) {
    if (s.dense) return NoiseSite::none;
    switch (s.gate.kind) {
        case GateKind::CNOT: return NoiseSite::two;
        case GateKind::GPHASE:
        case GateKind::MEASURE_ALL: return NoiseSite::none;
        default: return NoiseSite::one;
    }
}

void apply_dense(std::vector<cplx>& psi, const Eigen::MatrixXcd& u, int offset) {
    const std::size_t d = static_cast<std::size_t>(u.rows());
    const int m = std::countr_zero(d);
    const std::size_t low_count = std::size_t{1} << offset;
    const std::size_t high_count = psi.size() >> (offset + m);
    Eigen::VectorXcd in(d), out(d);
    for (std::size_t high = 0; high < high_count; ++high)
        for (std::size_t low = 0; low < low_count; ++low) {
            const std::size_t base = (high << (offset + m)) | low;
            for (std::size_t j = 0; j < d; ++j) in(j) = psi[base | (j << offset)];
            out.noalias() = u * in;
            for (std::size_t j = 0; j < d; ++j) psi[base | (j << offset)] = out(j);
        }
}

template <bool Parallel>
void apply_step(std::vector<cplx>& psi, const Program::Step& step) {
    if (step.dense) {
        apply_dense(psi, *step.dense, step.offset);
        return;
    }
    const Gate& g = step.gate;
    std::span<cplx> s(psi);
    auto one = [&](const Gate1q& u) {
        if constexpr (Parallel)
            kernels::parallel::apply_1q(s, g.q0, u);
        else
            kernels::serial::apply_1q(s, g.q0, u);
    };
    switch (g.kind) {
        case GateKind::H: one(kH); break;
        case GateKind::X: one(kX); break;
        case GateKind::S: one(kS); break;
        case GateKind::Sdg: one(kSdg); break;
        case GateKind::RZ:
            one({std::polar(1.0, -g.angle / 2), cplx{0}, cplx{0}, std::polar(1.0, g.angle / 2)});
            break;
        case GateKind::CNOT:
            if constexpr (Parallel)
                kernels::parallel::apply_cnot(s, g.q0, g.q1);
            else
                kernels::serial::apply_cnot(s, g.q0, g.q1);
            break;
        case GateKind::GPHASE: {
            const cplx ph = std::polar(1.0, g.angle);
            for (auto& a : psi) a *= ph;
            break;
        }
        case GateKind::MEASURE_ALL: break;
    }
}

std::vector<cplx> zero_state(int width) {
    std::vector<cplx> psi(std::size_t{1} << width, cplx{});
    psi[0] = 1.0;
    return psi;
}

void check_width(int width) {
    if (width < 1 || width > kMaxSimQubits) throw std::invalid_argument("simulator supports 1..24 qubits");
}

std::vector<double> cdf_of(const std::vector<cplx>& psi) {
    std::vector<double> cdf(psi.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) cdf[i] = acc += std::norm(psi[i]);
    return cdf;
}

Mask draw(const std::vector<double>& cdf, Rng& rng) {
    double u = std::uniform_real_distribution<double>(0.0, cdf.back())(rng);
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    return static_cast<Mask>(it - cdf.begin());
}

// Samples measurement outcomes of a noisy program, one trajectory per call.
//
// Noiseless prefix states are cached so a trajectory is only resimulated from
// its first error onward; trajectories with exactly one error are memoized.
class TrajectorySampler {
public:
    TrajectorySampler(const Program& program, const NoiseModel& noise) : program_(program) {
        const auto& steps = program.steps();
        const std::size_t n = steps.size();
        log_survival_.assign(n + 1, 0.0);
        for (std::size_t s = 0; s < n; ++s) {
            double p = 0.0;
            switch (site_of(steps[s])) {
                case NoiseSite::one: p = noise.p1; break;
                case NoiseSite::two: p = noise.p2; break;
                case NoiseSite::none: break;
            }
            log_survival_[s + 1] = log_survival_[s] + std::max(std::log1p(-p), -1000.0);
        }
        const std::size_t dim = std::size_t{1} << program.width();
        auto psi = zero_state(program.width());
        cache_enabled_ = (n + 1) * dim <= kMaxCachedAmplitudes;
        if (cache_enabled_) cache_.push_back(psi);
        for (const auto& step : steps) {
            apply_step<true>(psi, step);
            if (cache_enabled_) cache_.push_back(psi);
        }
        ideal_cdf_ = cdf_of(psi);
        memo_enabled_ = dim <= kMaxMemoAmplitudes;
    }

    Mask sample(Rng& rng) {
        const std::size_t n = program_.steps().size();
        std::size_t first = next_error(0, rng);
        if (first == n) return draw(ideal_cdf_, rng);
        auto [pauli, tag] = draw_pauli(first, rng);
        std::size_t second = next_error(first + 1, rng);
        if (second == n && memo_enabled_) {
            const std::uint64_t key = first * 16 + tag;
            auto it = memo_.find(key);
            if (it == memo_.end()) {
                auto psi = prefix(first + 1);
                apply_pauli(psi, pauli);
                run_from(psi, first + 1, n, rng, /*further_errors=*/false);
                it = memo_.emplace(key, cdf_of(psi)).first;
            }
            return draw(it->second, rng);
        }
        auto psi = prefix(first + 1);
        apply_pauli(psi, pauli);
        pending_ = second;
        run_from(psi, first + 1, n, rng, true);
        return draw(cdf_of(psi), rng);
    }

    const std::vector<double>& ideal_cdf() const { return ideal_cdf_; }

private:
    std::size_t next_error(std::size_t from, Rng& rng) {
        const std::size_t n = program_.steps().size();
        if (from >= n) return n;
        const double target = log_survival_[from] + std::log(1.0 - uniform_(rng));
        // First step r >= from whose cumulative survival drops below the draw.
        auto it = std::upper_bound(log_survival_.begin() + from + 1, log_survival_.end(), target,
                                   [](double t, double v) { return v < t; });
        if (it == log_survival_.end()) return n;
        return static_cast<std::size_t>(it - log_survival_.begin()) - 1;
    }

    std::pair<PauliKey, int> draw_pauli(std::size_t s, Rng& rng) {
        const Gate& g = program_.steps()[s].gate;
        auto factor = [](int code, int q) {
            Mask bit = Mask{1} << q;
            // 1 = X, 2 = Y, 3 = Z
            return PauliKey{(code == 1 || code == 2) ? bit : 0, (code == 2 || code == 3) ? bit : 0};
        };
        if (site_of(program_.steps()[s]) == NoiseSite::one) {
            int code = std::uniform_int_distribution<int>(1, 3)(rng);
            return {factor(code, g.q0), code};
        }
        int code = std::uniform_int_distribution<int>(1, 15)(rng);
        PauliKey a = factor(code & 3, g.q0), b = factor(code >> 2, g.q1);
        return {PauliKey{a.x | b.x, a.z | b.z}, code};
    }

    std::vector<cplx> prefix(std::size_t count) const {
        if (cache_enabled_) return cache_[count];
        auto psi = zero_state(program_.width());
        for (std::size_t s = 0; s < count; ++s) apply_step<true>(psi, program_.steps()[s]);
        return psi;
    }

    static void apply_pauli(std::vector<cplx>& psi, const PauliKey& p) { kernels::parallel::apply_pauli(psi, p); }

    void run_from(std::vector<cplx>& psi, std::size_t start, std::size_t end, Rng& rng, bool further_errors) {
        for (std::size_t s = start; s < end; ++s) {
            apply_step<true>(psi, program_.steps()[s]);
            if (further_errors && s == pending_) {
                apply_pauli(psi, draw_pauli(s, rng).first);
                pending_ = next_error(s + 1, rng);
            }
        }
    }

    const Program& program_;
    std::vector<double> log_survival_;
    std::vector<std::vector<cplx>> cache_;
    bool cache_enabled_ = false;
    bool memo_enabled_ = false;
    std::vector<double> ideal_cdf_;
    std::unordered_map<std::uint64_t, std::vector<double>> memo_;
    std::size_t pending_ = 0;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

OverlapEstimate estimate(const Program& program, const NoiseModel& noise, std::int64_t shots, std::uint64_t seed,
                         const std::function<bool(Mask)>& success) {
    noise.validate();
    if (shots < 0) throw std::invalid_argument("shots must be positive");
    OverlapEstimate est;
    if (shots == 0) {
        if (noise.active()) throw std::invalid_argument("noisy simulation requires shots");
        auto psi = run_statevector(program);
        for (std::size_t b = 0; b < psi.size(); ++b)
            if (success(static_cast<Mask>(b))) est.probability += std::norm(psi[b]);
        est.probability = std::clamp(est.probability, 0.0, 1.0);
        return est;
    }
    TrajectorySampler sampler(program, noise);
    Rng rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < shots; ++i) hits += success(sampler.sample(rng));
    est.shots = shots;
    est.probability = static_cast<double>(hits) / static_cast<double>(shots);
    est.std_error = std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(shots));
    return est;
}

}  // namespace

void NoiseModel::validate() const {
    if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0))
        throw std::invalid_argument("noise probabilities must lie in [0, 1]");
}

Program::Program(int width) : width_(width) {}

Program::Program(const Circuit& circuit) : width_(circuit.width()) { append(circuit); }

Program& Program::append(const Circuit& circuit, int offset) {
    if (circuit.width() + offset > width_) throw std::invalid_argument("circuit does not fit the program");
    circuit.validate();
    for (Gate g : circuit.gates()) {
        if (g.q0 >= 0) g.q0 += offset;
        if (g.q1 >= 0) g.q1 += offset;
        steps_.push_back({g, nullptr, 0});
    }
    return *this;
}

Program& Program::append(const Program& program, int offset) {
    if (program.width() + offset > width_) throw std::invalid_argument("program does not fit");
    for (Step s : program.steps()) {
        if (s.dense) {
            s.offset += offset;
        } else {
            if (s.gate.q0 >= 0) s.gate.q0 += offset;
            if (s.gate.q1 >= 0) s.gate.q1 += offset;
        }
        steps_.push_back(std::move(s));
    }
    return *this;
}

Program& Program::append_dense(std::shared_ptr<const Eigen::MatrixXcd> unitary, int offset) {
    const auto d = static_cast<std::size_t>(unitary->rows());
    if (d == 0 || (d & (d - 1)) || unitary->cols() != unitary->rows())
        throw std::invalid_argument("dense block must be square with power-of-two size");
    if (std::countr_zero(d) + offset > width_) throw std::invalid_argument("dense block does not fit");
    steps_.push_back({Gate{GateKind::GPHASE}, std::move(unitary), offset});
    return *this;
}

std::vector<cplx> run_statevector(const Program& program) {
    check_width(program.width());
    auto psi = zero_state(program.width());
    for (const auto& s : program.steps()) apply_step<true>(psi, s);
    return psi;
}

std::vector<cplx> run_statevector_serial(const Program& program) {
    check_width(program.width());
    auto psi = zero_state(program.width());
    for (const auto& s : program.steps()) apply_step<false>(psi, s);
    return psi;
}

Eigen::MatrixXcd program_unitary(const Program& program) {
    if (program.width() > 12) throw std::invalid_argument("unitary extraction limited to 12 qubits");
    const std::size_t dim = std::size_t{1} << program.width();
    Eigen::MatrixXcd u(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        std::vector<cplx> psi(dim, cplx{});
        psi[b] = 1.0;
        for (const auto& s : program.steps()) apply_step<true>(psi, s);
        for (std::size_t r = 0; r < dim; ++r) u(r, b) = psi[r];
    }
    return u;
}

SimulationResult simulate(const Program& program, const NoiseModel& noise, std::int64_t shots, std::uint64_t seed) {
    check_width(program.width());
    noise.validate();
    if (shots < 0) throw std::invalid_argument("shots must be positive");
    SimulationResult res;
    if (shots == 0) {
        if (noise.active()) throw std::invalid_argument("noisy simulation requires shots");
        auto psi = run_statevector(program);
        res.probabilities.resize(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i) res.probabilities[i] = std::norm(psi[i]);
        return res;
    }
    TrajectorySampler sampler(program, noise);
    Rng rng(seed);
    for (std::int64_t i = 0; i < shots; ++i) ++res.counts[sampler.sample(rng)];
    res.shots = shots;
    return res;
}

OverlapEstimate mirror_probability(const Program& prep1, const Program& evolution, const Circuit& prep2,
                                   const NoiseModel& noise, std::int64_t shots, std::uint64_t seed) {
    if (prep1.width() != evolution.width() || prep1.width() != prep2.width())
        throw std::invalid_argument("mirror circuits must share a width");
    check_width(prep1.width());
    Program program(prep1.width());
    program.append(prep1).append(evolution).append(adjoint(prep2));
    return estimate(program, noise, shots, seed, [](Mask m) { return m == 0; });
}

OverlapEstimate destructive_swap_probability(const Program& state1, const Program& state2, const NoiseModel& noise,
                                             std::int64_t shots, std::uint64_t seed) {
    if (state1.width() != state2.width()) throw std::invalid_argument("SWAP registers must share a width");
    const int n = state1.width();
    check_width(2 * n);
    Program program(2 * n);
    program.append(state1, 0).append(state2, n);
    Circuit tail(2 * n);
    for (int q = 0; q < n; ++q) tail.cnot(q, q + n);
    for (int q = 0; q < n; ++q) tail.h(q);
    program.append(tail);
    const Mask low = (Mask{1} << n) - 1;
    auto fail = estimate(program, noise, shots, seed, [n, low](Mask m) { return parity((m & low) & (m >> n)); });
    OverlapEstimate est = fail;
    est.probability = std::clamp(1.0 - 2.0 * fail.probability, 0.0, 1.0);
    est.std_error = 2.0 * fail.std_error;
    return est;
}

}  // namespace dosqtda
