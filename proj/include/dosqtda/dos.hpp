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


#ifndef DOSQTDA_DOS_HPP_
#define DOSQTDA_DOS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dosqtda/oracle.hpp"
#include "dosqtda/pauli.hpp"
#include "dosqtda/signal.hpp"
#include "dosqtda/simulator.hpp"

namespace dosqtda {

struct PlanOverrides {
    std::optional<int> f_s;
    int period_multiplier = 1;
};

/// Uniform grid over period_multiplier periods of length 2*pi with
/// M = 2 f_s - 1 points per period. Only the first half (j = 0..G/2) is sampled;
/// mirroring supplies the rest.
struct SamplingPlan {
    int n_qubits = 0;
    int f_s = 0;
    int samples_per_period = 0;  // M
    double period = 0.0;         // T
    int period_multiplier = 1;
    bool below_nyquist = false;

    int grid_points() const { return samples_per_period * period_multiplier; }
    double full_period() const { return period * period_multiplier; }
    double dt() const { return full_period() / grid_points(); }
    std::vector<double> sample_times() const;
};

SamplingPlan make_plan(int n, const PlanOverrides& overrides = {});

enum class Protocol { mirror, swap, exact };
enum class BasisScope { all, complex_only };

Protocol parse_protocol(std::string_view name);
std::string_view protocol_name(Protocol protocol);
BasisScope parse_basis_scope(std::string_view name);
std::string_view basis_scope_name(BasisScope scope);

/// What is evolved: the Cartan effective Hamiltonian compiled to gates, or the
/// Hamiltonian itself applied as a dense block (small N, testing only).
class Evolution {
public:
    static Evolution cartan(PauliSum h_sum);
    static Evolution direct(const PauliSum& op);

    bool is_direct() const { return dense_ != nullptr; }
    int n_qubits() const { return hamiltonian_.n_qubits(); }
    const PauliSum& hamiltonian() const { return hamiltonian_; }
    Program program(double t) const;
    /// <b|H|b>, identity included.
    double diagonal(Mask b) const;

private:
    PauliSum hamiltonian_;
    std::shared_ptr<const DenseEvolution> dense_;
};

struct TraceOptions {
    Protocol protocol = Protocol::mirror;
    BasisScope scope = BasisScope::all;
    NoiseModel noise;
    std::int64_t shots = 1000;  // 0 = analytic probabilities
    std::uint64_t seed = 0;
    std::vector<Mask> basis;    // targets for complex_only
};

/// Reference state used against `target` in the superposition preps.
inline Mask reference_for(Mask target) { return target == 0 ? Mask{1} : Mask{0}; }

/// Re and Im of <t|U|t> relative to the reference phase from the three
/// overlaps |<t|U|t>|^2, |<+|U|+>|^2, |<i|U|+>|^2.
cplx reconstruct_element(double p0, double p_plus, double p_i);

/// One diagonal element <target|U(t)|target>, reference phase removed.
cplx measure_diagonal(const Evolution& evolution, double t, Mask target, const TraceOptions& options,
                      std::uint64_t job_seed);

/// Raw S(t_j) on plan.sample_times(); sums all diagonal elements.
TraceSignal estimate_trace(const Evolution& evolution, const SamplingPlan& plan, const TraceOptions& options);

/// Boundary matching (Re S(0) -> 2^N, Im S(0) -> 0) then mirroring
/// S(T - t) = conj(S(t)) onto the full grid of plan.grid_points() samples.
TraceSignal postprocess(const TraceSignal& raw, int n, const SamplingPlan& plan);

enum class InterpolationMode { trig, periodic_spline };

InterpolationMode parse_interpolation_mode(std::string_view name);
std::string_view interpolation_mode_name(InterpolationMode mode);

class Interpolant {
public:
    Interpolant(const TraceSignal& signal, InterpolationMode mode);

    InterpolationMode mode() const { return mode_; }
    double period() const { return period_; }
    cplx operator()(double t) const;

    /// (1/P) int_0^P S(t) e^{+i f t} dt: the weight of eigenvalue f.
    cplx coefficient(double f) const;

    /// Trig mode only: X_m = (1/G) sum_j S_j e^{-2 pi i m j / G}.
    const std::vector<cplx>& bins() const { return bins_; }

private:
    cplx spline_at(double t) const;

    InterpolationMode mode_;
    double period_;
    double dt_;
    std::vector<cplx> samples_;
    std::vector<cplx> bins_;
    std::vector<cplx> second_;  // spline second derivatives
};

inline Interpolant interpolate(const TraceSignal& signal, InterpolationMode mode) { return Interpolant(signal, mode); }

struct SpectrumEstimate {
    std::vector<double> c;       // c_0..c_N
    std::vector<double> c_imag;  // imaginary residuals, diagnostic
    double rank_sum = 0.0;
    double rank_c0 = 0.0;
    double residual_energy = 0.0;
};

/// Reads c_0..c_N from the interpolant. With several periods the grid also
/// resolves fractional frequencies m/P; their weight is split linearly
/// between the two neighbouring integers.
SpectrumEstimate fourier_coefficients(const Interpolant& interpolant, int n);

struct BettiReport {
    int k = 0;
    std::size_t s_k = 0;
    double rank_sum = 0.0;
    double rank_c0 = 0.0;
    int beta_sum = 0;
    int beta_c0 = 0;
    std::optional<int> oracle_beta;
    std::optional<std::size_t> oracle_rank;

    int beta() const { return beta_c0; }
};

BettiReport betti_estimate(std::size_t s_k, const SpectrumEstimate& spec, int n_qubits, int k = 0);

std::string spectrum_to_json(const SpectrumEstimate& spec);

/// CSV with columns t, re_raw, im_raw, re_post, im_post over the full grid;
/// raw columns are empty where the value came from mirroring.
std::string signal_to_csv(const TraceSignal& raw, const TraceSignal& post);

}  // namespace dosqtda

#endif  // DOSQTDA_DOS_HPP_
