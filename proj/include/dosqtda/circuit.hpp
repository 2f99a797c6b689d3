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


#ifndef DOSQTDA_CIRCUIT_HPP_
#define DOSQTDA_CIRCUIT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dosqtda/pauli.hpp"

namespace dosqtda {

enum class GateKind { H, X, S, Sdg, RZ, CNOT, GPHASE, MEASURE_ALL };

std::string_view gate_name(GateKind kind);

/// RZ(a) = diag(e^{-ia/2}, e^{ia/2}); GPHASE(a) multiplies the state by e^{ia}.
struct Gate {
    GateKind kind = GateKind::H;
    int q0 = -1;  // target, or control for CNOT
    int q1 = -1;  // CNOT target
    double angle = 0.0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
public:
    explicit Circuit(int width = 0) : width_(width) {}

    int width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    std::size_t count(GateKind kind) const;
    std::size_t cnot_count() const { return count(GateKind::CNOT); }

    Circuit& add(const Gate& g);
    Circuit& h(int q) { return add({GateKind::H, q}); }
    Circuit& x(int q) { return add({GateKind::X, q}); }
    Circuit& s(int q) { return add({GateKind::S, q}); }
    Circuit& sdg(int q) { return add({GateKind::Sdg, q}); }
    Circuit& rz(int q, double angle) { return add({GateKind::RZ, q, -1, angle}); }
    Circuit& cnot(int control, int target) { return add({GateKind::CNOT, control, target}); }
    Circuit& gphase(double angle) { return add({GateKind::GPHASE, -1, -1, angle}); }
    Circuit& measure_all() { return add({GateKind::MEASURE_ALL}); }

    /// Appends `other`, shifting its qubit indices by `offset`.
    Circuit& append(const Circuit& other, int offset = 0);

    /// Throws on out-of-range indices, non-finite angles or a misplaced MEASURE_ALL.
    void validate() const;

private:
    int width_;
    std::vector<Gate> gates_;
};

/// Reversed gate list with S <-> Sdg and negated rotation/phase angles.
Circuit adjoint(const Circuit& circuit);

/// exp(-i h t) for a sum of mutually commuting strings. Terms go in key order;
/// each is a basis change (X: H, Y: Sdg H), a CNOT ladder over the support,
/// RZ(2 c t) on the highest qubit and the mirrored un-computation. The identity
/// coefficient becomes GPHASE(-c t). Gate count does not depend on t.
Circuit synthesize_evolution(const PauliSum& h, double t);

/// First-order product formula with `steps` slices, each using the same per-term
/// construction as synthesize_evolution.
Circuit synthesize_trotter(const PauliSum& op, double t, int steps);

enum class PrepMode { hot, plus, i_phase };

PrepMode parse_prep_mode(std::string_view name);
std::string_view prep_mode_name(PrepMode mode);

/// hot: |target>. plus: (|reference> + |target>)/sqrt2. i_phase:
/// (|reference> + i|target>)/sqrt2.
Circuit prep_circuit(int width, Mask target, PrepMode mode, Mask reference = 0);

/// OpenQASM 2.0 text. GPHASE has no QASM counterpart and is written as a comment.
std::string to_qasm(const Circuit& circuit);

}  // namespace dosqtda

#endif  // DOSQTDA_CIRCUIT_HPP_
