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


#include "dosqtda/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dosqtda {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::RZ: return "rz";
        case GateKind::CNOT: return "cx";
        case GateKind::GPHASE: return "gphase";
        case GateKind::MEASURE_ALL: return "measure";
    }
    return "?";
}

std::size_t Circuit::count(GateKind kind) const {
    std::size_t n = 0;
    for (const auto& g : gates_) n += g.kind == kind;
    return n;
}

Circuit& Circuit::add(const Gate& g) {
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::append(const Circuit& other, int offset) {
    for (Gate g : other.gates_) {
        if (g.q0 >= 0) g.q0 += offset;
        if (g.q1 >= 0) g.q1 += offset;
        gates_.push_back(g);
    }
    return *this;
}

void Circuit::validate() const {
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        auto in_range = [this](int q) { return q >= 0 && q < width_; };
        switch (g.kind) {
            case GateKind::CNOT:
                if (!in_range(g.q0) || !in_range(g.q1) || g.q0 == g.q1) throw std::invalid_argument("bad CNOT qubits");
                break;
            case GateKind::GPHASE:
                if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite phase");
                break;
            case GateKind::MEASURE_ALL:
                if (i + 1 != gates_.size()) throw std::invalid_argument("MEASURE_ALL must be the last gate");
                break;
            default:
                if (!in_range(g.q0)) throw std::invalid_argument("gate qubit out of range");
                if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite rotation angle");
        }
    }
}

Circuit adjoint(const Circuit& circuit) {
    Circuit out(circuit.width());
    const auto& gs = circuit.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::S: g.kind = GateKind::Sdg; break;
            case GateKind::Sdg: g.kind = GateKind::S; break;
            case GateKind::RZ:
            case GateKind::GPHASE: g.angle = -g.angle; break;
            case GateKind::MEASURE_ALL: throw std::invalid_argument("cannot invert a measurement");
            default: break;
        }
        out.add(g);
    }
    return out;
}

namespace {

void append_exponential(Circuit& c, const PauliKey& p, double angle) {
    std::vector<int> support;
    for (int q = 0; q < c.width(); ++q)
        if ((p.support() >> q) & 1) support.push_back(q);
    for (int q : support) {
        if (!((p.x >> q) & 1)) continue;
        if ((p.z >> q) & 1) c.sdg(q);
        c.h(q);
    }
    for (std::size_t i = 0; i + 1 < support.size(); ++i) c.cnot(support[i], support[i + 1]);
    c.rz(support.back(), angle);
    for (std::size_t i = support.size() - 1; i-- > 0;) c.cnot(support[i], support[i + 1]);
    for (int q : support) {
        if (!((p.x >> q) & 1)) continue;
        c.h(q);
        if ((p.z >> q) & 1) c.s(q);
    }
}

void append_slice(Circuit& c, const PauliSum& op, double t) {
    for (const auto& [p, coeff] : op.terms()) {
        if (std::abs(coeff.imag()) > 1e-10) throw std::invalid_argument("evolution needs real coefficients");
        if (p.is_identity())
            c.gphase(-coeff.real() * t);
        else
            append_exponential(c, p, 2.0 * coeff.real() * t);
    }
}

}  // namespace

Circuit synthesize_evolution(const PauliSum& h, double t) {
    if (!h.all_commuting()) throw std::invalid_argument("evolution terms do not commute");
    Circuit c(h.n_qubits());
    append_slice(c, h, t);
    return c;
}

Circuit synthesize_trotter(const PauliSum& op, double t, int steps) {
    if (steps < 1) throw std::invalid_argument("Trotter steps must be >= 1");
    Circuit c(op.n_qubits());
    for (int s = 0; s < steps; ++s) append_slice(c, op, t / steps);
    return c;
}

PrepMode parse_prep_mode(std::string_view name) {
    if (name == "hot") return PrepMode::hot;
    if (name == "plus") return PrepMode::plus;
    if (name == "i_phase") return PrepMode::i_phase;
    throw std::invalid_argument("unknown prep mode: " + std::string(name));
}

std::string_view prep_mode_name(PrepMode mode) {
    switch (mode) {
        case PrepMode::hot: return "hot";
        case PrepMode::plus: return "plus";
        case PrepMode::i_phase: return "i_phase";
    }
    return "?";
}

Circuit prep_circuit(int width, Mask target, PrepMode mode, Mask reference) {
    if (width < 1 || width > kMaxQubits) throw std::invalid_argument("bad register width");
    const Mask limit = Mask{1} << width;
    if (target >= limit || reference >= limit) throw std::invalid_argument("basis state outside register");
    Circuit c(width);
    if (mode == PrepMode::hot) {
        for (int q = 0; q < width; ++q)
            if ((target >> q) & 1) c.x(q);
        return c;
    }
    const Mask diff = target ^ reference;
    if (diff == 0) throw std::invalid_argument("superposition prep needs target != reference");
    const int pivot = std::countr_zero(diff);
    c.h(pivot);
    if (mode == PrepMode::i_phase) c.s(pivot);
    for (int q = pivot + 1; q < width; ++q)
        if ((diff >> q) & 1) c.cnot(pivot, q);
    for (int q = 0; q < width; ++q)
        if ((reference >> q) & 1) c.x(q);
    return c;
}

std::string to_qasm(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.width() << "];\ncreg c[" << circuit.width() << "];\n";
    char buf[64];
    for (const auto& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::RZ:
                std::snprintf(buf, sizeof buf, "%.17g", g.angle);
                out << "rz(" << buf << ") q[" << g.q0 << "];\n";
                break;
            case GateKind::CNOT: out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n"; break;
            case GateKind::GPHASE:
                std::snprintf(buf, sizeof buf, "%.17g", g.angle);
                out << "// gphase(" << buf << "): global phase exp(i*" << buf << "), not emitted\n";
                break;
            case GateKind::MEASURE_ALL: out << "measure q -> c;\n"; break;
            default: out << gate_name(g.kind) << " q[" << g.q0 << "];\n";
        }
    }
    return out.str();
}

}  // namespace dosqtda
