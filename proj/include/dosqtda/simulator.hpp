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


#ifndef DOSQTDA_SIMULATOR_HPP_
#define DOSQTDA_SIMULATOR_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "dosqtda/circuit.hpp"

namespace dosqtda {

inline constexpr int kMaxSimQubits = 24;

/// Depolarizing trajectories: after a single-qubit gate one of X/Y/Z with
/// probability p1/3 each; after a CNOT one of the 15 non-identity two-qubit
/// Paulis with probability p2/15 each.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;

    bool active() const { return p1 > 0.0 || p2 > 0.0; }
    void validate() const;
};

/// A circuit that may also contain dense unitary blocks. Dense blocks are
/// noiseless and act on qubits [offset, offset + log2(dim)).
class Program {
public:
    struct Step {
        Gate gate;
        std::shared_ptr<const Eigen::MatrixXcd> dense;
        int offset = 0;
    };

    explicit Program(int width);
    Program(const Circuit& circuit);  // NOLINT(google-explicit-constructor)

    int width() const { return width_; }
    const std::vector<Step>& steps() const { return steps_; }

    Program& append(const Circuit& circuit, int offset = 0);
    Program& append(const Program& program, int offset = 0);
    Program& append_dense(std::shared_ptr<const Eigen::MatrixXcd> unitary, int offset = 0);

private:
    int width_;
    std::vector<Step> steps_;
};

/// Noiseless statevector after running `program` on |0...0>.
std::vector<cplx> run_statevector(const Program& program);

/// Same, using the serial reference kernels.
std::vector<cplx> run_statevector_serial(const Program& program);

/// Full unitary of a program, column b = image of |b>.
Eigen::MatrixXcd program_unitary(const Program& program);

struct SimulationResult {
    std::vector<double> probabilities;      // analytic mode only
    std::map<Mask, std::int64_t> counts;    // shot mode only
    std::int64_t shots = 0;                 // 0 means analytic
};

/// Analytic Born probabilities when shots == 0 (noise must then be inactive),
/// otherwise one sampled trajectory per shot.
SimulationResult simulate(const Program& program, const NoiseModel& noise, std::int64_t shots, std::uint64_t seed);

struct OverlapEstimate {
    double probability = 0.0;
    std::int64_t shots = 0;  // 0 means analytic
    double std_error = 0.0;

    bool analytic() const { return shots == 0; }
};

/// Return probability of prep1 -> evolution -> prep2^dag.
OverlapEstimate mirror_probability(const Program& prep1, const Program& evolution, const Circuit& prep2,
                                   const NoiseModel& noise, std::int64_t shots, std::uint64_t seed);

/// |<state2|state1>|^2 from the destructive SWAP test on 2n qubits.
OverlapEstimate destructive_swap_probability(const Program& state1, const Program& state2, const NoiseModel& noise,
                                             std::int64_t shots, std::uint64_t seed);

}  // namespace dosqtda

#endif  // DOSQTDA_SIMULATOR_HPP_
