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


#ifndef DOSQTDA_PIPELINE_HPP_
#define DOSQTDA_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dosqtda/cartan.hpp"
#include "dosqtda/complex.hpp"
#include "dosqtda/dos.hpp"
#include "dosqtda/laplacian.hpp"
#include "dosqtda/oracle.hpp"

namespace dosqtda {

enum class EvolutionKind { cartan, direct };

struct RunConfig {
    // Exactly one input: a complex (JSON path or inline JSON text) or a point cloud.
    std::optional<std::string> complex_path;
    std::optional<std::string> complex_json;
    std::optional<std::string> cloud_path;
    std::string metric = "euclidean";
    std::optional<double> epsilon;
    int max_order = -1;

    int k = 0;
    EvolutionKind evolution = EvolutionKind::cartan;
    Protocol protocol = Protocol::mirror;
    BasisScope scope = BasisScope::all;
    std::int64_t shots = 1000;
    NoiseModel noise;
    std::optional<int> f_s;
    int period_multiplier = 1;
    InterpolationMode interpolation = InterpolationMode::trig;
    KhkOptions optimizer;
    std::uint64_t seed = 0;
    std::string out_dir;  // empty: no files
    bool oracle = true;

    void validate() const;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string run_config_to_json(const RunConfig& config);

SimplicialComplex load_input(const RunConfig& config);

struct CartanStage {
    Laplacian laplacian;
    LieBasis basis;
    CartanSplit split;
    KhkResult khk;
};

/// Laplacian -> closure -> split -> subalgebra -> KHK. A Laplacian without
/// non-identity strings skips the optimization.
CartanStage run_cartan(const SimplicialComplex& complex, int k, const KhkOptions& options);

struct OracleSection {
    int beta = 0;
    std::size_t rank = 0;
    std::vector<double> eigenvalues;
    std::vector<double> trace_bias;  // |analytic estimator - exact| per sample time
};

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

struct RunReport {
    RunConfig config;
    int n_vertices = 0;
    std::size_t s_k = 0;
    std::size_t laplacian_terms = 0;
    std::size_t lie_dim = 0;
    std::size_t l_dim = 0;
    std::size_t m_dim = 0;
    std::size_t h_dim = 0;
    std::size_t h_terms = 0;
    double khk_residual = 0.0;
    int khk_restarts = 0;
    bool khk_converged = true;
    std::size_t evolution_gates = 0;
    std::size_t evolution_cnots = 0;
    SamplingPlan plan;
    SpectrumEstimate spectrum;
    BettiReport betti;
    std::optional<OracleSection> oracle;
    std::vector<StageTiming> timing;
};

/// Full pipeline. When config.out_dir is set, writes report.json, signal.csv,
/// spectrum.json, khk.json and timing.json there as each stage completes.
/// Failures are rethrown as StageError naming the stage.
RunReport analyze(const RunConfig& config);

std::string report_to_json(const RunReport& report);

/// One QASM file per (time index, target, variant) plus one evolution file
/// per time. Empty `time_indices` means every sample time, empty `targets`
/// every basis state. Returns the written paths in order.
std::vector<std::string> export_circuits(const RunConfig& config, const std::vector<int>& time_indices,
                                         const std::vector<Mask>& targets);

std::string lie_scan_to_csv(const std::vector<LieDimRow>& rows);

}  // namespace dosqtda

#endif  // DOSQTDA_PIPELINE_HPP_
