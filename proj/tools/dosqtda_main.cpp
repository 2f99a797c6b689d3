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


// dosqtda: Betti numbers of simplicial complexes through simulated
// density-of-states sampling.
//
//   dosqtda analyze --config run.json --protocol mirror --shots 1000 --out out/
//   dosqtda oracle --complex fig1c.json --k 1
//   dosqtda cartan --complex fig1c.json --k 1 --out out/
//   dosqtda export-circuits --config run.json --times 0,1 --out out/
//   dosqtda scan-lie-dims --n 4 --out scan.csv

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dosqtda/pipeline.hpp"
#include "dosqtda/rng.hpp"

namespace {

using namespace dosqtda;

struct CommonFlags {
    std::string config;
    std::string complex_path;
    std::string cloud_path;
    std::optional<std::string> metric;
    std::optional<double> epsilon;
    std::optional<int> k;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "JSON run configuration");
        app->add_option("--complex", complex_path, "explicit complex JSON {\"n\", \"maximal\"}");
        app->add_option("--cloud", cloud_path, "point cloud CSV");
        app->add_option("--metric", metric, "euclidean | manhattan | chebyshev");
        app->add_option("--epsilon", epsilon, "Vietoris-Rips scale");
        app->add_option("--k", k, "homology order");
        app->add_option("--seed", seed, "master seed");
        app->add_option("--out", out, "output directory");
    }

    RunConfig resolve() const {
        RunConfig c = config.empty() ? RunConfig{} : load_run_config(config);
        if (!complex_path.empty()) {
            c.complex_path = complex_path;
            c.complex_json.reset();
            c.cloud_path.reset();
        }
        if (!cloud_path.empty()) {
            c.cloud_path = cloud_path;
            c.complex_path.reset();
            c.complex_json.reset();
        }
        if (metric) c.metric = *metric;
        if (epsilon) c.epsilon = *epsilon;
        if (k) c.k = *k;
        if (seed) c.seed = *seed;
        if (out) c.out_dir = *out;
        return c;
    }
};

void write_file(const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

int run_oracle(const RunConfig& cfg, const std::optional<int>& k) {
    auto complex = load_input(cfg);
    nlohmann::ordered_json j;
    j["n_vertices"] = complex.n_vertices();
    auto& rows = j["orders"] = nlohmann::ordered_json::array();
    const int lo = k ? *k : 0, hi = k ? *k : complex.n_vertices() - 1;
    for (int order = lo; order <= hi; ++order) {
        auto lap = combinatorial_laplacian(complex, order);
        auto spec = exact_spectrum(lap.op);
        rows.push_back({{"k", order},
                        {"s_k", lap.s_k},
                        {"pauli_terms", lap.op.size()},
                        {"rank", spec.rank},
                        {"beta", static_cast<int>(lap.s_k) - static_cast<int>(spec.rank)},
                        {"eigenvalues", spec.eigenvalues}});
    }
    const std::string text = j.dump(2);
    if (!cfg.out_dir.empty()) write_file((std::filesystem::path(cfg.out_dir) / "oracle.json").string(), text + "\n");
    std::cout << text << '\n';
    return 0;
}

int run_cartan_cmd(const RunConfig& cfg) {
    auto complex = load_input(cfg);
    KhkOptions opts = cfg.optimizer;
    opts.seed = derive_seed(cfg.seed, {0x636172746eULL});
    auto st = run_cartan(complex, cfg.k, opts);
    const int n = complex.n_vertices();
    if (!cfg.out_dir.empty()) {
        const auto dir = std::filesystem::path(cfg.out_dir);
        write_file((dir / "khk.json").string(), khk_to_json(st.khk, n) + "\n");
        write_file((dir / "laplacian.txt").string(), st.laplacian.op.to_text());
    }
    auto evo = synthesize_evolution(st.khk.h_sum, 1.0);
    std::printf("k=%d |S_k|=%zu laplacian_terms=%zu dim_g=%zu |l|=%zu |m|=%zu |h|=%zu\n", cfg.k, st.laplacian.s_k,
                st.laplacian.op.size(), st.basis.dim(), st.split.l.size(), st.split.m.size(), st.split.h.size());
    std::printf("khk residual=%.3e restarts=%d converged=%s h_terms=%zu (+identity %.6g)\n", st.khk.residual,
                st.khk.restarts_used, st.khk.converged ? "yes" : "no", st.khk.h_sum.without_identity().size(),
                st.khk.identity_coeff);
    std::printf("evolution gates=%zu cnots=%zu\n", evo.size(), evo.cnot_count());
    return st.khk.converged ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dosqtda: Betti numbers via simulated density-of-states sampling"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, oracle_flags, cartan_flags, export_flags;
    std::optional<std::string> protocol, scope, interpolation, evolution;
    std::optional<std::int64_t> shots;
    std::optional<double> p1, p2;
    std::optional<int> f_s, period_multiplier;
    bool no_oracle = false;

    auto* analyze = app.add_subcommand("analyze", "run the full pipeline");
    analyze_flags.attach(analyze);
    analyze->add_option("--protocol", protocol, "mirror | swap | exact");
    analyze->add_option("--scope", scope, "all | complex_only");
    analyze->add_option("--evolution", evolution, "cartan | direct");
    analyze->add_option("--shots", shots, "shots per overlap (0 = analytic)");
    analyze->add_option("--noise-p1", p1, "single-qubit depolarizing probability");
    analyze->add_option("--noise-p2", p2, "two-qubit depolarizing probability");
    analyze->add_option("--f-s", f_s, "samples per period override");
    analyze->add_option("--period-multiplier", period_multiplier, "number of sampled periods");
    analyze->add_option("--interpolation", interpolation, "trig | periodic_spline");
    analyze->add_flag("--no-oracle", no_oracle, "skip the dense oracle section");

    auto* oracle = app.add_subcommand("oracle", "exact spectra and Betti numbers");
    oracle_flags.attach(oracle);

    auto* cartan = app.add_subcommand("cartan", "Lie closure and KHK decomposition");
    cartan_flags.attach(cartan);

    std::vector<int> times;
    std::vector<std::uint64_t> targets;
    auto* exporter = app.add_subcommand("export-circuits", "write OpenQASM files");
    export_flags.attach(exporter);
    exporter->add_option("--times", times, "sample-time indices (default all)")->delimiter(',');
    exporter->add_option("--targets", targets, "basis-state masks (default all)")->delimiter(',');

    int scan_n = 4;
    std::string scan_out = "lie_dims.csv";
    std::string scan_family = "all";
    auto* scan = app.add_subcommand("scan-lie-dims", "mean Lie-algebra dimension per edge count");
    scan->add_option("--n", scan_n, "vertex count (<= 5)");
    scan->add_option("--family", scan_family, "all | clique");
    scan->add_option("--out", scan_out, "CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            RunConfig cfg = analyze_flags.resolve();
            if (protocol) cfg.protocol = parse_protocol(*protocol);
            if (scope) cfg.scope = parse_basis_scope(*scope);
            if (evolution) cfg.evolution = *evolution == "direct" ? EvolutionKind::direct : EvolutionKind::cartan;
            if (shots) cfg.shots = *shots;
            if (p1) cfg.noise.p1 = *p1;
            if (p2) cfg.noise.p2 = *p2;
            if (f_s) cfg.f_s = *f_s;
            if (period_multiplier) cfg.period_multiplier = *period_multiplier;
            if (interpolation) cfg.interpolation = parse_interpolation_mode(*interpolation);
            if (no_oracle) cfg.oracle = false;
            auto rep = dosqtda::analyze(cfg);
            std::printf("k=%d |S_k|=%zu rank_sum=%.4f rank_c0=%.4f beta_sum=%d beta_c0=%d", rep.betti.k, rep.betti.s_k,
                        rep.betti.rank_sum, rep.betti.rank_c0, rep.betti.beta_sum, rep.betti.beta_c0);
            if (rep.oracle) std::printf(" oracle_beta=%d", rep.oracle->beta);
            std::printf("\n");
            return 0;
        }
        if (oracle->parsed()) return run_oracle(oracle_flags.resolve(), oracle_flags.k);
        if (cartan->parsed()) return run_cartan_cmd(cartan_flags.resolve());
        if (exporter->parsed()) {
            std::vector<Mask> masks(targets.begin(), targets.end());
            auto files = export_circuits(export_flags.resolve(), times, masks);
            std::printf("wrote %zu files\n", files.size());
            return 0;
        }
        if (scan->parsed()) {
            auto family = scan_family == "clique" ? ScanFamily::clique_complexes : ScanFamily::all_complexes;
            write_file(scan_out, lie_scan_to_csv(lie_dim_scan(scan_n, family)));
            std::printf("wrote %s\n", scan_out.c_str());
            return 0;
        }
    } catch (const StageError& e) {
        std::fprintf(stderr, "error in stage %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
