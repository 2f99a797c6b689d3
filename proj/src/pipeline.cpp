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


#include "dosqtda/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "json.hpp"

#include "dosqtda/circuit.hpp"
#include "dosqtda/rng.hpp"

namespace dosqtda {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

template <typename F>
auto stage(const char* name, std::vector<StageTiming>& timing, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        if constexpr (std::is_void_v<decltype(body())>) {
            body();
            timing.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
        } else {
            auto result = body();
            timing.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
            return result;
        }
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

std::string mask_bits(Mask m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q)
        if ((m >> q) & 1) s[q] = '1';
    return s;
}

json timing_json(const std::vector<StageTiming>& timing) {
    json j = json::object();
    for (const auto& t : timing) j[t.stage] = t.seconds;
    return j;
}

}  // namespace

void RunConfig::validate() const {
    const int sources = (complex_path ? 1 : 0) + (complex_json ? 1 : 0) + (cloud_path ? 1 : 0);
    if (sources != 1) throw std::invalid_argument("exactly one input source is required");
    if (cloud_path && !epsilon) throw std::invalid_argument("point-cloud input needs epsilon");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (protocol != Protocol::exact && shots < 0) throw std::invalid_argument("shots must be >= 0");
    if (protocol != Protocol::exact && shots == 0 && noise.active())
        throw std::invalid_argument("noisy runs need shots >= 1");
    noise.validate();
    if (period_multiplier < 1) throw std::invalid_argument("period_multiplier must be >= 1");
    if (scope == BasisScope::complex_only && evolution != EvolutionKind::direct)
        throw std::invalid_argument("complex_only scope requires direct evolution");
    parse_metric(metric);
}

RunConfig parse_run_config(const std::string& json_text) {
    json j = json::parse(json_text);
    RunConfig c;
    if (j.contains("input")) {
        const auto& in = j.at("input");
        if (in.contains("complex")) {
            if (in.at("complex").is_string())
                c.complex_path = in.at("complex").get<std::string>();
            else
                c.complex_json = in.at("complex").dump();
        }
        if (in.contains("cloud")) c.cloud_path = in.at("cloud").get<std::string>();
        if (in.contains("metric")) c.metric = in.at("metric").get<std::string>();
        if (in.contains("epsilon")) c.epsilon = in.at("epsilon").get<double>();
        if (in.contains("max_order")) c.max_order = in.at("max_order").get<int>();
    }
    if (j.contains("k")) c.k = j.at("k").get<int>();
    if (j.contains("evolution"))
        c.evolution = j.at("evolution").get<std::string>() == "direct" ? EvolutionKind::direct : EvolutionKind::cartan;
    if (j.contains("protocol")) c.protocol = parse_protocol(j.at("protocol").get<std::string>());
    if (j.contains("basis_scope")) c.scope = parse_basis_scope(j.at("basis_scope").get<std::string>());
    if (j.contains("shots")) c.shots = j.at("shots").get<std::int64_t>();
    if (j.contains("noise")) {
        c.noise.p1 = j.at("noise").value("p1", 0.0);
        c.noise.p2 = j.at("noise").value("p2", 0.0);
    }
    if (j.contains("f_s")) c.f_s = j.at("f_s").get<int>();
    if (j.contains("period_multiplier")) c.period_multiplier = j.at("period_multiplier").get<int>();
    if (j.contains("interpolation")) c.interpolation = parse_interpolation_mode(j.at("interpolation").get<std::string>());
    if (j.contains("optimizer")) {
        const auto& o = j.at("optimizer");
        c.optimizer.max_restarts = o.value("max_restarts", c.optimizer.max_restarts);
        c.optimizer.accept_residual = o.value("accept_residual", c.optimizer.accept_residual);
        c.optimizer.gamma = o.value("gamma", c.optimizer.gamma);
        c.optimizer.lbfgs.max_iterations = o.value("max_iterations", c.optimizer.lbfgs.max_iterations);
        c.optimizer.lbfgs.grad_tol = o.value("grad_tol", c.optimizer.lbfgs.grad_tol);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("oracle")) c.oracle = j.at("oracle").get<bool>();
    return c;
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(read_text(path)); }

std::string run_config_to_json(const RunConfig& c) {
    json j;
    json in = json::object();
    if (c.complex_path) in["complex"] = *c.complex_path;
    if (c.complex_json) in["complex"] = json::parse(*c.complex_json);
    if (c.cloud_path) {
        in["cloud"] = *c.cloud_path;
        in["metric"] = c.metric;
        if (c.epsilon) in["epsilon"] = *c.epsilon;
        in["max_order"] = c.max_order;
    }
    j["input"] = in;
    j["k"] = c.k;
    j["evolution"] = c.evolution == EvolutionKind::direct ? "direct" : "cartan";
    j["protocol"] = protocol_name(c.protocol);
    j["basis_scope"] = basis_scope_name(c.scope);
    j["shots"] = c.shots;
    j["noise"] = {{"p1", c.noise.p1}, {"p2", c.noise.p2}};
    if (c.f_s) j["f_s"] = *c.f_s;
    j["period_multiplier"] = c.period_multiplier;
    j["interpolation"] = interpolation_mode_name(c.interpolation);
    j["optimizer"] = {{"max_restarts", c.optimizer.max_restarts},
                      {"accept_residual", c.optimizer.accept_residual},
                      {"gamma", c.optimizer.gamma},
                      {"max_iterations", c.optimizer.lbfgs.max_iterations},
                      {"grad_tol", c.optimizer.lbfgs.grad_tol}};
    j["seed"] = c.seed;
    j["out"] = c.out_dir;
    j["oracle"] = c.oracle;
    return j.dump(2);
}

SimplicialComplex load_input(const RunConfig& config) {
    if (config.complex_path) return load_complex_json(*config.complex_path);
    if (config.complex_json) return parse_complex_json(*config.complex_json);
    if (config.cloud_path)
        return build_vietoris_rips(load_point_cloud_csv(*config.cloud_path), parse_metric(config.metric),
                                   config.epsilon.value_or(0.0), config.max_order);
    throw std::invalid_argument("no input configured");
}

CartanStage run_cartan(const SimplicialComplex& complex, int k, const KhkOptions& options) {
    CartanStage st;
    st.laplacian = combinatorial_laplacian(complex, k);
    const PauliSum& op = st.laplacian.op;
    if (op.without_identity().empty()) {
        st.basis.n_qubits = op.n_qubits();
        st.split.n_qubits = op.n_qubits();
        st.khk.h_sum = op;
        st.khk.identity_coeff = op.identity_coeff();
        st.khk.gamma = options.gamma;
        st.khk.converged = true;
        return st;
    }
    st.basis = lie_closure(op);
    st.split = select_cartan_subalgebra(involution_split(st.basis), op);
    st.khk = khk_optimize(op, st.split, options);
    return st;
}

RunReport analyze(const RunConfig& config) {
    RunReport rep;
    rep.config = config;
    auto& timing = rep.timing;
    const fs::path out = config.out_dir;
    const bool write = !config.out_dir.empty();
    auto flush_timing = [&] {
        if (write) write_text(out / "timing.json", timing_json(timing).dump(2));
    };

    stage("config", timing, [&] { config.validate(); });
    const SimplicialComplex complex = stage("complex", timing, [&] {
        auto cx = load_input(config);
        if (config.k >= cx.n_vertices()) throw std::out_of_range("k must be below the vertex count");
        return cx;
    });
    const int n = complex.n_vertices();
    rep.n_vertices = n;

    CartanStage cartan;
    try {
        cartan = stage("cartan", timing, [&] {
            KhkOptions opts = config.optimizer;
            opts.seed = derive_seed(config.seed, {0x636172746eULL});
            auto st = run_cartan(complex, config.k, opts);
            if (config.evolution == EvolutionKind::cartan && !st.khk.converged)
                throw std::runtime_error("KHK did not converge, best residual " + std::to_string(st.khk.residual));
            return st;
        });
    } catch (const StageError&) {
        flush_timing();
        throw;
    }
    rep.s_k = cartan.laplacian.s_k;
    rep.laplacian_terms = cartan.laplacian.op.size();
    rep.lie_dim = cartan.basis.dim();
    rep.l_dim = cartan.split.l.size();
    rep.m_dim = cartan.split.m.size();
    rep.h_dim = cartan.split.h.size();
    rep.h_terms = cartan.khk.h_sum.without_identity().size();
    rep.khk_residual = cartan.khk.residual;
    rep.khk_restarts = cartan.khk.restarts_used;
    rep.khk_converged = cartan.khk.converged;
    if (write) write_text(out / "khk.json", khk_to_json(cartan.khk, n));

    const Evolution evolution = config.evolution == EvolutionKind::direct ? Evolution::direct(cartan.laplacian.op)
                                                                          : Evolution::cartan(cartan.khk.h_sum);
    if (config.evolution == EvolutionKind::cartan) {
        Circuit c = synthesize_evolution(cartan.khk.h_sum, 1.0);
        rep.evolution_gates = c.size();
        rep.evolution_cnots = c.cnot_count();
    }

    rep.plan = make_plan(n, PlanOverrides{config.f_s, config.period_multiplier});
    TraceOptions topts;
    topts.protocol = config.protocol;
    topts.scope = config.scope;
    topts.noise = config.noise;
    topts.shots = config.shots;
    topts.seed = derive_seed(config.seed, {0x7472616365ULL});
    if (config.scope == BasisScope::complex_only) topts.basis = projector_basis(complex, config.k);

    TraceSignal raw, post;
    try {
        raw = stage("sampling", timing, [&] { return estimate_trace(evolution, rep.plan, topts); });
        post = stage("postprocess", timing, [&] { return postprocess(raw, n, rep.plan); });
        if (write) write_text(out / "signal.csv", signal_to_csv(raw, post));
        rep.spectrum = stage("fourier", timing, [&] {
            return fourier_coefficients(interpolate(post, config.interpolation), n);
        });
        if (write) write_text(out / "spectrum.json", spectrum_to_json(rep.spectrum));
        rep.betti = betti_estimate(rep.s_k, rep.spectrum, n, config.k);

        if (config.oracle && n <= kMaxOracleQubits) {
            rep.oracle = stage("oracle", timing, [&] {
                OracleSection o;
                auto spec = exact_spectrum(cartan.laplacian.op);
                o.rank = spec.rank;
                o.beta = static_cast<int>(rep.s_k) - static_cast<int>(spec.rank);
                o.eigenvalues = spec.eigenvalues;
                auto exact = exact_trace_signal(spec, raw.times);
                TraceOptions analytic = topts;
                analytic.noise = NoiseModel{};
                analytic.shots = 0;
                if (analytic.protocol == Protocol::swap) analytic.protocol = Protocol::mirror;
                auto est = estimate_trace(evolution, rep.plan, analytic);
                const double shift = std::ldexp(1.0, n) - est.values[0].real();
                for (std::size_t j = 0; j < est.size(); ++j) {
                    cplx matched = config.scope == BasisScope::complex_only ? est.values[j] + shift : est.values[j];
                    o.trace_bias.push_back(std::abs(matched - exact.values[j]));
                }
                return o;
            });
            rep.betti.oracle_beta = rep.oracle->beta;
            rep.betti.oracle_rank = rep.oracle->rank;
        }
    } catch (const StageError&) {
        flush_timing();
        throw;
    }

    if (write) write_text(out / "report.json", report_to_json(rep));
    flush_timing();
    return rep;
}

std::string report_to_json(const RunReport& r) {
    json j;
    j["config"] = json::parse(run_config_to_json(r.config));
    j["n_vertices"] = r.n_vertices;
    j["k"] = r.config.k;
    j["s_k"] = r.s_k;
    j["laplacian_terms"] = r.laplacian_terms;
    j["lie_algebra"] = {{"dim", r.lie_dim}, {"l", r.l_dim}, {"m", r.m_dim}, {"h", r.h_dim}};
    j["khk"] = {{"residual", r.khk_residual},
                {"restarts_used", r.khk_restarts},
                {"converged", r.khk_converged},
                {"h_terms", r.h_terms}};
    j["circuit"] = {{"evolution_gates", r.evolution_gates}, {"evolution_cnots", r.evolution_cnots}};
    j["plan"] = {{"f_s", r.plan.f_s},
                 {"samples_per_period", r.plan.samples_per_period},
                 {"period_multiplier", r.plan.period_multiplier},
                 {"sample_times", r.plan.grid_points() / 2 + 1},
                 {"below_nyquist", r.plan.below_nyquist}};
    j["spectrum"] = json::parse(spectrum_to_json(r.spectrum));
    json betti = {{"k", r.betti.k},
                  {"s_k", r.betti.s_k},
                  {"rank_sum", r.betti.rank_sum},
                  {"rank_c0", r.betti.rank_c0},
                  {"beta_sum", r.betti.beta_sum},
                  {"beta_c0", r.betti.beta_c0},
                  {"beta", r.betti.beta()}};
    j["betti"] = betti;
    if (r.oracle) {
        j["oracle"] = {{"beta", r.oracle->beta},
                       {"rank", r.oracle->rank},
                       {"eigenvalues", r.oracle->eigenvalues},
                       {"trace_bias", r.oracle->trace_bias}};
    }
    return j.dump(2);
}

std::vector<std::string> export_circuits(const RunConfig& config, const std::vector<int>& time_indices,
                                         const std::vector<Mask>& targets) {
    std::vector<StageTiming> timing;
    config.validate();
    const auto complex = stage("complex", timing, [&] { return load_input(config); });
    const int n = complex.n_vertices();
    KhkOptions opts = config.optimizer;
    opts.seed = derive_seed(config.seed, {0x636172746eULL});
    const auto cartan = stage("cartan", timing, [&] { return run_cartan(complex, config.k, opts); });
    const auto plan = make_plan(n, PlanOverrides{config.f_s, config.period_multiplier});
    const auto times = plan.sample_times();

    std::vector<int> ts = time_indices;
    if (ts.empty())
        for (int i = 0; i < static_cast<int>(times.size()); ++i) ts.push_back(i);
    std::vector<Mask> bs = targets;
    if (bs.empty())
        for (Mask b = 0; b < (Mask{1} << n); ++b) bs.push_back(b);

    return stage("export", timing, [&] {
        const fs::path dir = fs::path(config.out_dir.empty() ? "." : config.out_dir) / "circuits";
        std::vector<std::string> written;
        char name[128];
        for (int ti : ts) {
            if (ti < 0 || ti >= static_cast<int>(times.size())) throw std::out_of_range("time index out of range");
            const Circuit u = synthesize_evolution(cartan.khk.h_sum, times[ti]);
            std::snprintf(name, sizeof name, "evolution_t%03d.qasm", ti);
            write_text(dir / name, to_qasm(u));
            written.push_back((dir / name).string());
            for (Mask b : bs) {
                const Mask ref = reference_for(b);
                const Circuit hot = prep_circuit(n, b, PrepMode::hot);
                const Circuit plus = prep_circuit(n, b, PrepMode::plus, ref);
                const Circuit iph = prep_circuit(n, b, PrepMode::i_phase, ref);
                const std::pair<const char*, std::pair<const Circuit*, const Circuit*>> variants[] = {
                    {"hot", {&hot, &hot}}, {"plus", {&plus, &plus}}, {"iphase", {&plus, &iph}}};
                for (const auto& [tag, preps] : variants) {
                    Circuit c(n);
                    c.append(*preps.first).append(u).append(adjoint(*preps.second)).measure_all();
                    std::snprintf(name, sizeof name, "t%03d_b%s_%s.qasm", ti, mask_bits(b, n).c_str(), tag);
                    write_text(dir / name, to_qasm(c));
                    written.push_back((dir / name).string());
                }
            }
        }
        return written;
    });
}

std::string lie_scan_to_csv(const std::vector<LieDimRow>& rows) {
    std::ostringstream out;
    out << "edges,k,mean_dim,count,max_dim\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.mean_dim);
        out << r.edges << ',' << r.k << ',' << buf << ',' << r.count << ',' << r.max_dim << '\n';
    }
    return out.str();
}

}  // namespace dosqtda
