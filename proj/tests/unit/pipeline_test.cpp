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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dosqtda {
namespace {

namespace fs = std::filesystem;

std::string data(const char* name) { return std::string(DOSQTDA_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("dosqtda_test_" + name);
    fs::remove_all(p);
    return p;
}

RunConfig exact_config(const char* file, int k) {
    RunConfig c;
    c.complex_path = data(file);
    c.k = k;
    c.protocol = Protocol::exact;
    c.seed = 5;
    return c;
}

TEST(Analyze, ExactEdgeBetti) {
    auto rep = analyze(exact_config("square_with_diagonal.json", 1));
    EXPECT_EQ(rep.s_k, 5u);
    EXPECT_EQ(rep.lie_dim, 128u);
    EXPECT_EQ(rep.betti.beta_c0, 2);
    EXPECT_EQ(rep.betti.beta_sum, 2);
    ASSERT_TRUE(rep.oracle.has_value());
    EXPECT_EQ(rep.oracle->beta, 2);
    EXPECT_NEAR(rep.spectrum.rank_sum, 3.0, 1e-6);
}

TEST(Analyze, SingleVertex) {
    auto rep = analyze(exact_config("single_vertex.json", 0));
    EXPECT_EQ(rep.betti.beta_c0, 1);
    EXPECT_EQ(rep.oracle->beta, 1);
}

TEST(Analyze, TwoEdgesComponents) {
    auto rep = analyze(exact_config("two_edges.json", 0));
    EXPECT_EQ(rep.laplacian_terms, 26u);
    EXPECT_EQ(rep.betti.beta_c0, 2);
}

TEST(Analyze, FilledTriangleHasNoLoop) {
    auto rep = analyze(exact_config("filled_triangle.json", 1));
    EXPECT_EQ(rep.betti.beta_c0, 0);
}

TEST(Analyze, OutputsAreDeterministic) {
    auto cfg = exact_config("square_with_diagonal.json", 1);
    cfg.protocol = Protocol::mirror;
    cfg.shots = 200;
    auto a = scratch("det_a"), b = scratch("det_b");
    cfg.out_dir = a.string();
    analyze(cfg);
    cfg.out_dir = b.string();
    analyze(cfg);
    for (const char* f : {"report.json", "signal.csv", "spectrum.json", "khk.json"}) {
        EXPECT_TRUE(fs::exists(a / f)) << f;
        std::string text_b = slurp(b / f);
        for (auto pos = text_b.find(b.string()); pos != std::string::npos; pos = text_b.find(b.string()))
            text_b.replace(pos, b.string().size(), a.string());
        EXPECT_EQ(slurp(a / f), text_b) << f;
    }
    EXPECT_TRUE(fs::exists(a / "timing.json"));
}

TEST(Analyze, StageErrorsNameTheStage) {
    RunConfig none;
    try {
        analyze(none);
        FAIL() << "expected StageError";
    } catch (const StageError& e) {
        EXPECT_EQ(e.stage(), "config");
    }
    RunConfig missing;
    missing.complex_path = data("does_not_exist.json");
    try {
        analyze(missing);
        FAIL() << "expected StageError";
    } catch (const StageError& e) {
        EXPECT_EQ(e.stage(), "complex");
    }
}

TEST(Config, ParseAndRoundTrip) {
    auto c = parse_run_config(R"({
        "input": {"complex": {"n": 2, "maximal": [[1, 2]]}},
        "k": 0, "protocol": "swap", "shots": 50, "noise": {"p1": 0.001, "p2": 0.01},
        "f_s": 9, "period_multiplier": 2, "interpolation": "periodic_spline", "seed": 3,
        "optimizer": {"max_restarts": 2}})");
    EXPECT_TRUE(c.complex_json.has_value());
    EXPECT_EQ(c.protocol, Protocol::swap);
    EXPECT_EQ(c.shots, 50);
    EXPECT_DOUBLE_EQ(c.noise.p2, 0.01);
    EXPECT_EQ(c.f_s, 9);
    EXPECT_EQ(c.interpolation, InterpolationMode::periodic_spline);
    EXPECT_EQ(c.optimizer.max_restarts, 2);
    EXPECT_NO_THROW(c.validate());
    auto again = parse_run_config(run_config_to_json(c));
    EXPECT_EQ(run_config_to_json(again), run_config_to_json(c));
}

TEST(Config, Validation) {
    RunConfig c;
    c.cloud_path = "points.csv";
    EXPECT_THROW(c.validate(), std::invalid_argument);  // needs epsilon
    c.epsilon = 1.0;
    EXPECT_NO_THROW(c.validate());
    c.complex_path = "x.json";
    EXPECT_THROW(c.validate(), std::invalid_argument);  // two sources
    RunConfig d;
    d.complex_path = "x.json";
    d.scope = BasisScope::complex_only;
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d.scope = BasisScope::all;
    d.shots = 0;
    d.noise.p1 = 0.01;
    EXPECT_THROW(d.validate(), std::invalid_argument);
    EXPECT_THROW(parse_run_config(R"({"protocol": "teleport"})"), std::invalid_argument);
}

TEST(Analyze, PointCloudInput) {
    auto dir = scratch("cloud");
    fs::create_directories(dir);
    std::ofstream(dir / "square.csv") << "x,y\n0,0\n1,0\n1,1\n0,1\n";
    RunConfig c;
    c.cloud_path = (dir / "square.csv").string();
    c.epsilon = 1.0;
    c.k = 1;
    c.protocol = Protocol::exact;
    auto rep = analyze(c);
    EXPECT_EQ(rep.betti.beta_c0, 1);
}

TEST(ExportCircuits, FileCounts) {
    auto dir = scratch("export");
    auto cfg = exact_config("square_with_diagonal.json", 1);
    cfg.out_dir = dir.string();
    auto one = export_circuits(cfg, {}, {Mask{3}});
    EXPECT_EQ(one.size(), 13u * 4u);
    EXPECT_TRUE(fs::exists(dir / "circuits" / "evolution_t000.qasm"));
    EXPECT_TRUE(fs::exists(dir / "circuits" / "t012_b1100_iphase.qasm"));
    auto text = slurp(dir / "circuits" / "t003_b1100_plus.qasm");
    EXPECT_NE(text.find("measure q -> c;"), std::string::npos);
    EXPECT_THROW(export_circuits(cfg, {13}, {}), std::exception);
}

TEST(LieScan, Csv) {
    auto csv = lie_scan_to_csv(lie_dim_scan(3));
    EXPECT_EQ(csv.rfind("edges,k,mean_dim,count,max_dim\n", 0), 0u);
}

}  // namespace
}  // namespace dosqtda
