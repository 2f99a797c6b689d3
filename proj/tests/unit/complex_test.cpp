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


#include "dosqtda/complex.hpp"

#include <gtest/gtest.h>

#include <random>

namespace dosqtda {
namespace {

PointCloud cloud(std::vector<std::vector<double>> pts) { return PointCloud{std::move(pts), {}}; }

TEST(Metric, Distances) {
    std::vector<double> a{0, 0}, b{3, 4};
    EXPECT_DOUBLE_EQ(distance(Metric::euclidean, a, b), 5.0);
    EXPECT_DOUBLE_EQ(distance(Metric::manhattan, a, b), 7.0);
    EXPECT_DOUBLE_EQ(distance(Metric::chebyshev, a, b), 4.0);
    EXPECT_EQ(parse_metric("manhattan"), Metric::manhattan);
    EXPECT_THROW(parse_metric("cosine"), std::invalid_argument);
}

TEST(VietorisRips, UnitSquareBelowDiagonal) {
    auto c = build_vietoris_rips(cloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), Metric::euclidean, 1.0);
    EXPECT_EQ(c.count(0), 4u);
    EXPECT_EQ(c.count(1), 4u);
    EXPECT_EQ(c.count(2), 0u);
    EXPECT_TRUE(c.contains(0b0011));
    EXPECT_FALSE(c.contains(0b0101));
}

TEST(VietorisRips, DistanceEqualToEpsilonIsIncluded) {
    auto c = build_vietoris_rips(cloud({{0.0}, {0.5}}), Metric::euclidean, 0.5);
    EXPECT_TRUE(c.contains(0b11));
}

TEST(VietorisRips, FullSimplexAboveDiagonal) {
    auto c = build_vietoris_rips(cloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), Metric::euclidean, 1.5);
    EXPECT_EQ(c.simplices().size(), 15u);
    EXPECT_EQ(c.max_order(), 3);
}

TEST(VietorisRips, MaxOrderTruncates) {
    auto c = build_vietoris_rips(cloud({{0}, {0.1}, {0.2}}), Metric::euclidean, 1.0, 1);
    EXPECT_EQ(c.count(1), 3u);
    EXPECT_EQ(c.count(2), 0u);
}

TEST(VietorisRips, RejectsBadInput) {
    EXPECT_THROW(build_vietoris_rips(cloud({}), Metric::euclidean, 1.0), std::invalid_argument);
    EXPECT_THROW(build_vietoris_rips(cloud({{0}, {1}}), Metric::euclidean, -1.0), std::invalid_argument);
    EXPECT_THROW(build_vietoris_rips(cloud({{0}, {1, 2}}), Metric::euclidean, 1.0), std::invalid_argument);
    EXPECT_THROW(build_vietoris_rips(cloud({{0}, {1}}), Metric::euclidean, 1.0, 2), std::invalid_argument);
}

TEST(ParseComplex, ClosesMaximalSimplices) {
    auto c = parse_complex(3, {{1, 2, 3}});
    EXPECT_EQ(c.simplices().size(), 7u);
    EXPECT_EQ(simplices_of_order(c, 2).front().vertices(), (std::vector<int>{1, 2, 3}));
}

TEST(ParseComplex, Errors) {
    EXPECT_THROW(parse_complex(3, {{1, 4}}), std::out_of_range);
    EXPECT_THROW(parse_complex(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(parse_complex(3, {{1, 2}}), std::invalid_argument);  // vertex 3 missing
    EXPECT_THROW(parse_complex(2, {{1, 2}, {}}), std::invalid_argument);
    EXPECT_THROW(parse_complex_json(R"({"n": 2})"), std::exception);
}

TEST(ParseComplex, Json) {
    auto c = parse_complex_json(R"({"n": 4, "maximal": [[1, 2], [3, 4]]})");
    EXPECT_EQ(c.n_vertices(), 4);
    EXPECT_EQ(c.count(1), 2u);
}

TEST(SimplicialComplex, RejectsMissingFace) {
    EXPECT_THROW(SimplicialComplex(3, {0b001, 0b010, 0b100, 0b111}), std::invalid_argument);
}

TEST(PointCloudCsv, HeaderAndRows) {
    auto pc = parse_point_cloud_csv("x,y\n0,0\n1.5, 2\n\n");
    ASSERT_EQ(pc.size(), 2u);
    EXPECT_DOUBLE_EQ(pc.points[1][0], 1.5);
    EXPECT_THROW(parse_point_cloud_csv("0,0\n1,a\n"), std::invalid_argument);
    EXPECT_THROW(parse_point_cloud_csv("0,0\n1\n"), std::invalid_argument);
}

TEST(Projector, SquareWithDiagonalMasks) {
    auto c = parse_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    EXPECT_EQ(projector_basis(c, 1), (std::vector<Mask>{3, 5, 6, 9, 12}));
    EXPECT_EQ(complement_constant(c, 1), 11u);
}

TEST(Projector, ComplementConstants) {
    EXPECT_EQ(complement_constant(parse_complex(4, {{1, 2}, {3, 4}}), 0), 12u);
    EXPECT_EQ(complement_constant(parse_complex(3, {{1, 2, 3}}), 2), 7u);
    EXPECT_EQ(complement_constant(parse_complex(1, {{1}}), 0), 1u);
}

TEST(VietorisRipsProperty, CliquesMatchPairwiseDistances) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 6;
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
        double eps = 0.2 + 0.6 * u(rng);
        auto c = build_vietoris_rips(cloud(pts), Metric::euclidean, eps);
        for (Mask s = 1; s < (Mask{1} << n); ++s) {
            bool clique = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if ((s >> i & 1) && (s >> j & 1) && distance(Metric::euclidean, pts[i], pts[j]) > eps)
                        clique = false;
            EXPECT_EQ(c.contains(s), clique);
        }
    }
}

}  // namespace
}  // namespace dosqtda
