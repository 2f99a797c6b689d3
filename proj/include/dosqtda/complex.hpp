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

#ifndef DOSQTDA_COMPLEX_HPP_
#define DOSQTDA_COMPLEX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dosqtda/types.hpp"

namespace dosqtda {

/// Points in R^M, one row per vertex. Vertex i (1-based) is point i-1.
struct PointCloud {
    std::vector<std::vector<double>> points;
    std::vector<std::string> labels;

    std::size_t size() const { return points.size(); }
    std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }
};

enum class Metric { euclidean, manhattan, chebyshev };

Metric parse_metric(std::string_view name);
std::string_view metric_name(Metric metric);
double distance(Metric metric, std::span<const double> a, std::span<const double> b);

/// A simplex is a non-empty vertex set encoded as a bitmask (vertex i -> bit i-1).
struct Simplex {
    Mask mask = 0;

    int order() const { return popcount(mask) - 1; }
    std::vector<int> vertices() const;  // 1-based, ascending
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Downward-closed family of simplices over `n_vertices` vertices.
///
/// Every vertex must be present as a 0-simplex. Simplices are kept in
/// ascending mask order; the constructor validates closure and rejects
/// anything else.
class SimplicialComplex {
public:
    SimplicialComplex(int n_vertices, std::vector<Mask> simplices);

    /// Completes downward closure of the given generators before validating.
    static SimplicialComplex from_maximal(int n_vertices, std::span<const Mask> maximal);

    int n_vertices() const { return n_vertices_; }
    const std::vector<Mask>& simplices() const { return simplices_; }
    bool contains(Mask mask) const;
    int max_order() const;
    std::size_t count(int k) const;

    std::optional<double> epsilon;
    std::string metric_name;

private:
    int n_vertices_;
    std::vector<Mask> simplices_;
};

/// Vietoris-Rips (clique) complex at scale `epsilon` with d <= epsilon inclusive.
/// `max_order` < 0 means N-1.
SimplicialComplex build_vietoris_rips(const PointCloud& cloud, Metric metric, double epsilon,
                                      int max_order = -1);

/// Explicit complex from 1-based maximal simplices. Vertices not covered by
/// any listed simplex are an error.
SimplicialComplex parse_complex(int n_vertices, const std::vector<std::vector<int>>& maximal);

/// Parses `{"n": int, "maximal": [[int, ...], ...]}`.
SimplicialComplex parse_complex_json(std::string_view json_text);
SimplicialComplex load_complex_json(const std::string& path);

/// CSV, one point per row, optional header row.
PointCloud parse_point_cloud_csv(std::string_view csv_text);
PointCloud load_point_cloud_csv(const std::string& path);

std::vector<Simplex> simplices_of_order(const SimplicialComplex& complex, int k);

/// Computational-basis indices spanned by P_{Gamma ∩ k}: the (k+1)-hot masks in the complex.
std::vector<Mask> projector_basis(const SimplicialComplex& complex, int k);

/// r_k = 2^N - |S_k|.
std::uint64_t complement_constant(const SimplicialComplex& complex, int k);

}  // namespace dosqtda

#endif  // DOSQTDA_COMPLEX_HPP_
