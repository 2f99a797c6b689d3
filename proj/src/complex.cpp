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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dosqtda {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::optional<double> to_double(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return std::nullopt;
    return v;
}

}  // namespace

Metric parse_metric(std::string_view name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "chebyshev") return Metric::chebyshev;
    throw std::invalid_argument("unknown metric: " + std::string(name));
}

std::string_view metric_name(Metric metric) {
    switch (metric) {
        case Metric::euclidean: return "euclidean";
        case Metric::manhattan: return "manhattan";
        case Metric::chebyshev: return "chebyshev";
    }
    return "?";
}

double distance(Metric metric, std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = std::abs(a[i] - b[i]);
        switch (metric) {
            case Metric::euclidean: acc += d * d; break;
            case Metric::manhattan: acc += d; break;
            case Metric::chebyshev: acc = std::max(acc, d); break;
        }
    }
    return metric == Metric::euclidean ? std::sqrt(acc) : acc;
}

std::vector<int> Simplex::vertices() const {
    std::vector<int> out;
    for (int q = 0; q < 64; ++q)
        if ((mask >> q) & 1) out.push_back(q + 1);
    return out;
}

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<Mask> simplices)
    : n_vertices_(n_vertices), simplices_(std::move(simplices)) {
    if (n_vertices < 1 || n_vertices > kMaxQubits)
        throw std::invalid_argument("vertex count must be in [1, 63]");
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
    const Mask all = (Mask{1} << n_vertices) - 1;
    for (Mask s : simplices_) {
        if (s == 0) throw std::invalid_argument("empty simplex");
        if (s & ~all) throw std::invalid_argument("simplex references a vertex out of range");
    }
    for (int v = 0; v < n_vertices; ++v)
        if (!contains(Mask{1} << v))
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is not declared");
    for (Mask s : simplices_) {
        if (popcount(s) < 2) continue;
        for (Mask rest = s; rest; rest &= rest - 1) {
            Mask face = s & ~(rest & -rest);
            if (!contains(face)) throw std::invalid_argument("complex is not downward closed");
        }
    }
}

SimplicialComplex SimplicialComplex::from_maximal(int n_vertices, std::span<const Mask> maximal) {
    std::vector<Mask> all;
    for (Mask m : maximal) {
        if (m == 0) throw std::invalid_argument("empty simplex");
        if (popcount(m) > 20) throw std::invalid_argument("simplex too large to close");
        for (Mask sub = m; sub; sub = (sub - 1) & m) all.push_back(sub);
    }
    return SimplicialComplex(n_vertices, std::move(all));
}

bool SimplicialComplex::contains(Mask mask) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), mask);
}

int SimplicialComplex::max_order() const {
    int k = 0;
    for (Mask s : simplices_) k = std::max(k, popcount(s) - 1);
    return k;
}

std::size_t SimplicialComplex::count(int k) const {
    return static_cast<std::size_t>(
        std::count_if(simplices_.begin(), simplices_.end(), [k](Mask s) { return popcount(s) == k + 1; }));
}

SimplicialComplex build_vietoris_rips(const PointCloud& cloud, Metric metric, double epsilon, int max_order) {
    const std::size_t n = cloud.size();
    if (n == 0) throw std::invalid_argument("empty point cloud");
    if (n > static_cast<std::size_t>(kMaxQubits)) throw std::invalid_argument("at most 63 points supported");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be finite and >= 0");
    const std::size_t dim = cloud.dimension();
    if (dim == 0) throw std::invalid_argument("points must have at least one coordinate");
    for (const auto& p : cloud.points) {
        if (p.size() != dim) throw std::invalid_argument("points have inconsistent dimension");
        for (double x : p)
            if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
    }
    if (max_order < 0) max_order = static_cast<int>(n) - 1;
    if (max_order > static_cast<int>(n) - 1) throw std::invalid_argument("max_order exceeds N-1");

    std::vector<Mask> neighbours(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(metric, cloud.points[i], cloud.points[j]) <= epsilon) {
                neighbours[i] |= Mask{1} << j;
                neighbours[j] |= Mask{1} << i;
            }

    // Grow cliques one vertex at a time, only ever appending a higher vertex.
    std::vector<Mask> simplices;
    std::vector<Mask> layer;
    for (std::size_t i = 0; i < n; ++i) layer.push_back(Mask{1} << i);
    for (int k = 0; k <= max_order && !layer.empty(); ++k) {
        simplices.insert(simplices.end(), layer.begin(), layer.end());
        std::vector<Mask> next;
        for (Mask s : layer) {
            Mask common = ~Mask{0};
            for (Mask r = s; r; r &= r - 1) common &= neighbours[std::countr_zero(r)];
            int top = 63 - std::countl_zero(s);
            Mask higher = common & ~((Mask{2} << top) - 1);
            for (Mask r = higher; r; r &= r - 1) next.push_back(s | (r & -r));
        }
        layer = std::move(next);
    }
    SimplicialComplex out(static_cast<int>(n), std::move(simplices));
    out.epsilon = epsilon;
    out.metric_name = std::string(metric_name(metric));
    return out;
}

SimplicialComplex parse_complex(int n_vertices, const std::vector<std::vector<int>>& maximal) {
    if (n_vertices < 1 || n_vertices > kMaxQubits) throw std::invalid_argument("n must be in [1, 63]");
    std::vector<Mask> masks;
    for (const auto& s : maximal) {
        if (s.empty()) throw std::invalid_argument("empty simplex in input");
        Mask m = 0;
        for (int v : s) {
            if (v < 1 || v > n_vertices)
                throw std::out_of_range("vertex index " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n_vertices));
            Mask bit = Mask{1} << (v - 1);
            if (m & bit) throw std::invalid_argument("repeated vertex in simplex");
            m |= bit;
        }
        if (popcount(m) - 1 >= n_vertices) throw std::invalid_argument("simplex order k >= N");
        masks.push_back(m);
    }
    return SimplicialComplex::from_maximal(n_vertices, masks);
}

SimplicialComplex parse_complex_json(std::string_view json_text) {
    auto doc = nlohmann::json::parse(json_text);
    int n = doc.at("n").get<int>();
    auto maximal = doc.at("maximal").get<std::vector<std::vector<int>>>();
    return parse_complex(n, maximal);
}

SimplicialComplex load_complex_json(const std::string& path) { return parse_complex_json(read_file(path)); }

PointCloud parse_point_cloud_csv(std::string_view csv_text) {
    PointCloud cloud;
    std::size_t start = 0;
    bool first = true;
    while (start <= csv_text.size()) {
        auto end = csv_text.find('\n', start);
        auto line = trim(csv_text.substr(start, end == std::string_view::npos ? csv_text.npos : end - start));
        start = end == std::string_view::npos ? csv_text.size() + 1 : end + 1;
        if (line.empty()) continue;
        auto cells = split_commas(line);
        std::vector<double> row;
        bool numeric = true;
        for (auto c : cells) {
            auto v = to_double(c);
            if (!v) {
                numeric = false;
                break;
            }
            row.push_back(*v);
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw std::invalid_argument("non-numeric value in point cloud row " +
                                        std::to_string(cloud.points.size() + 1));
        }
        first = false;
        if (!cloud.points.empty() && row.size() != cloud.dimension())
            throw std::invalid_argument("inconsistent column count in point cloud");
        cloud.points.push_back(std::move(row));
    }
    return cloud;
}

PointCloud load_point_cloud_csv(const std::string& path) { return parse_point_cloud_csv(read_file(path)); }

std::vector<Simplex> simplices_of_order(const SimplicialComplex& complex, int k) {
    if (k < 0 || k >= complex.n_vertices()) throw std::out_of_range("k must be in [0, N-1]");
    std::vector<Simplex> out;
    for (Mask s : complex.simplices())
        if (popcount(s) == k + 1) out.push_back(Simplex{s});
    return out;
}

std::vector<Mask> projector_basis(const SimplicialComplex& complex, int k) {
    std::vector<Mask> out;
    for (const auto& s : simplices_of_order(complex, k)) out.push_back(s.mask);
    return out;
}

std::uint64_t complement_constant(const SimplicialComplex& complex, int k) {
    return (std::uint64_t{1} << complex.n_vertices()) - simplices_of_order(complex, k).size();
}

}  // namespace dosqtda
