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


#include "dosqtda/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "dosqtda/kernels.hpp"
#include "dosqtda/laplacian.hpp"
#include "dosqtda/rng.hpp"

namespace dosqtda {

namespace {

struct KeyHash {
    std::size_t operator()(const PauliKey& k) const noexcept {
        return static_cast<std::size_t>(splitmix64(k.x * 0x9e3779b97f4a7c15ULL ^ k.z));
    }
};

template <typename RowFn>
LieBasis closure_impl(const PauliSum& seed, std::size_t cap, RowFn row_fn) {
    LieBasis basis;
    basis.n_qubits = seed.n_qubits();
    std::unordered_set<PauliKey, KeyHash> seen;
    bool has_non_identity = false;
    for (const auto& [k, c] : seed.terms()) {
        basis.strings.push_back(k);
        seen.insert(k);
        has_non_identity |= !k.is_identity();
    }
    if (!basis.strings.empty() && !has_non_identity)
        throw std::invalid_argument("closure seed has no non-identity string");
    if (basis.dim() > cap) throw std::length_error("Lie closure exceeds cap");
    for (std::size_t i = 0; i < basis.strings.size(); ++i) {
        auto row = row_fn(std::span<const PauliKey>(basis.strings), i);
        for (const auto& c : row) {
            if (!c || !seen.insert(*c).second) continue;
            basis.strings.push_back(*c);
            if (basis.dim() > cap) throw std::length_error("Lie closure exceeds cap");
        }
    }
    return basis;
}

// One anticommuting pair of the adjoint action of a generator on m:
// i * k * m_from = sign * m_to.
struct Rotation {
    int from;
    int to;
    double sign;
};

using RotationTable = std::vector<std::vector<Rotation>>;

RotationTable build_tables(std::span<const PauliKey> l, std::span<const PauliKey> m) {
    std::unordered_map<PauliKey, int, KeyHash> index;
    for (std::size_t j = 0; j < m.size(); ++j) index.emplace(m[j], static_cast<int>(j));
    RotationTable tables(l.size());
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!anticommutes(l[i], m[j])) continue;
            PauliKey t{l[i].x ^ m[j].x, l[i].z ^ m[j].z};
            auto it = index.find(t);
            if (it == index.end()) throw std::logic_error("[l, m] left m");
            int e = (product_phase(l[i], m[j]) + 1) & 3;  // i * i^e'
            if (e != 0 && e != 2) throw std::logic_error("non-real rotation coefficient");
            tables[i].push_back({static_cast<int>(j), it->second, e == 0 ? 1.0 : -1.0});
        }
    return tables;
}

// y = exp(i th k) x exp(-i th k) on the m-vector.
void adjoint(const std::vector<Rotation>& table, double th, const std::vector<double>& x, std::vector<double>& y) {
    y = x;
    const double c = std::cos(2 * th), s = std::sin(2 * th);
    for (const auto& r : table) y[r.from] -= x[r.from];
    for (const auto& r : table) {
        y[r.from] += c * x[r.from];
        y[r.to] += s * r.sign * x[r.from];
    }
}

double rotated_dot(const std::vector<Rotation>& table, const std::vector<double>& x, const std::vector<double>& b) {
    double acc = 0.0;
    for (const auto& r : table) acc += r.sign * x[r.from] * b[r.to];
    return acc;
}

double norm(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

class KhkProblem {
public:
    KhkProblem(const RotationTable& tables, std::vector<double> v, std::vector<double> h)
        : tables_(tables), v_(std::move(v)), h_(std::move(h)), a_(tables.size()) {}

    double operator()(const std::vector<double>& th, std::vector<double>& grad) {
        const std::size_t L = tables_.size();
        std::vector<double> x = v_, tmp;
        for (std::size_t i = L; i-- > 0;) {
            a_[i] = x;
            adjoint(tables_[i], th[i], x, tmp);
            x.swap(tmp);
        }
        double f = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) f += x[j] * h_[j];
        std::vector<double> b = h_;
        grad.assign(L, 0.0);
        for (std::size_t i = 0; i < L; ++i) {
            adjoint(tables_[i], th[i], a_[i], tmp);
            grad[i] = 2.0 * rotated_dot(tables_[i], tmp, b);
            adjoint(tables_[i], -th[i], b, tmp);
            b.swap(tmp);
        }
        return f;
    }

private:
    const RotationTable& tables_;
    std::vector<double> v_, h_;
    std::vector<std::vector<double>> a_;
};

std::vector<double> pull_back(const RotationTable& tables, std::span<const double> th, std::vector<double> b) {
    std::vector<double> tmp;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        adjoint(tables[i], -th[i], b, tmp);
        b.swap(tmp);
    }
    return b;
}

// 0.5 * |b outside h|^2 for b = pull_back(th, h), with the gradient by reverse sweep.
class ResidualProblem {
public:
    ResidualProblem(const RotationTable& tables, std::vector<double> h, const std::vector<bool>& in_h)
        : tables_(tables), h_(std::move(h)), in_h_(in_h), xs_(tables.size()) {}

    double operator()(const std::vector<double>& th, std::vector<double>& grad) {
        const std::size_t L = tables_.size();
        std::vector<double> x = h_, tmp;
        for (std::size_t i = 0; i < L; ++i) {
            xs_[i] = x;
            adjoint(tables_[i], -th[i], x, tmp);
            x.swap(tmp);
        }
        std::vector<double> w(x.size(), 0.0);
        double f = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!in_h_[j]) {
                w[j] = x[j];
                f += 0.5 * x[j] * x[j];
            }
        grad.assign(L, 0.0);
        for (std::size_t i = L; i-- > 0;) {
            const double c = std::cos(2 * th[i]), s = std::sin(2 * th[i]);
            double g = 0.0;
            for (const auto& r : tables_[i]) g += (w[r.from] * s + w[r.to] * c * r.sign) * xs_[i][r.from];
            grad[i] = -2.0 * g;
            adjoint(tables_[i], th[i], w, tmp);
            w.swap(tmp);
        }
        return f;
    }

private:
    const RotationTable& tables_;
    std::vector<double> h_;
    const std::vector<bool>& in_h_;
    std::vector<std::vector<double>> xs_;
};

double outside_norm(const std::vector<double>& b, const std::vector<bool>& in_h) {
    double acc = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!in_h[j]) acc += b[j] * b[j];
    return std::sqrt(acc);
}

}  // namespace

LieBasis lie_closure(const PauliSum& seed, std::size_t cap) {
    return closure_impl(seed, cap, kernels::parallel::commutator_row);
}

LieBasis lie_closure_serial(const PauliSum& seed, std::size_t cap) {
    return closure_impl(seed, cap, kernels::serial::commutator_row);
}

CartanSplit involution_split(const LieBasis& basis) {
    CartanSplit split;
    split.n_qubits = basis.n_qubits;
    for (const auto& k : basis.strings) (k.y_count() % 2 ? split.l : split.m).push_back(k);
    const auto& g = basis.strings;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (commutes(g[i], g[j])) continue;
            PauliKey c{g[i].x ^ g[j].x, g[i].z ^ g[j].z};
            bool odd_i = g[i].y_count() % 2, odd_j = g[j].y_count() % 2;
            bool expect_odd = odd_i == odd_j;  // [l,l] and [m,m] land in l, [l,m] in m
            if ((c.y_count() % 2 == 1) != expect_odd) throw std::logic_error("Cartan commutation relation violated");
        }
    return split;
}

CartanSplit select_cartan_subalgebra(CartanSplit split, const PauliSum& hamiltonian) {
    std::unordered_set<PauliKey, KeyHash> in_m(split.m.begin(), split.m.end());
    std::unordered_set<PauliKey, KeyHash> chosen;
    split.h.clear();
    auto try_add = [&](const PauliKey& k) {
        if (k.is_identity() || chosen.count(k)) return;
        for (const auto& other : split.h)
            if (anticommutes(k, other)) return;
        split.h.push_back(k);
        chosen.insert(k);
    };
    for (const auto& [k, c] : hamiltonian.terms())
        if (in_m.count(k)) try_add(k);
    for (const auto& k : split.m) try_add(k);
    return split;
}

KhkResult khk_optimize(const PauliSum& hamiltonian, const CartanSplit& split, const KhkOptions& options) {
    if (split.h.empty()) throw std::invalid_argument("Cartan subalgebra is empty");
    const int n = hamiltonian.n_qubits();
    KhkResult res;
    res.gamma = options.gamma;
    res.identity_coeff = hamiltonian.identity_coeff();
    res.l = split.l;

    std::unordered_map<PauliKey, int, KeyHash> index;
    for (std::size_t j = 0; j < split.m.size(); ++j) index.emplace(split.m[j], static_cast<int>(j));
    std::vector<double> hv(split.m.size(), 0.0), v(split.m.size(), 0.0);
    std::vector<bool> in_h(split.m.size(), false);
    for (const auto& [k, c] : hamiltonian.terms()) {
        if (k.is_identity()) continue;
        auto it = index.find(k);
        if (it == index.end()) throw std::invalid_argument("Hamiltonian string outside m");
        if (std::abs(c.imag()) > 1e-10) throw std::invalid_argument("Hamiltonian is not Hermitian");
        hv[it->second] = c.real();
    }
    for (std::size_t j = 0; j < split.h.size(); ++j) {
        int idx = index.at(split.h[j]);
        in_h[idx] = true;
        v[idx] = std::pow(options.gamma, static_cast<double>(j + 1));
    }
    for (const auto& k : split.m)
        if (k.is_identity()) in_h[index.at(k)] = true;

    const RotationTable tables = build_tables(split.l, split.m);
    const std::size_t L = split.l.size();
    std::vector<double> best_theta(L, 0.0);
    double best = outside_norm(hv, in_h);
    std::vector<double> best_b = hv;

    if (best > options.accept_residual && L > 0) {
        const double hn = norm(hv), vn = norm(v);
        std::vector<double> h_unit = hv, v_unit = v;
        for (double& x : h_unit) x /= hn;
        for (double& x : v_unit) x /= vn;
        KhkProblem problem(tables, v_unit, h_unit);
        Objective fg = [&problem](const std::vector<double>& th, std::vector<double>& g) { return problem(th, g); };
        ResidualProblem residual(tables, hv, in_h);
        Objective polish = [&residual](const std::vector<double>& th, std::vector<double>& g) { return residual(th, g); };
        auto stop = [&](const std::vector<double>& th) {
            return outside_norm(pull_back(tables, th, hv), in_h) <= options.target_residual;
        };
        for (int r = 0; r < options.max_restarts; ++r) {
            Rng rng(derive_seed(options.seed, {0x6b686bULL, static_cast<std::uint64_t>(r)}));
            std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
            std::vector<double> th0(L);
            for (double& t : th0) t = angle(rng);
            auto opt = lbfgs_minimize(fg, std::move(th0), options.lbfgs, stop);
            auto b = pull_back(tables, opt.x, hv);
            if (outside_norm(b, in_h) > options.target_residual) {
                // The weights gamma^j span many orders of magnitude, so the
                // objective above stops resolving the residual early. Finish
                // on the residual itself.
                LbfgsOptions polish_opts = options.lbfgs;
                polish_opts.grad_tol = 0.0;
                opt = lbfgs_minimize(polish, std::move(opt.x), polish_opts, stop);
                b = pull_back(tables, opt.x, hv);
            }
            double resid = outside_norm(b, in_h);
            res.restarts_used = r + 1;
            if (resid < best) {
                best = resid;
                best_theta = opt.x;
                best_b = std::move(b);
            }
            if (best <= options.accept_residual) break;
        }
    }

    res.theta = best_theta;
    res.residual = best;
    res.converged = best <= options.accept_residual;
    res.h_sum = PauliSum(n);
    if (res.identity_coeff != 0.0) res.h_sum.add(PauliKey{}, res.identity_coeff);
    for (const auto& k : split.h) {
        double c = best_b[index.at(k)];
        if (std::abs(c) > options.h_term_tolerance) res.h_sum.add(k, c);
    }
    return res;
}

PauliSum conjugate_by_k(const PauliSum& op, std::span<const PauliKey> l, std::span<const double> theta) {
    if (l.size() != theta.size()) throw std::invalid_argument("angle count mismatch");
    PauliSum cur = op;
    for (std::size_t i = 0; i < l.size(); ++i) {
        // exp(-i th k) P exp(i th k) = cos(2th) P - sin(2th) i k P for anticommuting P.
        const double c = std::cos(2 * theta[i]), s = std::sin(2 * theta[i]);
        PauliSum next(cur.n_qubits());
        for (const auto& [p, a] : cur.terms()) {
            if (commutes(l[i], p)) {
                next.add(p, a);
                continue;
            }
            next.add(p, c * a);
            PauliString kp = pauli_product(PauliString{l[i], 1}, PauliString{p, 0});
            next.add(kp.key, -s * a * kp.phase_factor());
        }
        next.prune();
        cur = std::move(next);
    }
    return cur;
}

std::string khk_to_json(const KhkResult& result, int n_qubits) {
    nlohmann::ordered_json j;
    j["gamma"] = result.gamma;
    j["theta_c"] = result.theta;
    auto& gens = j["generators"] = nlohmann::ordered_json::array();
    for (const auto& k : result.l) gens.push_back(pauli_label(k, n_qubits));
    auto& terms = j["h_terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : result.h_sum.terms()) {
        if (k.is_identity()) continue;
        terms.push_back({{"label", pauli_label(k, n_qubits)}, {"coeff", c.real()}});
    }
    j["identity_coeff"] = result.identity_coeff;
    j["residual"] = result.residual;
    j["restarts_used"] = result.restarts_used;
    j["converged"] = result.converged;
    return j.dump(2);
}

namespace {

void extend_layers(int n, int size, std::vector<Mask>& current, std::vector<SimplicialComplex>& out) {
    std::vector<Mask> candidates;
    if (size <= n) {
        const Mask all = (Mask{1} << n) - 1;
        for (Mask s = 1; s <= all; ++s) {
            if (popcount(s) != size) continue;
            bool ok = true;
            for (Mask r = s; r && ok; r &= r - 1)
                ok = std::binary_search(current.begin(), current.end(), s & ~(r & -r));
            if (ok) candidates.push_back(s);
        }
    }
    if (candidates.empty()) {
        out.emplace_back(n, current);
        return;
    }
    const std::size_t c = candidates.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
        if (pick == 0) {
            out.emplace_back(n, current);
            continue;
        }
        std::vector<Mask> next = current;
        for (std::size_t i = 0; i < c; ++i)
            if ((pick >> i) & 1) next.push_back(candidates[i]);
        std::sort(next.begin(), next.end());
        extend_layers(n, size + 1, next, out);
    }
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(int n, ScanFamily family) {
    if (n < 1 || n > 5) throw std::invalid_argument("complex enumeration supports 1 <= n <= 5");
    std::vector<SimplicialComplex> out;
    if (family == ScanFamily::clique_complexes) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << pairs.size()); ++g) {
            std::vector<Mask> adj(n, 0);
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((g >> e) & 1) {
                    adj[pairs[e].first] |= Mask{1} << pairs[e].second;
                    adj[pairs[e].second] |= Mask{1} << pairs[e].first;
                }
            std::vector<Mask> simplices;
            for (Mask s = 1; s < (Mask{1} << n); ++s) {
                bool clique = true;
                for (Mask r = s; r && clique; r &= r - 1) {
                    int v = std::countr_zero(r);
                    clique = (s & ~(Mask{1} << v) & ~adj[v]) == 0;
                }
                if (clique) simplices.push_back(s);
            }
            out.emplace_back(n, std::move(simplices));
        }
        return out;
    }
    std::vector<Mask> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back(Mask{1} << v);
    extend_layers(n, 2, vertices, out);
    return out;
}

std::vector<LieDimRow> lie_dim_scan(int n, ScanFamily family) {
    auto complexes = enumerate_complexes(n, family);
    const std::int64_t count = static_cast<std::int64_t>(complexes.size());
    std::vector<std::size_t> dims(complexes.size() * n, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c)
        for (int k = 0; k < n; ++k) {
            auto lap = combinatorial_laplacian(complexes[c], k);
            dims[c * n + k] = lap.op.empty() ? 0 : lie_closure(lap.op).dim();
        }
    std::map<std::pair<int, int>, LieDimRow> rows;
    for (std::int64_t c = 0; c < count; ++c) {
        int edges = static_cast<int>(complexes[c].count(1));
        for (int k = 0; k < n; ++k) {
            auto& row = rows[{edges, k}];
            row.edges = edges;
            row.k = k;
            row.mean_dim += static_cast<double>(dims[c * n + k]);
            row.count += 1;
            row.max_dim = std::max(row.max_dim, dims[c * n + k]);
        }
    }
    std::vector<LieDimRow> out;
    for (auto& [key, row] : rows) {
        row.mean_dim /= static_cast<double>(row.count);
        out.push_back(row);
    }
    return out;
}

}  // namespace dosqtda
