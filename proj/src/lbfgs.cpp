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


#include "dosqtda/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace dosqtda {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

LbfgsResult lbfgs_minimize(const Objective& fg, std::vector<double> x0, const LbfgsOptions& options,
                           const std::function<bool(const std::vector<double>&)>& stop) {
    const std::size_t n = x0.size();
    LbfgsResult res;
    res.x = std::move(x0);
    std::vector<double> g(n), g_new(n), d(n), x_new(n);
    res.f = fg(res.x, g);
    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;
    int stalls = 0;

    for (res.iterations = 0; res.iterations < options.max_iterations; ++res.iterations) {
        res.grad_norm = std::sqrt(dot(g, g));
        if (res.grad_norm < options.grad_tol || (stop && stop(res.x))) {
            res.converged = true;
            return res;
        }

        // Two-loop recursion for d = -H g.
        d = g;
        std::vector<double> alpha(s_hist.size());
        for (std::size_t i = s_hist.size(); i-- > 0;) {
            alpha[i] = rho_hist[i] * dot(s_hist[i], d);
            for (std::size_t j = 0; j < n; ++j) d[j] -= alpha[i] * y_hist[i][j];
        }
        if (!s_hist.empty()) {
            double gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
            for (double& v : d) v *= gamma;
        }
        for (std::size_t i = 0; i < s_hist.size(); ++i) {
            double beta = rho_hist[i] * dot(y_hist[i], d);
            for (std::size_t j = 0; j < n; ++j) d[j] += (alpha[i] - beta) * s_hist[i][j];
        }
        for (double& v : d) v = -v;
        double slope = dot(g, d);
        if (!(slope < 0.0)) {
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            for (std::size_t j = 0; j < n; ++j) d[j] = -g[j];
            slope = -res.grad_norm * res.grad_norm;
        }

        // Armijo, or the approximate Wolfe test of Hager and Zhang once the
        // decrease drops below what f can resolve.
        const double f_slack = 1e-12 * std::max(1.0, std::abs(res.f));
        double step = 1.0;
        double f_new = 0.0;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t j = 0; j < n; ++j) x_new[j] = res.x[j] + step * d[j];
            f_new = fg(x_new, g_new);
            const double slope_new = dot(g_new, d);
            const bool armijo = f_new <= res.f + 1e-4 * step * slope;
            const bool approx_wolfe = f_new <= res.f + f_slack && slope_new >= 0.9 * slope && slope_new <= -0.8 * slope;
            if (armijo || approx_wolfe) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (s_hist.empty() || ++stalls > 2) return res;
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            continue;
        }
        stalls = 0;

        std::vector<double> s(n), y(n);
        for (std::size_t j = 0; j < n; ++j) {
            s[j] = x_new[j] - res.x[j];
            y[j] = g_new[j] - g[j];
        }
        double sy = dot(s, y);
        if (sy > 1e-14 * std::sqrt(dot(s, s) * dot(y, y))) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            rho_hist.push_back(1.0 / sy);
            if (static_cast<int>(s_hist.size()) > options.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }
        res.x.swap(x_new);
        g.swap(g_new);
        res.f = f_new;
    }
    res.grad_norm = std::sqrt(dot(g, g));
    return res;
}

}  // namespace dosqtda
