#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "bcbessel/bicomplex.hpp"

namespace bcbessel {

struct QuadratureConfig {
    double panel_length = 0.0;  // 0 selects pi / max(1, kernel frequency)
    int max_panels = 4000;
    double abs_tol = 1e-14;
    double rel_tol = 1e-13;
    int points_per_panel = 20;
    bool singular_origin = false;  // first panel by tanh-sinh

    void validate() const;
};

struct TransformResult {
    Bicomplex value;
    int panels_used = 0;
    Hyperbolic error_estimate;
};

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre rule with n points; rules are memoised behind a mutex.
const GaussRule& gauss_legendre(int n);

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(cplx x) { return std::abs(x); }
inline double magnitude(const Bicomplex& x) { return max_abs(x); }

// Tanh-sinh rule on [a, b]. The integrand receives (x, x - a, b - x) so that
// endpoint singularities can be evaluated without cancellation. The step is
// halved until successive estimates agree to tol (relative to the value).
template <class T, class F>
T tanh_sinh(F&& f, double a, double b, double tol = 1e-15, int max_levels = 9) {
    constexpr double half_pi = 1.5707963267948966;
    const double half = 0.5 * (b - a);
    const double tmax = 6.5;
    auto sum_at = [&](double h, bool odd_only) {
        T s{};
        const int n = static_cast<int>(tmax / h);
        for (int k = -n; k <= n; ++k) {
            if (odd_only && k % 2 == 0) continue;
            const double t = k * h;
            const double u = half_pi * std::sinh(t);
            const double ch = std::cosh(u);
            const double w = half_pi * std::cosh(t) / (ch * ch);
            // 1 - tanh(u) and 1 + tanh(u) without cancellation.
            const double e = std::exp(-2.0 * std::abs(u));
            const double small = 2.0 * e / (1.0 + e);
            const double dl = (u < 0 ? small : 2.0 - small) * half;
            const double dr = (u < 0 ? 2.0 - small : small) * half;
            if (!(dl > 0.0) || !(dr > 0.0) || w * half == 0.0) continue;
            const double x = u < 0 ? a + dl : b - dr;
            s += f(x, dl, dr) * (w * half);
        }
        return s;
    };
    double h = 0.5;
    T est = sum_at(h, false) * h;
    for (int level = 1; level < max_levels; ++level) {
        const T odd = sum_at(h / 2.0, true);
        const T next = est * 0.5 + odd * (h / 2.0);
        h /= 2.0;
        const double diff = magnitude(next - est);
        est = next;
        if (level >= 3 && diff <= tol * std::max(1.0, magnitude(est))) break;
    }
    return est;
}

// Gauss-Legendre on [a, b] with the given rule.
template <class T, class F>
T gauss_panel(F&& f, double a, double b, const GaussRule& rule) {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    T s{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += f(mid + half * rule.nodes[i]) * (rule.weights[i] * half);
    return s;
}

// Panel-by-panel Gauss quadrature of f over (0, inf), or over (0, support)
// exactly when support is given. Panels are accumulated with compensated
// summation per real component; the loop stops once two consecutive panel
// contributions fall below max(abs_tol, rel_tol |sum|) in both components.
// NonConvergence after max_panels.
TransformResult integrate_semi_infinite(const std::function<Bicomplex(double)>& f, const QuadratureConfig& config,
                                        std::optional<double> support = std::nullopt);

}  // namespace bcbessel
