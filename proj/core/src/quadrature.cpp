#include "bcbessel/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace bcbessel {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw PreconditionError("abs_tol and rel_tol must be positive");
    if (points_per_panel < 8) throw PreconditionError("points_per_panel must be at least 8");
    if (max_panels < 1) throw PreconditionError("max_panels must be positive");
    if (panel_length < 0.0) throw PreconditionError("panel_length must be nonnegative");
}

namespace {

GaussRule build_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
        long double dp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) break;
        }
        long double p0 = 1.0L, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0L);
        const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
        r.nodes[i] = static_cast<double>(-x);
        r.nodes[n - 1 - i] = static_cast<double>(x);
        r.weights[i] = r.weights[n - 1 - i] = static_cast<double>(w);
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

struct Compensated {
    double s[4] = {0, 0, 0, 0};
    double c[4] = {0, 0, 0, 0};
    void add(const Bicomplex& v) {
        const double parts[4] = {v.z1().real(), v.z1().imag(), v.z2().real(), v.z2().imag()};
        for (int i = 0; i < 4; ++i) {
            const double t = s[i] + parts[i];
            if (std::abs(s[i]) >= std::abs(parts[i]))
                c[i] += (s[i] - t) + parts[i];
            else
                c[i] += (parts[i] - t) + s[i];
            s[i] = t;
        }
    }
    Bicomplex value() const {
        return {cplx(s[0] + c[0], s[1] + c[1]), cplx(s[2] + c[2], s[3] + c[3])};
    }
};

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
    return *slot;
}

TransformResult integrate_semi_infinite(const std::function<Bicomplex(double)>& f, const QuadratureConfig& config,
                                        std::optional<double> support) {
    config.validate();
    const GaussRule& rule = gauss_legendre(config.points_per_panel);
    const double L = config.panel_length > 0.0 ? config.panel_length : std::numbers::pi;
    Compensated acc;
    double abs_mass1 = 0.0, abs_mass2 = 0.0;
    auto panel = [&](double a, double b, bool first) {
        if (first && config.singular_origin)
            return tanh_sinh<Bicomplex>([&](double x, double, double) { return f(x); }, a, b, 1e-15);
        return gauss_panel<Bicomplex>(f, a, b, rule);
    };

    TransformResult out;
    if (support) {
        const double eps = *support;
        if (!(eps > 0.0)) throw PreconditionError("support must be positive");
        const int n = std::max(1, static_cast<int>(std::ceil(eps / L - 1e-12)));
        const double step = eps / n;
        for (int k = 0; k < n; ++k) {
            const Bicomplex c = panel(k * step, k == n - 1 ? eps : (k + 1) * step, k == 0);
            acc.add(c);
            abs_mass1 += std::abs(c.z1());
            abs_mass2 += std::abs(c.z2());
        }
        out.value = acc.value();
        out.panels_used = n;
        const double e = 64.0 * 2.2e-16;
        out.error_estimate = Hyperbolic(e * abs_mass1, e * abs_mass2);
        return out;
    }

    Hyperbolic prev_small{-1.0};
    Bicomplex prev;
    for (int k = 0; k < config.max_panels; ++k) {
        const Bicomplex c = panel(k * L, (k + 1) * L, k == 0);
        acc.add(c);
        const Bicomplex sum = acc.value();
        const double tol1 = std::max(config.abs_tol, config.rel_tol * std::abs(sum.z1()));
        const double tol2 = std::max(config.abs_tol, config.rel_tol * std::abs(sum.z2()));
        const bool small = std::abs(c.z1()) <= tol1 && std::abs(c.z2()) <= tol2;
        if (small && prev_small.a1 > 0.0 && k >= 1) {
            out.value = sum;
            out.panels_used = k + 1;
            out.error_estimate = Hyperbolic(std::abs(c.z1()) + std::abs(prev.z1()), std::abs(c.z2()) + std::abs(prev.z2()));
            return out;
        }
        prev_small = Hyperbolic(small ? 1.0 : -1.0);
        prev = c;
    }
    throw NonConvergence("semi-infinite integral did not converge within max_panels");
}

}  // namespace bcbessel
