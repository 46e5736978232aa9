#include "bcbessel/verify.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "bcbessel/asymptotic.hpp"
#include "bcbessel/bessel.hpp"
#include "bcbessel/coherent.hpp"
#include "bcbessel/errors.hpp"
#include "bcbessel/hankel.hpp"
#include "parallel.hpp"

namespace bcbessel {

bool VerifyReport::pass() const {
    for (const auto& s : suites)
        if (!s.pass) return false;
    return true;
}

namespace {

constexpr double pi = std::numbers::pi;

class Sampler {
public:
    Sampler(std::uint64_t seed, int suite, int index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(index)};
        rng_.seed(seq);
    }
    // Uniform on [a, b) from the top 53 bits, independent of the library's distributions.
    double uniform(double a, double b) { return a + (b - a) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    cplx order() { return {uniform(0.0, 3.0), uniform(-1.0, 1.0)}; }
    cplx polar(double rmin, double rmax, double max_arg = pi) {
        return std::polar(uniform(rmin, rmax), uniform(-max_arg, max_arg));
    }
    Bicomplex order_bc() {
        const cplx a = order();
        const cplx b = order();
        return {a, b};
    }
    Bicomplex arg_bc(double rmin, double rmax, double max_arg = pi) {
        const cplx a = polar(rmin, rmax, max_arg);
        const cplx b = polar(rmin, rmax, max_arg);
        return {a, b};
    }

private:
    std::mt19937_64 rng_;
};

using SampleFn = std::function<double(Sampler&, int)>;

struct Suite {
    std::string name;
    double tolerance;
    int samples;  // 0 = options.samples
    bool heavy;
    SampleFn fn;
};

double hmax(Hyperbolic h) { return std::max(h.a1, h.a2); }

std::vector<Suite> suites() {
    std::vector<Suite> s;
    s.push_back({"recurrence_i", 1e-9, 0, false, [](Sampler& r, int) {
                     return hmax(recurrence_residuals(r.order_bc(), r.arg_bc(0.5, 5.0)).first);
                 }});
    s.push_back({"recurrence_ii", 1e-9, 0, false, [](Sampler& r, int) {
                     return hmax(recurrence_residuals(r.order_bc(), r.arg_bc(0.5, 5.0)).second);
                 }});
    s.push_back({"recurrence_iii", 1e-9, 0, false, [](Sampler& r, int) {
                     const Bicomplex V = r.order_bc(), Z = r.arg_bc(0.5, 5.0);
                     const int m = static_cast<int>(r.uniform(0.0, 4.0)), n = static_cast<int>(r.uniform(0.0, 4.0));
                     return hmax(recurrence_residuals(V, Z, m, n).third);
                 }});
    s.push_back({"derivative_relations", 1e-9, 0, false, [](Sampler& r, int) {
                     return hmax(derivative_forms(r.order_bc(), r.arg_bc(0.5, 5.0)).residual);
                 }});
    s.push_back({"ode", 1e-9, 0, false, [](Sampler& r, int) {
                     return hmax(ode_residual(r.order_bc(), r.arg_bc(0.5, 5.0)));
                 }});
    s.push_back({"negative_order", 1e-9, 0, false, [](Sampler& r, int) {
                     const Bicomplex L(cplx(std::floor(r.uniform(0.0, 8.0))), cplx(std::floor(r.uniform(0.0, 8.0))));
                     const Bicomplex Z = r.arg_bc(0.5, 5.0);
                     const Bicomplex direct = bessel_j_direct_series(-L, Z, 120);
                     return hmax(abs_h(bessel_j_negative_integer(L, Z).value - direct));
                 }});
    s.push_back({"generating_function", 1e-10, 0, false, [](Sampler& r, int) {
                     const Bicomplex Z = r.arg_bc(0.5, 3.0), W = r.arg_bc(0.5, 2.0);
                     return hmax(generating_function_truncation_residual(Z, W, 25));
                 }});
    s.push_back({"laurent_coefficient", 1e-9, 0, false, [](Sampler& r, int) {
                     const Bicomplex Z = r.arg_bc(0.5, 5.0);
                     double m = 0.0;
                     for (int n = -5; n <= 5; ++n)
                         m = std::max(m, hmax(abs_h(laurent_coefficient(n, Z, 128) -
                                                    bessel_j(Bicomplex(static_cast<double>(n)), Z).value)));
                     return m;
                 }});
    s.push_back({"holomorphy_order", 1e-7, 20, false, [](Sampler& r, int) {
                     const auto c = holomorphy_residual_order(r.order_bc(), r.arg_bc(0.5, 5.0, 0.9 * pi));
                     return std::max(c.first, c.second);
                 }});
    s.push_back({"holomorphy_argument", 1e-7, 20, false, [](Sampler& r, int) {
                     const auto c = holomorphy_residual_argument(r.order_bc(), r.arg_bc(0.5, 5.0, 0.9 * pi));
                     return std::max(c.first, c.second);
                 }});
    // Ratio |R_n| / bound, which must stay below 1 in both components.
    s.push_back({"asymptotic_remainder_bound", 1.0, 4, true, [](Sampler&, int i) {
                     const Hyperbolic x(i % 2 ? 50.0 : 20.0);
                     const int n = i < 2 ? 2 : 4;
                     const Bicomplex V(5.5, 6.5);
                     const Hyperbolic R = abs_h(asymptotic_remainder(V, x, n));
                     const Hyperbolic b = asymptotic_remainder_bound(V, x, n);
                     return std::max(R.a1 / b.a1, R.a2 / b.a2);
                 }});
    s.push_back({"hankel_indicator", 1e-6, 10, true, [](Sampler& r, int) {
                     const Bicomplex Z = r.arg_bc(0.2, 6.0, 0.3);
                     const Bicomplex eta = hankel_forward(-0.5, builtin_function("indicator"), {Z}).value;
                     return hmax(abs_h(eta - std::sqrt(2.0 / pi) * sin(Z) / Z));
                 }});
    s.push_back({"hankel_gaussian_pair", 1e-6, 8, true, [](Sampler& r, int i) {
                     const double nu = std::array{-0.5, 0.0, 0.5, 2.0}[i % 4];
                     const double z = r.uniform(0.2, 4.0);
                     const Bicomplex eta = hankel_forward(nu, builtin_function("gaussian-monomial", nu), {Bicomplex(z)}).value;
                     return max_abs(eta - Bicomplex(std::pow(z, nu + 0.5) * std::exp(-z * z / 2.0)));
                 }});
    s.push_back({"operational_identities", 1e-5, 6, true, [](Sampler& r, int i) {
                     const auto which = std::array{OperationalIdentity::i, OperationalIdentity::ii,
                                                   OperationalIdentity::iii}[i % 3];
                     const Bicomplex Z(cplx(r.uniform(0.5, 3.0)), cplx(r.uniform(0.5, 3.0)));
                     return hmax(operational_identity_residual(which, 1.0, 1.0, builtin_function("poly-gaussian"), {Z}));
                 }});
    s.push_back({"coherent_normalization", 1e-10, 0, false, [](Sampler& r, int) {
                     const Hyperbolic V(r.uniform(-0.9, 3.0), r.uniform(-0.9, 3.0));
                     const TruncatedFockState st = coherent_state(r.arg_bc(0.0, 3.0), V, 200);
                     const Bicomplex ip = inner_product(st, st);
                     return hmax(abs_h(ip - 1.0));
                 }});
    s.push_back({"coherent_moments", 1e-6, 35, true, [](Sampler&, int i) {
                     const double nu = std::array{-0.5, 0.0, 0.5, 1.0, 2.0}[i / 7];
                     return moment_check(i % 7, nu).rel_err;
                 }});
    return s;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& s : suites()) names.push_back(s.name);
    return names;
}

VerifyReport verify_all(const VerifyOptions& options) {
    if (options.samples < 1) throw PreconditionError("samples must be positive");
    VerifyReport report;
    report.seed = options.seed;
    report.samples = options.samples;
    const auto all = suites();
    for (std::size_t k = 0; k < all.size(); ++k) {
        const Suite& suite = all[k];
        if (options.quick && suite.heavy) continue;
        const int n = suite.samples > 0 ? suite.samples : options.samples;
        std::vector<double> residual(n, 0.0);
        std::vector<std::string> error(n);
        detail::parallel_for(n, options.threads, [&](std::size_t i) {
            Sampler r(options.seed, static_cast<int>(k), static_cast<int>(i));
            try {
                residual[i] = suite.fn(r, static_cast<int>(i));
            } catch (const Error& e) {
                residual[i] = std::numeric_limits<double>::quiet_NaN();
                error[i] = e.name() + ": " + e.what();
            }
        });
        SuiteResult res;
        res.name = suite.name;
        res.samples = n;
        res.tolerance = suite.tolerance;
        bool finite = true;
        for (int i = 0; i < n; ++i) {
            if (std::isnan(residual[i])) finite = false;
            else res.max_residual = std::max(res.max_residual, residual[i]);
            if (res.error.empty() && !error[i].empty()) res.error = error[i];
        }
        if (!finite) res.max_residual = std::numeric_limits<double>::quiet_NaN();
        res.pass = finite && res.max_residual <= res.tolerance;
        report.suites.push_back(std::move(res));
    }
    return report;
}

}  // namespace bcbessel
