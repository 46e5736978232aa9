// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: bcbessel_acceptance [path-to-bcbessel-executable]

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bcbessel/asymptotic.hpp"
#include "bcbessel/bessel.hpp"
#include "bcbessel/coherent.hpp"
#include "bcbessel/gamma.hpp"
#include "bcbessel/hankel.hpp"
#include "bcbessel/integral_forms.hpp"
#include "bcbessel/pde.hpp"
#include "bcbessel/verify.hpp"

#include "mp_oracle.hpp"

using namespace bcbessel;

namespace {

constexpr double pi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }
double hmax(Hyperbolic h) { return std::max(h.a1, h.a2); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double a, double b) { return a + (b - a) * static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    // Uniform in the disc |c| <= r.
    cplx disc(double r) { return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(-pi, pi)); }
    cplx annulus(double rmin, double rmax, double max_arg = pi) {
        return std::polar(uniform(rmin, rmax), uniform(-max_arg, max_arg));
    }
    Bicomplex order() { return {cplx(uniform(0.0, 3.0), uniform(-1.0, 1.0)), cplx(uniform(0.0, 3.0), uniform(-1.0, 1.0))}; }
    Bicomplex arg(double rmin, double rmax, double max_arg = pi) {
        return {annulus(rmin, rmax, max_arg), annulus(rmin, rmax, max_arg)};
    }

private:
    std::mt19937_64 gen_;
};

void note(Outcome& o, bool ok, const std::string& what) {
    if (!ok) o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what + (ok ? "" : " [fail]");
}

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt2(const char* f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// 1. Componentwise agreement with the 50-digit ascending series.
Outcome criterion_1() {
    Outcome o;
    Rng rng(1001);
    std::vector<std::pair<Bicomplex, Bicomplex>> pts(1000);
    for (auto& p : pts) p = {Bicomplex(rng.disc(10.0), rng.disc(10.0)), Bicomplex(rng.disc(10.0), rng.disc(10.0))};
    const auto t0 = Clock::now();
    std::vector<Bicomplex> got;
    got.reserve(pts.size());
    for (const auto& [V, Z] : pts) got.push_back(bessel_j(V, Z).value);
    const double elapsed = seconds_since(t0);
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [V, Z] = pts[i];
        for (int l = 0; l < 2; ++l) {
            const cplx ref = oracle::bessel_j(V[l], Z[l]);
            worst = std::max(worst, std::abs(got[i][l] - ref) / std::abs(ref));
        }
    }
    note(o, worst <= 1e-12, fmt("max rel err %.2e (tol 1e-12)", worst));
    note(o, elapsed <= 5.0, fmt("%.2f s (limit 5 s)", elapsed));
    return o;
}

// 2. Identity suite on 100 seeded samples each.
Outcome criterion_2() {
    Outcome o;
    Rng rng(2002);
    const int samples = 100;
    auto run = [&](const char* name, double tol, const std::function<double()>& sample) {
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double r = sample();
            worst = std::isnan(r) ? r : std::max(worst, r);
        }
        note(o, worst <= tol, std::string(name) + fmt(" %.1e", worst));
    };
    run("rec(i)", 1e-9, [&] { return hmax(recurrence_residuals(rng.order(), rng.arg(0.5, 5.0)).first); });
    run("rec(ii)", 1e-9, [&] { return hmax(recurrence_residuals(rng.order(), rng.arg(0.5, 5.0)).second); });
    run("rec(iii)", 1e-9, [&] {
        const Bicomplex V = rng.order(), Z = rng.arg(0.5, 5.0);
        const int m = static_cast<int>(rng.uniform(0.0, 4.0)), n = static_cast<int>(rng.uniform(0.0, 4.0));
        return hmax(recurrence_residuals(V, Z, m, n).third);
    });
    run("deriv", 1e-9, [&] { return hmax(derivative_forms(rng.order(), rng.arg(0.5, 5.0)).residual); });
    run("ode", 1e-9, [&] { return hmax(ode_residual(rng.order(), rng.arg(0.5, 5.0))); });
    run("neg-order", 1e-9, [&] {
        const Bicomplex L(cplx(std::floor(rng.uniform(0.0, 8.0))), cplx(std::floor(rng.uniform(0.0, 8.0))));
        const Bicomplex Z = rng.arg(0.5, 5.0);
        return hmax(abs_h(bessel_j_negative_integer(L, Z).value - bessel_j_direct_series(-L, Z, 120)));
    });
    run("genfun", 1e-10, [&] {
        const Bicomplex Z = rng.arg(0.5, 3.0), W = rng.arg(0.5, 2.0);
        return hmax(generating_function_truncation_residual(Z, W, 25));
    });
    run("laurent", 1e-9, [&] {
        const Bicomplex Z = rng.arg(0.5, 5.0);
        double m = 0.0;
        for (int n = -5; n <= 5; ++n)
            m = std::max(m, hmax(abs_h(laurent_coefficient(n, Z, 128) - bessel_j(Bicomplex(double(n)), Z).value)));
        return m;
    });
    return o;
}

// 3. Four integral representations at five admissible points each.
Outcome criterion_3() {
    Outcome o;
    const auto t0 = Clock::now();
    const std::array<std::pair<Bicomplex, Bicomplex>, 5> pts{{
        {Bicomplex(1.0), Bicomplex(1.0)},
        {Bicomplex(cplx(0.5, 0.2), cplx(2.0, -0.3)), Bicomplex(cplx(1.5, 0.5), cplx(0.7, -1.0))},
        {Bicomplex(cplx(1.3, 0.0), cplx(0.8, 0.6)), Bicomplex(cplx(2.0, 0.0), cplx(-1.0, 2.0))},
        {Bicomplex(cplx(2.5, -0.4), cplx(1.1, 0.0)), Bicomplex(cplx(3.0, 1.0), cplx(0.4, 0.4))},
        {Bicomplex(cplx(0.7, 0.7), cplx(3.0, 0.2)), Bicomplex(cplx(-2.0, 0.5), cplx(4.0, -1.5))},
    }};
    const Bicomplex delta(cplx(1.0, 0.3), cplx(0.6, 0.0));
    for (IntegralForm form : {IntegralForm::beta, IntegralForm::cosine, IntegralForm::double_beta,
                              IntegralForm::gamma_contour}) {
        double worst = 0.0;
        for (const auto& [V, Z] : pts) worst = std::max(worst, hmax(integral_representation_check(form, V, Z, {}, delta)));
        note(o, worst <= 1e-6, std::string(to_string(form)) + fmt(" %.1e", worst));
    }
    const double elapsed = seconds_since(t0);
    note(o, elapsed <= 30.0, fmt("%.2f s (limit 30 s)", elapsed));
    return o;
}

// 4. Cauchy-Riemann residuals in the order and in the argument.
Outcome criterion_4() {
    Outcome o;
    Rng rng(4004);
    double worst_v = 0.0, worst_z = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Bicomplex V = rng.order(), Z = rng.arg(0.5, 5.0, 0.9 * pi);
        const auto c = holomorphy_residual_order(V, Z);
        worst_v = std::max({worst_v, c.first, c.second});
    }
    for (int i = 0; i < 20; ++i) {
        const Bicomplex V = rng.order(), Z = rng.arg(0.5, 5.0, 0.9 * pi);
        const auto c = holomorphy_residual_argument(V, Z);
        worst_z = std::max({worst_z, c.first, c.second});
    }
    note(o, worst_v <= 1e-7, fmt("order %.1e", worst_v));
    note(o, worst_z <= 1e-7, fmt("argument %.1e", worst_z));
    return o;
}

// 5. The expansion's leading constant and its remainder inequality.
Outcome criterion_5() {
    Outcome o;
    const double c0 = max_abs(asymptotic_constant(0.0) - Bicomplex(1.0 / pi));
    note(o, c0 <= 1e-15, fmt("constant at V=0 off 1/pi by %.1e", c0));

    // n_terms = 1: Gamma(2V+1)Gamma(V+1/2)/(2^V Gamma(V+1)Gamma(V+1/2)^2) e^{(1-i)x}/sqrt(x);
    // with Gamma(2V+1) = 2^{2V} Gamma(V+1/2)Gamma(V+1)/sqrt(pi) this is 2^V e^{(1-i)x}/sqrt(pi x).
    double lead = 0.0;
    for (const Bicomplex& V : {Bicomplex(0.0), Bicomplex(cplx(0.3, 0.2), cplx(1.7, -0.5))}) {
        for (double x : {2.0, 20.0}) {
            const Bicomplex got = asymptotic_j(V, Hyperbolic(x), 1).value;
            const Bicomplex expected = pow(Bicomplex(2.0), V) * std::exp(cplx(1.0, -1.0) * x) / std::sqrt(pi * x);
            lead = std::max(lead, hmax(abs_h(got - expected)) / hmax(abs_h(expected)));
        }
    }
    note(o, lead <= 1e-13, fmt("n=1 closed form rel %.1e", lead));

    const Bicomplex V(5.5, 6.5);
    for (double x : {20.0, 50.0}) {
        for (int n : {2, 4}) {
            const Hyperbolic R = abs_h(asymptotic_remainder(V, Hyperbolic(x), n));
            const Hyperbolic b = asymptotic_remainder_bound(V, Hyperbolic(x), n);
            note(o, lt_h(R, b), fmt2("x=%g n=%g", x, n) + fmt(" ratio %.2f", std::max(R.a1 / b.a1, R.a2 / b.a2)));
        }
    }
    return o;
}

// 6. Hankel transform pairs, round trip and operational identities.
Outcome criterion_6() {
    Outcome o;
    const auto t0 = Clock::now();
    double a = 0.0;
    const SampledFunction ind = builtin_function("indicator");
    for (int i = 1; i <= 10; ++i) {
        const Bicomplex Z(cplx(0.45 * i, 0.05 * i), cplx(0.6 * i, -0.1));
        const Bicomplex eta = hankel_forward(-0.5, ind, {Z}).value;
        a = std::max(a, hmax(abs_h(eta - std::sqrt(2.0 / pi) * sin(Z) / Z)));
    }
    note(o, a <= 1e-6, fmt("(a) %.1e", a));

    double b = 0.0;
    for (double nu : {-0.5, 0.0, 0.5, 2.0}) {
        const SampledFunction g = builtin_function("gaussian-monomial", nu);
        for (double z : {0.3, 1.0, 2.2, 3.5}) {
            const Bicomplex eta = hankel_forward(nu, g, {Bicomplex(z)}).value;
            b = std::max(b, max_abs(eta - Bicomplex(std::pow(z, nu + 0.5) * std::exp(-z * z / 2.0))));
        }
    }
    note(o, b <= 1e-6, fmt("(b) %.1e", b));

    double c = 0.0;
    {
        const Bicomplex V(0.0, 1.0);
        const SampledFunction f = poly_gaussian({{1.0, Bicomplex(0.5, 1.5), 0.5}});
        const SampledFunction F = transform_as_function(V, f);
        for (double w : {0.5, 1.0, 1.5, 2.0, 3.0})
            c = std::max(c, max_abs(hankel_inverse(V, F, {w}).value - f(w)));
    }
    note(o, c <= 1e-4, fmt("(c) %.1e", c));

    double d1 = 0.0, d2 = 0.0;
    const SampledFunction f1 = builtin_function("poly-gaussian");
    const SampledFunction f2 = builtin_function("poly-gaussian", 0.0, 2);
    for (auto which : {OperationalIdentity::i, OperationalIdentity::ii, OperationalIdentity::iii}) {
        for (const Bicomplex& z : {Bicomplex(1.5), Bicomplex(cplx(0.7), cplx(2.4))})
            d1 = std::max(d1, hmax(operational_identity_residual(which, 1.0, 1.0, f1, {z})));
        d2 = std::max(d2, hmax(operational_identity_residual(which, 1.0, 1.0, f2, {Bicomplex(1.5), Bicomplex(0.8)})));
    }
    note(o, d1 <= 1e-5, fmt("(d) n=1 %.1e", d1));
    note(o, d2 <= 1e-4, fmt("(d) n=2 %.1e", d2));
    const double elapsed = seconds_since(t0);
    note(o, elapsed <= 60.0, fmt("%.1f s (limit 60 s)", elapsed));
    return o;
}

// 7. Wave and heat reductions at nu = -1/2 and the figure grids.
Outcome criterion_7() {
    Outcome o;
    PDEConfig cfg;
    cfg.inverse.abs_tol = 1e-7;
    cfg.inverse.rel_tol = 1e-12;

    // Even extension of the initial data; d'Alembert.
    PDEProblem wave;
    wave.kind = PDEKind::wave;
    wave.f = builtin_function("cutoff-polynomial");
    auto f0 = [](double x) {
        x = std::abs(x);
        return x < 1.0 ? std::pow(1.0 - x * x, 4) : 0.0;
    };
    const std::vector<double> om{0.1, 0.3, 0.5, 0.7}, tw{0.0, 0.1, 0.2, 0.3};
    const SolutionGrid gw = solve(wave, om, tw, cfg);
    double ew = 0.0;
    for (std::size_t i = 0; i < om.size(); ++i)
        for (std::size_t j = 0; j < tw.size(); ++j)
            ew = std::max(ew, max_abs(gw.at(i, j) - Bicomplex(0.5 * (f0(om[i] - tw[j]) + f0(om[i] + tw[j])))));
    note(o, ew <= 1e-3, fmt("wave %.1e", ew));

    // Indicator of (0,1), even extension, heat kernel.
    const PDEProblem heat = figure_problem(PDEKind::heat);
    const std::vector<double> th{0.1, 0.5, 1.0, 2.0};
    const SolutionGrid gh = solve(heat, om, th, cfg);
    double eh = 0.0;
    for (std::size_t i = 0; i < om.size(); ++i)
        for (std::size_t j = 0; j < th.size(); ++j) {
            const double s = 2.0 * std::sqrt(th[j]);
            const double ex = 0.5 * (std::erf((1.0 - om[i]) / s) + std::erf((1.0 + om[i]) / s));
            eh = std::max(eh, max_abs(gh.at(i, j) - Bicomplex(ex)));
        }
    note(o, eh <= 1e-3, fmt("heat %.1e", eh));

    const std::vector<double> tm = parse_range("0.1:2:0.1");
    const SolutionGrid gm = solve(heat, {0.5}, tm, cfg);
    bool monotone = true;
    for (std::size_t j = 1; j < tm.size(); ++j)
        monotone = monotone && gm.at(0, j).z1().real() < gm.at(0, j - 1).z1().real() &&
                   gm.at(0, j).z2().real() < gm.at(0, j - 1).z2().real();
    note(o, monotone, "heat decreasing at 0.5");

    for (PDEKind kind : {PDEKind::wave, PDEKind::heat}) {
        std::ostringstream csv;
        double imag = 0.0;
        try {
            const SolutionGrid g = figure_data(kind, parse_range("0:1:0.02"), parse_range("0:2:0.05"));
            write_csv(csv, g);
            for (const Bicomplex& u : g.values) imag = std::max({imag, std::abs(u.z1().imag()), std::abs(u.z2().imag())});
            note(o, imag <= 1e-8, std::string(to_string(kind)) + fmt(" figure max imag %.1e", imag));
        } catch (const Error& e) {
            note(o, false, std::string(to_string(kind)) + " figure: " + e.what());
        }
    }
    return o;
}

// 8. Coherent states.
Outcome criterion_8() {
    Outcome o;
    double norm = 0.0;
    for (const auto& [Z, V] : {std::pair{Bicomplex(cplx(3, 0), cplx(1, 2)), Hyperbolic(0.5, 1.0)},
                               std::pair{Bicomplex(cplx(0.2, -1.5), cplx(4.0, 0.5)), Hyperbolic(-0.5, 2.0)},
                               std::pair{Bicomplex(cplx(5.0, 5.0), cplx(0.0, 0.0)), Hyperbolic(0.0, 0.0)}}) {
        const TruncatedFockState s = coherent_state(Z, V, 200);
        norm = std::max(norm, hmax(abs_h(inner_product(s, s) - 1.0)));
    }
    note(o, norm <= 1e-10, fmt("<Z|Z> off by %.1e", norm));

    bool eig = true;
    double eig_ratio = 0.0;
    for (const auto& [Z, N] : {std::pair{Bicomplex(cplx(0.5, 0.0), cplx(0.5, 0.2)), 150},
                               std::pair{Bicomplex(cplx(6.0, 0.0), cplx(3.0, 4.0)), 40},
                               std::pair{Bicomplex(cplx(6.0, 0.0), cplx(3.0, 4.0)), 18},
                               std::pair{Bicomplex(cplx(2.0, 1.0), cplx(-1.0, 0.0)), 60}}) {
        const EigenCheck e = eigen_residual(Z, Hyperbolic(0.5, 1.0), N);
        eig = eig && leq_h(e.residual, Hyperbolic(10.0) * e.tail_bound);
        eig_ratio = std::max({eig_ratio, e.residual.a1 / e.tail_bound.a1, e.residual.a2 / e.tail_bound.a2});
    }
    note(o, eig, fmt("eigen residual/bound %.2f", eig_ratio));

    double prod = 0.0;
    for (const Hyperbolic V : {Hyperbolic(0.5, 1.0), Hyperbolic(-0.5, 3.0)})
        for (int n = 0; n <= 60; ++n) {
            const Hyperbolic p = ladder_product(n, V), r = rho(n, V);
            prod = std::max({prod, std::abs(p.a1 - std::sqrt(r.a1)) / std::sqrt(r.a1),
                             std::abs(p.a2 - std::sqrt(r.a2)) / std::sqrt(r.a2)});
        }
    note(o, prod <= 1e-13, fmt("prod f = sqrt(rho) rel %.1e", prod));

    const auto t0 = Clock::now();
    double moments = 0.0;
    for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.0})
        for (int n = 0; n <= 6; ++n) moments = std::max(moments, moment_check(n, nu).rel_err);
    const double elapsed = seconds_since(t0);
    note(o, moments <= 1e-6, fmt("moments rel %.1e", moments));
    note(o, elapsed <= 30.0, fmt("%.2f s (limit 30 s)", elapsed));

    bool positive = true;
    for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.0})
        for (double y = 0.01; y <= 200.0; y *= 1.2) positive = positive && weight_component(y, nu) > 0.0;
    note(o, positive, "weight positive");
    return o;
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
}

// 9. Determinism of `verify all --seed 42`.
Outcome criterion_9(const std::string& exe) {
    Outcome o;
    if (exe.empty()) {
        note(o, false, "no executable given");
        return o;
    }
    int s1 = 0, s2 = 0, s3 = 0;
    const std::string base = "'" + exe + "' verify all --seed 42";
    const std::string a = capture(base, s1);
    const std::string b = capture(base, s2);
    const std::string c = capture(base + " --threads 1", s3);
    note(o, s1 == 0 && s2 == 0 && s3 == 0, "exit status 0");
    note(o, !a.empty() && a == b, "two runs identical");
    note(o, !a.empty() && a == c, "1 thread vs all threads identical");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    const std::array<std::pair<const char*, std::function<Outcome()>>, 9> criteria{{
        {"idempotent-equivalence oracle", criterion_1},
        {"identity suite", criterion_2},
        {"integral representations", criterion_3},
        {"holomorphy", criterion_4},
        {"asymptotic expansion", criterion_5},
        {"hankel transform", criterion_6},
        {"pde reductions", criterion_7},
        {"coherent states", criterion_8},
        {"determinism", [&] { return criterion_9(exe); }},
    }};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %zu (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
