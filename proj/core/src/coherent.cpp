#include "bcbessel/coherent.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bcbessel/bessel.hpp"
#include "bcbessel/bessel_k.hpp"
#include "bcbessel/errors.hpp"
#include "bcbessel/gamma.hpp"

namespace bcbessel {

namespace {

constexpr int log_space_threshold = 120;


double log_rho_component(int n, double nu) {
    return n * std::log(4.0) + std::lgamma(n + 1.0) + std::lgamma(nu + n + 1.0) - std::lgamma(nu + 1.0);
}

double rho_component(int n, double nu) {
    if (n > log_space_threshold) return std::exp(log_rho_component(n, nu));
    long double four_n = std::pow(4.0L, n), fact = 1.0L;
    for (int k = 2; k <= n; ++k) fact *= k;
    const cplx_ld g = gamma_ld(cplx_ld(nu + n + 1.0L)) / gamma_ld(cplx_ld(nu + 1.0L));
    return static_cast<double>(four_n * fact * g.real());
}

cplx series_normalization(cplx y, double nu) {
    cplx sum = 0.0, comp_err = 0.0, term = 1.0;
    const int floor_terms = std::max(15, static_cast<int>(std::ceil(std::sqrt(std::abs(y)))));
    int small = 0;
    for (int n = 0; n < 5000; ++n) {
        const cplx t = sum + term;
        // Neumaier on each real part.
        auto fix = [](double s, double v, double r) { return std::abs(s) >= std::abs(v) ? (s - r) + v : (v - r) + s; };
        comp_err += cplx(fix(sum.real(), term.real(), t.real()), fix(sum.imag(), term.imag(), t.imag()));
        sum = t;
        small = std::abs(term) <= 1e-17 * (1.0 + std::abs(sum)) ? small + 1 : 0;
        if (n + 1 >= floor_terms && small >= 3) break;
        term *= y / (4.0 * (n + 1) * (nu + n + 1));
    }
    return sum + comp_err;
}

double tail_component(double y, double nu, int N) {
    if (y == 0.0) return 0.0;
    const double r = y / (4.0 * (N + 2) * (nu + N + 2));
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return std::exp((N + 1) * std::log(y) - log_rho_component(N + 1, nu)) / (1.0 - r);
}

Bicomplex bessel_form(Hyperbolic Y, Hyperbolic V, bool with_power_of_two) {
    if (!(Y.a1 > 0.0) || !(Y.a2 > 0.0)) throw DomainError("Bessel form needs Y with positive components");
    const Bicomplex Vb(V);
    const Bicomplex root(cplx(0.0, std::sqrt(Y.a1)), cplx(0.0, std::sqrt(Y.a2)));
    const Bicomplex J = bessel_j(Vb, root).value;
    auto minus_power = [](double y, double nu) {
        return std::exp(cplx(0.0, -std::numbers::pi * nu / 2.0)) * std::pow(y, -nu / 2.0);
    };
    const Bicomplex p(minus_power(Y.a1, V.a1), minus_power(Y.a2, V.a2));
    Bicomplex out = p * bicomplex_gamma(Vb + 1.0) * J;
    if (with_power_of_two) out *= Bicomplex(std::pow(2.0, V.a1), std::pow(2.0, V.a2));
    return out;
}

}  // namespace

void check_coherent_order(Hyperbolic V) {
    if (!(V.a1 > -1.0) || !(V.a2 > -1.0)) throw PreconditionError("coherent states need V >_h -1");
}

Hyperbolic rho(int n, Hyperbolic V) {
    check_coherent_order(V);
    if (n < 0) throw PreconditionError("rho needs n >= 0");
    return {rho_component(n, V.a1), rho_component(n, V.a2)};
}

Hyperbolic log_rho(int n, Hyperbolic V) {
    check_coherent_order(V);
    if (n < 0) throw PreconditionError("rho needs n >= 0");
    return {log_rho_component(n, V.a1), log_rho_component(n, V.a2)};
}

Hyperbolic rho_recurrence(int n, Hyperbolic V) {
    check_coherent_order(V);
    long double r1 = 1.0L, r2 = 1.0L;
    for (int k = 0; k < n; ++k) {
        r1 *= 4.0L * (k + 1) * (V.a1 + k + 1);
        r2 *= 4.0L * (k + 1) * (V.a2 + k + 1);
    }
    return {static_cast<double>(r1), static_cast<double>(r2)};
}

Bicomplex normalization(const Bicomplex& Y, Hyperbolic V) {
    check_coherent_order(V);
    return {series_normalization(Y.z1(), V.a1), series_normalization(Y.z2(), V.a2)};
}

Hyperbolic normalization(Hyperbolic Y, Hyperbolic V) {
    if (Y.a1 < 0.0 || Y.a2 < 0.0) throw DomainError("normalization needs Y in D+");
    const Bicomplex n = normalization(Bicomplex(Y), V);
    return {n.z1().real(), n.z2().real()};
}

Bicomplex normalization_bessel_form(Hyperbolic Y, Hyperbolic V) {
    check_coherent_order(V);
    return bessel_form(Y, V, true);
}

Bicomplex normalization_printed_form(Hyperbolic Y, Hyperbolic V) {
    check_coherent_order(V);
    return bessel_form(Y, V, false);
}

Hyperbolic truncation_tail(Hyperbolic Y, Hyperbolic V, int N) {
    check_coherent_order(V);
    return {tail_component(Y.a1, V.a1, N), tail_component(Y.a2, V.a2, N)};
}

Hyperbolic ladder_factor(int r, Hyperbolic V) {
    return {std::sqrt(4.0 * (r + 1) * (V.a1 + r + 1)), std::sqrt(4.0 * (r + 1) * (V.a2 + r + 1))};
}

Hyperbolic ladder_product(int n, Hyperbolic V) {
    Hyperbolic p(1.0);
    for (int r = 0; r < n; ++r) p = p * ladder_factor(r, V);
    return p;
}

TruncatedFockState coherent_state(const Bicomplex& Z, Hyperbolic V, int N) {
    check_coherent_order(V);
    if (N < 1) throw PreconditionError("truncation N must be at least 1");
    const Hyperbolic Y = Z.abs_h() * Z.abs_h();
    TruncatedFockState s;
    s.norm_used = normalization(Y, V);
    const Hyperbolic tail = truncation_tail(Y, V, N);
    s.tail = {tail.a1 / s.norm_used.a1, tail.a2 / s.norm_used.a2};
    if (!(s.tail.a1 < 1e-14) || !(s.tail.a2 < 1e-14))
        throw TruncationError("truncation N = " + std::to_string(N) + " too small for this label");
    s.coefficients.resize(N + 1);
    Bicomplex c(1.0 / std::sqrt(s.norm_used.a1), 1.0 / std::sqrt(s.norm_used.a2));
    for (int n = 0; n <= N; ++n) {
        s.coefficients[n] = c;
        const Hyperbolic f = ladder_factor(n, V);
        c = c * Z / Bicomplex(f);
    }
    return s;
}

Bicomplex inner_product(const TruncatedFockState& a, const TruncatedFockState& b) {
    const std::size_t n = std::min(a.coefficients.size(), b.coefficients.size());
    Bicomplex s;
    for (std::size_t k = 0; k < n; ++k) s += a.coefficients[k].star() * b.coefficients[k];
    return s;
}

Hyperbolic state_distance(const TruncatedFockState& a, const TruncatedFockState& b) {
    const std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Bicomplex x = k < a.coefficients.size() ? a.coefficients[k] : Bicomplex();
        const Bicomplex y = k < b.coefficients.size() ? b.coefficients[k] : Bicomplex();
        const Hyperbolic d = abs_h(x - y);
        s1 += d.a1 * d.a1;
        s2 += d.a2 * d.a2;
    }
    return {std::sqrt(s1), std::sqrt(s2)};
}

Bicomplex overlap(const Bicomplex& Z, const Bicomplex& Zp, Hyperbolic V) {
    check_coherent_order(V);
    const Hyperbolic a = Z.abs_h(), b = Zp.abs_h();
    const Hyperbolic na = normalization(a * a, V), nb = normalization(b * b, V);
    const Bicomplex num = normalization(Z.star() * Zp, V);
    return num / Bicomplex(std::sqrt(na.a1 * nb.a1), std::sqrt(na.a2 * nb.a2));
}

LadderMatrices ladder_matrices(Hyperbolic V, int N) {
    check_coherent_order(V);
    if (N < 1) throw PreconditionError("truncation N must be at least 1");
    LadderMatrices m;
    m.N = N;
    const std::size_t d = N + 1;
    m.lower.assign(d * d, Bicomplex());
    m.raise.assign(d * d, Bicomplex());
    for (int n = 0; n < N; ++n) {
        const Bicomplex f(ladder_factor(n, V));
        m.lower[n * d + (n + 1)] = f;
        m.raise[(n + 1) * d + n] = f;
    }
    return m;
}

std::vector<Bicomplex> mat_mul(const std::vector<Bicomplex>& a, const std::vector<Bicomplex>& b, int N) {
    const std::size_t d = N + 1;
    std::vector<Bicomplex> c(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const Bicomplex& x = a[i * d + k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) c[i * d + j] += x * b[k * d + j];
        }
    return c;
}

std::vector<Bicomplex> mat_vec(const std::vector<Bicomplex>& a, const std::vector<Bicomplex>& x, int N) {
    const std::size_t d = N + 1;
    std::vector<Bicomplex> y(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) y[i] += a[i * d + j] * x[j];
    return y;
}

std::vector<Bicomplex> commutator(const LadderMatrices& m) {
    const auto ab = mat_mul(m.lower, m.raise, m.N);
    const auto ba = mat_mul(m.raise, m.lower, m.N);
    std::vector<Bicomplex> c(ab.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ab[i] - ba[i];
    return c;
}

EigenCheck eigen_residual(const Bicomplex& Z, Hyperbolic V, int N) {
    const TruncatedFockState s = coherent_state(Z, V, N);
    const LadderMatrices m = ladder_matrices(V, N);
    const auto ac = mat_vec(m.lower, s.coefficients, N);
    double r1 = 0.0, r2 = 0.0;
    for (int n = 0; n <= N; ++n) {
        const Hyperbolic d = abs_h(ac[n] - Z * s.coefficients[n]);
        r1 += d.a1 * d.a1;
        r2 += d.a2 * d.a2;
    }
    EigenCheck e;
    e.residual = {std::sqrt(r1), std::sqrt(r2)};
    const Hyperbolic cN = abs_h(s.coefficients[N]);
    const Hyperbolic z = Z.abs_h();
    e.truncation_bound = {z.a1 * std::sqrt(cN.a1 * cN.a1 + s.tail.a1), z.a2 * std::sqrt(cN.a2 * cN.a2 + s.tail.a2)};
    const Bicomplex norm2 = inner_product(s, s);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    e.rounding_floor = {eps * z.a1 * std::sqrt(norm2.z1().real()), eps * z.a2 * std::sqrt(norm2.z2().real())};
    e.tail_bound = e.truncation_bound + e.rounding_floor;
    return e;
}

double weight_component(double y, double nu) {
    if (!(y > 0.0)) throw DomainError("weight function needs y > 0");
    if (!(nu > -1.0)) throw PreconditionError("weight function needs nu > -1");
    const double k = bessel_k_real(nu, std::sqrt(y));
    if (std::isinf(k) && nu > 0.0) return 1.0 / (4.0 * nu);  // small-y limit
    return std::pow(y / 4.0, nu / 2.0) * k / (2.0 * std::tgamma(nu + 1.0));
}

Hyperbolic weight_function(Hyperbolic y, Hyperbolic V) {
    check_coherent_order(V);
    return {weight_component(y.a1, V.a1), weight_component(y.a2, V.a2)};
}

QuadratureConfig moment_config() {
    QuadratureConfig q;
    q.panel_length = 20.0;
    q.singular_origin = true;
    q.rel_tol = 1e-12;
    q.abs_tol = 1e-300;
    q.points_per_panel = 24;
    return q;
}

MomentCheck moment_check(int n, double nu, const QuadratureConfig& config) {
    if (n < 0 || n > 8) throw PreconditionError("moment_check supports 0 <= n <= 8");
    if (!(nu > -1.0)) throw PreconditionError("moment_check needs nu > -1");
    MomentCheck m;
    const TransformResult r = integrate_semi_infinite(
        [&](double y) { return Bicomplex(y > 0.0 ? std::pow(y, n) * weight_component(y, nu) : 0.0); }, config);
    m.numeric = r.value.z1().real();
    m.closed_form = rho_component(n, nu);
    m.rel_err = std::abs(m.numeric - m.closed_form) / std::abs(m.closed_form);
    return m;
}

}  // namespace bcbessel
