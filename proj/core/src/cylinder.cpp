#include "bcbessel/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "bcbessel/gamma.hpp"

namespace bcbessel {

namespace {

constexpr long double pi_ld = std::numbers::pi_v<long double>;
constexpr long double eps_ld = std::numeric_limits<long double>::epsilon();

__extension__ typedef __float128 quad;
constexpr double eps_quad = 1.93e-34;

struct QComplex {
    quad re = 0;
    quad im = 0;

    QComplex() = default;
    QComplex(quad r, quad i) : re(r), im(i) {}
    explicit QComplex(cplx z) : re(z.real()), im(z.imag()) {}

    QComplex operator+(const QComplex& b) const { return {re + b.re, im + b.im}; }
    QComplex operator-(const QComplex& b) const { return {re - b.re, im - b.im}; }
    QComplex operator*(const QComplex& b) const { return {re * b.re - im * b.im, re * b.im + im * b.re}; }
    QComplex operator/(const QComplex& b) const {
        const quad d = b.re * b.re + b.im * b.im;
        return {(re * b.re + im * b.im) / d, (im * b.re - re * b.im) / d};
    }
    double abs() const { return std::hypot(static_cast<double>(re), static_cast<double>(im)); }
};

// Neumaier compensated sum, one per real component.
template <class T>
struct Neumaier {
    T sum = 0;
    T comp = 0;
    void add(T x) {
        const T t = sum + x;
        if ((sum < 0 ? -sum : sum) >= (x < 0 ? -x : x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    T value() const { return sum + comp; }
};

bool is_negative_integer(cplx nu) {
    return nu.imag() == 0.0 && nu.real() < 0.0 && std::floor(nu.real()) == nu.real();
}

int term_floor(cplx z) { return std::max(15, static_cast<int>(std::ceil(std::abs(z)))); }

// t0 = (z/2)^nu / Gamma(nu + 1), principal branch.
cplx_ld leading_term(cplx nu, cplx z) {
    const cplx_ld nul(nu.real(), nu.imag());
    const cplx_ld zl(z.real(), z.imag());
    const cplx_ld r = rgamma_ld(nul + 1.0L);
    if (r == cplx_ld{}) return 0.0L;
    return std::exp(nul * std::log(zl / 2.0L)) * r;
}

struct Candidate {
    cplx value;
    int terms;
    double error;
    JRoute route;
};

// Sum of the ratio series S = sum r_s, r_0 = 1, r_{s+1} = r_s q / ((s+1)(nu+s+1)).
Candidate series_ld(cplx nu, cplx z, int max_terms) {
    const cplx_ld t0 = leading_term(nu, z);
    const cplx_ld nul(nu.real(), nu.imag());
    const cplx_ld h = cplx_ld(z.real(), z.imag()) / 2.0L;
    const cplx_ld q = -h * h;
    Neumaier<long double> sr, si;
    long double abs_sum = 0.0L;
    cplx_ld r = 1.0L;
    const int floor_terms = term_floor(z);
    int small_run = 0;
    int s = 0;
    long double last = 0.0L;
    for (; s < max_terms; ++s) {
        sr.add(r.real());
        si.add(r.imag());
        const long double ar = std::abs(r);
        abs_sum += ar;
        last = ar;
        const long double cur = std::hypot(sr.value(), si.value());
        small_run = (ar <= 1e-21L * cur) ? small_run + 1 : 0;
        if (s + 1 >= floor_terms && small_run >= 3) break;
        r = r * q / (static_cast<long double>(s + 1) * (nul + static_cast<long double>(s + 1)));
    }
    if (s == max_terms) throw NonConvergence("Bessel series did not converge within max_terms");
    const cplx_ld S(sr.value(), si.value());
    const long double at0 = std::abs(t0);
    const double err = static_cast<double>(at0 * (2.0L * last + 8.0L * eps_ld * abs_sum) + 4.0L * eps_ld * std::abs(t0 * S));
    const cplx_ld v = t0 * S;
    return {cplx(static_cast<double>(v.real()), static_cast<double>(v.imag())), s + 1, err, JRoute::series};
}

Candidate series_quad(cplx nu, cplx z, int max_terms) {
    const cplx_ld t0 = leading_term(nu, z);
    const QComplex nuq(nu);
    const QComplex h(z / 2.0);
    const QComplex q = QComplex(0, 0) - h * h;
    QComplex S, r(1, 0);
    double abs_sum = 0.0;
    const int floor_terms = term_floor(z);
    int small_run = 0;
    int s = 0;
    double last = 0.0;
    for (; s < max_terms; ++s) {
        S = S + r;
        const double ar = r.abs();
        abs_sum += ar;
        last = ar;
        small_run = (ar <= 1e-36 * S.abs()) ? small_run + 1 : 0;
        if (s + 1 >= floor_terms && small_run >= 3) break;
        const quad k = s + 1;
        r = r * q / (QComplex(k, 0) * (nuq + QComplex(k, 0)));
    }
    if (s == max_terms) throw NonConvergence("Bessel series did not converge within max_terms");
    const cplx_ld Sl(static_cast<long double>(S.re), static_cast<long double>(S.im));
    const cplx_ld v = t0 * Sl;
    const double at0 = static_cast<double>(std::abs(t0));
    const double err = at0 * (2.0 * last + 8.0 * eps_quad * abs_sum) + 4.0 * static_cast<double>(eps_ld * std::abs(v));
    return {cplx(static_cast<double>(v.real()), static_cast<double>(v.imag())), s + 1, err, JRoute::series_quad};
}

// Hankel large-argument expansion; reflection J_nu(z) = e^{+-i pi nu} J_nu(-z) for Re z < 0.
std::optional<Candidate> hankel_expansion(cplx nu, cplx z) {
    cplx_ld w(z.real(), z.imag());
    const cplx_ld nul(nu.real(), nu.imag());
    cplx_ld factor = 1.0L;
    if (w.real() < 0.0L) {
        const cplx_ld ipinu = cplx_ld(0.0L, pi_ld) * nul;
        factor = (z.imag() >= 0.0) ? std::exp(ipinu) : std::exp(-ipinu);
        w = -w;
    }
    const cplx_ld mu = 4.0L * nul * nul;
    cplx_ld P = 1.0L, Q = 0.0L;
    cplx_ld term = 1.0L;
    long double prev = 1.0L;
    long double err_term = 0.0L;
    int k = 1;
    bool converged = false;
    for (; k < 200; ++k) {
        const long double odd = static_cast<long double>(2 * k - 1);
        const cplx_ld next = term * (mu - odd * odd) / (static_cast<long double>(8 * k) * w);
        const long double an = std::abs(next);
        if (an == 0.0L) {
            converged = true;
            err_term = 0.0L;
            break;
        }
        if (an > prev) {
            err_term = prev;
            break;
        }
        term = next;
        const int m = k % 4;
        if (m == 1) Q += term;
        else if (m == 2) P -= term;
        else if (m == 3) Q -= term;
        else P += term;
        prev = an;
        if (an <= eps_ld * std::max(std::abs(P), std::abs(Q))) {
            converged = true;
            err_term = an;
            break;
        }
    }
    if (!converged && err_term == 0.0L) err_term = prev;
    const cplx_ld chi = w - nul * (pi_ld / 2.0L) - pi_ld / 4.0L;
    const cplx_ld c = std::cos(chi), s = std::sin(chi);
    const cplx_ld pre = std::sqrt(2.0L / (pi_ld * w)) * factor;
    const cplx_ld v = pre * (P * c - Q * s);
    if (!std::isfinite(std::abs(v))) return std::nullopt;
    const long double scale = std::abs(pre) * (std::abs(c) + std::abs(s));
    const long double rounding = 16.0L * eps_ld * (1.0L + std::abs(w)) * scale * std::max(std::abs(P), std::abs(Q));
    const double err = static_cast<double>(scale * err_term + rounding);
    return Candidate{cplx(static_cast<double>(v.real()), static_cast<double>(v.imag())), k, err, JRoute::hankel};
}

bool good_enough(const Candidate& c, double rel_tol) {
    return c.error <= rel_tol * std::abs(c.value);
}

double relative_error(const Candidate& c) {
    const double a = std::abs(c.value);
    return a > 0.0 ? c.error / a : (c.error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
}

}  // namespace

ComplexJ cylinder_j(cplx nu, cplx z, double rel_tol, int max_terms) {
    if (is_negative_integer(nu)) {
        ComplexJ r = cylinder_j(-nu, z, rel_tol, max_terms);
        if (static_cast<long long>(-nu.real()) % 2 != 0) r.value = -r.value;
        return r;
    }
    if (z == cplx{}) {
        if (nu == cplx{}) return {1.0, 1, 0.0, JRoute::closed};
        if (nu.real() > 0.0) return {0.0, 1, 0.0, JRoute::closed};
        throw ZeroDivisorError("Bessel function of order with nonpositive real part at zero argument");
    }
    const double az = std::abs(z);
    std::optional<Candidate> best;
    auto consider = [&](const Candidate& c) {
        if (!best || relative_error(c) < relative_error(*best)) best = c;
    };
    if (az <= 25.0) {
        consider(series_ld(nu, z, max_terms));
        if (good_enough(*best, rel_tol)) return {best->value, best->terms, best->error, best->route};
    }
    if (az >= 8.0) {
        if (auto h = hankel_expansion(nu, z)) {
            consider(*h);
            if (good_enough(*best, rel_tol)) return {best->value, best->terms, best->error, best->route};
        }
    }
    if (az <= 90.0) consider(series_quad(nu, z, max_terms));
    if (!best) consider(series_ld(nu, z, max_terms));
    return {best->value, best->terms, best->error, best->route};
}

cplx cylinder_j_direct_series(cplx nu, cplx z, int terms) {
    const cplx_ld nul(nu.real(), nu.imag());
    const cplx_ld h = cplx_ld(z.real(), z.imag()) / 2.0L;
    Neumaier<long double> sr, si;
    long double fact = 1.0L;
    for (int s = 0; s < terms; ++s) {
        if (s > 0) fact *= static_cast<long double>(s);
        const cplx_ld rg = rgamma_ld(nul + static_cast<long double>(s + 1));
        if (rg == cplx_ld{}) continue;
        const cplx_ld e = nul + static_cast<long double>(2 * s);
        cplx_ld p;
        if (e.imag() == 0.0L && std::floor(e.real()) == e.real()) {
            p = std::pow(h, static_cast<int>(e.real()));
        } else {
            p = std::exp(e * std::log(h));
        }
        const cplx_ld t = ((s % 2) ? -1.0L : 1.0L) * p * rg / fact;
        sr.add(t.real());
        si.add(t.imag());
    }
    return {static_cast<double>(sr.value()), static_cast<double>(si.value())};
}

}  // namespace bcbessel
