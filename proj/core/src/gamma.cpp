#include "bcbessel/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace bcbessel {

namespace {

constexpr long double pi_ld = std::numbers::pi_v<long double>;

// Lanczos approximation, g = 7, nine coefficients.
constexpr long double lanczos_g = 7.0L;
constexpr std::array<long double, 9> lanczos_c = {
    0.99999999999980993227684700473478L,
    676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L,
    771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,
    12.507343278686904814458936853L,
    -0.13857109526572011689554707L,
    9.984369578019570859563e-6L,
    1.50563273514931155834e-7L,
};

// log Gamma(z) for Re z >= 1/2.
cplx_ld log_gamma_right(cplx_ld z) {
    z -= 1.0L;
    cplx_ld x = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i) x += lanczos_c[i] / (z + static_cast<long double>(i));
    const cplx_ld t = z + lanczos_g + 0.5L;
    return 0.5L * std::log(2.0L * pi_ld) + (z + 0.5L) * std::log(t) - t + std::log(x);
}

}  // namespace

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

cplx_ld sin_pi(cplx_ld z) {
    const long double x = z.real();
    const long double y = z.imag();
    // Reduce x to [-1, 1] exactly; sin(pi x) has period 2.
    long double r = std::fmod(x, 2.0L);
    if (r > 1.0L) r -= 2.0L;
    if (r < -1.0L) r += 2.0L;
    long double s, c;
    if (r == 0.0L || r == 1.0L || r == -1.0L) {
        s = 0.0L;
        c = (r == 0.0L) ? 1.0L : -1.0L;
    } else if (r == 0.5L || r == -1.5L) {
        s = 1.0L;
        c = 0.0L;
    } else if (r == -0.5L || r == 1.5L) {
        s = -1.0L;
        c = 0.0L;
    } else {
        s = std::sin(pi_ld * r);
        c = std::cos(pi_ld * r);
    }
    return {s * std::cosh(pi_ld * y), c * std::sinh(pi_ld * y)};
}

cplx_ld cos_pi(cplx_ld z) { return sin_pi(z + 0.5L); }

cplx_ld gamma_ld(cplx_ld z) {
    if (z.imag() == 0.0L && z.real() <= 0.0L && std::floor(z.real()) == z.real())
        throw PoleError("gamma pole at a nonpositive integer");
    if (z.real() < 0.5L) return pi_ld / (sin_pi(z) * gamma_ld(1.0L - z));
    return std::exp(log_gamma_right(z));
}

cplx_ld rgamma_ld(cplx_ld z) {
    if (z.real() < 0.5L) {
        // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi, zero at the poles.
        const cplx_ld s = sin_pi(z);
        if (s == cplx_ld{}) return 0.0L;
        return s * std::exp(log_gamma_right(1.0L - z)) / pi_ld;
    }
    return std::exp(-log_gamma_right(z));
}

cplx complex_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma pole at a nonpositive integer");
    const cplx_ld g = gamma_ld(cplx_ld(z.real(), z.imag()));
    return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

cplx complex_rgamma(cplx z) {
    const cplx_ld g = rgamma_ld(cplx_ld(z.real(), z.imag()));
    return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

double log_gamma_real(double x) {
    if (x <= 0.0) throw DomainError("log_gamma_real needs x > 0");
    return std::lgamma(x);
}

Bicomplex bicomplex_gamma(const Bicomplex& z) {
    const int mask = (is_nonpositive_integer(z.z1()) ? 1 : 0) | (is_nonpositive_integer(z.z2()) ? 2 : 0);
    if (mask) throw PoleError("bicomplex gamma pole", mask);
    return {complex_gamma(z.z1()), complex_gamma(z.z2())};
}

Bicomplex bicomplex_rgamma(const Bicomplex& z) {
    return {complex_rgamma(z.z1()), complex_rgamma(z.z2())};
}

}  // namespace bcbessel
