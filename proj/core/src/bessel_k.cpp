#include "bcbessel/bessel_k.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "bcbessel/errors.hpp"

namespace bcbessel {

namespace {

constexpr double eps = 1e-17;

// Taylor coefficients of 1/Gamma(z) about 0.
constexpr std::array<double, 26> rgamma_coeff = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

struct GammaParts {
    double gam1, gam2, gampl, gammi;
};

// gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2.
GammaParts gamma_parts(double mu) {
    const double m2 = mu * mu;
    double even = 0.0, odd = 0.0, p = 1.0;
    for (std::size_t k = 0; k + 1 < rgamma_coeff.size(); k += 2) {
        even += rgamma_coeff[k] * p;
        odd += rgamma_coeff[k + 1] * p;
        p *= m2;
    }
    GammaParts g;
    g.gam2 = even;
    g.gam1 = -odd;
    g.gampl = g.gam2 - mu * g.gam1;
    g.gammi = g.gam2 + mu * g.gam1;
    return g;
}

}  // namespace

double bessel_k_real(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k_real needs x > 0");
    nu = std::abs(nu);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    const double mu2 = mu * mu;
    const double xi = 1.0 / x, xi2 = 2.0 * xi;
    double kmu, k1;
    if (x < 2.0) {
        const double x2 = 0.5 * x;
        const double pimu = std::numbers::pi * mu;
        const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = mu * d;
        const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
        const GammaParts g = gamma_parts(mu);
        double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / g.gampl;
        double q = 0.5 / (e * g.gammi);
        double c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        for (int i = 1; i < 500; ++i) {
            ff = (i * ff + p + q) / (i * i - mu2);
            c *= d / i;
            p /= i - mu;
            q /= i + mu;
            const double del = c * ff;
            sum += del;
            sum1 += c * (p - i * ff);
            if (std::abs(del) < std::abs(sum) * eps) break;
        }
        kmu = sum;
        k1 = sum1 * xi2;
    } else {
        double b = 2.0 * (1.0 + x);
        double d = 1.0 / b;
        double h = d, delh = d;
        double q1 = 0.0, q2 = 1.0;
        const double a1 = 0.25 - mu2;
        double q = a1, c = a1, a = -a1;
        double s = 1.0 + q * delh;
        for (int i = 2; i < 10000; ++i) {
            a -= 2 * (i - 1);
            c = -a * c / i;
            const double qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            const double dels = q * delh;
            s += dels;
            if (std::abs(dels / s) < eps) break;
        }
        h = a1 * h;
        kmu = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
        k1 = kmu * (mu + x + 0.5 - h) * xi;
    }
    for (int i = 1; i <= nl; ++i) {
        const double next = (mu + i) * xi2 * k1 + kmu;
        kmu = k1;
        k1 = next;
    }
    return kmu;
}

}  // namespace bcbessel
