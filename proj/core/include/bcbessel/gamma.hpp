#pragma once

#include <complex>

#include "bcbessel/bicomplex.hpp"

namespace bcbessel {

using cplx_ld = std::complex<long double>;

// Gamma(z). Throws PoleError at nonpositive integers.
cplx complex_gamma(cplx z);
// 1/Gamma(z); exactly zero at the poles.
cplx complex_rgamma(cplx z);
// log Gamma(x) for real x > 0.
double log_gamma_real(double x);

// Extended-precision versions used by the series code.
cplx_ld gamma_ld(cplx_ld z);
cplx_ld rgamma_ld(cplx_ld z);

// sin(pi z) and cos(pi z) with exact argument reduction of Re z.
cplx_ld sin_pi(cplx_ld z);
cplx_ld cos_pi(cplx_ld z);

// Gamma_b(Z) = Gamma(z1) e1 + Gamma(z2) e2.
Bicomplex bicomplex_gamma(const Bicomplex& z);
Bicomplex bicomplex_rgamma(const Bicomplex& z);

bool is_nonpositive_integer(cplx z);

}  // namespace bcbessel
