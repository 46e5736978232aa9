#pragma once

#include "bcbessel/bessel.hpp"
#include "bcbessel/quadrature.hpp"

namespace bcbessel {

// The large-argument expansion for Z = |Z|_h = x, reproduced as stated:
//   exp((1-i)x) / (2^V x^{1/2} Gamma(V+1)) * Gamma(2V+1)/Gamma(V+1/2)^2
//     * sum_{k<n} (-V+1/2)_k Gamma(V+k+1/2) / (k! x^k)
// tail_estimate is the hyperbolic norm of the first omitted term (with prefactor).
// This is not expected to agree with bessel_j.
SeriesResult asymptotic_j(const Bicomplex& V, Hyperbolic x, int n_terms);

// Gamma(2V+1) / (2^V Gamma(V+1) Gamma(V+1/2)^2); equals 1/pi at V = 0.
Bicomplex asymptotic_constant(const Bicomplex& V);

// (-V+1/2)_k Gamma(V+k+1/2) / (k! x^k), componentwise.
Bicomplex asymptotic_term(const Bicomplex& V, Hyperbolic x, int k);

// R_n = int_0^inf s^{V-1/2} (1 - s/x)^{V-1/2} e^{-s} ds - sum_{k<n} asymptotic_term(k),
// the bracketed remainder. For s > x the power is taken on the principal branch
// (1 - s/x = (s/x - 1) e^{i pi}), which is real when V - 1/2 is an integer.
Bicomplex asymptotic_remainder(const Bicomplex& V, Hyperbolic x, int n, const QuadratureConfig& quad = {});

// |(-V+1/2)_n Gamma(V+n+1/2) / (n! x^n)|_h.
Hyperbolic asymptotic_remainder_bound(const Bicomplex& V, Hyperbolic x, int n);

}  // namespace bcbessel
