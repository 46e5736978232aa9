#pragma once

#include "bcbessel/bicomplex.hpp"

namespace bcbessel {

struct SeriesResult {
    Bicomplex value;
    int terms_used = 0;
    Hyperbolic tail_estimate;  // absolute, per component
};

inline constexpr double default_tol = 1e-15;
inline constexpr double series_domain = 60.0;

// J_V(Z) = J_{nu1}(z1) e1 + J_{nu2}(z2) e2.
// DomainError if some |z_l| > 60; BranchError for a negative real component
// of Z with a non-integer order component.
SeriesResult bessel_j(const Bicomplex& V, const Bicomplex& Z, double tol = default_tol, int max_terms = 2000);

// J_{-L}(Z) = (-1)^{l1} J_{l1}(z1) e1 + (-1)^{l2} J_{l2}(z2) e2 for nonnegative integers l1, l2.
SeriesResult bessel_j_negative_integer(const Bicomplex& L, const Bicomplex& Z, double tol = default_tol);

// Term-by-term series at order V with vanishing reciprocal-gamma terms at poles.
Bicomplex bessel_j_direct_series(const Bicomplex& V, const Bicomplex& Z, int terms);

struct RecurrenceResiduals {
    Hyperbolic first;
    Hyperbolic second;
    Hyperbolic third;
};

// (i)   Z J_V = 2(V+1) J_{V+1} - Z J_{V+2}
// (ii)  Z^2 J_V = 4(V+1)(V+2) J_{V+2} - 4Z(V+2) J_{V+3} + Z^2 J_{V+4}
// (iii) J_{V+M} + J_{V+M~} = J_{V+m} + J_{V+n},  M = m e1 + n e2, M~ = n e1 + m e2
RecurrenceResiduals recurrence_residuals(const Bicomplex& V, const Bicomplex& Z, int m = 1, int n = 2);

// Residual of (ii) with the coefficient of J_{V+2} taken as the constant 4.
Hyperbolic recurrence_ii_constant_coefficient_residual(const Bicomplex& V, const Bicomplex& Z);

// J'_V(Z) = J_{V-1}(Z) - (V/Z) J_V(Z). ZeroDivisorError when Z is not invertible.
Bicomplex bessel_j_derivative(const Bicomplex& V, const Bicomplex& Z);

struct DerivativeForms {
    Bicomplex lowered;   // J_{V-1} - (V/Z) J_V
    Bicomplex raised;    // (V/Z) J_V - J_{V+1}
    Hyperbolic residual; // |lowered - raised|_h
};
DerivativeForms derivative_forms(const Bicomplex& V, const Bicomplex& Z);

// Second derivative from differentiating the lowering relation once more.
Bicomplex bessel_j_second_derivative(const Bicomplex& V, const Bicomplex& Z);

// |Z^2 J'' + Z J' + (Z^2 - V^2) J|_h.
Hyperbolic ode_residual(const Bicomplex& V, const Bicomplex& Z);

// exp(Z/2 (W - 1/W)). ZeroDivisorError for non-invertible W.
Bicomplex generating_function(const Bicomplex& Z, const Bicomplex& W);

// Trapezoid rule for (1/2 pi i) \oint W^{-n-1} G(Z, W) dW on the unit circle.
Bicomplex laurent_coefficient(int n, const Bicomplex& Z, int contour_samples = 128);

// |sum_{n=-N}^{N} J_n(Z) W^n - G(Z, W)|_h.
Hyperbolic generating_function_truncation_residual(const Bicomplex& Z, const Bicomplex& W, int N = 25);

struct CauchyRiemann {
    double first = 0.0;   // |dg1/da1 - dg2/da2|
    double second = 0.0;  // |dg1/da2 + dg2/da1|
};

// Central-difference Cauchy-Riemann residuals of V -> J_V(Z) with V = a1 + j a2
// and J = g1 + j g2. DomainError when Z is a zero divisor or zero.
CauchyRiemann holomorphy_residual_order(const Bicomplex& V, const Bicomplex& Z, double h = 1e-5);
// Same construction for Z -> J_V(Z) with Z = x1 + j x2.
CauchyRiemann holomorphy_residual_argument(const Bicomplex& V, const Bicomplex& Z, double h = 1e-5);

}  // namespace bcbessel
