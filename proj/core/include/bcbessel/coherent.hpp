#pragma once

#include <vector>

#include "bcbessel/bicomplex.hpp"
#include "bcbessel/quadrature.hpp"

namespace bcbessel {

// The order V is hyperbolic with both components > -1; PreconditionError otherwise.
void check_coherent_order(Hyperbolic V);

// rho_l(n) = 4^n n! Gamma(nu_l+n+1) / Gamma(nu_l+1). Products in long double
// up to n = 120, log space above; overflows to inf in double around n = 100.
Hyperbolic rho(int n, Hyperbolic V);
Hyperbolic log_rho(int n, Hyperbolic V);
// n-step recurrence rho(n+1) = 4(n+1)(nu+n+1) rho(n) from rho(0) = 1.
Hyperbolic rho_recurrence(int n, Hyperbolic V);

// N_V(Y) = sum_n Gamma(nu+1) y^n / (4^n n! Gamma(nu+n+1)) per component,
// for complex Y as well (the overlap needs N_V(Z* Z')).
Bicomplex normalization(const Bicomplex& Y, Hyperbolic V);
Hyperbolic normalization(Hyperbolic Y, Hyperbolic V);

// 2^V (-Y)^{-V/2} Gamma(V+1) J_V(i sqrt(Y)) with (-y)^{-nu/2} = e^{-i pi nu/2} y^{-nu/2}.
// Equals the series form. Needs Y with positive components.
Bicomplex normalization_bessel_form(Hyperbolic Y, Hyperbolic V);
// The same expression without the 2^V factor; differs from the series by 2^{-V}.
Bicomplex normalization_printed_form(Hyperbolic Y, Hyperbolic V);

// sum_{n>N} y^n / rho(n) per component, bounded by the ratio test.
Hyperbolic truncation_tail(Hyperbolic Y, Hyperbolic V, int N);

struct TruncatedFockState {
    std::vector<Bicomplex> coefficients;  // c_n = Z^n / sqrt(rho(n) N_V(|Z|_h^2)), n = 0..N
    Hyperbolic norm_used;                 // N_V(|Z|_h^2)
    Hyperbolic tail;                      // dropped sum_{n>N} |z|^{2n}/rho(n), relative to norm_used
};

// TruncationError when the dropped tail is not below 1e-14 N_V componentwise.
TruncatedFockState coherent_state(const Bicomplex& Z, Hyperbolic V, int N = 200);

// Componentwise sum conj(a_n) b_n.
Bicomplex inner_product(const TruncatedFockState& a, const TruncatedFockState& b);
// Componentwise l2 distance between coefficient vectors.
Hyperbolic state_distance(const TruncatedFockState& a, const TruncatedFockState& b);

// N_V(Z* Z') / sqrt(N_V(|Z|^2) N_V(|Z'|^2)).
Bicomplex overlap(const Bicomplex& Z, const Bicomplex& Zp, Hyperbolic V);

// f(r) = sqrt(4(r+1)(nu+r+1)) per component.
Hyperbolic ladder_factor(int r, Hyperbolic V);
// prod_{r<n} f(r).
Hyperbolic ladder_product(int n, Hyperbolic V);

// Dense (N+1)x(N+1) truncations: A- has f(0..N-1) on the superdiagonal, A+ is its transpose.
struct LadderMatrices {
    int N = 0;
    std::vector<Bicomplex> lower;
    std::vector<Bicomplex> raise;
    const Bicomplex& lower_at(int i, int j) const { return lower[static_cast<std::size_t>(i) * (N + 1) + j]; }
    const Bicomplex& raise_at(int i, int j) const { return raise[static_cast<std::size_t>(i) * (N + 1) + j]; }
};
LadderMatrices ladder_matrices(Hyperbolic V, int N);

// Row-major product of two (N+1)x(N+1) matrices and matrix-vector product.
std::vector<Bicomplex> mat_mul(const std::vector<Bicomplex>& a, const std::vector<Bicomplex>& b, int N);
std::vector<Bicomplex> mat_vec(const std::vector<Bicomplex>& a, const std::vector<Bicomplex>& x, int N);

// A- A+ - A+ A- on the truncated space.
std::vector<Bicomplex> commutator(const LadderMatrices& m);

struct EigenCheck {
    Hyperbolic residual;          // |A- c - Z c|_2 per component
    Hyperbolic truncation_bound;  // |Z|_h times the l2 norm of (c_N, c_{N+1}, ...) of the untruncated state
    Hyperbolic rounding_floor;    // |Z|_h |c|_2 times the double epsilon
    Hyperbolic tail_bound;        // truncation_bound + rounding_floor
};
// In exact arithmetic the truncated residual is |Z c_N|, which truncation_bound dominates.
EigenCheck eigen_residual(const Bicomplex& Z, Hyperbolic V, int N);

// W_l = (1/(2 Gamma(nu+1))) (y/4)^{nu/2} K_nu(sqrt(y)). DomainError for y <= 0.
double weight_component(double y, double nu);
Hyperbolic weight_function(Hyperbolic y, Hyperbolic V);

struct MomentCheck {
    double numeric = 0.0;
    double closed_form = 0.0;
    double rel_err = 0.0;
};
// Panel length 20, tanh-sinh first panel, relative stopping at 1e-12.
QuadratureConfig moment_config();
// int_0^inf y^n W(y) dy against 4^n n! Gamma(nu+n+1)/Gamma(nu+1). n in [0, 8].
MomentCheck moment_check(int n, double nu, const QuadratureConfig& config = moment_config());

}  // namespace bcbessel
