#pragma once

#include <limits>
#include <string_view>
#include <vector>

#include "bcbessel/quadrature.hpp"
#include "bcbessel/sampled_function.hpp"

namespace bcbessel {

// sqrt(x) J_nu(x) on the principal branch; exact trigonometric forms at nu = -1/2 and 1/2.
// DomainError at x = 0 when Re nu < -1/2 (or Re nu = -1/2 with nu != -1/2).
cplx hankel_kernel(cplx nu, cplx x);
Bicomplex hankel_kernel(const Bicomplex& V, const Bicomplex& X);

// StripError unless every component z satisfies |Im z| < strip and z is not on (-inf, 0].
void check_strip(const Bicomplex& Z, double strip);

// eta(Z) = int_{(0,inf)^n} f(w) prod_k sqrt(w_k Z_k) J_V(w_k Z_k) dw by nested panel
// quadrature, n = f.dims() = Z.size() <= 3. Panel length on axis k defaults to
// pi / max(1, max_l |Re z_lk|).
TransformResult hankel_forward(const Bicomplex& V, const SampledFunction& f, const std::vector<Bicomplex>& Z,
                               const QuadratureConfig& config = {},
                               double strip = std::numeric_limits<double>::infinity());

// Same kernel evaluated at real points w >= 0 (the transform is self-inverse).
// At w = 0 the kernel takes its limit; DomainError where that limit is infinite.
TransformResult hankel_inverse(const Bicomplex& V, const SampledFunction& eta, const std::vector<double>& w,
                               const QuadratureConfig& config = {});

// H_V f as a SampledFunction on real positive points; each evaluation runs a
// full transform. Throws the transform's errors from the evaluator.
SampledFunction transform_as_function(const Bicomplex& V, const SampledFunction& f, const QuadratureConfig& config = {});

enum class OperationalIdentity { i, ii, iii };
OperationalIdentity parse_operational_identity(std::string_view name);

struct OperationalSides {
    Bicomplex lhs;
    Bicomplex rhs;
    Hyperbolic residual;
};

// With m = V + sigma and n = f.dims():
//   (i)   H_{m+1}(N_m f)   against (-1)^n [Z] H_m f
//   (ii)  H_m(M_m f)       against [Z] H_{m+1} f
//   (iii) H_m(M_m N_m f)   against (-1)^n [Z]^2 H_m f
// [Z] is the product of the coordinates. f needs derivatives.
OperationalSides operational_identity(OperationalIdentity which, const Bicomplex& V, const Bicomplex& sigma,
                                      const SampledFunction& f, const std::vector<Bicomplex>& Z,
                                      const QuadratureConfig& config = {});
Hyperbolic operational_identity_residual(OperationalIdentity which, const Bicomplex& V, const Bicomplex& sigma,
                                         const SampledFunction& f, const std::vector<Bicomplex>& Z,
                                         const QuadratureConfig& config = {});

}  // namespace bcbessel
