#pragma once

#include <string_view>

#include "bcbessel/bicomplex.hpp"
#include "bcbessel/quadrature.hpp"

namespace bcbessel {

enum class IntegralForm { beta, cosine, double_beta, gamma_contour };

IntegralForm parse_integral_form(std::string_view name);
const char* to_string(IntegralForm form);

// Integral-representation value of J, evaluated componentwise by quadrature:
//   beta           1/Gamma(V) sum (-1)^s/(s!)^2 (Z/2)^{V+2s} int_0^1 t^s (1-t)^{V-1} dt
//   cosine         Z^V/(2^{V-1} sqrt(pi) Gamma(V+1/2)) sum (-1)^s/Gamma(2s+1) int_0^{pi/2} cos^{2V}t (Z sin t)^{2s} dt
//   double_beta    J_{V+delta}: 1/(Gamma(V)Gamma(delta)) (Z/2)^{V+delta}
//                  sum Z^{2s}/(4^s (s!)^2) int int u^{V-1}(1-u)^{delta+s} v^{delta-1}(v-1)^s du dv
//   gamma_contour  1/sqrt(pi) sum (-1)^s 2^V Z^{V+2s}/(Gamma(2V+2s+1) s!) int_0^inf e^{-t} t^{V+s-1/2} dt
// The outer sums use the same stopping rule as bessel_j. PreconditionError when
// the order components violate the form's inequality (Re nu_l > 0 for beta,
// Re nu_l > -1/2 for cosine and gamma_contour, Re nu_l > 0 and Re delta_l > 0
// for double_beta).
Bicomplex integral_representation(IntegralForm form, const Bicomplex& V, const Bicomplex& Z,
                                  const QuadratureConfig& quad = {}, const Bicomplex& delta = 1.0);

// |integral form - bessel_j|_h; the double form is compared with J_{V+delta}.
Hyperbolic integral_representation_check(IntegralForm form, const Bicomplex& V, const Bicomplex& Z,
                                         const QuadratureConfig& quad = {}, const Bicomplex& delta = 1.0);

}  // namespace bcbessel
