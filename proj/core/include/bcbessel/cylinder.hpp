#pragma once

#include "bcbessel/bicomplex.hpp"

namespace bcbessel {

enum class JRoute { closed, series, series_quad, hankel };

struct ComplexJ {
    cplx value;
    int terms = 0;
    double error = 0.0;  // absolute error estimate (truncation plus rounding)
    JRoute route = JRoute::series;
};

// Complex-order Bessel function of the first kind on the principal branch
// (cut along the negative real axis, upper-side values on the cut).
//
// The ascending series is summed in extended precision with compensated
// summation; when cancellation makes that inaccurate the series is redone in
// quad precision, and for large |z| the Hankel expansion is also tried. The
// candidate with the smallest error estimate is returned. rel_tol is the
// target used to stop early once a route is good enough.
ComplexJ cylinder_j(cplx nu, cplx z, double rel_tol = 1e-15, int max_terms = 2000);

// Ascending series only, term by term with 1/Gamma at the poles set to zero.
// No recurrences or reflections; used to cross-check the negative-order path.
cplx cylinder_j_direct_series(cplx nu, cplx z, int terms);

}  // namespace bcbessel
