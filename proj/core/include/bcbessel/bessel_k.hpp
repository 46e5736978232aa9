#pragma once

namespace bcbessel {

// Modified Bessel function K_nu(x) for real order and x > 0.
// Temme's series for x <= 2, Steed's continued fraction above, then upward
// recurrence in the order. DomainError when x <= 0.
double bessel_k_real(double nu, double x);

}  // namespace bcbessel
