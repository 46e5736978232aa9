#include "bcbessel/bessel.hpp"

#include <cmath>
#include <numbers>

#include "bcbessel/cylinder.hpp"

namespace bcbessel {

namespace {

bool integer_valued(cplx v) {
    return v.imag() == 0.0 && std::floor(v.real()) == v.real();
}

void check_component(cplx nu, cplx z) {
    if (std::abs(z) > series_domain)
        throw DomainError("|z_l| exceeds the series accuracy domain; use the asymptotic form");
    if (z.imag() == 0.0 && z.real() < 0.0 && !integer_valued(nu))
        throw BranchError("(Z/2)^V with a negative real component and non-integer order");
}

Bicomplex J(const Bicomplex& V, const Bicomplex& Z) { return bessel_j(V, Z).value; }

}  // namespace

SeriesResult bessel_j(const Bicomplex& V, const Bicomplex& Z, double tol, int max_terms) {
    if (!(tol > 0.0)) throw PreconditionError("tol must be positive");
    check_component(V.z1(), Z.z1());
    check_component(V.z2(), Z.z2());
    const ComplexJ a = cylinder_j(V.z1(), Z.z1(), tol, max_terms);
    const ComplexJ b = cylinder_j(V.z2(), Z.z2(), tol, max_terms);
    return {Bicomplex(a.value, b.value), std::max(a.terms, b.terms), Hyperbolic(a.error, b.error)};
}

SeriesResult bessel_j_negative_integer(const Bicomplex& L, const Bicomplex& Z, double tol) {
    for (int l = 0; l < 2; ++l) {
        const cplx c = L[l];
        if (!integer_valued(c) || c.real() < 0.0)
            throw NonIntegerError("order components must be nonnegative integers");
    }
    SeriesResult r = bessel_j(L, Z, tol);
    const auto sign = [](cplx c) { return (static_cast<long long>(c.real()) % 2) ? -1.0 : 1.0; };
    r.value = Bicomplex(sign(L.z1()) * r.value.z1(), sign(L.z2()) * r.value.z2());
    return r;
}

Bicomplex bessel_j_direct_series(const Bicomplex& V, const Bicomplex& Z, int terms) {
    return {cylinder_j_direct_series(V.z1(), Z.z1(), terms), cylinder_j_direct_series(V.z2(), Z.z2(), terms)};
}

RecurrenceResiduals recurrence_residuals(const Bicomplex& V, const Bicomplex& Z, int m, int n) {
    const Bicomplex j0 = J(V, Z);
    const Bicomplex j1 = J(V + 1.0, Z);
    const Bicomplex j2 = J(V + 2.0, Z);
    const Bicomplex j3 = J(V + 3.0, Z);
    const Bicomplex j4 = J(V + 4.0, Z);
    RecurrenceResiduals r;
    r.first = abs_h(Z * j0 - (2.0 * (V + 1.0) * j1 - Z * j2));
    const Bicomplex Z2 = Z * Z;
    r.second = abs_h(Z2 * j0 - (4.0 * (V + 1.0) * (V + 2.0) * j2 - 4.0 * Z * (V + 2.0) * j3 + Z2 * j4));
    const Bicomplex M{cplx(m), cplx(n)};
    const Bicomplex lhs = J(V + M, Z) + J(V + M.tilde(), Z);
    const Bicomplex rhs = J(V + static_cast<double>(m), Z) + J(V + static_cast<double>(n), Z);
    r.third = abs_h(lhs - rhs);
    return r;
}

Hyperbolic recurrence_ii_constant_coefficient_residual(const Bicomplex& V, const Bicomplex& Z) {
    const Bicomplex Z2 = Z * Z;
    return abs_h(Z2 * J(V, Z) - (4.0 * J(V + 2.0, Z) - 4.0 * Z * (V + 2.0) * J(V + 3.0, Z) + Z2 * J(V + 4.0, Z)));
}

DerivativeForms derivative_forms(const Bicomplex& V, const Bicomplex& Z) {
    if (!Z.is_invertible()) throw ZeroDivisorError("derivative needs an invertible argument");
    const Bicomplex jv = J(V, Z);
    const Bicomplex ratio = V / Z;
    DerivativeForms d;
    d.lowered = J(V - 1.0, Z) - ratio * jv;
    d.raised = ratio * jv - J(V + 1.0, Z);
    d.residual = abs_h(d.lowered - d.raised);
    return d;
}

Bicomplex bessel_j_derivative(const Bicomplex& V, const Bicomplex& Z) {
    if (!Z.is_invertible()) throw ZeroDivisorError("derivative needs an invertible argument");
    return J(V - 1.0, Z) - (V / Z) * J(V, Z);
}

Bicomplex bessel_j_second_derivative(const Bicomplex& V, const Bicomplex& Z) {
    if (!Z.is_invertible()) throw ZeroDivisorError("derivative needs an invertible argument");
    const Bicomplex jv = J(V, Z);
    const Bicomplex jm1 = J(V - 1.0, Z);
    const Bicomplex jm2 = J(V - 2.0, Z);
    const Bicomplex inv = 1.0 / Z;
    const Bicomplex dv = jm1 - V * inv * jv;
    const Bicomplex dvm1 = jm2 - (V - 1.0) * inv * jm1;
    return dvm1 - V * inv * dv + V * inv * inv * jv;
}

Hyperbolic ode_residual(const Bicomplex& V, const Bicomplex& Z) {
    const Bicomplex jv = J(V, Z);
    const Bicomplex d1 = bessel_j_derivative(V, Z);
    const Bicomplex d2 = bessel_j_second_derivative(V, Z);
    return abs_h(Z * Z * d2 + Z * d1 + (Z * Z - V * V) * jv);
}

Bicomplex generating_function(const Bicomplex& Z, const Bicomplex& W) {
    if (!W.is_invertible()) throw ZeroDivisorError("generating function needs an invertible W");
    return exp(Z / 2.0 * (W - 1.0 / W));
}

Bicomplex laurent_coefficient(int n, const Bicomplex& Z, int contour_samples) {
    if (contour_samples < 64) throw PreconditionError("contour_samples must be at least 64");
    const double step = 2.0 * std::numbers::pi / contour_samples;
    Bicomplex sum;
    for (int k = 0; k < contour_samples; ++k) {
        const double theta = k * step;
        const Bicomplex w(std::polar(1.0, theta));
        sum += generating_function(Z, w) * Bicomplex(std::polar(1.0, -n * theta));
    }
    return sum / static_cast<double>(contour_samples);
}

Hyperbolic generating_function_truncation_residual(const Bicomplex& Z, const Bicomplex& W, int N) {
    Bicomplex sum;
    for (int n = -N; n <= N; ++n) sum += J(Bicomplex(static_cast<double>(n)), Z) * pow(W, n);
    return abs_h(sum - generating_function(Z, W));
}

namespace {

// g1 + j g2 from idempotent components.
std::pair<cplx, cplx> canonical(const Bicomplex& x) { return {x.lambda1(), x.lambda2()}; }

template <class F>
CauchyRiemann cauchy_riemann(F f, const Bicomplex& at, double h) {
    const cplx a1 = at.lambda1(), a2 = at.lambda2();
    auto eval = [&](cplx b1, cplx b2) { return canonical(f(Bicomplex::from_canonical(b1, b2))); };
    const auto p1 = eval(a1 + h, a2), m1 = eval(a1 - h, a2);
    const auto p2 = eval(a1, a2 + h), m2 = eval(a1, a2 - h);
    const cplx dg1_da1 = (p1.first - m1.first) / (2.0 * h);
    const cplx dg2_da1 = (p1.second - m1.second) / (2.0 * h);
    const cplx dg1_da2 = (p2.first - m2.first) / (2.0 * h);
    const cplx dg2_da2 = (p2.second - m2.second) / (2.0 * h);
    return {std::abs(dg1_da1 - dg2_da2), std::abs(dg1_da2 + dg2_da1)};
}

}  // namespace

CauchyRiemann holomorphy_residual_order(const Bicomplex& V, const Bicomplex& Z, double h) {
    if (!Z.is_invertible()) throw DomainError("holomorphy residual needs Z outside the zero divisors");
    return cauchy_riemann([&](const Bicomplex& v) { return J(v, Z); }, V, h);
}

CauchyRiemann holomorphy_residual_argument(const Bicomplex& V, const Bicomplex& Z, double h) {
    if (!Z.is_invertible()) throw DomainError("holomorphy residual needs Z outside the zero divisors");
    return cauchy_riemann([&](const Bicomplex& z) { return J(V, z); }, Z, h);
}

}  // namespace bcbessel
