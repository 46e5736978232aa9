#include "bcbessel/asymptotic.hpp"

#include <cmath>
#include <numbers>

#include "bcbessel/gamma.hpp"

namespace bcbessel {

namespace {

void check_x(Hyperbolic x) {
    if (!(x.a1 > 0.0) || !(x.a2 > 0.0)) throw DomainError("asymptotic form needs a positive hyperbolic argument");
}

cplx pochhammer(cplx a, int k) {
    cplx p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + static_cast<double>(i);
    return p;
}

cplx term_component(cplx nu, double x, int k) {
    return pochhammer(-nu + 0.5, k) * complex_gamma(nu + static_cast<double>(k) + 0.5) /
           (std::tgamma(k + 1.0) * std::pow(x, k));
}

cplx prefactor_component(cplx nu, double x) {
    const cplx e = std::exp(cplx(1.0, -1.0) * x);
    const cplx c = complex_gamma(2.0 * nu + 1.0) * complex_rgamma(nu + 1.0) /
                   (std::exp(nu * std::log(2.0)) * complex_gamma(nu + 0.5) * complex_gamma(nu + 0.5));
    return e / std::sqrt(x) * c;
}

cplx remainder_component(cplx nu, double x, int n, const QuadratureConfig& quad) {
    const cplx a = nu - 0.5;
    auto spow = [](double base, cplx e) { return base == 0.0 ? cplx(0.0) : std::exp(e * std::log(base)); };
    // [0, x]: both endpoint factors may be singular.
    const cplx inner = tanh_sinh<cplx>(
        [&](double s, double ds, double to_x) { return spow(ds, a) * spow(to_x / x, a) * std::exp(-s); }, 0.0, x,
        1e-14);
    // [x, inf): 1 - s/x = (s/x - 1) e^{i pi}.
    const cplx phase = std::exp(cplx(0.0, std::numbers::pi) * a);
    QuadratureConfig q = quad;
    q.singular_origin = true;
    if (q.panel_length <= 0.0) q.panel_length = 4.0;
    const TransformResult outer = integrate_semi_infinite(
        [&](double u) { return Bicomplex(spow(x + u, a) * spow(u / x, a) * std::exp(-(x + u))); }, q);
    cplx partial = 0.0;
    for (int k = 0; k < n; ++k) partial += term_component(nu, x, k);
    return inner + phase * outer.value.z1() - partial;
}

}  // namespace

Bicomplex asymptotic_constant(const Bicomplex& V) {
    auto c = [](cplx nu) {
        return complex_gamma(2.0 * nu + 1.0) * complex_rgamma(nu + 1.0) /
               (std::exp(nu * std::log(2.0)) * complex_gamma(nu + 0.5) * complex_gamma(nu + 0.5));
    };
    return {c(V.z1()), c(V.z2())};
}

Bicomplex asymptotic_term(const Bicomplex& V, Hyperbolic x, int k) {
    check_x(x);
    return {term_component(V.z1(), x.a1, k), term_component(V.z2(), x.a2, k)};
}

SeriesResult asymptotic_j(const Bicomplex& V, Hyperbolic x, int n_terms) {
    check_x(x);
    if (n_terms < 1) throw PreconditionError("n_terms must be at least 1");
    const Bicomplex pre(prefactor_component(V.z1(), x.a1), prefactor_component(V.z2(), x.a2));
    Bicomplex sum;
    for (int k = 0; k < n_terms; ++k) sum += asymptotic_term(V, x, k);
    SeriesResult r;
    r.value = pre * sum;
    r.terms_used = n_terms;
    r.tail_estimate = abs_h(pre * asymptotic_term(V, x, n_terms));
    return r;
}

Bicomplex asymptotic_remainder(const Bicomplex& V, Hyperbolic x, int n, const QuadratureConfig& quad) {
    check_x(x);
    return {remainder_component(V.z1(), x.a1, n, quad), remainder_component(V.z2(), x.a2, n, quad)};
}

Hyperbolic asymptotic_remainder_bound(const Bicomplex& V, Hyperbolic x, int n) {
    return abs_h(asymptotic_term(V, x, n));
}

}  // namespace bcbessel
