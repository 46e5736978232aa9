#include "bcbessel/integral_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bcbessel/bessel.hpp"
#include "bcbessel/gamma.hpp"

namespace bcbessel {

namespace {

constexpr double pi = std::numbers::pi;

struct OuterSum {
    cplx sum{};
    int small_run = 0;
    int terms = 0;
    int floor_terms;

    explicit OuterSum(cplx z) : floor_terms(std::max(15, static_cast<int>(std::ceil(std::abs(z))))) {}

    // Returns true once the truncation rule is met.
    bool add(cplx term) {
        sum += term;
        ++terms;
        small_run = (std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) ? small_run + 1 : 0;
        return terms >= floor_terms && small_run >= 3;
    }
};

constexpr int max_outer_terms = 400;

cplx cpow_real(double base, cplx e) { return std::exp(e * std::log(base)); }

cplx beta_form(cplx nu, cplx z, double tol) {
    if (!(nu.real() > 0.0)) throw PreconditionError("beta form needs Re nu_l > 0");
    const cplx h = z / 2.0;
    const cplx lead = cpow(h, nu) * complex_rgamma(nu);
    OuterSum acc(z);
    cplx hp = 1.0;
    double fact = 1.0;
    for (int s = 0; s < max_outer_terms; ++s) {
        if (s > 0) {
            fact *= s;
            hp *= h * h;
        }
        const cplx I = tanh_sinh<cplx>(
            [&](double t, double, double one_minus_t) {
                return std::pow(t, s) * cpow_real(one_minus_t, nu - 1.0);
            },
            0.0, 1.0, tol);
        const cplx term = ((s % 2) ? -1.0 : 1.0) / (fact * fact) * hp * I;
        if (acc.add(term)) break;
    }
    return lead * acc.sum;
}

cplx cosine_form(cplx nu, cplx z, double tol) {
    if (!(nu.real() > -0.5)) throw PreconditionError("cosine form needs Re nu_l > -1/2");
    const cplx lead = cpow(z, nu) / (cpow_real(2.0, nu - 1.0) * std::sqrt(pi)) * complex_rgamma(nu + 0.5);
    OuterSum acc(z);
    for (int s = 0; s < max_outer_terms; ++s) {
        const double g = std::tgamma(2.0 * s + 1.0);
        const cplx I = tanh_sinh<cplx>(
            [&](double t, double, double to_end) {
                const double c = std::sin(to_end);  // cos t near pi/2 without cancellation
                const cplx zs = z * std::sin(t);
                return cpow_real(c, 2.0 * nu) * std::pow(zs, 2 * s);
            },
            0.0, pi / 2.0, tol);
        const cplx term = ((s % 2) ? -1.0 : 1.0) / g * I;
        if (acc.add(term)) break;
    }
    return lead * acc.sum;
}

cplx double_form(cplx nu, cplx delta, cplx z, double tol) {
    if (!(nu.real() > 0.0) || !(delta.real() > 0.0))
        throw PreconditionError("double form needs Re nu_l > 0 and Re delta_l > 0");
    const cplx h = z / 2.0;
    const cplx lead = cpow(h, nu + delta) * complex_rgamma(nu) * complex_rgamma(delta);
    OuterSum acc(z);
    cplx zp = 1.0;
    double fact = 1.0, four = 1.0;
    for (int s = 0; s < max_outer_terms; ++s) {
        if (s > 0) {
            fact *= s;
            four *= 4.0;
            zp *= z * z;
        }
        // Tensor-product tanh-sinh rule; the integrand factorises so the 2-D
        // sum is evaluated as the product of the two 1-D sums.
        const cplx Iu = tanh_sinh<cplx>(
            [&](double, double du, double one_minus_u) {
                return cpow_real(du, nu - 1.0) * cpow_real(one_minus_u, delta + static_cast<double>(s));
            },
            0.0, 1.0, tol);
        const cplx Iv = tanh_sinh<cplx>(
            [&](double, double dv, double one_minus_v) {
                return cpow_real(dv, delta - 1.0) * std::pow(-one_minus_v, s);
            },
            0.0, 1.0, tol);
        const cplx term = zp / (four * fact * fact) * Iu * Iv;
        if (acc.add(term)) break;
    }
    return lead * acc.sum;
}

cplx gamma_contour_form(cplx nu, cplx z, const QuadratureConfig& quad) {
    if (!(nu.real() > -0.5)) throw PreconditionError("gamma-contour form needs Re nu_l > -1/2");
    OuterSum acc(z);
    QuadratureConfig q = quad;
    q.singular_origin = true;
    if (q.panel_length <= 0.0) q.panel_length = 2.0;
    double fact = 1.0;
    for (int s = 0; s < max_outer_terms; ++s) {
        if (s > 0) fact *= s;
        const cplx a = nu + static_cast<double>(s) - 0.5;
        const TransformResult I = integrate_semi_infinite(
            [&](double t) { return Bicomplex(std::exp(-t) * cpow_real(t, a)); }, q);
        const cplx coeff = cpow_real(2.0, nu) * cpow(z, nu + 2.0 * s) * complex_rgamma(2.0 * nu + 2.0 * s + 1.0) / fact;
        const cplx term = ((s % 2) ? -1.0 : 1.0) * coeff * I.value.z1();
        if (acc.add(term)) break;
    }
    return acc.sum / std::sqrt(pi);
}

cplx component(IntegralForm form, cplx nu, cplx z, cplx delta, const QuadratureConfig& quad) {
    const double tol = std::min(quad.rel_tol, 1e-13);
    switch (form) {
    case IntegralForm::beta: return beta_form(nu, z, tol);
    case IntegralForm::cosine: return cosine_form(nu, z, tol);
    case IntegralForm::double_beta: return double_form(nu, delta, z, tol);
    case IntegralForm::gamma_contour: return gamma_contour_form(nu, z, quad);
    }
    return {};
}

}  // namespace

IntegralForm parse_integral_form(std::string_view name) {
    if (name == "beta") return IntegralForm::beta;
    if (name == "cosine") return IntegralForm::cosine;
    if (name == "double") return IntegralForm::double_beta;
    if (name == "gamma-contour") return IntegralForm::gamma_contour;
    throw PreconditionError("unknown integral form: " + std::string(name));
}

const char* to_string(IntegralForm form) {
    switch (form) {
    case IntegralForm::beta: return "beta";
    case IntegralForm::cosine: return "cosine";
    case IntegralForm::double_beta: return "double";
    case IntegralForm::gamma_contour: return "gamma-contour";
    }
    return "?";
}

Bicomplex integral_representation(IntegralForm form, const Bicomplex& V, const Bicomplex& Z,
                                  const QuadratureConfig& quad, const Bicomplex& delta) {
    quad.validate();
    return {component(form, V.z1(), Z.z1(), delta.z1(), quad), component(form, V.z2(), Z.z2(), delta.z2(), quad)};
}

Hyperbolic integral_representation_check(IntegralForm form, const Bicomplex& V, const Bicomplex& Z,
                                         const QuadratureConfig& quad, const Bicomplex& delta) {
    const Bicomplex value = integral_representation(form, V, Z, quad, delta);
    const Bicomplex order = form == IntegralForm::double_beta ? V + delta : V;
    return abs_h(value - bessel_j(order, Z).value);
}

}  // namespace bcbessel
