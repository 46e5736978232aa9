#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bcbessel/coherent.hpp"

using namespace bcbessel;

TEST(Coherent, Rho) {
    const Hyperbolic V(0.5, 1.0);
    EXPECT_EQ(rho(0, V), Hyperbolic(1.0));
    // rho(1) = 4 (nu + 1)
    EXPECT_NEAR(rho(1, V).a1, 6.0, 1e-14);
    EXPECT_NEAR(rho(1, V).a2, 8.0, 1e-14);
    for (int n : {3, 30, 60}) {
        const Hyperbolic a = rho(n, V), b = rho_recurrence(n, V);
        EXPECT_NEAR(a.a1 / b.a1, 1.0, 1e-13) << n;
        EXPECT_NEAR(std::log(a.a2), log_rho(n, V).a2, 1e-12) << n;
    }
    EXPECT_TRUE(std::isinf(rho(200, V).a1));
    EXPECT_TRUE(std::isfinite(log_rho(200, V).a1));
    EXPECT_THROW(rho(-1, V), PreconditionError);
    EXPECT_THROW(rho(1, Hyperbolic(-1.0, 0.0)), PreconditionError);
}

TEST(Coherent, NormalizationForms) {
    // nu = -1/2: N(Y) = cosh(sqrt(Y)).
    EXPECT_NEAR(normalization(Hyperbolic(1.0), Hyperbolic(-0.5)).a1, 1.54308063481524377848, 1e-15);
    const Hyperbolic Y(1.0, 2.0), V(0.5, 1.5);
    const Hyperbolic s = normalization(Y, V);
    const Bicomplex b = normalization_bessel_form(Y, V);
    EXPECT_LT(max_abs(b - Bicomplex(s)), 1e-14);
    const Bicomplex p = normalization_printed_form(Y, V);
    EXPECT_NEAR(p.z1().real() * std::pow(2.0, V.a1), s.a1, 1e-14);
    EXPECT_THROW(normalization_bessel_form(Hyperbolic(0.0, 1.0), V), DomainError);
}

TEST(Coherent, StateIsNormalized) {
    const TruncatedFockState s = coherent_state(Bicomplex(cplx(3, 0), cplx(1, 2)), Hyperbolic(0.5, 1.0));
    EXPECT_EQ(s.coefficients.size(), 201u);
    const Bicomplex ip = inner_product(s, s);
    EXPECT_NEAR(ip.z1().real(), 1.0, 1e-12);
    EXPECT_NEAR(ip.z2().real(), 1.0, 1e-12);
    EXPECT_THROW(coherent_state(Bicomplex(40.0), Hyperbolic(0.0), 10), TruncationError);
}

TEST(Coherent, Overlap) {
    const Hyperbolic V(0.5, 1.0);
    const Bicomplex Z(cplx(1, 0.5), cplx(0.3, -2)), Zp(cplx(0.7, 0.1), cplx(1, 1));
    const Bicomplex numeric = inner_product(coherent_state(Z, V), coherent_state(Zp, V));
    EXPECT_LT(max_abs(overlap(Z, Zp, V) - numeric), 1e-13);
    EXPECT_LT(max_abs(overlap(Z, Z, V) - 1.0), 1e-14);
    EXPECT_LT(state_distance(coherent_state(Z, V), coherent_state(Z, V)).max(), 1e-300);
}

TEST(Coherent, LadderOperators) {
    const Hyperbolic V(0.5, 2.0);
    for (int n = 0; n < 40; ++n) {
        const Hyperbolic p = ladder_product(n, V), r = rho(n, V);
        EXPECT_NEAR(p.a1 * p.a1 / r.a1, 1.0, 1e-13);
        EXPECT_NEAR(p.a2 * p.a2 / r.a2, 1.0, 1e-13);
    }
    const int N = 6;
    const LadderMatrices m = ladder_matrices(V, N);
    EXPECT_EQ(m.lower_at(0, 1), Bicomplex(ladder_factor(0, V)));
    EXPECT_EQ(m.raise_at(1, 0), m.lower_at(0, 1));
    // [A-, A+] is diagonal with f(n)^2 - f(n-1)^2 = 8n + 4(nu+1) away from the truncation edge.
    const std::vector<Bicomplex> c = commutator(m);
    for (int n = 0; n < N; ++n) {
        const Bicomplex d = c[static_cast<std::size_t>(n) * (N + 1) + n];
        EXPECT_NEAR(d.z1().real(), 8.0 * n + 4.0 * (V.a1 + 1.0), 1e-12);
        EXPECT_NEAR(d.z2().real(), 8.0 * n + 4.0 * (V.a2 + 1.0), 1e-12);
    }
}

TEST(Coherent, EigenResidual) {
    for (const auto& [Z, N] : {std::pair{Bicomplex(cplx(0.5, 0.0), cplx(0.5, 0.2)), 150},
                               std::pair{Bicomplex(cplx(6.0, 0.0), cplx(3.0, 4.0)), 40}}) {
        const EigenCheck e = eigen_residual(Z, Hyperbolic(0.5, 1.0), N);
        EXPECT_TRUE(leq_h(e.residual, Hyperbolic(10.0) * e.tail_bound));
    }
    // Short state: the residual is |Z c_N|, just under the truncation bound.
    const EigenCheck e = eigen_residual(Bicomplex(cplx(6.0, 0.0), cplx(3.0, 4.0)), Hyperbolic(0.5, 1.0), 18);
    EXPECT_GT(e.truncation_bound.a1, 1e6 * e.rounding_floor.a1);
    EXPECT_LE(e.residual.a1, e.truncation_bound.a1);
    EXPECT_GT(e.residual.a1, 0.5 * e.truncation_bound.a1);
}

TEST(Coherent, Weight) {
    EXPECT_NEAR(weight_component(1.0, 0.5), 0.183939720585721161, 1e-15);
    for (double nu : {-0.5, 0.0, 2.0})
        for (double y : {1e-6, 0.1, 10.0, 500.0}) EXPECT_GT(weight_component(y, nu), 0.0);
    EXPECT_THROW(weight_component(0.0, 0.5), DomainError);
    const Hyperbolic w = weight_function(Hyperbolic(1.0, 2.0), Hyperbolic(0.5, 0.5));
    EXPECT_EQ(w.a1, weight_component(1.0, 0.5));
}

TEST(Coherent, Moments) {
    // int_0^inf W = 1 for every nu; n = 2 at nu = 1/2 gives 4^2 2! Gamma(7/2)/Gamma(3/2) = 120.
    EXPECT_NEAR(moment_check(0, 0.0).numeric, 1.0, 1e-10);
    const MomentCheck m = moment_check(2, 0.5);
    EXPECT_NEAR(m.closed_form, 120.0, 1e-12);
    EXPECT_LT(m.rel_err, 1e-9);
    EXPECT_THROW(moment_check(9, 0.5), PreconditionError);
}
