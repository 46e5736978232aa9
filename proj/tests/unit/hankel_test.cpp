#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bcbessel/hankel.hpp"

using namespace bcbessel;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Hankel, Kernel) {
    EXPECT_NEAR(hankel_kernel(cplx(-0.5), cplx(1.2)).real(), std::sqrt(2.0 / pi) * std::cos(1.2), 1e-15);
    EXPECT_NEAR(hankel_kernel(cplx(0.5), cplx(1.2)).real(), std::sqrt(2.0 / pi) * std::sin(1.2), 1e-15);
    EXPECT_EQ(hankel_kernel(cplx(1.0), cplx(0.0)), cplx(0.0));
    EXPECT_THROW(hankel_kernel(cplx(-1.0), cplx(0.0)), DomainError);
}

TEST(Hankel, IndicatorClosedForm) {
    const SampledFunction ind = builtin_function("indicator");
    for (const Bicomplex& Z : {Bicomplex(0.7), Bicomplex(cplx(2.0, 0.3), cplx(5.0, -0.2))}) {
        const Bicomplex eta = hankel_forward(-0.5, ind, {Z}).value;
        EXPECT_LT(max_abs(eta - std::sqrt(2.0 / pi) * sin(Z) / Z), 1e-10);
    }
}

TEST(Hankel, GaussianMonomialIsSelfReciprocal) {
    for (double nu : {-0.5, 0.0, 0.5, 2.0}) {
        const SampledFunction g = builtin_function("gaussian-monomial", nu);
        const double z = 1.7;
        const Bicomplex eta = hankel_forward(nu, g, {Bicomplex(z)}).value;
        EXPECT_LT(max_abs(eta - Bicomplex(std::pow(z, nu + 0.5) * std::exp(-z * z / 2.0))), 1e-9) << nu;
    }
}

TEST(Hankel, TwoDimensionalFactorises) {
    const SampledFunction f1 = builtin_function("gaussian-monomial", 0.0);
    const SampledFunction f2 = builtin_function("gaussian-monomial", 0.0, 2);
    const Bicomplex a = hankel_forward(0.0, f2, {Bicomplex(0.8), Bicomplex(1.4)}).value;
    const Bicomplex b = hankel_forward(0.0, f1, {Bicomplex(0.8)}).value * hankel_forward(0.0, f1, {Bicomplex(1.4)}).value;
    EXPECT_LT(max_abs(a - b), 1e-10);
}

TEST(Hankel, RoundTrip) {
    const Bicomplex V(0.0, 1.0);
    const SampledFunction f = poly_gaussian({{1.0, Bicomplex(0.5, 1.5), 0.5}});
    const SampledFunction F = transform_as_function(V, f);
    for (double w : {0.0, 0.8, 2.0})
        EXPECT_LT(max_abs(hankel_inverse(V, F, {w}).value - f(w)), 1e-6) << w;
}

TEST(Hankel, OperationalIdentities) {
    const SampledFunction f = builtin_function("poly-gaussian");
    for (auto which : {OperationalIdentity::i, OperationalIdentity::ii, OperationalIdentity::iii}) {
        const OperationalSides s = operational_identity(which, 1.0, 1.0, f, {Bicomplex(cplx(1.2), cplx(0.6))});
        EXPECT_LT(s.residual.max(), 1e-8);
        EXPECT_GT(max_abs(s.lhs), 1e-3);
    }
    EXPECT_EQ(parse_operational_identity("iii"), OperationalIdentity::iii);
    EXPECT_THROW(parse_operational_identity("iv"), PreconditionError);
}

TEST(Hankel, Errors) {
    const SampledFunction f = builtin_function("poly-gaussian");
    EXPECT_THROW(hankel_forward(0.0, f, {Bicomplex(cplx(1.0, 2.0))}, {}, 1.0), StripError);
    EXPECT_THROW(hankel_forward(0.0, f, {Bicomplex(-1.0)}, {}, 1.0), StripError);
    EXPECT_THROW(hankel_forward(0.0, f, {Bicomplex(1.0), Bicomplex(1.0)}), PreconditionError);
    EXPECT_THROW(hankel_inverse(0.0, f, {-0.5}), DomainError);
    EXPECT_THROW(hankel_forward(0.0, builtin_function("indicator", 0.0, 4), {1.0, 1.0, 1.0, 1.0}), PreconditionError);
}
