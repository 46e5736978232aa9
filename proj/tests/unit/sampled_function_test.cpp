#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "bcbessel/sampled_function.hpp"

using namespace bcbessel;

TEST(SampledFunction, Builtins) {
    const SampledFunction ind = builtin_function("indicator");
    EXPECT_EQ(ind(0.5), Bicomplex(1.0));
    EXPECT_EQ(ind(1.5), Bicomplex(0.0));
    EXPECT_EQ(ind.support_hint(), 1.0);
    EXPECT_FALSE(ind.has_analytic_derivative());
    EXPECT_THROW(ind.partial(), PreconditionError);

    const SampledFunction g = builtin_function("gaussian-monomial", 0.5);
    EXPECT_NEAR(g(2.0).z1().real(), 2.0 * std::exp(-2.0), 1e-15);
    EXPECT_NEAR(builtin_function("cutoff-polynomial")(0.5).z1().real(), std::pow(0.75, 4), 1e-15);
    EXPECT_NEAR(builtin_function("poly-gaussian")(1.0).z1().real(), std::exp(-1.0), 1e-15);
    EXPECT_EQ(builtin_function("zero")(3.0), Bicomplex(0.0));
    EXPECT_THROW(builtin_function("sinc"), PreconditionError);
    EXPECT_EQ(builtin_names().size(), 5u);
}

TEST(SampledFunction, AnalyticDerivativeMatchesFiniteDifference) {
    const SampledFunction f = poly_gaussian({{2.0, 3.0, 0.7}, {Bicomplex(cplx(0, 1), cplx(1)), 1.5, 0.2}});
    const SampledFunction fd = SampledFunction(1, [f](std::span<const double> w) { return f(w); }).with_numeric_derivative();
    for (double w : {0.3, 1.0, 2.5})
        EXPECT_LT(max_abs(f.partial()(w) - fd.partial()(w)), 1e-9) << w;
}

TEST(SampledFunction, Operators) {
    // N_s w^{s+1/2} = 0 and M_s w^{-s-1/2} = 0.
    const Bicomplex s(cplx(0.3), cplx(1.1));
    const SampledFunction up = poly_gaussian({{1.0, s + 0.5, 0.0}});
    const SampledFunction down = poly_gaussian({{1.0, -s - 0.5, 0.0}});
    for (double w : {0.4, 1.3}) {
        EXPECT_LT(max_abs(op_N(s, up)(w)), 1e-14);
        EXPECT_LT(max_abs(op_M(s, down)(w)), 1e-14);
    }
    // M N f = f'' - (4 s^2 - 1)/(4 w^2) f on f = w^3.
    const SampledFunction cube = poly_gaussian({{1.0, 3.0, 0.0}});
    const double w = 0.7;
    const Bicomplex mn = op_M(s, op_N(s, cube))(w);
    const Bicomplex want = 6.0 * w - (4.0 * s * s - 1.0) / (4.0 * w * w) * std::pow(w, 3);
    EXPECT_LT(max_abs(mn - want), 1e-13);
}

TEST(SampledFunction, Combinators) {
    const SampledFunction a = builtin_function("poly-gaussian"), b = builtin_function("cutoff-polynomial");
    const SampledFunction c = lin(2.0, a, -1.0, b);
    EXPECT_LT(max_abs(c(0.5) - (2.0 * a(0.5) - b(0.5))), 1e-15);
    const SampledFunction m = mul_pow(a, 0, 3.0, -1.0);
    EXPECT_LT(max_abs(m(2.0) - 1.5 * a(2.0)), 1e-15);
    EXPECT_THROW(m(std::array{0.0}), DomainError);
    EXPECT_THROW(lin(1.0, a, 1.0, builtin_function("poly-gaussian", 0.0, 2)), PreconditionError);
}

TEST(SampledFunction, TensorProduct) {
    const SampledFunction f = builtin_function("poly-gaussian", 0.0, 2);
    EXPECT_EQ(f.dims(), 2);
    const std::array<double, 2> w{0.5, 1.5};
    const SampledFunction one = builtin_function("poly-gaussian");
    EXPECT_LT(max_abs(f(w) - one(0.5) * one(1.5)), 1e-15);
    EXPECT_LT(max_abs(f.partial(1)(w) - one(0.5) * one.partial()(1.5)), 1e-15);
    EXPECT_THROW(f.partial(2), PreconditionError);
}
