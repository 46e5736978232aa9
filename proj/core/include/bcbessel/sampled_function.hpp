#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcbessel/bicomplex.hpp"

namespace bcbessel {

// A function on (0, inf)^n with bicomplex values. Optionally carries a support
// cutoff (identically zero beyond it on every axis) and first partials, which
// are themselves SampledFunctions so that derivatives compose.
class SampledFunction {
public:
    using Evaluator = std::function<Bicomplex(std::span<const double>)>;
    using Partial = std::function<SampledFunction(int)>;

    SampledFunction() = default;
    SampledFunction(int dims, Evaluator f, std::optional<double> support = std::nullopt, Partial partial = {});

    int dims() const;
    std::optional<double> support_hint() const;
    bool has_analytic_derivative() const;
    bool numeric_derivative() const;

    Bicomplex operator()(std::span<const double> w) const;
    Bicomplex operator()(double w) const;

    // First partial along axis. Uses the analytic partial when present, else
    // fourth-order central differences with h = 1e-4 (1 + w) if enabled,
    // else PreconditionError.
    SampledFunction partial(int axis = 0) const;

    // Copy that falls back to finite differences for missing partials.
    SampledFunction with_numeric_derivative() const;

private:
    struct State;
    std::shared_ptr<const State> state_;
};

// a f + b g.
SampledFunction lin(const Bicomplex& a, const SampledFunction& f, const Bicomplex& b, const SampledFunction& g);

// c w_axis^p f. DomainError at w_axis <= 0 when Re p < 0 in some component.
SampledFunction mul_pow(const SampledFunction& f, int axis, const Bicomplex& c, const Bicomplex& p);

// N_s f = w^{s+1/2} d/dw (w^{-s-1/2} f) = f' - (s+1/2) f / w, applied along every axis in turn.
SampledFunction op_N(const Bicomplex& sigma, const SampledFunction& f);
// M_s f = w^{-s-1/2} d/dw (w^{s+1/2} f) = f' + (s+1/2) f / w, applied along every axis in turn.
SampledFunction op_M(const Bicomplex& sigma, const SampledFunction& f);

// Single-axis versions.
SampledFunction op_N_axis(const Bicomplex& sigma, const SampledFunction& f, int axis);
SampledFunction op_M_axis(const Bicomplex& sigma, const SampledFunction& f, int axis);

// sum_i c_i w^{p_i} exp(-a_i w^2), optionally cut off at support. Exact derivatives.
struct PolyGaussianTerm {
    Bicomplex coeff;
    Bicomplex power;
    double decay = 0.0;
};
SampledFunction poly_gaussian(std::vector<PolyGaussianTerm> terms, std::optional<double> support = std::nullopt);

// f(w1) g(w2) ... over n = factors.size() axes.
SampledFunction tensor_product(std::vector<SampledFunction> factors);

// Named builtins:
//   indicator          1 on (0, 1), 0 beyond (no analytic derivative)
//   gaussian-monomial  w^{V+1/2} exp(-w^2/2)
//   cutoff-polynomial  (1 - w^2)^4 on (0, 1), 0 beyond
//   poly-gaussian      w^4 exp(-w^2)
//   zero               0
// dims > 1 builds the tensor product of the 1-D builtin.
SampledFunction builtin_function(const std::string& name, const Bicomplex& V = -0.5, int dims = 1);
std::vector<std::string> builtin_names();

}  // namespace bcbessel
