#include "bcbessel/sampled_function.hpp"

#include <cmath>

#include "bcbessel/errors.hpp"

namespace bcbessel {

struct SampledFunction::State {
    int dims = 1;
    Evaluator eval;
    std::optional<double> support;
    Partial partial;
    bool numeric = false;
};

SampledFunction::SampledFunction(int dims, Evaluator f, std::optional<double> support, Partial partial) {
    if (dims < 1) throw PreconditionError("SampledFunction needs at least one dimension");
    auto s = std::make_shared<State>();
    s->dims = dims;
    s->eval = std::move(f);
    s->support = support;
    s->partial = std::move(partial);
    state_ = std::move(s);
}

int SampledFunction::dims() const { return state_ ? state_->dims : 0; }
std::optional<double> SampledFunction::support_hint() const { return state_ ? state_->support : std::nullopt; }
bool SampledFunction::has_analytic_derivative() const { return state_ && static_cast<bool>(state_->partial); }
bool SampledFunction::numeric_derivative() const { return state_ && state_->numeric; }

Bicomplex SampledFunction::operator()(std::span<const double> w) const {
    if (!state_) throw PreconditionError("empty SampledFunction");
    if (state_->support)
        for (double x : w)
            if (x >= *state_->support) return {};
    return state_->eval(w);
}

Bicomplex SampledFunction::operator()(double w) const { return (*this)(std::span<const double>(&w, 1)); }

SampledFunction SampledFunction::with_numeric_derivative() const {
    if (!state_) throw PreconditionError("empty SampledFunction");
    auto s = std::make_shared<State>(*state_);
    s->numeric = true;
    SampledFunction out;
    out.state_ = std::move(s);
    return out;
}

SampledFunction SampledFunction::partial(int axis) const {
    if (!state_) throw PreconditionError("empty SampledFunction");
    if (axis < 0 || axis >= state_->dims) throw PreconditionError("partial: axis out of range");
    if (state_->partial) {
        SampledFunction d = state_->partial(axis);
        return state_->numeric ? d.with_numeric_derivative() : d;
    }
    if (!state_->numeric) throw PreconditionError("no analytic derivative and numeric differentiation not enabled");
    const SampledFunction f = *this;
    SampledFunction d(
        state_->dims,
        [f, axis](std::span<const double> w) {
            std::vector<double> p(w.begin(), w.end());
            const double x = w[axis];
            const double h = 1e-4 * (1.0 + std::abs(x));
            auto at = [&](double v) {
                p[axis] = v;
                return f(p);
            };
            if (x - 2.0 * h > 0.0)
                return (at(x - 2.0 * h) - 8.0 * at(x - h) + 8.0 * at(x + h) - at(x + 2.0 * h)) / (12.0 * h);
            return (-25.0 * at(x) + 48.0 * at(x + h) - 36.0 * at(x + 2.0 * h) + 16.0 * at(x + 3.0 * h) -
                    3.0 * at(x + 4.0 * h)) /
                   (12.0 * h);
        },
        state_->support);
    return d.with_numeric_derivative();
}

namespace {

std::optional<double> joint_support(const SampledFunction& f, const SampledFunction& g) {
    const auto a = f.support_hint(), b = g.support_hint();
    if (a && b) return std::max(*a, *b);
    return std::nullopt;
}

cplx real_pow(double w, cplx p) {
    if (w > 0.0) return std::exp(p * std::log(w));
    if (w == 0.0) {
        if (p == cplx(0.0)) return 1.0;
        if (p.real() > 0.0) return 0.0;
    }
    throw DomainError("power of the coordinate is undefined at w <= 0");
}

Bicomplex real_pow(double w, const Bicomplex& p) { return {real_pow(w, p.z1()), real_pow(w, p.z2())}; }

}  // namespace

SampledFunction lin(const Bicomplex& a, const SampledFunction& f, const Bicomplex& b, const SampledFunction& g) {
    if (f.dims() != g.dims()) throw PreconditionError("lin: dimension mismatch");
    SampledFunction::Partial partial;
    if ((f.has_analytic_derivative() || f.numeric_derivative()) && (g.has_analytic_derivative() || g.numeric_derivative()))
        partial = [=](int k) { return lin(a, f.partial(k), b, g.partial(k)); };
    SampledFunction out(
        f.dims(), [=](std::span<const double> w) { return a * f(w) + b * g(w); }, joint_support(f, g), partial);
    return (f.numeric_derivative() || g.numeric_derivative()) ? out.with_numeric_derivative() : out;
}

SampledFunction mul_pow(const SampledFunction& f, int axis, const Bicomplex& c, const Bicomplex& p) {
    if (axis < 0 || axis >= f.dims()) throw PreconditionError("mul_pow: axis out of range");
    SampledFunction::Partial partial;
    if (f.has_analytic_derivative() || f.numeric_derivative())
        partial = [=](int k) {
            if (k != axis) return mul_pow(f.partial(k), axis, c, p);
            return lin(1.0, mul_pow(f.partial(k), axis, c, p), 1.0, mul_pow(f, axis, c * p, p - 1.0));
        };
    SampledFunction out(
        f.dims(), [=](std::span<const double> w) { return c * real_pow(w[axis], p) * f(w); }, f.support_hint(),
        partial);
    return f.numeric_derivative() ? out.with_numeric_derivative() : out;
}

SampledFunction op_N_axis(const Bicomplex& sigma, const SampledFunction& f, int axis) {
    return lin(1.0, f.partial(axis), 1.0, mul_pow(f, axis, -(sigma + 0.5), -1.0));
}

SampledFunction op_M_axis(const Bicomplex& sigma, const SampledFunction& f, int axis) {
    return lin(1.0, f.partial(axis), 1.0, mul_pow(f, axis, sigma + 0.5, -1.0));
}

SampledFunction op_N(const Bicomplex& sigma, const SampledFunction& f) {
    SampledFunction g = f;
    for (int k = 0; k < f.dims(); ++k) g = op_N_axis(sigma, g, k);
    return g;
}

SampledFunction op_M(const Bicomplex& sigma, const SampledFunction& f) {
    SampledFunction g = f;
    for (int k = 0; k < f.dims(); ++k) g = op_M_axis(sigma, g, k);
    return g;
}

SampledFunction poly_gaussian(std::vector<PolyGaussianTerm> terms, std::optional<double> support) {
    auto eval = [terms](std::span<const double> w) {
        Bicomplex s;
        for (const auto& t : terms) s += t.coeff * real_pow(w[0], t.power) * std::exp(-t.decay * w[0] * w[0]);
        return s;
    };
    auto partial = [terms, support](int) {
        std::vector<PolyGaussianTerm> d;
        for (const auto& t : terms) {
            if (!(t.power == Bicomplex(0.0))) d.push_back({t.coeff * t.power, t.power - 1.0, t.decay});
            if (t.decay != 0.0) d.push_back({-2.0 * t.decay * t.coeff, t.power + 1.0, t.decay});
        }
        return poly_gaussian(std::move(d), support);
    };
    return SampledFunction(1, eval, support, partial);
}

SampledFunction tensor_product(std::vector<SampledFunction> factors) {
    if (factors.empty()) throw PreconditionError("tensor_product needs at least one factor");
    for (const auto& f : factors)
        if (f.dims() != 1) throw PreconditionError("tensor_product factors must be one-dimensional");
    if (factors.size() == 1) return factors[0];
    std::optional<double> support;
    bool all_supported = true, differentiable = true;
    for (const auto& f : factors) {
        if (f.support_hint())
            support = std::max(support.value_or(0.0), *f.support_hint());
        else
            all_supported = false;
        differentiable = differentiable && (f.has_analytic_derivative() || f.numeric_derivative());
    }
    if (!all_supported) support.reset();
    SampledFunction::Partial partial;
    if (differentiable)
        partial = [factors](int k) {
            auto d = factors;
            d[k] = d[k].partial(0);
            return tensor_product(std::move(d));
        };
    const int n = static_cast<int>(factors.size());
    return SampledFunction(
        n,
        [factors](std::span<const double> w) {
            Bicomplex p = 1.0;
            for (std::size_t i = 0; i < factors.size(); ++i) p *= factors[i](w[i]);
            return p;
        },
        support, partial);
}

SampledFunction builtin_function(const std::string& name, const Bicomplex& V, int dims) {
    if (dims < 1 || dims > 3) throw PreconditionError("builtin functions support 1 to 3 dimensions");
    SampledFunction one;
    if (name == "indicator") {
        one = SampledFunction(1, [](std::span<const double>) { return Bicomplex(1.0); }, 1.0);
    } else if (name == "gaussian-monomial") {
        one = poly_gaussian({{1.0, V + 0.5, 0.5}});
    } else if (name == "cutoff-polynomial") {
        one = poly_gaussian({{1.0, 0.0, 0.0}, {-4.0, 2.0, 0.0}, {6.0, 4.0, 0.0}, {-4.0, 6.0, 0.0}, {1.0, 8.0, 0.0}},
                            1.0);
    } else if (name == "poly-gaussian") {
        one = poly_gaussian({{1.0, 4.0, 1.0}});
    } else if (name == "zero") {
        one = poly_gaussian({}, 1.0);
    } else {
        throw PreconditionError("unknown builtin function: " + name);
    }
    if (dims == 1) return one;
    return tensor_product(std::vector<SampledFunction>(dims, one));
}

std::vector<std::string> builtin_names() {
    return {"indicator", "gaussian-monomial", "cutoff-polynomial", "poly-gaussian", "zero"};
}

}  // namespace bcbessel
