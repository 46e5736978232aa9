#include "bcbessel/hankel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bcbessel/cylinder.hpp"
#include "bcbessel/errors.hpp"

namespace bcbessel {

cplx hankel_kernel(cplx nu, cplx x) {
    static const double c = std::sqrt(2.0 / std::numbers::pi);
    if (nu == cplx(-0.5)) return c * std::cos(x);
    if (nu == cplx(0.5)) return c * std::sin(x);
    if (x == cplx(0.0)) {
        if (nu.real() > -0.5) return 0.0;
        throw DomainError("kernel is unbounded at 0 for Re nu <= -1/2");
    }
    return std::sqrt(x) * cylinder_j(nu, x).value;
}

Bicomplex hankel_kernel(const Bicomplex& V, const Bicomplex& X) {
    const cplx k1 = hankel_kernel(V.z1(), X.z1());
    if (V.z1() == V.z2() && X.z1() == X.z2()) return {k1, k1};
    return {k1, hankel_kernel(V.z2(), X.z2())};
}

void check_strip(const Bicomplex& Z, double strip) {
    for (const cplx z : {Z.z1(), Z.z2()}) {
        if (!(std::abs(z.imag()) < strip))
            throw StripError("transform point outside the strip |Im z| < " + std::to_string(strip));
        if (z.imag() == 0.0 && z.real() <= 0.0) throw StripError("transform point on the cut (-inf, 0]");
    }
}

namespace {

struct Nested {
    const Bicomplex& V;
    const SampledFunction& f;
    const std::vector<Bicomplex>& Z;
    const QuadratureConfig& config;
    std::vector<double> w;

    QuadratureConfig axis_config(int k) const {
        QuadratureConfig q = config;
        if (q.panel_length <= 0.0) {
            const double freq = std::max({1.0, std::abs(Z[k].z1().real()), std::abs(Z[k].z2().real())});
            q.panel_length = std::numbers::pi / freq;
        }
        return q;
    }

    TransformResult integrate(int k) {
        const int n = static_cast<int>(Z.size());
        auto integrand = [&, k](double x) {
            w[k] = x;
            const Bicomplex kern = hankel_kernel(V, Bicomplex(x) * Z[k]);
            if (k + 1 == n) return f(w) * kern;
            return integrate(k + 1).value * kern;
        };
        return integrate_semi_infinite(integrand, axis_config(k), f.support_hint());
    }
};

Bicomplex bracket(const std::vector<Bicomplex>& Z) {
    Bicomplex p = 1.0;
    for (const auto& z : Z) p *= z;
    return p;
}

TransformResult transform(const Bicomplex& V, const SampledFunction& f, const std::vector<Bicomplex>& Z,
                          const QuadratureConfig& config) {
    config.validate();
    if (Z.empty() || Z.size() > 3) throw PreconditionError("transform supports 1 to 3 dimensions");
    if (static_cast<int>(Z.size()) != f.dims()) throw PreconditionError("point dimension does not match the function");
    Nested nest{V, f, Z, config, std::vector<double>(Z.size(), 0.0)};
    return nest.integrate(0);
}

}  // namespace

TransformResult hankel_forward(const Bicomplex& V, const SampledFunction& f, const std::vector<Bicomplex>& Z,
                               const QuadratureConfig& config, double strip) {
    for (const auto& z : Z) check_strip(z, strip);
    return transform(V, f, Z, config);
}

TransformResult hankel_inverse(const Bicomplex& V, const SampledFunction& eta, const std::vector<double>& w,
                               const QuadratureConfig& config) {
    std::vector<Bicomplex> pts;
    for (double x : w) {
        if (!(x >= 0.0)) throw DomainError("inverse transform is evaluated at nonnegative real points only");
        pts.emplace_back(x);
    }
    return transform(V, eta, pts, config);
}

SampledFunction transform_as_function(const Bicomplex& V, const SampledFunction& f, const QuadratureConfig& config) {
    return SampledFunction(f.dims(), [=](std::span<const double> z) {
        std::vector<Bicomplex> pts(z.begin(), z.end());
        return hankel_forward(V, f, pts, config).value;
    });
}

OperationalIdentity parse_operational_identity(std::string_view name) {
    if (name == "i") return OperationalIdentity::i;
    if (name == "ii") return OperationalIdentity::ii;
    if (name == "iii") return OperationalIdentity::iii;
    throw PreconditionError("unknown operational identity: " + std::string(name));
}

OperationalSides operational_identity(OperationalIdentity which, const Bicomplex& V, const Bicomplex& sigma,
                                      const SampledFunction& f, const std::vector<Bicomplex>& Z,
                                      const QuadratureConfig& config) {
    const Bicomplex m = V + sigma;
    const int n = f.dims();
    const double sign = (n % 2) ? -1.0 : 1.0;
    const Bicomplex zb = bracket(Z);
    OperationalSides s;
    switch (which) {
    case OperationalIdentity::i:
        s.lhs = hankel_forward(m + 1.0, op_N(m, f), Z, config).value;
        s.rhs = sign * zb * hankel_forward(m, f, Z, config).value;
        break;
    case OperationalIdentity::ii:
        s.lhs = hankel_forward(m, op_M(m, f), Z, config).value;
        s.rhs = zb * hankel_forward(m + 1.0, f, Z, config).value;
        break;
    case OperationalIdentity::iii:
        s.lhs = hankel_forward(m, op_M(m, op_N(m, f)), Z, config).value;
        s.rhs = sign * zb * zb * hankel_forward(m, f, Z, config).value;
        break;
    }
    s.residual = abs_h(s.lhs - s.rhs);
    return s;
}

Hyperbolic operational_identity_residual(OperationalIdentity which, const Bicomplex& V, const Bicomplex& sigma,
                                         const SampledFunction& f, const std::vector<Bicomplex>& Z,
                                         const QuadratureConfig& config) {
    return operational_identity(which, V, sigma, f, Z, config).residual;
}

}  // namespace bcbessel
