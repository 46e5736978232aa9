#include "bcbessel/pde.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <string>

#include "bcbessel/errors.hpp"
#include "parallel.hpp"

namespace bcbessel {

PDEKind parse_pde_kind(std::string_view name) {
    if (name == "wave") return PDEKind::wave;
    if (name == "heat") return PDEKind::heat;
    throw PreconditionError("unknown equation: " + std::string(name));
}

const char* to_string(PDEKind kind) { return kind == PDEKind::wave ? "wave" : "heat"; }

PDEConfig PDEConfig::figure() {
    PDEConfig c;
    c.inverse.abs_tol = 5e-3;
    c.inverse.rel_tol = 1e-12;
    return c;
}

namespace {

void validate(const PDEProblem& p) {
    if (p.n < 1 || p.n > 3) throw PreconditionError("dimension must be 1, 2 or 3");
    if (p.f.dims() != p.n) throw PreconditionError("initial value dimension does not match n");
    if (p.kind == PDEKind::heat && p.g) throw PreconditionError("heat problems take no initial velocity");
    if (p.g && p.g->dims() != p.n) throw PreconditionError("initial velocity dimension does not match n");
    if (!p.lambda.is_invertible()) throw ZeroDivisorError("lambda must have nonzero components");
}

Bicomplex bracket(const std::vector<Bicomplex>& Z) {
    Bicomplex p = 1.0;
    for (const auto& z : Z) p *= z;
    return p;
}

Bicomplex assemble(const PDEProblem& p, const Bicomplex& zb, const Bicomplex& F, const Bicomplex& G, double t) {
    if (p.kind == PDEKind::heat) {
        const double sign = (p.n % 2) ? -1.0 : 1.0;
        return F * exp(sign * zb * zb * t / p.lambda);
    }
    const Bicomplex arg = zb * t / p.lambda;
    if (p.n % 2) return F * cos(arg) + G * sin(arg);
    const Bicomplex twice = 2.0 * zb;
    return (F * zb + p.lambda * G) / twice * exp(arg) + (F * zb - p.lambda * G) / twice * exp(-arg);
}

// F and G at real transform nodes, computed once per node.
class SpectrumCache {
public:
    SpectrumCache(const PDEProblem& p, const QuadratureConfig& q) : p_(p), q_(q) {}

    std::pair<Bicomplex, Bicomplex> get(std::span<const double> z) {
        std::vector<double> key(z.begin(), z.end());
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        std::vector<Bicomplex> pts(z.begin(), z.end());
        const Bicomplex F = hankel_forward(p_.V, p_.f, pts, q_).value;
        const Bicomplex G = p_.g ? hankel_forward(p_.V, *p_.g, pts, q_).value : Bicomplex();
        std::lock_guard lock(mu_);
        cache_.emplace(std::move(key), std::make_pair(F, G));
        return {F, G};
    }

private:
    const PDEProblem& p_;
    QuadratureConfig q_;
    std::mutex mu_;
    std::map<std::vector<double>, std::pair<Bicomplex, Bicomplex>> cache_;
};

}  // namespace

Bicomplex spectrum(const PDEProblem& problem, const std::vector<Bicomplex>& Z, double t,
                   const QuadratureConfig& forward) {
    validate(problem);
    const Bicomplex F = hankel_forward(problem.V, problem.f, Z, forward).value;
    const Bicomplex G = problem.g ? hankel_forward(problem.V, *problem.g, Z, forward).value : Bicomplex();
    return assemble(problem, bracket(Z), F, G, t);
}

SolutionGrid solve(const PDEProblem& problem, const std::vector<double>& omega, const std::vector<double>& t,
                   const PDEConfig& config) {
    validate(problem);
    for (double x : t)
        if (problem.kind == PDEKind::heat && x < 0.0) throw DomainError("heat solution needs t >= 0");
    SpectrumCache cache(problem, config.forward);
    SolutionGrid grid{omega, t, std::vector<Bicomplex>(omega.size() * t.size())};
    detail::parallel_for(grid.values.size(), config.threads, [&](std::size_t idx) {
        const std::size_t i = idx / t.size(), j = idx % t.size();
        const double time = t[j];
        const SampledFunction U(problem.n, [&, time](std::span<const double> z) {
            const auto [F, G] = cache.get(z);
            Bicomplex zb = 1.0;
            for (double x : z) zb *= x;
            return assemble(problem, zb, F, G, time);
        });
        grid.values[idx] =
            hankel_inverse(problem.V, U, std::vector<double>(problem.n, omega[i]), config.inverse).value;
    });
    return grid;
}

SolutionGrid solve_wave(const PDEProblem& problem, const std::vector<double>& omega, const std::vector<double>& t,
                        const PDEConfig& config) {
    if (problem.kind != PDEKind::wave) throw PreconditionError("solve_wave needs a wave problem");
    return solve(problem, omega, t, config);
}

SolutionGrid solve_heat(const PDEProblem& problem, const std::vector<double>& omega, const std::vector<double>& t,
                        const PDEConfig& config) {
    if (problem.kind != PDEKind::heat) throw PreconditionError("solve_heat needs a heat problem");
    return solve(problem, omega, t, config);
}

void write_csv(std::ostream& out, const SolutionGrid& grid) {
    out << "omega,t,u_e1_re,u_e1_im,u_e2_re,u_e2_im\n";
    char buf[256];
    for (std::size_t i = 0; i < grid.omega.size(); ++i)
        for (std::size_t j = 0; j < grid.t.size(); ++j) {
            const Bicomplex& u = grid.at(i, j);
            std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.17g,%.17g,%.17g,%.17g\n", grid.omega[i], grid.t[j],
                          u.z1().real(), u.z1().imag(), u.z2().real(), u.z2().imag());
            out << buf;
        }
}

PDEProblem figure_problem(PDEKind kind) {
    PDEProblem p;
    p.kind = kind;
    p.f = builtin_function("indicator");
    return p;
}

SolutionGrid figure_data(PDEKind kind, const std::vector<double>& omega, const std::vector<double>& t,
                         const PDEConfig& config) {
    return solve(figure_problem(kind), omega, t, config);
}

void emit_figure_data(std::ostream& out, PDEKind kind, const std::vector<double>& omega, const std::vector<double>& t,
                      const PDEConfig& config) {
    write_csv(out, figure_data(kind, omega, t, config));
}

std::vector<double> parse_range(std::string_view text) {
    double v[3];
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t end = k < 2 ? text.find(':', pos) : text.size();
        if (end == std::string_view::npos) throw PreconditionError("range must look like a:b:step");
        const std::string part(text.substr(pos, end - pos));
        try {
            std::size_t used = 0;
            v[k] = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw PreconditionError("bad number in range: " + part);
        }
        pos = end + 1;
    }
    if (!(v[2] > 0.0) || v[1] < v[0]) throw PreconditionError("range needs step > 0 and b >= a");
    std::vector<double> out;
    const long count = std::lround(std::floor((v[1] - v[0]) / v[2] + 1e-9));
    for (long k = 0; k <= count; ++k) out.push_back(v[0] + k * v[2]);
    return out;
}

}  // namespace bcbessel
