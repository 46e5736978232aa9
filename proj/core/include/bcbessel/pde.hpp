#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "bcbessel/hankel.hpp"

namespace bcbessel {

enum class PDEKind { wave, heat };
PDEKind parse_pde_kind(std::string_view name);
const char* to_string(PDEKind kind);

// M_V N_V u = lambda^2 u_tt (wave) or M_V N_V u = lambda u_t (heat) on (0, inf)^n.
struct PDEProblem {
    PDEKind kind = PDEKind::wave;
    Bicomplex V = -0.5;
    Bicomplex lambda = 1.0;
    int n = 1;
    SampledFunction f;
    std::optional<SampledFunction> g;  // initial velocity, wave only
};

struct SolutionGrid {
    std::vector<double> omega;
    std::vector<double> t;
    std::vector<Bicomplex> values;  // row-major, values[i * t.size() + j] = u(omega[i], t[j])

    const Bicomplex& at(std::size_t i, std::size_t j) const { return values[i * t.size() + j]; }
};

// Settings for inverting the spectrum. The forward transforms F = H_V f and
// G = H_V g use forward_config and are cached at the inversion nodes.
struct PDEConfig {
    QuadratureConfig inverse{.abs_tol = 1e-10, .rel_tol = 1e-12};
    QuadratureConfig forward;
    int threads = 0;  // 0 = hardware concurrency

    // Loose stopping rule for initial data whose spectrum decays like 1/Z.
    static PDEConfig figure();
};

// Transform-side solution U(Z, t):
//   wave, odd n   F cos([Z]t/lambda) + G sin([Z]t/lambda)
//   wave, even n  (F[Z] + lambda G)/(2[Z]) exp([Z]t/lambda) + (F[Z] - lambda G)/(2[Z]) exp(-[Z]t/lambda)
//   heat          F exp((-1)^n [Z]^2 t / lambda)
// ZeroDivisorError when lambda (or [Z] for even-n waves) is not invertible.
Bicomplex spectrum(const PDEProblem& problem, const std::vector<Bicomplex>& Z, double t,
                   const QuadratureConfig& forward = {});

// u at the points (w, ..., w) for every w in omega and every time in t.
SolutionGrid solve_wave(const PDEProblem& problem, const std::vector<double>& omega, const std::vector<double>& t,
                        const PDEConfig& config = {});
SolutionGrid solve_heat(const PDEProblem& problem, const std::vector<double>& omega, const std::vector<double>& t,
                        const PDEConfig& config = {});
SolutionGrid solve(const PDEProblem& problem, const std::vector<double>& omega, const std::vector<double>& t,
                   const PDEConfig& config = {});

// Columns: omega,t,u_e1_re,u_e1_im,u_e2_re,u_e2_im.
void write_csv(std::ostream& out, const SolutionGrid& grid);

// n = 1, V = -1/2, lambda = 1, f = indicator of (0, 1), g = 0.
PDEProblem figure_problem(PDEKind kind);
SolutionGrid figure_data(PDEKind kind, const std::vector<double>& omega, const std::vector<double>& t,
                         const PDEConfig& config = PDEConfig::figure());
void emit_figure_data(std::ostream& out, PDEKind kind, const std::vector<double>& omega, const std::vector<double>& t,
                      const PDEConfig& config = PDEConfig::figure());

// a:b:step, inclusive of b up to rounding.
std::vector<double> parse_range(std::string_view text);

}  // namespace bcbessel
