#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bcbessel/bessel.hpp"
#include "bcbessel/coherent.hpp"
#include "bcbessel/errors.hpp"
#include "bcbessel/gamma.hpp"
#include "bcbessel/hankel.hpp"
#include "bcbessel/pde.hpp"
#include "bcbessel/verify.hpp"

namespace bcbessel::cli {

using nlohmann::json;

namespace {

// Bad flag content; reported with the flag name and exit code 2.
struct UsageError : std::runtime_error {
    UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

double number(const json& j) {
    if (!j.is_number()) throw std::invalid_argument("expected a number");
    return j.get<double>();
}

cplx complex_from_json(const json& j) {
    if (j.is_number()) return number(j);
    if (j.is_array() && j.size() == 2) return {number(j[0]), number(j[1])};
    throw std::invalid_argument("expected [re, im] or a number");
}

json parse_flag(const std::string& flag, const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(flag, std::string("invalid JSON: ") + e.what());
    }
}

template <class F>
auto convert(const std::string& flag, const std::string& text, F&& f) {
    try {
        return f(parse_flag(flag, text));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(flag, e.what());
    }
}

Bicomplex bc_flag(const std::string& flag, const std::string& text) {
    return convert(flag, text, [](const json& j) { return bicomplex_from_json(j); });
}

Hyperbolic h_flag(const std::string& flag, const std::string& text) {
    return convert(flag, text, [](const json& j) { return hyperbolic_from_json(j); });
}

std::vector<double> range_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_range(text);
    } catch (const Error& e) {
        throw UsageError(flag, e.what());
    }
}

struct Globals {
    std::optional<double> tol;
    std::uint64_t seed = 42;
    std::string out;
    std::string format;
};

json globals_json(const Globals& g) {
    json j;
    if (g.tol) j["tol"] = *g.tol;
    j["seed"] = g.seed;
    return j;
}

}  // namespace

json to_json(const Bicomplex& z) {
    return {{"e1", {z.z1().real(), z.z1().imag()}}, {"e2", {z.z2().real(), z.z2().imag()}}};
}

json to_json(Hyperbolic h) { return {{"e1", h.a1}, {"e2", h.a2}}; }

Bicomplex bicomplex_from_json(const json& j) {
    if (j.is_number()) return number(j);
    if (!j.is_object() || !j.contains("e1") || !j.contains("e2"))
        throw std::invalid_argument(R"(expected {"e1": [re, im], "e2": [re, im]})");
    return {complex_from_json(j.at("e1")), complex_from_json(j.at("e2"))};
}

Hyperbolic hyperbolic_from_json(const json& j) {
    if (j.is_number()) return number(j);
    if (!j.is_object() || !j.contains("e1") || !j.contains("e2"))
        throw std::invalid_argument(R"(expected {"e1": x, "e2": y})");
    return {number(j.at("e1")), number(j.at("e2"))};
}

QuadratureConfig quadrature_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("quadrature config must be an object");
    QuadratureConfig q;
    for (const auto& [key, value] : j.items()) {
        if (key == "panel_length") q.panel_length = number(value);
        else if (key == "max_panels") q.max_panels = static_cast<int>(number(value));
        else if (key == "abs_tol") q.abs_tol = number(value);
        else if (key == "rel_tol") q.rel_tol = number(value);
        else if (key == "points_per_panel") q.points_per_panel = static_cast<int>(number(value));
        else if (key == "singular_origin") q.singular_origin = value.get<bool>();
        else throw std::invalid_argument("unknown quadrature key: " + key);
    }
    return q;
}

namespace {

json quadrature_json(const QuadratureConfig& q) {
    return {{"panel_length", q.panel_length}, {"max_panels", q.max_panels}, {"abs_tol", q.abs_tol},
            {"rel_tol", q.rel_tol},           {"points_per_panel", q.points_per_panel}};
}

json transform_json(const TransformResult& r) {
    return {{"value", to_json(r.value)}, {"panels_used", r.panels_used}, {"error_estimate", to_json(r.error_estimate)}};
}

json verify_json(const VerifyReport& r) {
    json suites = json::array();
    for (const auto& s : r.suites) {
        json e{{"name", s.name},
               {"samples", s.samples},
               {"max_residual", std::isnan(s.max_residual) ? json("nan") : json(s.max_residual)},
               {"tolerance", s.tolerance},
               {"pass", s.pass}};
        if (!s.error.empty()) e["error"] = s.error;
        suites.push_back(std::move(e));
    }
    return {{"seed", r.seed}, {"samples", r.samples}, {"suites", suites}, {"pass", r.pass()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bicomplex Bessel functions, Hankel transforms and coherent states"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    double tol_value = 0.0;
    auto* tol_opt = app.add_option("--tol", tol_value, "Series tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized suites");
    app.add_option("--out", g.out, "Write output to this file");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // bessel
    auto* bessel = app.add_subcommand("bessel", "Evaluate J_V(Z)");
    std::string order_text, z_text;
    int max_terms = 2000;
    bessel->add_option("--order", order_text, "Order V (bicomplex JSON)")->required();
    bessel->add_option("--z", z_text, "Argument Z (bicomplex JSON)")->required();
    bessel->add_option("--max-terms", max_terms, "Series term cap")->check(CLI::PositiveNumber);

    // gamma
    auto* gamma = app.add_subcommand("gamma", "Evaluate the bicomplex gamma function");
    std::string gz_text;
    gamma->add_option("--z", gz_text, "Argument (bicomplex JSON)")->required();

    // hankel
    auto* hankel = app.add_subcommand("hankel", "Forward Hankel transform of a builtin function");
    std::string h_order, h_points, h_function = "indicator", h_config = "{}";
    double h_strip = std::numeric_limits<double>::infinity();
    hankel->add_option("--order", h_order, "Order V (bicomplex JSON)")->required();
    hankel->add_option("--points", h_points, "JSON array of points; each a bicomplex or an array of n bicomplex")
        ->required();
    hankel->add_option("--function", h_function, "Builtin function")->check(CLI::IsMember(builtin_names()));
    hankel->add_option("--config", h_config, "Quadrature config JSON");
    hankel->add_option("--strip", h_strip, "Strip half-width for the points")->check(CLI::PositiveNumber);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve the wave or heat equation on a grid");
    std::string s_kind, s_order = "-0.5", s_lambda = "1", s_f = "indicator", s_g = "none", s_omega = "0:1:0.02",
                        s_t = "0:2:0.05", s_config;
    bool s_figure_tol = false;
    solve_cmd->add_option("kind", s_kind, "wave or heat")->required()->check(CLI::IsMember({"wave", "heat"}));
    solve_cmd->add_option("--order", s_order, "Order V (bicomplex JSON)");
    solve_cmd->add_option("--lambda", s_lambda, "lambda (bicomplex JSON)");
    solve_cmd->add_option("--f", s_f, "Initial value builtin")->check(CLI::IsMember(builtin_names()));
    auto g_names = builtin_names();
    g_names.push_back("none");
    solve_cmd->add_option("--g", s_g, "Initial velocity builtin or none")->check(CLI::IsMember(g_names));
    solve_cmd->add_option("--omega", s_omega, "Grid a:b:step");
    solve_cmd->add_option("--t", s_t, "Times a:b:step");
    solve_cmd->add_option("--config", s_config, "Inverse quadrature config JSON");
    solve_cmd->add_flag("--loose", s_figure_tol, "Use the loose stopping rule (default for indicator data)");

    // coherent
    auto* coherent = app.add_subcommand("coherent", "Coherent-state checks");
    coherent->require_subcommand(1);
    auto* moments = coherent->add_subcommand("moments", "Moment identity of the weight function");
    double c_nu = 0.5;
    int c_nmax = 6;
    moments->add_option("--nu", c_nu, "Order nu > -1");
    moments->add_option("--n-max", c_nmax, "Largest moment (<= 8)")->check(CLI::Range(0, 8));
    auto* ovl = coherent->add_subcommand("overlap", "Closed-form overlap against the truncated inner product");
    std::string c_z, c_zp, c_order = "0";
    int c_trunc = 200;
    ovl->add_option("--z", c_z, "Label Z (bicomplex JSON)")->required();
    ovl->add_option("--zprime", c_zp, "Label Z' (bicomplex JSON)")->required();
    ovl->add_option("--order", c_order, "Order V (hyperbolic JSON)");
    ovl->add_option("--trunc", c_trunc, "Truncation N")->check(CLI::PositiveNumber);
    auto* eig = coherent->add_subcommand("eigencheck", "A-|Z> = Z|Z> on the truncated space");
    eig->add_option("--z", c_z, "Label Z (bicomplex JSON)")->required();
    eig->add_option("--order", c_order, "Order V (hyperbolic JSON)");
    eig->add_option("--trunc", c_trunc, "Truncation N")->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Identity residual suites");
    verify->require_subcommand(1);
    auto* verify_all_cmd = verify->add_subcommand("all", "Run every suite");
    int v_samples = 100, v_threads = 0;
    bool v_quick = false;
    verify_all_cmd->add_option("--samples", v_samples, "Samples per randomized suite")->check(CLI::PositiveNumber);
    verify_all_cmd->add_option("--threads", v_threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    verify_all_cmd->add_flag("--quick", v_quick, "Skip quadrature-heavy suites");
    verify_all_cmd->add_option("--seed", g.seed, "Seed for randomized suites");

    // figure
    auto* figure = app.add_subcommand("figure", "Figure data for the indicator initial value");
    std::string f_kind, f_omega = "0:1:0.02", f_t = "0:2:0.05";
    figure->add_option("kind", f_kind, "wave or heat")->required()->check(CLI::IsMember({"wave", "heat"}));
    figure->add_option("--omega", f_omega, "Grid a:b:step");
    figure->add_option("--t", f_t, "Times a:b:step");

    std::vector<std::string> argv_store{"bcbessel"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }
    if (*tol_opt) g.tol = tol_value;

    std::ofstream file;
    std::ostream* sink = &out;
    auto open_sink = [&] {
        if (g.out.empty()) return;
        file.open(g.out);
        if (!file) throw UsageError("--out", "cannot open " + g.out);
        sink = &file;
    };
    const bool gridded = solve_cmd->parsed() || figure->parsed();
    int status = ok;

    try {
        if (g.format == "csv" && !gridded) throw UsageError("--format", "csv applies to solve and figure only");
        json result;
        json params = globals_json(g);
        if (bessel->parsed()) {
            const Bicomplex V = bc_flag("--order", order_text), Z = bc_flag("--z", z_text);
            const double tol = g.tol.value_or(default_tol);
            params.update({{"order", to_json(V)}, {"z", to_json(Z)}, {"tol", tol}, {"max_terms", max_terms}});
            const SeriesResult r = bessel_j(V, Z, tol, max_terms);
            result = {{"value", to_json(r.value)}, {"terms_used", r.terms_used}, {"tail_estimate", to_json(r.tail_estimate)}};
        } else if (gamma->parsed()) {
            const Bicomplex Z = bc_flag("--z", gz_text);
            params["z"] = to_json(Z);
            result = {{"value", to_json(bicomplex_gamma(Z))}};
        } else if (hankel->parsed()) {
            const Bicomplex V = bc_flag("--order", h_order);
            const QuadratureConfig q = convert("--config", h_config, [](const json& j) { return quadrature_from_json(j); });
            const json pts = parse_flag("--points", h_points);
            if (!pts.is_array() || pts.empty()) throw UsageError("--points", "expected a non-empty JSON array");
            std::vector<std::vector<Bicomplex>> points;
            for (const auto& p : pts) {
                std::vector<Bicomplex> one;
                try {
                    if (p.is_array())
                        for (const auto& c : p) one.push_back(bicomplex_from_json(c));
                    else
                        one.push_back(bicomplex_from_json(p));
                } catch (const std::exception& e) {
                    throw UsageError("--points", e.what());
                }
                if (!points.empty() && one.size() != points.front().size())
                    throw UsageError("--points", "all points need the same dimension");
                points.push_back(std::move(one));
            }
            const int dims = static_cast<int>(points.front().size());
            params.update({{"order", to_json(V)}, {"function", h_function}, {"config", quadrature_json(q)}, {"dims", dims}});
            if (std::isfinite(h_strip)) params["strip"] = h_strip;
            const SampledFunction f = builtin_function(h_function, V, dims);
            result = json::array();
            for (const auto& p : points) {
                json entry = transform_json(hankel_forward(V, f, p, q, h_strip));
                json at = json::array();
                for (const auto& z : p) at.push_back(to_json(z));
                entry["point"] = at;
                result.push_back(std::move(entry));
            }
        } else if (solve_cmd->parsed()) {
            PDEProblem p;
            p.kind = parse_pde_kind(s_kind);
            p.V = bc_flag("--order", s_order);
            p.lambda = bc_flag("--lambda", s_lambda);
            p.f = builtin_function(s_f, p.V);
            if (s_g != "none") {
                if (p.kind == PDEKind::heat) throw UsageError("--g", "heat problems take no initial velocity");
                p.g = builtin_function(s_g, p.V);
            }
            const bool discontinuous = s_f == "indicator" || s_g == "indicator";
            PDEConfig cfg = s_figure_tol || discontinuous ? PDEConfig::figure() : PDEConfig{};
            if (!s_config.empty())
                cfg.inverse = convert("--config", s_config, [](const json& j) { return quadrature_from_json(j); });
            const auto omega = range_flag("--omega", s_omega), t = range_flag("--t", s_t);
            const SolutionGrid grid = solve(p, omega, t, cfg);
            open_sink();
            if (g.format == "json") {
                params.update({{"kind", s_kind}, {"order", to_json(p.V)}, {"lambda", to_json(p.lambda)}, {"f", s_f},
                               {"g", s_g}, {"omega", s_omega}, {"t", s_t}, {"config", quadrature_json(cfg.inverse)}});
                json values = json::array();
                for (std::size_t i = 0; i < omega.size(); ++i)
                    for (std::size_t j = 0; j < t.size(); ++j)
                        values.push_back({{"omega", omega[i]}, {"t", t[j]}, {"u", to_json(grid.at(i, j))}});
                *sink << json{{"command", "solve"}, {"params", params}, {"result", values}}.dump(2) << "\n";
            } else {
                write_csv(*sink, grid);
            }
            return ok;
        } else if (figure->parsed()) {
            const auto omega = range_flag("--omega", f_omega), t = range_flag("--t", f_t);
            const SolutionGrid grid = figure_data(parse_pde_kind(f_kind), omega, t);
            open_sink();
            if (g.format == "json") {
                params.update({{"kind", f_kind}, {"omega", f_omega}, {"t", f_t}});
                json values = json::array();
                for (std::size_t i = 0; i < omega.size(); ++i)
                    for (std::size_t j = 0; j < t.size(); ++j)
                        values.push_back({{"omega", omega[i]}, {"t", t[j]}, {"u", to_json(grid.at(i, j))}});
                *sink << json{{"command", "figure"}, {"params", params}, {"result", values}}.dump(2) << "\n";
            } else {
                write_csv(*sink, grid);
            }
            return ok;
        } else if (coherent->parsed()) {
            if (moments->parsed()) {
                params.update({{"nu", c_nu}, {"n_max", c_nmax}});
                result = json::array();
                for (int n = 0; n <= c_nmax; ++n) {
                    const MomentCheck m = moment_check(n, c_nu);
                    result.push_back({{"n", n}, {"closed_form", m.closed_form}, {"numeric", m.numeric}, {"rel_err", m.rel_err}});
                }
            } else if (ovl->parsed()) {
                const Bicomplex Z = bc_flag("--z", c_z), Zp = bc_flag("--zprime", c_zp);
                const Hyperbolic V = h_flag("--order", c_order);
                params.update({{"z", to_json(Z)}, {"zprime", to_json(Zp)}, {"order", to_json(V)}, {"trunc", c_trunc}});
                const Bicomplex closed = overlap(Z, Zp, V);
                const Bicomplex numeric = inner_product(coherent_state(Z, V, c_trunc), coherent_state(Zp, V, c_trunc));
                result = {{"closed_form", to_json(closed)}, {"numeric", to_json(numeric)},
                          {"abs_err", to_json(abs_h(closed - numeric))}};
            } else {
                const Bicomplex Z = bc_flag("--z", c_z);
                const Hyperbolic V = h_flag("--order", c_order);
                params.update({{"z", to_json(Z)}, {"order", to_json(V)}, {"trunc", c_trunc}});
                const EigenCheck e = eigen_residual(Z, V, c_trunc);
                result = {{"residual", to_json(e.residual)},
                          {"truncation_bound", to_json(e.truncation_bound)},
                          {"rounding_floor", to_json(e.rounding_floor)},
                          {"tail_bound", to_json(e.tail_bound)},
                          {"within_10x", leq_h(e.residual, Hyperbolic(10.0) * e.tail_bound)}};
            }
        } else if (verify->parsed()) {
            VerifyOptions o;
            o.seed = g.seed;
            o.samples = v_samples;
            o.threads = v_threads;
            o.quick = v_quick;
            params = globals_json(g);
            params.update({{"samples", v_samples}, {"quick", v_quick}});
            const VerifyReport r = verify_all(o);
            result = verify_json(r);
            if (!r.pass()) status = domain_error;
        }
        open_sink();
        const std::string command = app.get_subcommands().front()->get_name();
        *sink << json{{"command", command}, {"params", params}, {"result", result}}.dump(2) << "\n";
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const Error& e) {
        err << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        return domain_error;
    }
}

}  // namespace bcbessel::cli
