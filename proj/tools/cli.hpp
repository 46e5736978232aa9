#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcbessel/bicomplex.hpp"
#include "bcbessel/quadrature.hpp"

namespace bcbessel::cli {

enum ExitCode { ok = 0, domain_error = 1, usage_error = 2 };

// args excludes the program name. JSON or CSV goes to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {"e1": [re, im], "e2": [re, im]}
nlohmann::json to_json(const Bicomplex& z);
// {"e1": x, "e2": y}
nlohmann::json to_json(Hyperbolic h);
Bicomplex bicomplex_from_json(const nlohmann::json& j);
// Accepts {"e1": x, "e2": y} or a bare number.
Hyperbolic hyperbolic_from_json(const nlohmann::json& j);
QuadratureConfig quadrature_from_json(const nlohmann::json& j);

}  // namespace bcbessel::cli
