#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cen/matrix.hpp"

namespace cen::cli {

enum ExitCode : int { ok = 0, violation = 1, not_nilpotent = 2, shape_error = 3, parse_error = 4 };

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<ModP>, Matrix<Quaternion>>;

/// {"field": "q" | "fp" | "hq", "p": prime (fp only), "rows": [[...], ...]}.
/// Throws ParseError on malformed input and ShapeError on ragged rows.
AnyMatrix parse_matrix(const nlohmann::json& doc);
AnyMatrix load_matrix(const std::string& path);

template <Scalar S>
nlohmann::json scalar_to_json(const S& x);

template <Scalar S>
nlohmann::json matrix_to_json(const Matrix<S>& m);

/// Renders a report as indented "key: value" lines.
std::string render_text(const nlohmann::json& report);

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cen::cli
