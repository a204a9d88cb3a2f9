#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "patho/qspan.hpp"

namespace patho::cli {

enum class Kind { P, Q, H, HSigned, CantorF, Additive, QuasiPlus, QuasiMinus, Recip };

/// Which function a command acts on. Tokens: p, q, h, hs, cf, recip,
/// quasi:sin+x/2, quasi:sin-x/2, map:<file.json>.
struct FunctionDescriptor {
  Kind kind = Kind::P;
  std::string token;
  std::optional<AdditiveMap> map;  // Additive only

  /// False for the floating-point plot functions.
  bool exact() const { return kind != Kind::QuasiPlus && kind != Kind::QuasiMinus; }
};

FunctionDescriptor parse_descriptor(std::string_view token);

/// {"basis": ["1", "sqrt:2"], "matrix": [["1", "0"], [0, "-1/2"]]}
AdditiveMap map_from_json(const nlohmann::json& doc);
AdditiveMap load_map(const std::string& path);

/// sin(x) +- x/2 and the reciprocal counterexample, in doubles.
double eval_float(const FunctionDescriptor& f, double x);

/// Comma-separated list of rational literals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace patho::cli
