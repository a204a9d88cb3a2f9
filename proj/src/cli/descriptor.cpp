#include "patho/cli/descriptor.hpp"

#include <cmath>
#include <fstream>

#include "patho/error.hpp"

namespace patho::cli {

FunctionDescriptor parse_descriptor(std::string_view token) {
  FunctionDescriptor f;
  f.token = std::string(token);
  if (token == "p") f.kind = Kind::P;
  else if (token == "q") f.kind = Kind::Q;
  else if (token == "h") f.kind = Kind::H;
  else if (token == "hs") f.kind = Kind::HSigned;
  else if (token == "cf") f.kind = Kind::CantorF;
  else if (token == "recip") f.kind = Kind::Recip;
  else if (token == "quasi:sin+x/2") f.kind = Kind::QuasiPlus;
  else if (token == "quasi:sin-x/2") f.kind = Kind::QuasiMinus;
  else if (token.starts_with("map:") && token.size() > 4) {
    f.kind = Kind::Additive;
    f.map = load_map(std::string(token.substr(4)));
  } else {
    throw ParseError("unknown function '" + std::string(token) + "'");
  }
  return f;
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("matrix entries must be integers or rational strings, got " + v.dump());
}

}  // namespace

AdditiveMap map_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("basis") || !doc.contains("matrix"))
    throw ParseError("map file needs \"basis\" and \"matrix\"");
  const auto& basis_json = doc["basis"];
  const auto& matrix_json = doc["matrix"];
  if (!basis_json.is_array() || !matrix_json.is_array()) throw ParseError("basis and matrix must be arrays");

  std::vector<std::string> tokens;
  for (const auto& t : basis_json) {
    if (!t.is_string()) throw ParseError("basis symbols must be strings");
    tokens.push_back(t.get<std::string>());
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : matrix_json) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(json_rational(v));
  }
  return AdditiveMap(SpanBasis::parse(tokens), std::move(rows));
}

AdditiveMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return map_from_json(doc);
}

double eval_float(const FunctionDescriptor& f, double x) {
  switch (f.kind) {
    case Kind::QuasiPlus: return std::sin(x) + x / 2;
    case Kind::QuasiMinus: return std::sin(x) - x / 2;
    case Kind::Recip: return x > 0 ? 1 / x : 0.0;
    default: throw DomainError(f.token + " has no floating-point evaluator");
  }
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    out.push_back(Rational::parse_decimal(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace patho::cli
