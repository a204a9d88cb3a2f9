#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "patho/cantor.hpp"
#include "patho/cli/commands.hpp"
#include "patho/cli/properties.hpp"
#include "patho/digit_surjection.hpp"
#include "patho/error.hpp"
#include "patho/expansion.hpp"
#include "patho/projections.hpp"
#include "patho/qspan.hpp"

namespace py = pybind11;
using namespace patho;

// Exact values cross the boundary as literals: "n/d" for rationals,
// "a+b*s2" for surds. The Python package converts to and from Fraction.

namespace {

Rational q(const std::string& s) { return Rational::parse(s); }

Projection projection(const std::string& name) {
  if (name == "p") return Projection::P;
  if (name == "q") return Projection::Q;
  throw DomainError("projection must be 'p' or 'q'");
}

AdditiveMap make_map(const std::vector<std::string>& basis, const std::vector<std::vector<std::string>>& matrix) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : matrix) {
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(q(v));
  }
  return AdditiveMap(SpanBasis::parse(basis), std::move(rows));
}

SpanElement element(const AdditiveMap& f, const std::vector<std::string>& coords) {
  std::vector<Rational> c;
  for (const auto& v : coords) c.push_back(q(v));
  return SpanElement(f.basis(), std::move(c));
}

std::vector<std::string> coords(const SpanElement& x) {
  std::vector<std::string> out;
  for (const auto& c : x.coords()) out.push_back(c.str());
  return out;
}

py::dict expansion_dict(const DigitExpansion& e) {
  py::dict d;
  d["base"] = e.base;
  d["sign"] = e.sign;
  d["integer_digits"] = std::vector<int>(e.integer_digits.begin(), e.integer_digits.end());
  d["prefix"] = std::vector<int>(e.prefix.begin(), e.prefix.end());
  d["cycle"] = std::vector<int>(e.cycle.begin(), e.cycle.end());
  d["text"] = e.str();
  return d;
}

Digits digits(const std::vector<int>& v) {
  Digits out;
  for (int d : v) {
    if (d < 0 || d > 255) throw DomainError("digit out of range");
    out.push_back(static_cast<std::uint8_t>(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_patho, m) {
  m.doc() = "exact evaluation of pathological real functions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UndecidedError>(m, "UndecidedError", PyExc_RuntimeError);

  m.def("to_expansion", [](const std::string& x, int base) { return expansion_dict(to_expansion(q(x), base)); },
        py::arg("x"), py::arg("base"));
  m.def("from_expansion",
        [](int base, int sign, const std::vector<int>& integer_digits, const std::vector<int>& prefix,
           const std::vector<int>& cycle) {
          return from_expansion(DigitExpansion{base, sign, digits(integer_digits), digits(prefix), digits(cycle)}).str();
        },
        py::arg("base"), py::arg("sign"), py::arg("integer_digits"), py::arg("prefix"), py::arg("cycle"));
  m.def("cylinder_for_interval",
        [](const std::string& l, const std::string& r, int base) {
          const CylinderPrefix c = cylinder_for_interval(q(l), q(r), base);
          return py::make_tuple(c.value.str(), c.depth);
        },
        py::arg("l"), py::arg("r"), py::arg("base"));

  m.def("surd_compare", [](const std::string& u, const std::string& v) {
    const auto c = surd_compare(QuadraticSurd::parse(u), QuadraticSurd::parse(v));
    return c == std::strong_ordering::less ? -1 : c == std::strong_ordering::greater ? 1 : 0;
  });
  m.def("project", [](const std::string& f, const std::string& x) {
    return apply(projection(f), QuadraticSurd::parse(x)).str();
  }, py::arg("f"), py::arg("x"));
  m.def("classify_shift", [](const std::string& f, const std::string& t) {
    const auto c = classify_shift(projection(f), QuadraticSurd::parse(t));
    py::object dir = py::none();
    if (c.direction) dir = py::str(std::string(to_string(*c.direction)));
    return py::make_tuple(std::string(to_string(c.kind)), c.increment.str(), dir);
  }, py::arg("f"), py::arg("t"));
  m.def("density_witness",
        [](const std::string& f, const std::string& x1, const std::string& x2, const std::string& y1,
           const std::string& y2) { return density_witness(projection(f), q(x1), q(x2), q(y1), q(y2)).str(); },
        py::arg("f"), py::arg("x_lo"), py::arg("x_hi"), py::arg("y_lo"), py::arg("y_hi"));

  m.def("eval_h", [](const std::string& x, bool signed_mode) {
    return (signed_mode ? eval_h_signed(q(x)) : eval_h(q(x))).str();
  }, py::arg("x"), py::arg("signed_mode") = false);
  m.def("preimage_h", [](const std::string& y, const std::string& l, const std::string& r, bool signed_mode) {
    return preimage_h(q(y), q(l), q(r), signed_mode).str();
  }, py::arg("y"), py::arg("l"), py::arg("r"), py::arg("signed_mode") = false);

  m.def("basis_interval", [](std::size_t n) {
    const Interval i = basis_interval(n);
    return py::make_tuple(i.lo.str(), i.hi.str());
  });
  m.def("place_cantor", [](std::size_t i) {
    const AffineCantor s = [&] {
      py::gil_scoped_release release;
      return place_cantor(i);
    }();
    py::dict d;
    d["index"] = s.index;
    d["a"] = s.basis.lo.str();
    d["b"] = s.basis.hi.str();
    d["c"] = s.c.str();
    d["d"] = s.d.str();
    d["t"] = s.cover_depth;
    return d;
  });
  m.def("encode_value", [](const std::string& y) {
    const BitStream s = encode_value(q(y));
    return py::make_tuple(std::vector<int>(s.prefix.begin(), s.prefix.end()),
                          std::vector<int>(s.cycle.begin(), s.cycle.end()));
  });
  m.def("decode_bits", [](const std::vector<int>& prefix, const std::vector<int>& cycle) {
    return decode_bits(BitStream{digits(prefix), digits(cycle)}).str();
  });
  m.def("eval_f", [](const std::string& x, std::size_t max_index) {
    const CantorValue v = [&] {
      py::gil_scoped_release release;
      return eval_f(q(x), max_index);
    }();
    return py::make_tuple(v.value.str(), v.verified_up_to, v.found);
  }, py::arg("x"), py::arg("max_index"));
  m.def("preimage_f", [](const std::string& y, const std::string& l, const std::string& r) {
    const CantorPreimage p = [&] {
      py::gil_scoped_release release;
      return preimage_f(q(y), q(l), q(r));
    }();
    return py::make_tuple(p.x.str(), p.index);
  }, py::arg("y"), py::arg("l"), py::arg("r"));

  m.def("apply_map", [](const std::vector<std::string>& basis, const std::vector<std::vector<std::string>>& matrix,
                        const std::vector<std::string>& x) {
    const AdditiveMap f = make_map(basis, matrix);
    return coords(apply_map(f, element(f, x)));
  }, py::arg("basis"), py::arg("matrix"), py::arg("x"));
  m.def("kernel_basis", [](const std::vector<std::string>& basis, const std::vector<std::vector<std::string>>& matrix) {
    std::vector<std::vector<std::string>> out;
    for (const auto& k : kernel_basis(make_map(basis, matrix))) out.push_back(coords(k));
    return out;
  }, py::arg("basis"), py::arg("matrix"));
  m.def("rank", [](const std::vector<std::string>& basis, const std::vector<std::vector<std::string>>& matrix) {
    return rank(make_map(basis, matrix));
  }, py::arg("basis"), py::arg("matrix"));
  m.def("surjection_witness",
        [](const std::vector<std::string>& basis, const std::vector<std::vector<std::string>>& matrix,
           const std::vector<std::string>& y, const std::string& l, const std::string& r) {
          const AdditiveMap f = make_map(basis, matrix);
          return coords(surjection_witness(f, element(f, y), q(l), q(r)));
        },
        py::arg("basis"), py::arg("matrix"), py::arg("y"), py::arg("l"), py::arg("r"));
  m.def("real_compare",
        [](const std::vector<std::string>& basis, const std::vector<std::string>& u, const std::vector<std::string>& v,
           unsigned budget) {
          const AdditiveMap id = AdditiveMap::identity(SpanBasis::parse(basis));
          return std::string(to_string(real_compare(element(id, u), element(id, v), budget)));
        },
        py::arg("basis"), py::arg("u"), py::arg("v"), py::arg("precision_budget") = kDefaultPrecisionBudget);

  m.def("verify", [](const std::string& suite, std::size_t trials, std::uint64_t seed) {
    return cli::run_suite(suite, trials, seed).json();
  }, py::arg("suite"), py::arg("trials"), py::arg("seed"), py::call_guard<py::gil_scoped_release>());
  m.def("suite_names", &cli::suite_names);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
