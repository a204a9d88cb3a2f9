#include "patho/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "patho/cantor.hpp"
#include "patho/cli/properties.hpp"
#include "patho/digit_surjection.hpp"
#include "patho/error.hpp"
#include "patho/projections.hpp"

namespace patho::cli {

namespace {

std::string digits_str(const Digits& d) {
  std::string s;
  for (auto v : d) s += static_cast<char>('0' + v);
  return s;
}

Rational recip(const Rational& x) { return x.sign() > 0 ? Rational(1) / x : Rational(0); }

SpanElement parse_element(const FunctionDescriptor& f, std::string_view text) {
  return SpanElement(f.map->basis(), parse_rational_list(text));
}

std::pair<Rational, Rational> parse_pair(std::string_view text, std::string_view what) {
  const auto v = parse_rational_list(text);
  if (v.size() != 2) throw ParseError(std::string(what) + " expects l,r");
  return {v[0], v[1]};
}

Projection projection_of(const FunctionDescriptor& f) {
  if (f.kind == Kind::P) return Projection::P;
  if (f.kind == Kind::Q) return Projection::Q;
  throw DomainError(f.token + ": expected p or q");
}

bool is_h(const FunctionDescriptor& f) { return f.kind == Kind::H || f.kind == Kind::HSigned; }

Rational eval_rational(const FunctionDescriptor& f, const Rational& x) {
  switch (f.kind) {
    case Kind::H: return eval_h(x);
    case Kind::HSigned: return eval_h_signed(x);
    case Kind::Recip: return recip(x);
    default: throw DomainError(f.token + " does not map rationals to rationals");
  }
}

struct Options {
  std::string fn;
  std::string x;
  std::string y;
  std::string interval;
  std::string shift;
  std::string rect;
  std::string step = "1/100";
  std::string format = "csv";
  std::string out;
  std::string suite;
  std::size_t max_index = 64;
  std::size_t placements = 20;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool show_digits = false;
  bool timing = false;
};

void show_decomposition(std::ostream& out, const Rational& x, bool signed_mode) {
  const HDecomposition d = decompose_h(x, signed_mode);
  out << "ternary " << d.expansion.str() << "\n";
  if (!d.last_twos) {
    out << "last two 2s: none\n";
    return;
  }
  out << "last two 2s: " << d.last_twos->first + 1 << "," << d.last_twos->second + 1 << "\n";
  out << "b block: " << digits_str(d.b_block) << "\n";
  out << "y digits: " << digits_str(d.y_prefix);
  if (!d.y_cycle.empty()) out << "(" << digits_str(d.y_cycle) << ")";
  out << "\n";
}

int cmd_eval(const Options& o, std::ostream& out) {
  const FunctionDescriptor f = parse_descriptor(o.fn);
  switch (f.kind) {
    case Kind::P:
    case Kind::Q: out << apply(projection_of(f), QuadraticSurd::parse(o.x)).str() << "\n"; break;
    case Kind::H:
    case Kind::HSigned: {
      const Rational x = Rational::parse_decimal(o.x);
      if (o.show_digits) show_decomposition(out, x, f.kind == Kind::HSigned);
      out << eval_rational(f, x).str() << "\n";
      break;
    }
    case Kind::Recip: out << recip(Rational::parse_decimal(o.x)).str() << "\n"; break;
    case Kind::CantorF: {
      const CantorValue v = eval_f(Rational::parse_decimal(o.x), o.max_index);
      out << v.value.str() << "\n";
      out << "verified_up_to " << v.verified_up_to << (v.found ? " (member of C_" + std::to_string(v.verified_up_to) + ")" : "") << "\n";
      break;
    }
    case Kind::Additive: out << apply_map(*f.map, parse_element(f, o.x)).str() << "\n"; break;
    case Kind::QuasiPlus:
    case Kind::QuasiMinus: out << format_double(eval_float(f, Rational::parse_decimal(o.x).to_double())) << "\n"; break;
  }
  return kOk;
}

int cmd_preimage(const Options& o, std::ostream& out) {
  const FunctionDescriptor f = parse_descriptor(o.fn);
  const auto [l, r] = parse_pair(o.interval, "--interval");
  bool ok = false;
  if (is_h(f)) {
    const Rational y = Rational::parse_decimal(o.y);
    const Rational x = preimage_h(y, l, r, f.kind == Kind::HSigned);
    out << x.str() << "\n";
    ok = eval_rational(f, x) == y && l < x && x < r;
  } else if (f.kind == Kind::CantorF) {
    const Rational y = Rational::parse_decimal(o.y);
    const CantorPreimage pre = preimage_f(y, l, r);
    out << pre.x.str() << "\n" << "index " << pre.index << "\n";
    const CantorValue v = eval_f(pre.x, pre.index + 1);
    ok = v.found && v.value == y && l < pre.x && pre.x < r;
  } else if (f.kind == Kind::Additive) {
    const SpanElement y = parse_element(f, o.y);
    const SpanElement x = surjection_witness(*f.map, y, l, r);
    out << x.str() << "\n";
    ok = apply_map(*f.map, x) == y;
  } else {
    throw DomainError(f.token + " has no preimage solver");
  }
  const std::string name = f.kind == Kind::CantorF || f.kind == Kind::Additive ? "f" : "h";
  out << name << "(x) = y: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? kOk : kPropertyFailure;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const FunctionDescriptor f = parse_descriptor(o.fn);
  auto print = [&](const auto& cls) {
    if (cls.is_period()) {
      out << "period\n";
    } else {
      out << "quasiperiod increment=" << cls.increment.str() << " direction=" << to_string(*cls.direction) << "\n";
    }
  };
  if (f.kind == Kind::Additive) print(classify_shift_additive(*f.map, parse_element(f, o.shift)));
  else print(classify_shift(projection_of(f), QuadraticSurd::parse(o.shift)));
  return kOk;
}

int cmd_density(const Options& o, std::ostream& out) {
  const FunctionDescriptor f = parse_descriptor(o.fn);
  const auto r = parse_rational_list(o.rect);
  if (r.size() != 4) throw ParseError("--rect expects x1,x2,y1,y2");
  const Projection p = projection_of(f);
  const QuadraticSurd w = density_witness(p, r[0], r[1], r[2], r[3]);
  out << w.str() << "\n";
  out << f.token << "(x) = " << apply(p, w).str() << "\n";
  return kOk;
}

int cmd_hypo(const Options& o, std::ostream& out) {
  const FunctionDescriptor f = parse_descriptor(o.fn);
  bool below = false;
  switch (f.kind) {
    case Kind::P:
    case Kind::Q:
      below = QuadraticSurd::parse(o.y) <= apply(projection_of(f), QuadraticSurd::parse(o.x));
      break;
    case Kind::H:
    case Kind::HSigned:
    case Kind::Recip:
      below = Rational::parse_decimal(o.y) <= eval_rational(f, Rational::parse_decimal(o.x));
      break;
    case Kind::CantorF: {
      const CantorValue v = eval_f(Rational::parse_decimal(o.x), o.max_index);
      if (!v.found)
        throw UndecidedError("x is in none of C_0..C_" + std::to_string(o.max_index - 1) +
                             "; f(x) is 0 only if it avoids every later set");
      below = Rational::parse_decimal(o.y) <= v.value;
      break;
    }
    case Kind::Additive: {
      const Comparison c = real_compare(parse_element(f, o.y), apply_map(*f.map, parse_element(f, o.x)));
      if (c == Comparison::Undecided) throw UndecidedError("order not certified within the precision budget");
      below = c != Comparison::Greater;
      break;
    }
    case Kind::QuasiPlus:
    case Kind::QuasiMinus: throw DomainError(f.token + " is not exactly evaluable");
  }
  out << (below ? "true" : "false") << "\n";
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const FunctionDescriptor f = parse_descriptor(o.fn);
  const auto [from, to] = parse_pair(o.interval, "--interval");
  const auto rows = sample(f, from, to, Rational::parse_decimal(o.step), o.max_index);
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw ParseError("cannot write " + o.out);
  }
  std::ostream& sink = o.out.empty() ? out : file;
  if (o.format == "csv") write_csv(sink, f, rows);
  else if (o.format == "json") write_json(sink, f, rows);
  else throw ParseError("--format must be csv or json");
  return kOk;
}

int cmd_cantor(const Options& o, std::ostream& out) {
  for (std::size_t i = 0; i < o.placements; ++i) {
    const AffineCantor set = place_cantor(i);
    nlohmann::ordered_json line;
    line["index"] = i;
    line["a"] = set.basis.lo.str();
    line["b"] = set.basis.hi.str();
    line["c"] = set.c.str();
    line["d"] = set.d.str();
    line["t"] = set.cover_depth;
    out << line.dump() << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PropertyReport report = run_suite(o.suite, o.trials, o.seed, o.threads);
  out << report.json(o.timing) << "\n";
  return report.passed() ? kOk : kPropertyFailure;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<SampleRow> sample(const FunctionDescriptor& f, const Rational& from, const Rational& to,
                              const Rational& step, std::size_t max_index) {
  if (!(from < to)) throw DomainError("empty sample range");
  if (step.sign() <= 0) throw DomainError("step must be positive");
  if (f.kind == Kind::Additive) throw DomainError("map descriptors are not sampled; use eval on coordinates");
  const Integer n = ((to - from) / step).floor();
  if (n > 10000000) throw DomainError("more than 10^7 sample points");
  std::vector<SampleRow> rows;
  for (long k = 0; k <= n.get_si(); ++k) {
    const Rational x = from + Rational(k) * step;
    SampleRow row;
    if (!f.exact() || f.kind == Kind::Recip) {
      const double xd = x.to_double();
      row = {format_double(xd), format_double(eval_float(f, xd))};
    } else if (f.kind == Kind::P || f.kind == Kind::Q) {
      row = {x.str(), apply(projection_of(f), QuadraticSurd(x)).str()};
    } else if (f.kind == Kind::CantorF) {
      row = {x.str(), eval_f(x, max_index).value.str()};
    } else {
      row = {x.str(), eval_rational(f, x).str()};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const FunctionDescriptor& f, const std::vector<SampleRow>& rows) {
  out << "x," << f.token << "\n";
  for (const auto& r : rows) out << r.x << "," << r.fx << "\n";
}

void write_json(std::ostream& out, const FunctionDescriptor& f, const std::vector<SampleRow>& rows) {
  nlohmann::ordered_json doc;
  doc["fn"] = f.token;
  doc["columns"] = {"x", f.token};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    if (f.exact() && f.kind != Kind::Recip) doc["rows"].push_back({r.x, r.fx});
    else doc["rows"].push_back({std::stod(r.x), std::stod(r.fx)});
  }
  out << doc.dump() << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact evaluation and verification of pathological real functions", "patho"};
  app.require_subcommand(1);
  Options o;

  auto fn = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--fn", o.fn, "p, q, h, hs, cf, recip, quasi:sin+x/2, quasi:sin-x/2, map:<file>");
    if (required) opt->required();
  };
  auto* eval = app.add_subcommand("eval", "evaluate f at x");
  fn(eval);
  eval->add_option("--x", o.x, "rational, surd a+b*s2, or coordinates")->required();
  eval->add_flag("--show-digits", o.show_digits, "print the ternary blocks read by h");
  eval->add_option("--max-index", o.max_index, "Cantor sets searched by cf");

  auto* pre = app.add_subcommand("preimage", "x in (l, r) with f(x) = y");
  fn(pre);
  pre->add_option("--y", o.y)->required();
  pre->add_option("--interval", o.interval, "l,r")->required();

  auto* cls = app.add_subcommand("classify", "period or quasiperiod");
  fn(cls);
  cls->add_option("--shift", o.shift)->required();

  auto* dens = app.add_subcommand("density-witness", "graph point inside a rectangle");
  fn(dens);
  dens->add_option("--rect", o.rect, "x1,x2,y1,y2")->required();

  auto* smp = app.add_subcommand("sample", "plot data");
  fn(smp);
  smp->add_option("--interval", o.interval, "from,to")->required();
  smp->add_option("--step", o.step);
  smp->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  smp->add_option("--out", o.out);
  smp->add_option("--max-index", o.max_index);

  auto* hypo = app.add_subcommand("hypo", "is y <= f(x)");
  fn(hypo);
  hypo->add_option("--x", o.x)->required();
  hypo->add_option("--y", o.y)->required();
  hypo->add_option("--max-index", o.max_index);

  auto* cantor = app.add_subcommand("cantor", "placement audit as JSON lines");
  cantor->add_option("--max-index", o.placements, "number of placements")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", o.suite);
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--threads", o.threads);
  verify->add_flag("--timing", o.timing, "include wall time in the report");
  bool list = false;
  verify->add_flag("--list", list, "print suite names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*pre) return cmd_preimage(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*dens) return cmd_density(o, out);
    if (*smp) return cmd_sample(o, out);
    if (*hypo) return cmd_hypo(o, out);
    if (*cantor) return cmd_cantor(o, out);
    if (*verify) {
      if (list) {
        for (const auto& name : suite_names()) out << name << "\n";
        return kOk;
      }
      if (o.suite.empty()) throw ParseError("verify needs a suite name (see --list)");
      return cmd_verify(o, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace patho::cli
