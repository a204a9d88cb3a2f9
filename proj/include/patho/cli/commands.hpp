#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "patho/cli/descriptor.hpp"

namespace patho::cli {

/// Exit statuses.
constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

/// Entry point of the `patho` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SampleRow {
  std::string x;
  std::string fx;
};

/// Grid from, from + step, ... up to `to`. Exact kinds print rational or surd
/// literals, the float kinds shortest round-trip decimals.
std::vector<SampleRow> sample(const FunctionDescriptor& f, const Rational& from, const Rational& to,
                              const Rational& step, std::size_t max_index = 64);

void write_csv(std::ostream& out, const FunctionDescriptor& f, const std::vector<SampleRow>& rows);
void write_json(std::ostream& out, const FunctionDescriptor& f, const std::vector<SampleRow>& rows);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace patho::cli
