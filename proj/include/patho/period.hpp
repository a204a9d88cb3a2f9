#pragma once

#include <optional>
#include <string_view>

namespace patho {

enum class ShiftKind { Period, Quasiperiod };
enum class Direction { Increasing, Decreasing };

/// How f(x + t) relates to f(x): equal (period) or offset by a nonzero
/// increment c (quasiperiod). `direction` is set only for quasiperiods and
/// is Increasing iff t and c have the same sign.
template <class Increment>
struct PeriodClass {
  ShiftKind kind = ShiftKind::Period;
  Increment increment{};
  std::optional<Direction> direction;

  bool is_period() const { return kind == ShiftKind::Period; }
};

constexpr std::string_view to_string(ShiftKind k) {
  return k == ShiftKind::Period ? "period" : "quasiperiod";
}

constexpr std::string_view to_string(Direction d) {
  return d == Direction::Increasing ? "increasing" : "decreasing";
}

}  // namespace patho
