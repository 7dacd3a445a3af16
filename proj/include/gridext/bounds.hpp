#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gridext/counting.hpp"

namespace gridext {

/// A closed-form bound evaluated at specific parameters. `vacuous` marks
/// values that carry no information there (a nonpositive lower bound, or a
/// fraction/probability bound of at least 1).
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  std::variant<double, BigCount> value;
  bool vacuous = false;

  double real() const;
};

// The real-valued formulas take m as a double so that symbolic sizes such as
// m = 2^192 can be evaluated; m^n itself is never materialized as an integer.

/// (1 + lg n) / (n - 1). DomainError for n <= 1.
double beta(int n);

/// (n-1) m^n (lg m - beta(n)) bits; vacuous when <= 0.
BoundReport entropy_lower_bound(double m, int n);

/// m^n (1 - sqrt(48 lg n / lg m)); vacuous when lg m <= 48 lg n.
BoundReport avg_jump_lower_bound(double m, int n);

/// 2^{-R} (me/2)^{n-1}. DomainError for R <= 0.
BoundReport pits_threshold(double m, int n, double R);

/// (1 + lg n) / R; vacuous when >= 1. DomainError for R <= 0.
BoundReport pits_fraction_bound(int n, double R);

/// (48 lg n / lg m)^{1/4}; vacuous when >= 1.
BoundReport almost_regular_fraction(double m, int n);

/// 1 / delta; vacuous when >= 1. DomainError for delta < 1.
BoundReport markov_tail(double delta);

/// (me/2)^{n-1}, the antichain ceiling T.
BoundReport antichain_ceiling(double m, int n);

/// The two ends of the normalized count window, as reports.
std::vector<BoundReport> prop1_window(int n);

/// Relative slack used by eq1_check: 1e-12.
inline constexpr double kEq1RelativeSlack = 1e-12;

/// Whether sum_j lgamma(b_j + 1) >= s * lgamma(mean + 1), evaluated in double
/// precision with kEq1RelativeSlack. DomainError on empty input or b_j < 1.
bool eq1_check(std::span<const int> b);

/// Every formula applicable at (m, n), plus the R- and delta-dependent ones
/// when given. Order is fixed.
std::vector<BoundReport> bound_reports(double m, int n, std::optional<double> R, std::optional<double> delta);

}  // namespace gridext
