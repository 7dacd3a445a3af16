#include "gridext/bounds.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "gridext/errors.hpp"

namespace gridext {

namespace {

void require_mn(double m, int n) {
  if (n < 2 || !(m >= 2)) throw DomainError("bound needs m >= 2 and n >= 2");
}

}  // namespace

double BoundReport::real() const {
  if (const auto* d = std::get_if<double>(&value)) return *d;
  return std::get<BigCount>(value).get_d();
}

double beta(int n) {
  if (n <= 1) throw DomainError("beta(n) needs n >= 2");
  return (1 + std::log2(n)) / (n - 1);
}

BoundReport entropy_lower_bound(double m, int n) {
  require_mn(m, n);
  const double value = (n - 1) * std::pow(m, n) * (std::log2(m) - beta(n));
  return {"entropy_lower_bound", {{"m", m}, {"n", n}}, value, value <= 0};
}

BoundReport avg_jump_lower_bound(double m, int n) {
  require_mn(m, n);
  const double lg_m = std::log2(m);
  const double lg_n = std::log2(n);
  const double value = std::pow(m, n) * (1 - std::sqrt(48 * lg_n / lg_m));
  return {"avg_jump_lower_bound", {{"m", m}, {"n", n}}, value, lg_m <= 48 * lg_n};
}

BoundReport pits_threshold(double m, int n, double R) {
  require_mn(m, n);
  if (!(R > 0)) throw DomainError("pits threshold needs R > 0");
  const double value = std::exp2(-R) * std::pow(m * std::numbers::e / 2, n - 1);
  return {"pits_threshold", {{"R", R}, {"m", m}, {"n", n}}, value, false};
}

BoundReport pits_fraction_bound(int n, double R) {
  if (n < 2) throw DomainError("pits fraction bound needs n >= 2");
  if (!(R > 0)) throw DomainError("pits fraction bound needs R > 0");
  const double value = (1 + std::log2(n)) / R;
  return {"pits_fraction_bound", {{"R", R}, {"n", n}}, value, value >= 1};
}

BoundReport almost_regular_fraction(double m, int n) {
  require_mn(m, n);
  const double value = std::pow(48 * std::log2(n) / std::log2(m), 0.25);
  return {"almost_regular_fraction", {{"m", m}, {"n", n}}, value, value >= 1};
}

BoundReport markov_tail(double delta) {
  if (!(delta >= 1)) throw DomainError("markov tail needs delta >= 1");
  const double value = 1 / delta;
  return {"markov_tail", {{"delta", delta}}, value, value >= 1};
}

BoundReport antichain_ceiling(double m, int n) {
  require_mn(m, n);
  return {"antichain_ceiling", {{"m", m}, {"n", n}}, std::pow(m * std::numbers::e / 2, n - 1), false};
}

std::vector<BoundReport> prop1_window(int n) {
  const auto window = prop1_interval(n);
  return {{"prop1_lower", {{"n", n}}, window.lower, false}, {"prop1_upper", {{"n", n}}, window.upper, false}};
}

bool eq1_check(std::span<const int> b) {
  if (b.empty()) throw DomainError("eq1_check needs a nonempty sequence");
  double lhs = 0;
  double total = 0;
  for (int x : b) {
    if (x < 1) throw DomainError("eq1_check needs positive integers");
    lhs += std::lgamma(x + 1.0);
    total += x;
  }
  const double s = static_cast<double>(b.size());
  const double rhs = s * std::lgamma(total / s + 1);
  return lhs >= rhs - kEq1RelativeSlack * std::max(1.0, std::abs(rhs));
}

std::vector<BoundReport> bound_reports(double m, int n, std::optional<double> R, std::optional<double> delta) {
  std::vector<BoundReport> out;
  out.push_back({"beta", {{"n", n}}, beta(n), false});
  out.push_back(antichain_ceiling(m, n));
  for (auto& r : prop1_window(n)) out.push_back(std::move(r));
  out.push_back(entropy_lower_bound(m, n));
  out.push_back(avg_jump_lower_bound(m, n));
  out.push_back(almost_regular_fraction(m, n));
  if (m == std::floor(m) && std::pow(m, n) <= 4096) {
    const auto shape = GridShape::cube(static_cast<int>(m), n);
    out.push_back({"factorial_product_lower_bound", {{"m", m}, {"n", n}}, factorial_product_lower_bound(shape), false});
    out.push_back({"lemma2_upper_bound", {{"m", m}, {"n", n}}, lemma2_upper_bound(shape), false});
  }
  if (R) {
    out.push_back(pits_threshold(m, n, *R));
    out.push_back(pits_fraction_bound(n, *R));
  }
  if (delta) out.push_back(markov_tail(*delta));
  return out;
}

}  // namespace gridext
