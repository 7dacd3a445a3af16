#include "gridext/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "gridext/bounds.hpp"
#include "gridext/errors.hpp"
#include "gridext/jumps.hpp"
#include "gridext/transposition_graph.hpp"

namespace gridext {

bool VerificationSuite::passed() const { return failures() == 0; }

std::size_t VerificationSuite::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

std::string num(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

template <typename T>
std::string num(const T& x) {
  if constexpr (std::is_same_v<T, BigCount>) {
    return to_decimal(x);
  } else if constexpr (std::is_same_v<T, mpq_class>) {
    return x.get_str();
  } else {
    return std::to_string(x);
  }
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { suite_.name = std::move(name); }

  void shape(const GridShape& s) {
    if (std::find(suite_.shapes.begin(), suite_.shapes.end(), s) == suite_.shapes.end()) suite_.shapes.push_back(s);
  }

  void check(const GridShape& s, std::string name, std::string operation, std::string relation, std::string measured,
             std::string expected, bool passed) {
    shape(s);
    suite_.checks.push_back({s.to_string(), std::move(name), std::move(operation), std::move(relation),
                             std::move(measured), std::move(expected), passed});
  }

  void merge(VerificationSuite other) {
    for (auto& s : other.shapes) shape(s);
    for (auto& c : other.checks) suite_.checks.push_back(std::move(c));
  }

  VerificationSuite take() { return std::move(suite_); }

 private:
  VerificationSuite suite_;
};

std::vector<GridShape> counting_shapes() {
  return {GridShape({2, 2}),    GridShape({3, 3}), GridShape({2, 3}), GridShape({1, 5}),
          GridShape({2, 2, 2}), GridShape({2, 4}), GridShape({3, 4}), GridShape({2, 2, 3}),
          GridShape({4, 4}),    GridShape({2, 5})};
}

std::vector<std::pair<int, int>> extreme_cubes() { return {{2, 2}, {3, 2}, {2, 3}, {4, 2}}; }

std::vector<std::pair<int, int>> sandwich_cubes() { return {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}}; }

std::vector<GridShape> uneven_shapes() {
  return {GridShape({2, 3}), GridShape({2, 4}), GridShape({3, 4}), GridShape({2, 2, 3}), GridShape({1, 2, 5}),
          GridShape({2, 6})};
}

VerificationSuite counting_suite(const HarnessConfig& cfg) {
  SuiteBuilder b("counting");
  for (const auto& shape : counting_shapes()) {
    const BigCount dp = count_extensions(shape, cfg.state_cap);
    if (shape.dimension() == 2) {
      const BigCount hook = hook_length_count(shape);
      b.check(shape, "dp_equals_hook_length", "count_extensions", "==", num(dp), num(hook), dp == hook);
    }
    if (dp <= 100'000) {
      std::size_t listed = 0;
      for_each_extension(shape, [&](std::span<const std::size_t>) { ++listed; });
      b.check(shape, "dp_equals_enumeration", "count_extensions", "==", num(dp), std::to_string(listed), dp == listed);
    }
  }
  return b.take();
}

VerificationSuite extremes_suite(const HarnessConfig&) {
  SuiteBuilder b("extremes");
  for (auto [m, n] : extreme_cubes()) {
    const auto shape = GridShape::cube(m, n);
    const auto graph = build_graph(shape);
    const auto stats = graph_stats(graph);
    const auto top = static_cast<std::size_t>(std::pow(m, n)) - 3;
    const auto bottom = static_cast<std::size_t>(std::pow(m, n - 1)) - 1;
    b.check(shape, "max_degree", "graph_stats", "== m^n - 3", num(stats.max_deg), num(top), stats.max_deg == top);
    b.check(shape, "min_degree", "graph_stats", "== m^(n-1) - 1", num(stats.min_deg), num(bottom),
            stats.min_deg == bottom);
    const auto lex = jumps(rank_lex_extension(shape)).degree();
    b.check(shape, "rank_lex_attains_max", "rank_lex_extension", "== m^n - 3", num(lex), num(top), lex == top);
    b.check(shape, "connected", "graph_stats", "== true", stats.connected ? "true" : "false", "true", stats.connected);
    std::size_t boundary_jumps = 0;
    for (const auto& v : graph.vertices) {
      const auto profile = jumps(shape, v);
      for (auto t : profile.jump_times) boundary_jumps += (t == 1 || t == shape.size() - 1);
    }
    b.check(shape, "no_boundary_jumps", "jumps", "== 0", num(boundary_jumps), "0", boundary_jumps == 0);
  }
  return b.take();
}

VerificationSuite bounds_suite(const HarnessConfig& cfg) {
  SuiteBuilder b("bounds");
  std::vector<GridShape> shapes;
  for (auto [m, n] : sandwich_cubes()) shapes.push_back(GridShape::cube(m, n));
  for (auto& s : uneven_shapes()) shapes.push_back(s);

  for (const auto& shape : shapes) {
    const ExtensionLattice lattice(shape, cfg.state_cap);
    const BigCount& count = lattice.count();
    const BigCount lower = factorial_product_lower_bound(shape);
    const BigCount upper = lemma2_upper_bound(shape);
    b.check(shape, "factorial_lower_bound", "factorial_product_lower_bound", "<= count", num(lower), num(count),
            lower <= count);
    b.check(shape, "lemma2_upper_bound", "lemma2_upper_bound", ">= count", num(upper), num(count), upper >= count);
    const auto width = max_antichain_size(shape);
    b.check(shape, "sperner_width", "max_antichain_size", "* max a_j <= size", num(width * shape.max_length()),
            num(shape.size()), width * static_cast<std::uint64_t>(shape.max_length()) <= shape.size());

    if (!shape.equilateral() || shape.dimension() < 2 || shape.length(0) < 2) continue;
    const int m = shape.length(0);
    const int n = shape.dimension();

    const double normalized = prop1_normalized(m, n, count);
    const auto window = prop1_interval(n);
    b.check(shape, "prop1_sandwich", "prop1_normalized", "in [1/(ne)^(1/(n-1)), e/2]", num(normalized),
            "[" + num(window.lower) + ", " + num(window.upper) + "]", window.contains(normalized));

    const auto entropy = entropy_lower_bound(m, n);
    const double lg_count = log2_big(count);
    b.check(shape, "entropy_lower_bound", "entropy_lower_bound", entropy.vacuous ? "vacuous (reported)" : "<= lg A",
            num(entropy.real()), num(lg_count), entropy.vacuous || entropy.real() <= lg_count * (1 + 1e-9));

    const auto avg_bound = avg_jump_lower_bound(m, n);
    const mpq_class avg = average_jump_number_exact(shape, cfg.state_cap);
    b.check(shape, "avg_jump_lower_bound", "avg_jump_lower_bound",
            avg_bound.vacuous ? "vacuous (reported)" : "<= exact average jump number", num(avg_bound.real()),
            num(avg.get_d()), avg_bound.vacuous || avg_bound.real() <= avg.get_d());

    const auto regular = almost_regular_fraction(m, n);
    b.check(shape, "almost_regular_fraction", "almost_regular_fraction",
            regular.vacuous ? "vacuous (reported)" : "informative", num(regular.real()), "-", regular.vacuous);

    if (shape.size() <= 16) {
      const auto profile = entropy_profile_exact(shape, cfg.state_cap);
      const double ceiling = std::log2(antichain_ceiling(m, n).real());
      const double peak = *std::max_element(profile.h.begin(), profile.h.end());
      b.check(shape, "entropy_step_ceiling", "entropy_profile_exact", "max h[k] <= lg T", num(peak), num(ceiling),
              peak <= ceiling + 1e-12);
    }
    for (double R : {1.0, 2.0, 4.0}) {
      const double fraction = pits_deficit_fraction_exact(shape, R, cfg.state_cap);
      const auto bound = pits_fraction_bound(n, R);
      b.check(shape, "pits_deficit_R" + num(R), "pits_deficit_fraction_exact", "<= (1 + lg n)/R", num(fraction),
              num(bound.real()), fraction <= bound.real());
    }
  }
  return b.take();
}

VerificationSuite entropy_suite(const HarnessConfig& cfg) {
  SuiteBuilder b("entropy");
  for (const auto& shape :
       {GridShape({2, 2}), GridShape({3, 3}), GridShape({2, 2, 2}), GridShape({2, 3}), GridShape({4, 4})}) {
    const auto profile = entropy_profile_exact(shape, cfg.state_cap);
    const double lg_count = log2_big(count_extensions(shape, cfg.state_cap));
    const double rel = std::abs(profile.total() - lg_count) / std::max(1.0, lg_count);
    b.check(shape, "chain_rule", "entropy_profile_exact", "sum h == lg A (rel 1e-9)", num(profile.total()),
            num(lg_count), rel <= 1e-9);
    const double width = std::log2(static_cast<double>(max_antichain_size(shape)));
    const double peak = *std::max_element(profile.h.begin(), profile.h.end());
    b.check(shape, "support_bound", "entropy_profile_exact", "max h[k] <= lg width", num(peak), num(width),
            peak <= width + 1e-12);
  }
  return b.take();
}

VerificationSuite sampling_suite(const HarnessConfig& cfg) {
  SuiteBuilder b("sampling");
  const auto shape = GridShape::cube(3, 2);
  std::map<std::vector<std::size_t>, std::size_t> cell;
  for_each_extension(shape, [&](std::span<const std::size_t> order) {
    cell.emplace(std::vector(order.begin(), order.end()), cell.size());
  });
  auto tally = [&](SamplerConfig sc) {
    std::vector<std::size_t> observed(cell.size(), 0);
    for_each_sample(shape, sc, cfg.samples, [&](std::size_t, std::span<const std::size_t> order) {
      ++observed[cell.at(std::vector(order.begin(), order.end()))];
    });
    return observed;
  };

  SamplerConfig exact;
  exact.seed = cfg.seed;
  exact.state_cap = cfg.state_cap;
  const auto chi = chi_square_uniform(tally(exact));
  b.check(shape, "exact_sampler_chi_square", "sample_exact", "p-value >= 0.01", num(chi.p_value), "0.01",
          chi.p_value >= 0.01);

  SamplerConfig mcmc = exact;
  mcmc.method = SamplingMethod::mcmc;
  mcmc.mcmc_steps = cfg.mcmc_steps;
  const double tv = tv_distance_uniform(tally(mcmc));
  b.check(shape, "mcmc_tv_distance", "sample_mcmc", "< 0.05", num(tv), "0.05", tv < 0.05);
  return b.take();
}

using SuiteFn = VerificationSuite (*)(const HarnessConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {{"counting", counting_suite},
                                                                       {"extremes", extremes_suite},
                                                                       {"bounds", bounds_suite},
                                                                       {"entropy", entropy_suite},
                                                                       {"sampling", sampling_suite}};
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

VerificationSuite run_suite(std::string_view name, const HarnessConfig& cfg) {
  if (name == "all") {
    SuiteBuilder b("all");
    for (const auto& [suite, fn] : registry()) b.merge(fn(cfg));
    return b.take();
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return fn(cfg);
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<ConjectureRow> conjecture_scan(std::size_t max_size, const HarnessConfig& cfg) {
  std::vector<ConjectureRow> rows;
  for (int n = 2; (std::size_t{1} << n) <= max_size; ++n) {
    for (int m = 2;; ++m) {
      const double size = std::pow(m, n);
      if (size > static_cast<double>(max_size)) break;
      const auto shape = GridShape::cube(m, n);
      ConjectureRow row{m, n, shape.size(), "exact", 0, 0, 0, ""};
      try {
        const mpq_class avg = average_jump_number_exact(shape, cfg.state_cap);
        row.avg_jump = avg.get_d();
        row.avg_jump_exact = avg.get_str();
      } catch (const ResourceError&) {
        SamplerConfig sc;
        sc.method = SamplingMethod::mcmc;
        sc.seed = cfg.seed;
        sc.mcmc_steps = cfg.mcmc_steps;
        const auto stats = empirical_jump_stats(shape, sc, cfg.samples);
        row.method = "mcmc";
        row.avg_jump = stats.degree.mean;
        row.std_error = stats.degree.std_error;
      }
      row.ratio = row.avg_jump / size;
      row.std_error /= size;
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ConjectureRow& a, const ConjectureRow& b) {
    return a.size != b.size ? a.size < b.size : a.m < b.m;
  });
  return rows;
}

}  // namespace gridext
