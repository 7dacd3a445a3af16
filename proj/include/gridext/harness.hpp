#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gridext/counting.hpp"
#include "gridext/grid.hpp"
#include "gridext/sampling.hpp"

namespace gridext {

struct HarnessConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 10'000;
  std::size_t mcmc_steps = 1'000;
  std::size_t state_cap = kDefaultStateCap;
};

/// One named assertion: which operation produced `measured`, and the relation
/// it must satisfy against `expected`.
struct Check {
  std::string shape;
  std::string name;
  std::string operation;
  std::string relation;
  std::string measured;
  std::string expected;
  bool passed = false;
};

struct VerificationSuite {
  std::string name;
  std::vector<GridShape> shapes;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
};

/// counting, extremes, bounds, entropy, sampling, all.
std::vector<std::string> suite_names();

/// DomainError for an unknown suite name.
VerificationSuite run_suite(std::string_view name, const HarnessConfig& cfg = {});

struct ConjectureRow {
  int m = 0;
  int n = 0;
  std::size_t size = 0;
  std::string method;  // "exact" or "mcmc"
  double avg_jump = 0;
  double ratio = 0;  // avg_jump / m^n
  double std_error = 0;  // of ratio; 0 for exact rows
  std::string avg_jump_exact;  // rational, exact rows only
};

/// Average jump number of [m]^n for every m, n >= 2 with m^n <= max_size,
/// ordered by size then m. Exact through the down-set lattice when it fits
/// under cfg.state_cap, otherwise estimated from cfg.samples MCMC runs.
std::vector<ConjectureRow> conjecture_scan(std::size_t max_size, const HarnessConfig& cfg = {});

}  // namespace gridext
