#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gridext/counting.hpp"
#include "gridext/grid.hpp"
#include "gridext/jumps.hpp"

namespace gridext {

// Random streams
//
// All randomness comes from std::mt19937_64 seeded with a single 64-bit value
// (the engine's standard seeding, identical across conforming libraries).
// Draws are mapped without std distributions, whose output is unspecified:
//   uniform()    = (x >> 11) * 2^-53
//   below(n)     = x mod n, rejecting x < 2^64 mod n
//   below(B) big = ceil(bits(B-1)/64) words, most significant first, top word
//                  masked to bits(B-1) mod 64 bits, rejected while >= B
// A batch of samples uses one stream per sample: sample i is drawn from the
// engine seeded with derive_seed(seed, i), the (i+1)-th SplitMix64 output
// starting from state seed.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n);
  BigCount below(const BigCount& bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

enum class SamplingMethod { exact, mcmc };

std::string to_string(SamplingMethod method);
/// "exact" or "mcmc"; DomainError otherwise.
SamplingMethod parse_sampling_method(std::string_view text);

struct SamplerConfig {
  SamplingMethod method = SamplingMethod::exact;
  std::uint64_t seed = 0;
  std::size_t mcmc_steps = 0;
  double laziness = 0.5;
  std::size_t state_cap = kDefaultStateCap;

  /// DomainError unless laziness is in [0, 1].
  void validate() const;
};

/// Uniform sampling by walking the down-set lattice, choosing each next pit v
/// with probability g(D + v) / g(D).
class ExactSampler {
 public:
  explicit ExactSampler(GridShape shape, std::size_t state_cap = kDefaultStateCap);

  const ExtensionLattice& lattice() const noexcept { return lattice_; }
  std::vector<std::size_t> sample_order(Rng& rng) const;

 private:
  ExtensionLattice lattice_;
};

/// Lazy adjacent-transposition walk started at the rank-lex order. Each step
/// draws k uniform in [1, size-1], then holds with probability laziness,
/// otherwise swaps positions k and k+1 when those points are incomparable.
class McmcSampler {
 public:
  explicit McmcSampler(GridShape shape);

  const GridShape& shape() const noexcept { return shape_; }
  std::vector<std::size_t> run(std::size_t steps, double laziness, Rng& rng) const;
  /// One step of the walk applied in place to a valid extension order.
  void step(std::vector<std::size_t>& order, double laziness, Rng& rng) const;

 private:
  GridShape shape_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> up_;  // dimension() slots per point, padded with size()
};

LinearExtension sample_exact(const GridShape& shape, std::uint64_t seed,
                             std::size_t state_cap = kDefaultStateCap);
/// Draws from Rng(cfg.seed).
LinearExtension sample_mcmc(const GridShape& shape, const SamplerConfig& cfg);

using SampleVisitor = std::function<void(std::size_t, std::span<const std::size_t>)>;

/// Draws `count` samples with cfg.method; sample i uses derive_seed(cfg.seed, i).
void for_each_sample(const GridShape& shape, const SamplerConfig& cfg, std::size_t count, const SampleVisitor& visit);
std::vector<std::vector<std::size_t>> draw_samples(const GridShape& shape, const SamplerConfig& cfg,
                                                   std::size_t count);

struct Estimate {
  double mean = 0;
  double std_error = 0;
};

struct JumpStats {
  std::size_t samples = 0;
  Estimate degree;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<Estimate> pits_profile;  // entry k-1 for time k
};

/// Monte-Carlo jump and pits statistics; DomainError when samples == 0.
JumpStats empirical_jump_stats(const GridShape& shape, const SamplerConfig& cfg, std::size_t samples);

/// h[k-1] = H[L^{k+1} | L^{[k]}] in bits, k = 1 .. size-1, for L uniform.
struct EntropyProfile {
  std::vector<double> h;
  double total() const;
};

EntropyProfile entropy_profile_exact(const GridShape& shape, std::size_t state_cap = kDefaultStateCap);

/// Fraction of times k in [1, size-1] with pits(L, k) below `threshold`.
double deficit_fraction(const PitsSequence& pits, double threshold);

/// Monte-Carlo expected fraction of times with pits < 2^{-R} (me/2)^{n-1}.
/// Equilateral shapes only.
Estimate pits_deficit_fraction(const GridShape& shape, const SamplerConfig& cfg, std::size_t samples, double R);
/// The same expectation computed exactly over the uniform distribution.
double pits_deficit_fraction_exact(const GridShape& shape, double R, std::size_t state_cap = kDefaultStateCap);

/// Exact average jump number s-bar(P) as a rational, without enumeration.
mpq_class average_jump_number_exact(const GridShape& shape, std::size_t state_cap = kDefaultStateCap);

struct ChiSquare {
  double statistic = 0;
  double dof = 0;
  double p_value = 1;
};

/// Pearson test of observed cell counts against the uniform distribution.
ChiSquare chi_square_uniform(std::span<const std::size_t> observed);

/// Total variation distance between the empirical cell frequencies and uniform.
double tv_distance_uniform(std::span<const std::size_t> observed);

}  // namespace gridext
