#include "gridext/sampling.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "gridext/bounds.hpp"
#include "gridext/errors.hpp"

namespace gridext {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t reject_under = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = next();
    if (x >= reject_under) return x % n;
  }
}

BigCount Rng::below(const BigCount& bound) {
  if (bound <= 0) throw DomainError("Rng::below needs a positive bound");
  if (bound == 1) return 0;
  const BigCount top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  while (true) {
    BigCount value = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = next();
      if (w == 0 && top_bits < 64) x &= (std::uint64_t{1} << top_bits) - 1;
      value <<= 64;
      // mpz from a 64-bit limb without relying on unsigned long width.
      BigCount limb;
      mpz_import(limb.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
      value += limb;
    }
    if (value < bound) return value;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string to_string(SamplingMethod method) { return method == SamplingMethod::exact ? "exact" : "mcmc"; }

SamplingMethod parse_sampling_method(std::string_view text) {
  if (text == "exact") return SamplingMethod::exact;
  if (text == "mcmc") return SamplingMethod::mcmc;
  throw DomainError("unknown sampling method '" + std::string(text) + "'");
}

void SamplerConfig::validate() const {
  if (!(laziness >= 0 && laziness <= 1)) throw DomainError("laziness must lie in [0, 1]");
}

ExactSampler::ExactSampler(GridShape shape, std::size_t state_cap) : lattice_(std::move(shape), state_cap) {}

std::vector<std::size_t> ExactSampler::sample_order(Rng& rng) const {
  std::vector<std::size_t> order;
  order.reserve(lattice_.shape().size());
  std::size_t id = 0;
  while (true) {
    const auto moves = lattice_.transitions(id);
    if (moves.empty()) break;
    BigCount r = rng.below(lattice_.completions(id));
    std::size_t pick = 0;
    for (; pick + 1 < moves.size(); ++pick) {
      const auto& weight = lattice_.completions(moves[pick].child);
      if (r < weight) break;
      r -= weight;
    }
    order.push_back(moves[pick].pit);
    id = moves[pick].child;
  }
  return order;
}

McmcSampler::McmcSampler(GridShape shape) : shape_(std::move(shape)), start_(rank_lex_order(shape_)) {
  const auto k = static_cast<std::size_t>(shape_.dimension());
  up_.assign(shape_.size() * k, shape_.size());
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    const auto covers = shape_.upper_covers(i);
    std::copy(covers.begin(), covers.end(), up_.begin() + static_cast<std::ptrdiff_t>(i * k));
  }
}

void McmcSampler::step(std::vector<std::size_t>& order, double laziness, Rng& rng) const {
  const std::size_t n = order.size();
  if (n < 2) return;
  const std::size_t t = rng.below(n - 1);  // swap positions t, t+1 (times t+1, t+2)
  if (rng.uniform() < laziness) return;
  const std::size_t a = order[t];
  const std::size_t b = order[t + 1];
  // Consecutive points of an extension are comparable only as a cover pair.
  const auto k = static_cast<std::size_t>(shape_.dimension());
  for (std::size_t j = 0; j < k; ++j) {
    if (up_[a * k + j] == b) return;
  }
  std::swap(order[t], order[t + 1]);
}

std::vector<std::size_t> McmcSampler::run(std::size_t steps, double laziness, Rng& rng) const {
  std::vector<std::size_t> order = start_;
  for (std::size_t i = 0; i < steps; ++i) step(order, laziness, rng);
  return order;
}

LinearExtension sample_exact(const GridShape& shape, std::uint64_t seed, std::size_t state_cap) {
  Rng rng(seed);
  return LinearExtension(shape, ExactSampler(shape, state_cap).sample_order(rng));
}

LinearExtension sample_mcmc(const GridShape& shape, const SamplerConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  return LinearExtension(shape, McmcSampler(shape).run(cfg.mcmc_steps, cfg.laziness, rng));
}

void for_each_sample(const GridShape& shape, const SamplerConfig& cfg, std::size_t count, const SampleVisitor& visit) {
  cfg.validate();
  if (cfg.method == SamplingMethod::exact) {
    const ExactSampler sampler(shape, cfg.state_cap);
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng(derive_seed(cfg.seed, i));
      visit(i, sampler.sample_order(rng));
    }
  } else {
    const McmcSampler sampler(shape);
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng(derive_seed(cfg.seed, i));
      visit(i, sampler.run(cfg.mcmc_steps, cfg.laziness, rng));
    }
  }
}

std::vector<std::vector<std::size_t>> draw_samples(const GridShape& shape, const SamplerConfig& cfg,
                                                   std::size_t count) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  for_each_sample(shape, cfg, count,
                  [&](std::size_t, std::span<const std::size_t> order) { out.emplace_back(order.begin(), order.end()); });
  return out;
}

namespace {

// Running mean and variance (Welford).
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  Estimate estimate() const {
    const double var = n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    return {mean_, n_ > 0 ? std::sqrt(var / static_cast<double>(n_)) : 0.0};
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

}  // namespace

JumpStats empirical_jump_stats(const GridShape& shape, const SamplerConfig& cfg, std::size_t samples) {
  if (samples == 0) throw DomainError("empirical_jump_stats needs at least one sample");
  Accumulator degree;
  std::vector<Accumulator> pits(shape.size());
  JumpStats out;
  out.samples = samples;
  for_each_sample(shape, cfg, samples, [&](std::size_t, std::span<const std::size_t> order) {
    const auto d = jumps(shape, order).degree();
    degree.add(static_cast<double>(d));
    ++out.degree_histogram[d];
    const auto seq = pits_sequence(shape, order);
    for (std::size_t k = 0; k < seq.counts.size(); ++k) pits[k].add(static_cast<double>(seq.counts[k]));
  });
  out.degree = degree.estimate();
  for (const auto& acc : pits) out.pits_profile.push_back(acc.estimate());
  return out;
}

double EntropyProfile::total() const {
  double sum = 0;
  for (double x : h) sum += x;
  return sum;
}

EntropyProfile entropy_profile_exact(const GridShape& shape, std::size_t state_cap) {
  const ExtensionLattice lattice(shape, state_cap);
  const BigCount& total = lattice.count();
  EntropyProfile out;
  for (std::size_t k = 1; k < shape.size(); ++k) {
    double h = 0;
    for (auto id : lattice.layer(k)) {
      const auto moves = lattice.transitions(id);
      if (moves.size() < 2) continue;
      const BigCount& g = lattice.completions(id);
      double conditional = 0;
      for (const auto& t : moves) {
        const double p = mpq_class(lattice.completions(t.child), g).get_d();
        conditional -= p * std::log2(p);
      }
      const double weight = mpq_class(lattice.prefixes(id) * g, total).get_d();
      h += weight * conditional;
    }
    out.h.push_back(h);
  }
  return out;
}

double deficit_fraction(const PitsSequence& pits, double threshold) {
  const std::size_t times = pits.counts.size() - 1;
  if (times == 0) return 0;
  std::size_t deficit = 0;
  for (std::size_t k = 0; k < times; ++k) deficit += static_cast<double>(pits.counts[k]) < threshold;
  return static_cast<double>(deficit) / static_cast<double>(times);
}

namespace {

double equilateral_threshold(const GridShape& shape, double R) {
  if (!shape.equilateral()) {
    throw DomainError("pits deficit threshold needs an equilateral grid [m]^n, got " + shape.to_string());
  }
  return pits_threshold(shape.length(0), shape.dimension(), R).real();
}

}  // namespace

Estimate pits_deficit_fraction(const GridShape& shape, const SamplerConfig& cfg, std::size_t samples, double R) {
  const double threshold = equilateral_threshold(shape, R);
  if (samples == 0) throw DomainError("pits_deficit_fraction needs at least one sample");
  Accumulator acc;
  for_each_sample(shape, cfg, samples, [&](std::size_t, std::span<const std::size_t> order) {
    acc.add(deficit_fraction(pits_sequence(shape, order), threshold));
  });
  return acc.estimate();
}

double pits_deficit_fraction_exact(const GridShape& shape, double R, std::size_t state_cap) {
  const double threshold = equilateral_threshold(shape, R);
  const ExtensionLattice lattice(shape, state_cap);
  const std::size_t times = shape.size() - 1;
  if (times == 0) return 0;
  // pits(L, k) depends only on the prefix set L^{[k]}.
  mpz_class weighted = 0;
  for (std::size_t k = 1; k <= times; ++k) {
    for (auto id : lattice.layer(k)) {
      if (static_cast<double>(lattice.transitions(id).size()) < threshold) {
        weighted += lattice.prefixes(id) * lattice.completions(id);
      }
    }
  }
  return mpq_class(weighted, lattice.count() * times).get_d();
}

mpq_class average_jump_number_exact(const GridShape& shape, std::size_t state_cap) {
  const ExtensionLattice lattice(shape, state_cap);
  // Count (extension, time) pairs where L^{k+1} covers L^k: the prefix D ends
  // with a maximal v, and the next point w covers v.
  mpz_class covers_total = 0;
  for (std::size_t k = 1; k < shape.size(); ++k) {
    for (auto id : lattice.layer(k)) {
      const DownSet& d = lattice.state(id);
      for (const auto& t : lattice.transitions(id)) {
        for (auto v : shape.lower_covers(t.pit)) {
          bool maximal = true;
          for (auto above : shape.upper_covers(v)) maximal = maximal && !d.contains(above);
          if (!maximal) continue;
          DownSet without = d;
          without.erase(v);
          covers_total += lattice.prefixes(*lattice.find(without)) * lattice.completions(t.child);
        }
      }
    }
  }
  mpq_class out(mpz_class(shape.size() - 1) * lattice.count() - covers_total, lattice.count());
  out.canonicalize();
  return out;
}

ChiSquare chi_square_uniform(std::span<const std::size_t> observed) {
  if (observed.size() < 2) throw DomainError("chi-square needs at least two cells");
  double total = 0;
  for (auto c : observed) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(observed.size());
  ChiSquare out;
  for (auto c : observed) {
    const double diff = static_cast<double>(c) - expected;
    out.statistic += diff * diff / expected;
  }
  out.dof = static_cast<double>(observed.size() - 1);
  out.p_value = boost::math::gamma_q(out.dof / 2, out.statistic / 2);
  return out;
}

double tv_distance_uniform(std::span<const std::size_t> observed) {
  double total = 0;
  for (auto c : observed) total += static_cast<double>(c);
  const double p = 1.0 / static_cast<double>(observed.size());
  double tv = 0;
  for (auto c : observed) tv += std::abs(static_cast<double>(c) / total - p);
  return tv / 2;
}

}  // namespace gridext
