#include "gridext/counting.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "gridext/errors.hpp"

namespace gridext {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

double log2_big(const BigCount& value) {
  if (sgn(value) <= 0) throw DomainError("log2 of a nonpositive count");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

std::size_t DownSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool DownSet::is_down_closed(const GridShape& shape) const {
  if (universe_ != shape.size()) throw ShapeMismatch("down-set universe does not match grid " + shape.to_string());
  for (std::size_t i = 0; i < universe_; ++i) {
    if (!contains(i)) continue;
    for (auto lower : shape.lower_covers(i)) {
      if (!contains(lower)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> DownSet::pits(const GridShape& shape) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (contains(i)) continue;
    bool minimal = true;
    for (int j = 0; j < shape.dimension() && minimal; ++j) {
      if (shape.coord(i, j) > 1 && !contains(i - shape.stride(j))) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

ExtensionLattice::ExtensionLattice(GridShape shape, std::size_t state_cap) : shape_(std::move(shape)) {
  const std::size_t n = shape_.size();
  auto intern = [&](DownSet d) -> std::size_t {
    auto [it, inserted] = index_.try_emplace(d, states_.size());
    if (inserted) {
      if (states_.size() >= state_cap) throw ResourceError("down-set lattice of " + shape_.to_string(), state_cap);
      states_.push_back(std::move(d));
    }
    return it->second;
  };

  intern(DownSet(n));
  layer_offsets_.push_back(0);
  std::size_t layer_begin = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t layer_end = states_.size();
    for (std::size_t id = layer_begin; id < layer_end; ++id) {
      layer_ids_.push_back(id);
      transition_offsets_.push_back(transitions_.size());
      // states_ may reallocate inside intern; copy before extending.
      const DownSet current = states_[id];
      for (auto pit : current.pits(shape_)) {
        DownSet next = current;
        next.insert(pit);
        transitions_.push_back({pit, intern(std::move(next))});
      }
    }
    layer_offsets_.push_back(layer_ids_.size());
    layer_begin = layer_end;
  }
  transition_offsets_.push_back(transitions_.size());

  completions_.assign(states_.size(), 0);
  completions_.back() = 1;  // the full set is the unique state in the last layer
  for (std::size_t id = states_.size(); id-- > 0;) {
    for (const auto& t : transitions(id)) completions_[id] += completions_[t.child];
  }
  prefixes_.assign(states_.size(), 0);
  prefixes_.front() = 1;
  for (std::size_t id = 0; id < states_.size(); ++id) {
    for (const auto& t : transitions(id)) prefixes_[t.child] += prefixes_[id];
  }
}

std::optional<std::size_t> ExtensionLattice::find(const DownSet& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> ExtensionLattice::layer(std::size_t k) const {
  if (k + 1 >= layer_offsets_.size()) return {};
  return std::span<const std::size_t>(layer_ids_).subspan(layer_offsets_[k], layer_offsets_[k + 1] - layer_offsets_[k]);
}

std::span<const ExtensionLattice::Transition> ExtensionLattice::transitions(std::size_t id) const {
  return std::span<const Transition>(transitions_)
      .subspan(transition_offsets_[id], transition_offsets_[id + 1] - transition_offsets_[id]);
}

BigCount count_extensions(const GridShape& shape, std::size_t state_cap) {
  return ExtensionLattice(shape, state_cap).count();
}

namespace {

BigCount factorial(std::uint64_t n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace

BigCount hook_length_count(const GridShape& shape) {
  if (shape.dimension() != 2) {
    throw DomainError("hook-length count needs exactly two chains, got " + std::to_string(shape.dimension()));
  }
  const int rows = shape.length(0);
  const int cols = shape.length(1);
  BigCount hooks = 1;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) hooks *= (rows - i) + (cols - j) + 1;
  }
  BigCount out = factorial(shape.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

BigCount factorial_product_lower_bound(const GridShape& shape) {
  BigCount out = 1;
  for (auto w : whitney_numbers(shape)) out *= factorial(w);
  return out;
}

BigCount lemma2_upper_bound(const GridShape& shape) {
  const std::size_t size = shape.size();
  const auto base = static_cast<unsigned long>(size / static_cast<std::size_t>(shape.max_length()));
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(size));
  return out;
}

double prop1_normalized(int m, int n, const BigCount& count) {
  if (n < 2) throw DomainError("prop1_normalized needs n >= 2 (exponent 1/((n-1) m^n) undefined)");
  if (m < 2) throw DomainError("prop1_normalized needs m >= 2");
  if (count < 1) throw DomainError("prop1_normalized needs a positive count");
  const double exponent = (n - 1) * std::pow(static_cast<double>(m), n);
  return std::exp2(log2_big(count) / exponent) / m;
}

Interval prop1_interval(int n) {
  if (n < 2) throw DomainError("prop1_interval needs n >= 2");
  return {std::pow(n * std::numbers::e, -1.0 / (n - 1)), std::numbers::e / 2};
}

}  // namespace gridext
