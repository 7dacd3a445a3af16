#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gridext/grid.hpp"

namespace gridext {

/// Exact nonnegative extension counts.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& value);
/// lg(value) from the leading 53 bits; value must be positive.
double log2_big(const BigCount& value);

/// A subset of grid points as a bitset over canonical indices. Bit i lives in
/// word i / 64 at position i % 64.
class DownSet {
 public:
  DownSet() = default;
  explicit DownSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// Raw storage bytes; the memo key.
  std::string_view bytes() const noexcept {
    return {reinterpret_cast<const char*>(words_.data()), words_.size() * sizeof(std::uint64_t)};
  }

  /// True iff every point below a member is also a member.
  bool is_down_closed(const GridShape& shape) const;
  /// Minimal elements of the complement.
  std::vector<std::size_t> pits(const GridShape& shape) const;

  friend bool operator==(const DownSet&, const DownSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DownSetHash {
  std::size_t operator()(const DownSet& d) const noexcept { return std::hash<std::string_view>{}(d.bytes()); }
};

inline constexpr std::size_t kDefaultStateCap = 10'000'000;

/// The lattice of down-sets reachable as prefixes of linear extensions, with
///   completions(D) = g(D) = number of ways to finish an extension from D,
///   prefixes(D)    = f(D) = number of ways to order D as a prefix.
/// States are numbered layer by layer (by cardinality), so every transition
/// goes from a lower id to a higher one. State 0 is the empty set.
class ExtensionLattice {
 public:
  struct Transition {
    std::size_t pit;    // point added
    std::size_t child;  // resulting state
  };

  /// Throws ResourceError if more than state_cap down-sets are reachable.
  explicit ExtensionLattice(GridShape shape, std::size_t state_cap = kDefaultStateCap);

  const GridShape& shape() const noexcept { return shape_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const DownSet& state(std::size_t id) const { return states_[id]; }
  std::optional<std::size_t> find(const DownSet& d) const;

  /// Ids of all states with exactly k elements, k = 0 .. size.
  std::span<const std::size_t> layer(std::size_t k) const;
  /// Outgoing moves, ordered by increasing pit index.
  std::span<const Transition> transitions(std::size_t id) const;

  const BigCount& completions(std::size_t id) const { return completions_[id]; }
  const BigCount& prefixes(std::size_t id) const { return prefixes_[id]; }
  /// Number of linear extensions, g(empty set).
  const BigCount& count() const { return completions_.front(); }

 private:
  GridShape shape_;
  std::vector<DownSet> states_;
  std::unordered_map<DownSet, std::size_t, DownSetHash> index_;
  std::vector<std::size_t> layer_ids_;
  std::vector<std::size_t> layer_offsets_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> transition_offsets_;
  std::vector<BigCount> completions_;
  std::vector<BigCount> prefixes_;
};

/// Exact number of linear extensions via the down-set recursion.
BigCount count_extensions(const GridShape& shape, std::size_t state_cap = kDefaultStateCap);

/// Hook-length formula for the a x b rectangle; DomainError unless k = 2.
BigCount hook_length_count(const GridShape& shape);

/// Product of the factorials of the Whitney numbers; a lower bound on the count.
BigCount factorial_product_lower_bound(const GridShape& shape);

/// (size / max_j a_j)^size; an upper bound on the count. The base is always an
/// integer because max_j a_j is one of the factors of size.
BigCount lemma2_upper_bound(const GridShape& shape);

/// m^{-1} A^{1/((n-1) m^n)}. DomainError for m < 2, n < 2 or A < 1.
double prop1_normalized(int m, int n, const BigCount& count);

struct Interval {
  double lower = 0;
  double upper = 0;
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/// [1/(ne)^{1/(n-1)}, e/2], the window prop1_normalized must land in.
Interval prop1_interval(int n);

}  // namespace gridext
