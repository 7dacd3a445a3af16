#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridext/counting.hpp"
#include "gridext/grid.hpp"

namespace gridext {

/// An order-respecting arrangement of all points of a grid, stored as
/// canonical indices. Entry k-1 is L^k. Validated on construction.
class LinearExtension {
 public:
  /// Throws ValidationError if order is not a permutation of the grid's
  /// indices or places some point before one of its predecessors.
  LinearExtension(GridShape shape, std::vector<std::size_t> order);

  const GridShape& shape() const noexcept { return shape_; }
  std::span<const std::size_t> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  /// L^k for 1 <= k <= size.
  Point at(std::size_t k) const { return shape_.point(order_.at(k - 1)); }
  /// L^{[k]}, the first k points.
  DownSet prefix(std::size_t k) const;

  friend bool operator==(const LinearExtension& a, const LinearExtension& b) {
    return a.shape_ == b.shape_ && a.order_ == b.order_;
  }

 private:
  GridShape shape_;
  std::vector<std::size_t> order_;
};

/// Times k in [1, size-1] where L^{k+1} does not cover L^k.
struct JumpProfile {
  std::vector<std::size_t> jump_times;
  std::size_t degree() const noexcept { return jump_times.size(); }
};

/// counts[k-1] = pits(L, k) for k = 1 .. size.
struct PitsSequence {
  std::vector<std::size_t> counts;
  std::size_t at(std::size_t k) const { return counts.at(k - 1); }
};

JumpProfile jumps(const LinearExtension& ext);
/// Same, for an order already known to be valid.
JumpProfile jumps(const GridShape& shape, std::span<const std::size_t> order);

PitsSequence pits_sequence(const LinearExtension& ext);
PitsSequence pits_sequence(const GridShape& shape, std::span<const std::size_t> order);

/// Points sorted by rank, then lexicographically. Valid for any shape.
std::vector<std::size_t> rank_lex_order(const GridShape& shape);

/// The max-jump extension of [m]^n; DomainError for non-equilateral shapes.
LinearExtension rank_lex_extension(const GridShape& shape);

/// Lexicographically first point of rank s in [m]^n, built coordinate by
/// coordinate as x_k = max{s + n - 1 - sum_{j<k} x_j - m(n-k), 1}.
Point first_of_rank(const GridShape& shape, int s);
/// Lexicographically last point of rank s in [m]^n,
/// x_k = min{s + k - 1 - sum_{j<k} x_j, m}.
Point last_of_rank(const GridShape& shape, int s);

// Extension files: one extension per line, canonical indices separated by
// whitespace. Blank lines and lines starting with '#' are skipped.
LinearExtension parse_extension(const GridShape& shape, std::string_view line);
std::vector<LinearExtension> read_extensions(const GridShape& shape, std::istream& in);
std::string format_extension(std::span<const std::size_t> order);

}  // namespace gridext
