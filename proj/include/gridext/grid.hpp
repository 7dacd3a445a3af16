#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gridext {

/// One element of a grid. Coordinates are 1-based; `index` is the canonical
/// 0-based mixed-radix position (last coordinate fastest).
struct Point {
  std::vector<int> coords;
  std::size_t index = 0;

  /// 1 + sum of (x_j - 1).
  int rank() const;

  friend bool operator==(const Point&, const Point&) = default;
};

/// The product of chains [a_1] x ... x [a_k].
///
/// Points are addressed by canonical index
///   index(x) = sum_j (x_j - 1) * prod_{l > j} a_l,
/// which is also lexicographic order on coordinates read left to right.
/// Bitsets, extension files and CLI output all use this index.
class GridShape {
 public:
  /// Throws DomainError unless lengths is nonempty with every entry >= 1.
  explicit GridShape(std::vector<int> lengths);

  /// The equilateral grid [m]^n.
  static GridShape cube(int m, int n);

  /// Parses "AxBxC" (e.g. "3x3", "2x2x2").
  static GridShape parse(std::string_view text);

  const std::vector<int>& lengths() const noexcept { return lengths_; }
  int dimension() const noexcept { return static_cast<int>(lengths_.size()); }
  int length(int j) const { return lengths_.at(static_cast<std::size_t>(j)); }
  std::size_t size() const noexcept { return size_; }
  bool equilateral() const noexcept;
  int max_length() const noexcept;
  /// Highest rank, 1 + sum (a_j - 1).
  int max_rank() const noexcept;
  std::size_t stride(int j) const { return strides_.at(static_cast<std::size_t>(j)); }

  std::string to_string() const;

  Point point(std::size_t index) const;
  /// Throws ShapeMismatch if the coordinates are not inside this grid.
  Point point(std::vector<int> coords) const;
  bool contains(const Point& p) const;

  // Index-level accessors used on hot paths; no bounds checking.
  int coord(std::size_t index, int j) const {
    return static_cast<int>((index / strides_[static_cast<std::size_t>(j)]) %
                            static_cast<std::size_t>(lengths_[static_cast<std::size_t>(j)])) +
           1;
  }
  int rank(std::size_t index) const;
  bool leq(std::size_t p, std::size_t q) const;
  /// True iff q covers p (q - p is a unit vector).
  bool covers(std::size_t q, std::size_t p) const;
  std::vector<std::size_t> upper_covers(std::size_t index) const;
  std::vector<std::size_t> lower_covers(std::size_t index) const;
  int up_degree(std::size_t index) const;
  int down_degree(std::size_t index) const;

  friend bool operator==(const GridShape& a, const GridShape& b) { return a.lengths_ == b.lengths_; }

 private:
  std::vector<int> lengths_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Componentwise order. Throws ShapeMismatch on differing dimensions.
bool leq(const Point& p, const Point& q);
/// True iff q - p is a unit vector in one coordinate.
bool covers(const Point& q, const Point& p);
/// Number of elements covering p.
int up_degree(const GridShape& shape, const Point& p);

struct RankLevel {
  int s = 0;
  std::vector<Point> members;  // lexicographic order
};

/// Points grouped by rank, s = 1 .. max_rank.
std::vector<RankLevel> rank_levels(const GridShape& shape);

/// |W_s| for s = 1 .. max_rank.
std::vector<std::uint64_t> whitney_numbers(const GridShape& shape);

/// Size of the largest antichain (the largest rank level; grids are Sperner).
std::uint64_t max_antichain_size(const GridShape& shape);

}  // namespace gridext
