#include "gridext/grid.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "gridext/errors.hpp"

namespace gridext {

int Point::rank() const {
  int r = 1;
  for (int x : coords) r += x - 1;
  return r;
}

GridShape::GridShape(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw DomainError("grid shape needs at least one chain");
  constexpr std::size_t kMaxSize = std::size_t{1} << 48;
  for (int a : lengths_) {
    if (a < 1) throw DomainError("chain lengths must be >= 1, got " + std::to_string(a));
    if (size_ > kMaxSize / static_cast<std::size_t>(a)) throw DomainError("grid size too large");
    size_ *= static_cast<std::size_t>(a);
  }
  strides_.assign(lengths_.size(), 1);
  for (std::size_t j = lengths_.size() - 1; j-- > 0;) {
    strides_[j] = strides_[j + 1] * static_cast<std::size_t>(lengths_[j + 1]);
  }
}

GridShape GridShape::cube(int m, int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  return GridShape(std::vector<int>(static_cast<std::size_t>(n), m));
}

GridShape GridShape::parse(std::string_view text) {
  std::vector<int> lengths;
  while (true) {
    auto cut = text.find('x');
    auto token = text.substr(0, cut);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("malformed shape '" + std::string(text) + "', expected e.g. 3x3");
    }
    lengths.push_back(value);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return GridShape(std::move(lengths));
}

bool GridShape::equilateral() const noexcept {
  return std::all_of(lengths_.begin(), lengths_.end(), [&](int a) { return a == lengths_.front(); });
}

int GridShape::max_length() const noexcept { return *std::max_element(lengths_.begin(), lengths_.end()); }

int GridShape::max_rank() const noexcept {
  return 1 + std::accumulate(lengths_.begin(), lengths_.end(), 0) - dimension();
}

std::string GridShape::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < lengths_.size(); ++j) {
    if (j) out += 'x';
    out += std::to_string(lengths_[j]);
  }
  return out;
}

Point GridShape::point(std::size_t index) const {
  if (index >= size_) throw ShapeMismatch("point index " + std::to_string(index) + " outside grid " + to_string());
  Point p;
  p.index = index;
  p.coords.resize(lengths_.size());
  for (int j = 0; j < dimension(); ++j) p.coords[static_cast<std::size_t>(j)] = coord(index, j);
  return p;
}

Point GridShape::point(std::vector<int> coords) const {
  if (coords.size() != lengths_.size()) throw ShapeMismatch("point dimension does not match grid " + to_string());
  std::size_t index = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] < 1 || coords[j] > lengths_[j]) throw ShapeMismatch("coordinate outside grid " + to_string());
    index += static_cast<std::size_t>(coords[j] - 1) * strides_[j];
  }
  return Point{std::move(coords), index};
}

bool GridShape::contains(const Point& p) const {
  if (p.coords.size() != lengths_.size() || p.index >= size_) return false;
  return point(p.index).coords == p.coords;
}

int GridShape::rank(std::size_t index) const {
  int r = 1;
  for (int j = 0; j < dimension(); ++j) r += coord(index, j) - 1;
  return r;
}

bool GridShape::leq(std::size_t p, std::size_t q) const {
  for (int j = 0; j < dimension(); ++j) {
    if (coord(p, j) > coord(q, j)) return false;
  }
  return true;
}

bool GridShape::covers(std::size_t q, std::size_t p) const {
  if (q <= p) return false;
  const std::size_t diff = q - p;
  for (int j = 0; j < dimension(); ++j) {
    if (diff == strides_[static_cast<std::size_t>(j)]) return coord(p, j) < lengths_[static_cast<std::size_t>(j)];
  }
  return false;
}

std::vector<std::size_t> GridShape::upper_covers(std::size_t index) const {
  std::vector<std::size_t> out;
  for (int j = 0; j < dimension(); ++j) {
    if (coord(index, j) < length(j)) out.push_back(index + stride(j));
  }
  return out;
}

std::vector<std::size_t> GridShape::lower_covers(std::size_t index) const {
  std::vector<std::size_t> out;
  for (int j = 0; j < dimension(); ++j) {
    if (coord(index, j) > 1) out.push_back(index - stride(j));
  }
  return out;
}

int GridShape::up_degree(std::size_t index) const {
  int d = 0;
  for (int j = 0; j < dimension(); ++j) d += coord(index, j) < length(j);
  return d;
}

int GridShape::down_degree(std::size_t index) const {
  int d = 0;
  for (int j = 0; j < dimension(); ++j) d += coord(index, j) > 1;
  return d;
}

namespace {

void require_same_dimension(const Point& p, const Point& q) {
  if (p.coords.size() != q.coords.size()) {
    throw ShapeMismatch("points of dimension " + std::to_string(p.coords.size()) + " and " +
                        std::to_string(q.coords.size()));
  }
}

}  // namespace

bool leq(const Point& p, const Point& q) {
  require_same_dimension(p, q);
  for (std::size_t j = 0; j < p.coords.size(); ++j) {
    if (p.coords[j] > q.coords[j]) return false;
  }
  return true;
}

bool covers(const Point& q, const Point& p) {
  require_same_dimension(p, q);
  int steps = 0;
  for (std::size_t j = 0; j < p.coords.size(); ++j) {
    const int d = q.coords[j] - p.coords[j];
    if (d < 0 || d > 1) return false;
    steps += d;
  }
  return steps == 1;
}

int up_degree(const GridShape& shape, const Point& p) {
  if (!shape.contains(p)) throw ShapeMismatch("point not in grid " + shape.to_string());
  return shape.up_degree(p.index);
}

std::vector<RankLevel> rank_levels(const GridShape& shape) {
  std::vector<RankLevel> levels(static_cast<std::size_t>(shape.max_rank()));
  for (std::size_t s = 0; s < levels.size(); ++s) levels[s].s = static_cast<int>(s) + 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    levels[static_cast<std::size_t>(shape.rank(i) - 1)].members.push_back(shape.point(i));
  }
  return levels;
}

std::vector<std::uint64_t> whitney_numbers(const GridShape& shape) {
  // Convolve the all-ones vectors of each chain.
  std::vector<std::uint64_t> w{1};
  for (int a : shape.lengths()) {
    std::vector<std::uint64_t> next(w.size() + static_cast<std::size_t>(a) - 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (int t = 0; t < a; ++t) next[i + static_cast<std::size_t>(t)] += w[i];
    }
    w = std::move(next);
  }
  return w;
}

std::uint64_t max_antichain_size(const GridShape& shape) {
  const auto w = whitney_numbers(shape);
  return *std::max_element(w.begin(), w.end());
}

}  // namespace gridext
