#include "gridext/jumps.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>

#include "gridext/errors.hpp"

namespace gridext {

namespace {

std::string describe(const GridShape& shape, std::size_t index) {
  std::string out = "(";
  for (int j = 0; j < shape.dimension(); ++j) {
    if (j) out += ',';
    out += std::to_string(shape.coord(index, j));
  }
  return out + ")";
}

void require_equilateral(const GridShape& shape, const char* what) {
  if (!shape.equilateral()) {
    throw DomainError(std::string(what) + " needs an equilateral grid [m]^n, got " + shape.to_string());
  }
}

}  // namespace

LinearExtension::LinearExtension(GridShape shape, std::vector<std::size_t> order)
    : shape_(std::move(shape)), order_(std::move(order)) {
  const std::size_t n = shape_.size();
  if (order_.size() != n) {
    throw ValidationError("extension has " + std::to_string(order_.size()) + " points, grid " + shape_.to_string() +
                          " has " + std::to_string(n));
  }
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = order_[k];
    if (v >= n) throw ValidationError("point index " + std::to_string(v) + " outside grid " + shape_.to_string());
    if (position[v] != n) throw ValidationError("point index " + std::to_string(v) + " appears twice");
    position[v] = k;
  }
  // Checking every cover pair suffices by transitivity.
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : shape_.upper_covers(v)) {
      if (position[w] < position[v]) {
        throw ValidationError("order violation: " + describe(shape_, w) + " at time " +
                              std::to_string(position[w] + 1) + " precedes " + describe(shape_, v) + " at time " +
                              std::to_string(position[v] + 1));
      }
    }
  }
}

DownSet LinearExtension::prefix(std::size_t k) const {
  DownSet d(order_.size());
  for (std::size_t i = 0; i < std::min(k, order_.size()); ++i) d.insert(order_[i]);
  return d;
}

JumpProfile jumps(const GridShape& shape, std::span<const std::size_t> order) {
  JumpProfile out;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (!shape.covers(order[k], order[k - 1])) out.jump_times.push_back(k);
  }
  return out;
}

JumpProfile jumps(const LinearExtension& ext) { return jumps(ext.shape(), ext.order()); }

PitsSequence pits_sequence(const GridShape& shape, std::span<const std::size_t> order) {
  // Placing v removes one pit and can only create pits among v's upper covers.
  std::vector<int> missing(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) missing[i] = shape.down_degree(i);
  PitsSequence out;
  out.counts.reserve(order.size());
  std::size_t pits = 1;
  for (auto v : order) {
    --pits;
    for (int j = 0; j < shape.dimension(); ++j) {
      if (shape.coord(v, j) < shape.length(j) && --missing[v + shape.stride(j)] == 0) ++pits;
    }
    out.counts.push_back(pits);
  }
  return out;
}

PitsSequence pits_sequence(const LinearExtension& ext) { return pits_sequence(ext.shape(), ext.order()); }

std::vector<std::size_t> rank_lex_order(const GridShape& shape) {
  std::vector<std::size_t> order(shape.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> rank(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) rank[i] = shape.rank(i);
  // Canonical index order is lexicographic order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  return order;
}

LinearExtension rank_lex_extension(const GridShape& shape) {
  require_equilateral(shape, "rank_lex_extension");
  return LinearExtension(shape, rank_lex_order(shape));
}

namespace {

void require_rank(const GridShape& shape, int s) {
  if (s < 1 || s > shape.max_rank()) {
    throw DomainError("rank " + std::to_string(s) + " outside [1, " + std::to_string(shape.max_rank()) + "]");
  }
}

}  // namespace

Point first_of_rank(const GridShape& shape, int s) {
  require_equilateral(shape, "first_of_rank");
  require_rank(shape, s);
  const int m = shape.length(0);
  const int n = shape.dimension();
  std::vector<int> x;
  int placed = 0;
  for (int k = 1; k <= n; ++k) {
    x.push_back(std::max(s + n - 1 - placed - m * (n - k), 1));
    placed += x.back();
  }
  return shape.point(std::move(x));
}

Point last_of_rank(const GridShape& shape, int s) {
  require_equilateral(shape, "last_of_rank");
  require_rank(shape, s);
  const int m = shape.length(0);
  const int n = shape.dimension();
  std::vector<int> x;
  int placed = 0;
  for (int k = 1; k <= n; ++k) {
    x.push_back(std::min(s + k - 1 - placed, m));
    placed += x.back();
  }
  return shape.point(std::move(x));
}

LinearExtension parse_extension(const GridShape& shape, std::string_view line) {
  std::vector<std::size_t> order;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
    if (p == end) break;
    std::size_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw ValidationError("malformed extension line: '" + std::string(line) + "'");
    order.push_back(v);
    p = next;
  }
  return LinearExtension(shape, std::move(order));
}

std::vector<LinearExtension> read_extensions(const GridShape& shape, std::istream& in) {
  std::vector<LinearExtension> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_extension(shape, line));
  }
  return out;
}

std::string format_extension(std::span<const std::size_t> order) {
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(order[k]);
  }
  return out;
}

}  // namespace gridext
