#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gridext/counting.hpp"
#include "gridext/grid.hpp"
#include "gridext/jumps.hpp"

namespace gridext {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

using ExtensionVisitor = std::function<void(std::span<const std::size_t>)>;

/// Calls visit once per linear extension, in lexicographic order of the
/// canonical index sequences. Refuses (ResourceError) when the number of
/// extensions exceeds cap; the count is established up front with the
/// down-set lattice.
void for_each_extension(const GridShape& shape, const ExtensionVisitor& visit,
                        std::size_t cap = kDefaultEnumerationCap);

std::vector<LinearExtension> enumerate(const GridShape& shape, std::size_t cap = kDefaultEnumerationCap);

/// The graph on linear extensions where two are adjacent iff they differ by
/// swapping one pair of consecutive incomparable points. Undirected, simple.
struct TranspositionGraph {
  GridShape shape;
  std::vector<std::vector<std::size_t>> vertices;  // index sequences, lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (u, v) with u < v
  std::vector<std::size_t> degree_sequence;

  LinearExtension vertex(std::size_t id) const { return LinearExtension(shape, vertices.at(id)); }
};

TranspositionGraph build_graph(const GridShape& shape, std::size_t cap = kDefaultEnumerationCap);

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t min_deg = 0;
  std::size_t max_deg = 0;
  mpq_class avg_deg_exact;  // 2|E| / |V|
  double avg_deg = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  bool connected = false;
};

/// Throws std::logic_error if 2|E|/|V| disagrees with the mean jump count.
GraphStats graph_stats(const TranspositionGraph& graph);

/// Graphviz export; vertex labels are the index sequences.
void write_dot(std::ostream& out, const TranspositionGraph& graph);

}  // namespace gridext
