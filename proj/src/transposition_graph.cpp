#include "gridext/transposition_graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "gridext/errors.hpp"

namespace gridext {

void for_each_extension(const GridShape& shape, const ExtensionVisitor& visit, std::size_t cap) {
  const BigCount total = count_extensions(shape);
  if (total > cap) throw ResourceError("extension count " + to_decimal(total) + " of " + shape.to_string(), cap);

  const std::size_t n = shape.size();
  std::vector<std::vector<std::size_t>> up(n);
  std::vector<int> missing(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = shape.upper_covers(i);
    missing[i] = shape.down_degree(i);
  }
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> next_candidate(n + 1, 0);

  auto place = [&](std::size_t v) {
    placed[v] = 1;
    for (auto w : up[v]) --missing[w];
  };
  auto unplace = [&](std::size_t v) {
    placed[v] = 0;
    for (auto w : up[v]) ++missing[w];
  };

  std::size_t depth = 0;
  while (true) {
    if (depth == n) {
      visit(order);
      --depth;
      unplace(order[depth]);
      next_candidate[depth] = order[depth] + 1;
      continue;
    }
    std::size_t v = next_candidate[depth];
    while (v < n && (placed[v] || missing[v] != 0)) ++v;
    if (v == n) {
      if (depth == 0) return;
      --depth;
      unplace(order[depth]);
      next_candidate[depth] = order[depth] + 1;
      continue;
    }
    order[depth] = v;
    place(v);
    next_candidate[++depth] = 0;
  }
}

std::vector<LinearExtension> enumerate(const GridShape& shape, std::size_t cap) {
  std::vector<LinearExtension> out;
  for_each_extension(
      shape, [&](std::span<const std::size_t> order) { out.emplace_back(shape, std::vector(order.begin(), order.end())); },
      cap);
  return out;
}

namespace {

struct SequenceHash {
  std::size_t operator()(const std::vector<std::size_t>& seq) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(seq.data()), seq.size() * sizeof(std::size_t)));
  }
};

}  // namespace

TranspositionGraph build_graph(const GridShape& shape, std::size_t cap) {
  TranspositionGraph g{shape, {}, {}, {}};
  for_each_extension(
      shape, [&](std::span<const std::size_t> order) { g.vertices.emplace_back(order.begin(), order.end()); }, cap);

  std::unordered_map<std::vector<std::size_t>, std::size_t, SequenceHash> ids;
  ids.reserve(g.vertices.size());
  for (std::size_t id = 0; id < g.vertices.size(); ++id) ids.emplace(g.vertices[id], id);

  g.degree_sequence.assign(g.vertices.size(), 0);
  std::vector<std::size_t> swapped;
  for (std::size_t id = 0; id < g.vertices.size(); ++id) {
    const auto& seq = g.vertices[id];
    for (std::size_t k = 1; k < seq.size(); ++k) {
      if (shape.covers(seq[k], seq[k - 1])) continue;
      swapped = seq;
      std::swap(swapped[k - 1], swapped[k]);
      const auto it = ids.find(swapped);
      if (it == ids.end()) throw std::logic_error("swap of incomparable neighbours left the extension set");
      ++g.degree_sequence[id];
      if (id < it->second) g.edges.emplace_back(id, it->second);
    }
  }
  return g;
}

GraphStats graph_stats(const TranspositionGraph& graph) {
  GraphStats s;
  s.vertex_count = graph.vertices.size();
  s.edge_count = graph.edges.size();
  if (s.vertex_count == 0) return s;

  s.min_deg = std::numeric_limits<std::size_t>::max();
  std::size_t jump_total = 0;
  for (std::size_t id = 0; id < s.vertex_count; ++id) {
    const std::size_t d = graph.degree_sequence[id];
    s.min_deg = std::min(s.min_deg, d);
    s.max_deg = std::max(s.max_deg, d);
    ++s.degree_histogram[d];
    jump_total += jumps(graph.shape, graph.vertices[id]).degree();
  }
  s.avg_deg_exact = mpq_class(2 * s.edge_count, s.vertex_count);
  s.avg_deg_exact.canonicalize();
  mpq_class mean_jumps(jump_total, s.vertex_count);
  mean_jumps.canonicalize();
  if (s.avg_deg_exact != mean_jumps) throw std::logic_error("handshake mismatch: 2|E|/|V| != mean jump count");
  s.avg_deg = s.avg_deg_exact.get_d();

  std::vector<std::vector<std::size_t>> adjacency(s.vertex_count);
  for (auto [u, v] : graph.edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<char> seen(s.vertex_count, 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    for (auto v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  s.connected = reached == s.vertex_count;
  return s;
}

void write_dot(std::ostream& out, const TranspositionGraph& graph) {
  out << "graph \"T(" << graph.shape.to_string() << ")\" {\n";
  for (std::size_t id = 0; id < graph.vertices.size(); ++id) {
    out << "  " << id << " [label=\"" << format_extension(graph.vertices[id]) << "\"];\n";
  }
  for (auto [u, v] : graph.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace gridext
