#include "dsmc/depgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dsmc {

DependencyGraph build_graph(const std::vector<DyadicPair>& pairs) {
  DependencyGraph g;
  g.n_vertices = static_cast<int64_t>(pairs.size());
  g.adjacency.resize(pairs.size());
  g.vertex_source.resize(pairs.size());

  std::map<int32_t, std::vector<int32_t>> by_source;
  for (size_t v = 0; v < pairs.size(); ++v) {
    g.vertex_source[v] = pairs[v].source_doc;
    by_source[pairs[v].source_doc].push_back(static_cast<int32_t>(v));
  }
  // pairs from the same source form a clique
  for (const auto& [src, verts] : by_source) {
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = a + 1; b < verts.size(); ++b) {
        g.adjacency[verts[a]].push_back(verts[b]);
        g.adjacency[verts[b]].push_back(verts[a]);
        ++g.n_edges;
      }
  }
  return g;
}

FractionalCover canonical_cover(const std::vector<DyadicPair>& pairs) {
  std::map<int32_t, CoverEntry> by_slot;
  for (size_t v = 0; v < pairs.size(); ++v)
    by_slot[pairs[v].slot].vertices.push_back(static_cast<int32_t>(v));
  FractionalCover cover;
  for (auto& [slot, entry] : by_slot) {
    entry.weight = 1.0;
    cover.entries.push_back(std::move(entry));
  }
  return cover;
}

CoverCheck verify_cover(const DependencyGraph& graph,
                        const FractionalCover& cover) {
  CoverCheck check;
  std::vector<double> weight_sum(graph.n_vertices, 0.0);

  for (size_t e = 0; e < cover.entries.size(); ++e) {
    const auto& entry = cover.entries[e];
    std::vector<uint8_t> member(graph.n_vertices, 0);
    for (int32_t v : entry.vertices) {
      if (v < 0 || v >= graph.n_vertices) {
        check.violations.push_back("set " + std::to_string(e) +
                                   ": vertex " + std::to_string(v) +
                                   " out of range");
        continue;
      }
      member[v] = 1;
      weight_sum[v] += entry.weight;
    }
    for (int32_t v : entry.vertices) {
      if (v < 0 || v >= graph.n_vertices) continue;
      for (int32_t u : graph.adjacency[v])
        if (member[u] && u > v)
          check.violations.push_back(
              "set " + std::to_string(e) + " not independent: edge (" +
              std::to_string(v) + "," + std::to_string(u) + ")");
    }
  }

  for (int64_t v = 0; v < graph.n_vertices; ++v)
    if (std::abs(weight_sum[v] - 1.0) > 1e-12)
      check.violations.push_back("vertex " + std::to_string(v) +
                                 ": weights sum to " +
                                 std::to_string(weight_sum[v]));

  check.valid = check.violations.empty();
  return check;
}

double cover_weight(const FractionalCover& cover) {
  double w = 0;
  for (const auto& entry : cover.entries) w += entry.weight;
  return w;
}

}  // namespace dsmc
