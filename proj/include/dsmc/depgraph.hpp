#ifndef DSMC_DEPGRAPH_HPP
#define DSMC_DEPGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dsmc/reduction.hpp"

namespace dsmc {

// Dependency graph over dyadic pairs: vertices are pair indices, edges
// connect pairs built from the same source document.
struct DependencyGraph {
  int64_t n_vertices = 0;
  std::vector<std::vector<int32_t>> adjacency;
  std::vector<int32_t> vertex_source;
  int64_t n_edges = 0;
};

struct CoverEntry {
  std::vector<int32_t> vertices;
  double weight = 1.0;
};

struct FractionalCover {
  std::vector<CoverEntry> entries;
};

struct CoverCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

DependencyGraph build_graph(const std::vector<DyadicPair>& pairs);

// Partition by enumeration slot: C_k = {pairs with slot k}, weight 1.
// Pairs from one source land in distinct slots, so each C_k is independent.
FractionalCover canonical_cover(const std::vector<DyadicPair>& pairs);

// Checks properness (sets independent) and exactness (per-vertex weights
// sum to 1 within 1e-12). Violations are reported, not thrown.
CoverCheck verify_cover(const DependencyGraph& graph,
                        const FractionalCover& cover);

double cover_weight(const FractionalCover& cover);

}  // namespace dsmc

#endif  // DSMC_DEPGRAPH_HPP
