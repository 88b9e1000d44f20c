#pragma once

#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct VertexCover {
    std::vector<Index> centers;     // sorted vertex indices
    std::vector<Index> assignment;  // per edge: the covering center, always an endpoint
};

inline constexpr Index kDefaultCoverBudget = 64;

// Exact minimum vertex cover by branch and bound on a maximum-degree vertex,
// seeded with a greedy cover and pruned by a maximal-matching lower bound.
// Deterministic. Graphs with more than `budget` vertices are rejected with
// SizeLimitExceeded.
VertexCover min_vertex_cover(const Graph& g, Index budget = kDefaultCoverBudget);

bool is_vertex_cover(const Graph& g, const std::vector<Index>& centers);

// Independent linear-time cover size for forests, used as a cross-check.
// Requires is_forest(g).
Index forest_cover_size(const Graph& g);

}  // namespace raag
