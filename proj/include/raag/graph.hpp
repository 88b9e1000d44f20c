#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/errors.hpp"
#include "raag/int_matrix.hpp"

namespace raag {

// Finite simple graph. Vertices are identified by name and stored sorted
// lexicographically; all indices below refer to that order. Edges are stored
// as index pairs (small, large), sorted.
class Graph {
public:
    Graph() = default;

    static Graph validate(const std::vector<std::string>& vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges);

    Index vertex_count() const { return static_cast<Index>(names_.size()); }
    Index edge_count() const { return static_cast<Index>(edges_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(Index v) const { return names_[static_cast<size_t>(v)]; }

    Index index_of(const std::string& name) const;
    std::optional<Index> find_vertex(const std::string& name) const;

    const std::vector<std::pair<Index, Index>>& edges() const { return edges_; }
    std::optional<Index> edge_index(Index a, Index b) const;
    bool has_edge(Index a, Index b) const { return edge_index(a, b).has_value(); }

    const std::vector<Index>& neighbors(Index v) const {
        return adjacency_[static_cast<size_t>(v)];
    }
    Index degree(Index v) const {
        return static_cast<Index>(adjacency_[static_cast<size_t>(v)].size());
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<Index, Index>> edges_;
    std::vector<std::vector<Index>> adjacency_;
};

// Graph plus a choice of direction for every edge.
class OrientedGraph {
public:
    OrientedGraph() = default;

    // Every edge directed from its smaller vertex to its larger one.
    static OrientedGraph lexicographic(Graph g);

    // Orientation given explicitly as ordered vertex-name pairs; must cover
    // every edge exactly once.
    static OrientedGraph validate(Graph g,
                                  const std::vector<std::pair<std::string, std::string>>& oriented);

    const Graph& graph() const { return graph_; }

    // (tail, head) of edge e.
    std::pair<Index, Index> oriented_edge(Index e) const {
        auto [a, b] = graph_.edges()[static_cast<size_t>(e)];
        return flipped_[static_cast<size_t>(e)] ? std::make_pair(b, a) : std::make_pair(a, b);
    }
    bool flipped(Index e) const { return flipped_[static_cast<size_t>(e)] != 0; }

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

private:
    Graph graph_;
    std::vector<char> flipped_;
};

// Components as sorted vertex index lists, ordered by smallest vertex.
std::vector<std::vector<Index>> connected_components(const Graph& g);

// Subgraph on the given vertices with all inherited edges. The vertex list
// is treated as a set (duplicates collapse).
Graph full_subgraph(const Graph& g, std::vector<Index> vertices);
Graph full_subgraph(const Graph& g, const std::vector<std::string>& vertices);

bool is_complete(const Graph& g);
bool is_forest(const Graph& g);

struct Bipartition {
    std::vector<Index> part_a;  // contains the smallest vertex
    std::vector<Index> part_b;
};

// Partition witnessing g complete bipartite with both parts nonempty.
std::optional<Bipartition> complete_bipartite_parts(const Graph& g);

// Non-adjacency classes when non-adjacency is transitive (equivalently the
// complement is a disjoint union of cliques). Edgeless graphs give a single
// part. Parts ordered by smallest vertex. Absent for the empty graph.
std::optional<std::vector<std::vector<Index>>> complete_multipartite_parts(const Graph& g);

// Center of K_{1,n}, n >= 1. A single edge has two valid centers; the
// smaller endpoint is returned.
std::optional<Index> is_star(const Graph& g);

}  // namespace raag
