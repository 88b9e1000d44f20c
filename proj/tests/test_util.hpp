#pragma once

// Shared builders for the recurring example graphs and classes.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/homology.hpp"

namespace testutil {

using raag::Graph;
using raag::HomologyClass;
using raag::Index;
using raag::Int;
using raag::OrientedGraph;
using raag::RawLabel;

inline Graph square_graph() {
    return Graph::validate({"v1", "v2", "w1", "w2"},
                           {{"v1", "w1"}, {"v1", "w2"}, {"v2", "w1"}, {"v2", "w2"}});
}

// Labels (2, 4, 3, 6) on the square; rank-2 connection matrix.
inline HomologyClass beta_class() {
    return raag::new_class(OrientedGraph::lexicographic(square_graph()),
                           {{"v1", "w1", Int(2)},
                            {"v1", "w2", Int(4)},
                            {"v2", "w1", Int(3)},
                            {"v2", "w2", Int(6)}});
}

// Labels (1, -1) on two opposite edges of the square; rank-4 matrix.
inline HomologyClass alpha_class() {
    return raag::new_class(OrientedGraph::lexicographic(square_graph()),
                           {{"v1", "w1", Int(1)}, {"v2", "w2", Int(-1)}});
}

inline Graph pentagon_graph() {
    return Graph::validate(
        {"p1", "p2", "p3", "p4", "p5"},
        {{"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}, {"p4", "p5"}, {"p5", "p1"}});
}

inline HomologyClass pentagon_all_ones() {
    return raag::new_class(OrientedGraph::lexicographic(pentagon_graph()),
                           {{"p1", "p2", Int(1)},
                            {"p2", "p3", Int(1)},
                            {"p3", "p4", Int(1)},
                            {"p4", "p5", Int(1)},
                            {"p5", "p1", Int(1)}});
}

// K_{1,3} with spoke labels 5, -2, 7 read from the center.
inline HomologyClass three_spoke_star_class() {
    Graph g = Graph::validate({"c0", "x1", "x2", "x3"},
                              {{"c0", "x1"}, {"c0", "x2"}, {"c0", "x3"}});
    return raag::new_class(OrientedGraph::lexicographic(g),
                           {{"c0", "x1", Int(5)}, {"c0", "x2", Int(-2)}, {"c0", "x3", Int(7)}});
}

inline std::string vertex_name(int i) {
    std::string s = std::to_string(i);
    return "v" + std::string(2 - std::min<size_t>(2, s.size()), '0') + s;
}

inline Graph indexed_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(vertex_name(i));
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : edges) named.emplace_back(vertex_name(a), vertex_name(b));
    return Graph::validate(names, named);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return indexed_graph(n, edges);
}

inline Graph complete_bipartite_graph(int n, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) edges.emplace_back(i, n + j);
    }
    return indexed_graph(n + m, edges);
}

// Uniform labels in [-max_abs, max_abs] on every edge.
inline HomologyClass random_class(const Graph& g, std::mt19937& gen, long max_abs,
                                  double zero_probability = 0.0) {
    std::uniform_int_distribution<long> dist(-max_abs, max_abs);
    std::bernoulli_distribution zero(zero_probability);
    std::vector<RawLabel> raw;
    for (auto [a, b] : g.edges()) {
        if (zero_probability > 0 && zero(gen)) continue;
        raw.push_back({g.name(a), g.name(b), Int(dist(gen))});
    }
    return raag::new_class(OrientedGraph::lexicographic(g), raw);
}

// Forest on up to max_n vertices with nonzero labels on a random edge subset.
inline HomologyClass random_forest_class(std::mt19937& gen, int max_n, long max_abs) {
    std::uniform_int_distribution<int> size_dist(2, max_n);
    const int n = size_dist(gen);
    std::bernoulli_distribution keep(0.85);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        if (keep(gen)) edges.emplace_back(parent(gen), i);
    }
    Graph g = indexed_graph(n, edges);
    std::uniform_int_distribution<long> dist(1, max_abs);
    std::bernoulli_distribution flip(0.5), label_edge(0.8);
    std::vector<RawLabel> raw;
    for (auto [a, b] : g.edges()) {
        if (!label_edge(gen)) continue;
        long v = dist(gen);
        raw.push_back({g.name(a), g.name(b), Int(flip(gen) ? -v : v)});
    }
    return raag::new_class(OrientedGraph::lexicographic(g), raw);
}

}  // namespace testutil
