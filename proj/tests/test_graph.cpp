#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "raag/graph.hpp"
#include "raag/vertex_cover.hpp"

using raag::Graph;
using raag::Index;

namespace {

std::string vertex_name(int i) {
    std::string s = std::to_string(i);
    return "v" + std::string(2 - std::min<size_t>(2, s.size()), '0') + s;
}

Graph build(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(vertex_name(i));
    std::vector<std::pair<std::string, std::string>> named_edges;
    for (auto [a, b] : edges) named_edges.emplace_back(vertex_name(a), vertex_name(b));
    return Graph::validate(names, named_edges);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build(n, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return build(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build(leaves + 1, edges);
}

Graph multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) n += s;
    std::vector<int> part_of;
    for (size_t p = 0; p < part_sizes.size(); ++p) {
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
        }
    }
    return build(n, edges);
}

Graph random_graph(std::mt19937& gen, int max_n, double p) {
    std::uniform_int_distribution<int> size_dist(0, max_n);
    const int n = size_dist(gen);
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (edge(gen)) edges.emplace_back(i, j);
        }
    }
    return build(n, edges);
}

Graph random_forest(std::mt19937& gen, int max_n) {
    std::uniform_int_distribution<int> size_dist(1, max_n);
    const int n = size_dist(gen);
    std::bernoulli_distribution keep(0.8);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        if (keep(gen)) edges.emplace_back(parent(gen), i);
    }
    return build(n, edges);
}

// Exhaustive minimum cover, valid for up to 16 vertices.
Index brute_force_cover_size(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    REQUIRE(n <= 16);
    Index best = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool covers = true;
        for (auto [a, b] : g.edges()) {
            if (!(mask & (1u << a)) && !(mask & (1u << b))) {
                covers = false;
                break;
            }
        }
        if (covers) best = std::min<Index>(best, __builtin_popcount(mask));
    }
    return best;
}

bool complement_is_clique_union(const Graph& g, const std::vector<std::vector<Index>>& parts) {
    std::vector<Index> part_of(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        for (Index v : parts[p]) part_of[static_cast<size_t>(v)] = static_cast<Index>(p);
    }
    for (Index v = 0; v < g.vertex_count(); ++v) {
        if (part_of[static_cast<size_t>(v)] == -1) return false;
        for (Index w = v + 1; w < g.vertex_count(); ++w) {
            const bool complement_edge = !g.has_edge(v, w);
            const bool same_part = part_of[static_cast<size_t>(v)] == part_of[static_cast<size_t>(w)];
            if (complement_edge != same_part) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("graph validation accepts simple graphs and orders vertices") {
    Graph g = Graph::validate({"b", "a", "c"}, {{"c", "a"}});
    CHECK(g.vertex_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.index_of("b") == 1);
    CHECK_FALSE(g.find_vertex("z").has_value());
}

TEST_CASE("graph validation rejects malformed input") {
    auto code = [](auto make) {
        try {
            make();
        } catch (const raag::Error& e) {
            return e.code();
        }
        return raag::ErrorCode::InvalidArgument;
    };
    CHECK(code([] { Graph::validate({"a", "a"}, {}); }) == raag::ErrorCode::DuplicateVertex);
    CHECK(code([] { Graph::validate({"a"}, {{"a", "a"}}); }) == raag::ErrorCode::LoopEdge);
    CHECK(code([] { Graph::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) ==
          raag::ErrorCode::DuplicateEdge);
    CHECK(code([] { Graph::validate({"a", "b"}, {{"a", "z"}}); }) ==
          raag::ErrorCode::UnknownEndpoint);
    CHECK_THROWS_AS(Graph::validate({""}, {}), raag::Error);
    CHECK_THROWS_AS(Graph::validate({"a b"}, {}), raag::Error);
}

TEST_CASE("orientation validation") {
    Graph g = build(3, {{0, 1}, {1, 2}});
    auto og = raag::OrientedGraph::validate(g, {{vertex_name(1), vertex_name(0)},
                                                {vertex_name(1), vertex_name(2)}});
    CHECK(og.oriented_edge(0) == std::make_pair<Index, Index>(1, 0));
    CHECK(og.oriented_edge(1) == std::make_pair<Index, Index>(1, 2));
    CHECK(og.flipped(0));
    CHECK_FALSE(og.flipped(1));

    CHECK_THROWS_AS(raag::OrientedGraph::validate(g, {{vertex_name(0), vertex_name(1)}}),
                    raag::Error);
    CHECK_THROWS_AS(raag::OrientedGraph::validate(g, {{vertex_name(0), vertex_name(2)},
                                                      {vertex_name(0), vertex_name(1)},
                                                      {vertex_name(1), vertex_name(2)}}),
                    raag::Error);

    auto lex = raag::OrientedGraph::lexicographic(g);
    CHECK(lex.oriented_edge(0) == std::make_pair<Index, Index>(0, 1));
}

TEST_CASE("connected components") {
    CHECK(raag::connected_components(cycle(5)).size() == 1);
    Graph two_edges = build(4, {{0, 1}, {2, 3}});
    auto comps = raag::connected_components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Index>{0, 1});
    CHECK(comps[1] == std::vector<Index>{2, 3});
    Graph mixed = build(5, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(raag::connected_components(mixed).size() == 2);
    CHECK(raag::connected_components(build(0, {})).empty());
}

TEST_CASE("classification predicates on pinned graphs") {
    CHECK(raag::is_complete(complete(4)));
    CHECK_FALSE(raag::is_complete(cycle(5)));
    CHECK(raag::is_complete(build(1, {})));
    CHECK(raag::is_complete(build(0, {})));

    CHECK(raag::is_forest(path(4)));
    CHECK_FALSE(raag::is_forest(cycle(5)));
    CHECK(raag::is_forest(build(0, {})));
    CHECK(raag::is_forest(build(3, {})));

    auto square = raag::complete_bipartite_parts(cycle(4));
    REQUIRE(square.has_value());
    CHECK(square->part_a == std::vector<Index>{0, 2});
    CHECK(square->part_b == std::vector<Index>{1, 3});
    CHECK_FALSE(raag::complete_bipartite_parts(cycle(5)).has_value());
    auto star_parts = raag::complete_bipartite_parts(star(3));
    REQUIRE(star_parts.has_value());
    CHECK(star_parts->part_a == std::vector<Index>{0});
    CHECK(star_parts->part_b == std::vector<Index>{1, 2, 3});
    CHECK_FALSE(raag::complete_bipartite_parts(build(2, {})).has_value());

    auto square_parts = raag::complete_multipartite_parts(cycle(4));
    REQUIRE(square_parts.has_value());
    CHECK(*square_parts == std::vector<std::vector<Index>>{{0, 2}, {1, 3}});
    CHECK_FALSE(raag::complete_multipartite_parts(cycle(5)).has_value());
    auto k3_parts = raag::complete_multipartite_parts(complete(3));
    REQUIRE(k3_parts.has_value());
    CHECK(*k3_parts == std::vector<std::vector<Index>>{{0}, {1}, {2}});
    auto edgeless = raag::complete_multipartite_parts(build(3, {}));
    REQUIRE(edgeless.has_value());
    CHECK(*edgeless == std::vector<std::vector<Index>>{{0, 1, 2}});
    CHECK_FALSE(raag::complete_multipartite_parts(build(0, {})).has_value());

    CHECK(raag::is_star(star(3)) == 0);
    CHECK(raag::is_star(star(1)) == 0);
    CHECK_FALSE(raag::is_star(path(4)).has_value());
    CHECK_FALSE(raag::is_star(build(1, {})).has_value());
    CHECK_FALSE(raag::is_star(build(4, {{0, 1}, {0, 2}})).has_value());
    CHECK(raag::is_star(path(3)) == 1);
}

TEST_CASE("full subgraph") {
    Graph k3 = raag::full_subgraph(complete(4), {0, 1, 2});
    CHECK(raag::is_complete(k3));
    CHECK(k3.vertex_count() == 3);

    Graph sub = raag::full_subgraph(cycle(5), {0, 1, 2});
    CHECK(sub.edge_count() == 2);
    CHECK(raag::is_forest(sub));

    CHECK(raag::full_subgraph(cycle(5), std::vector<Index>{}).vertex_count() == 0);
    CHECK_THROWS_AS(raag::full_subgraph(cycle(5), std::vector<Index>{7}), raag::Error);
    CHECK_THROWS_AS(raag::full_subgraph(cycle(5), std::vector<std::string>{"zz"}), raag::Error);
}

TEST_CASE("forest predicate matches the edge counting characterization") {
    std::mt19937 gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(gen, 9, trial % 2 ? 0.15 : 0.35);
        const Index components = static_cast<Index>(raag::connected_components(g).size());
        CHECK(raag::is_forest(g) == (g.edge_count() == g.vertex_count() - components));
    }
}

TEST_CASE("multipartite recognition agrees with complement clique structure") {
    std::mt19937 gen(103);
    std::uniform_int_distribution<int> nparts(1, 4), psize(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> sizes;
        const int k = nparts(gen);
        for (int i = 0; i < k; ++i) sizes.push_back(psize(gen));
        Graph g = multipartite(sizes);
        auto parts = raag::complete_multipartite_parts(g);
        REQUIRE(parts.has_value());
        CHECK(parts->size() == sizes.size());
        CHECK(complement_is_clique_union(g, *parts));
    }
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(gen, 8, 0.5);
        if (g.vertex_count() == 0) continue;
        auto parts = raag::complete_multipartite_parts(g);
        if (parts) {
            CHECK(complement_is_clique_union(g, *parts));
        }
        auto bip = raag::complete_bipartite_parts(g);
        if (bip) {
            REQUIRE(parts.has_value());
            CHECK(parts->size() == 2);
        }
    }
}

TEST_CASE("minimum vertex cover on pinned graphs") {
    auto p4 = raag::min_vertex_cover(path(4));
    CHECK(p4.centers == std::vector<Index>{1, 2});
    CHECK(p4.assignment == std::vector<Index>{1, 1, 2});

    CHECK(raag::min_vertex_cover(cycle(5)).centers.size() == 3);
    auto star_cover = raag::min_vertex_cover(star(5));
    CHECK(star_cover.centers == std::vector<Index>{0});
    CHECK(raag::min_vertex_cover(build(3, {})).centers.empty());
}

TEST_CASE("minimum vertex cover matches brute force on random graphs") {
    std::mt19937 gen(107);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_graph(gen, 12, 0.3);
        auto cover = raag::min_vertex_cover(g);
        CHECK(raag::is_vertex_cover(g, cover.centers));
        CHECK(static_cast<Index>(cover.centers.size()) == brute_force_cover_size(g));
        REQUIRE(cover.assignment.size() == static_cast<size_t>(g.edge_count()));
        std::set<Index> centers(cover.centers.begin(), cover.centers.end());
        for (Index e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges()[static_cast<size_t>(e)];
            const Index c = cover.assignment[static_cast<size_t>(e)];
            CHECK((c == a || c == b));
            CHECK(centers.count(c) == 1);
        }
    }
}

TEST_CASE("forest cover dynamic program agrees with the exact solver") {
    std::mt19937 gen(109);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_forest(gen, 14);
        REQUIRE(raag::is_forest(g));
        CHECK(raag::forest_cover_size(g) ==
              static_cast<Index>(raag::min_vertex_cover(g).centers.size()));
    }
}

TEST_CASE("vertex cover budget") {
    std::vector<std::string> names;
    for (int i = 0; i < 70; ++i) names.push_back(vertex_name(i));
    Graph g = Graph::validate(names, {});
    CHECK_THROWS_AS(raag::min_vertex_cover(g), raag::Error);
    try {
        raag::min_vertex_cover(g);
    } catch (const raag::Error& e) {
        CHECK(e.code() == raag::ErrorCode::SizeLimitExceeded);
    }
    CHECK(raag::min_vertex_cover(g, 70).centers.empty());
    CHECK_THROWS_AS(raag::min_vertex_cover(path(5), 4), raag::Error);
}

TEST_CASE("graphs compare by value") {
    CHECK(path(3) == path(3));
    CHECK(path(3) != path(4));
    CHECK(raag::OrientedGraph::lexicographic(path(3)) ==
          raag::OrientedGraph::lexicographic(path(3)));
}
