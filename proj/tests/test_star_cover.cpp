#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "raag/star_cover.hpp"
#include "test_util.hpp"

using raag::HomologyClass;
using raag::Index;
using raag::Int;
using raag::StarCover;

namespace {

// Independent minimum star-cover cardinality: every cover assigns each
// support edge to one endpoint acting as its star's center, so enumerate
// all 2^edges assignments and count distinct centers.
Index brute_force_star_cover_size(const HomologyClass& alpha) {
    raag::Support s = raag::support(alpha);
    const auto& edges = s.subgraph.graph().edges();
    REQUIRE(edges.size() <= 7);
    Index best = static_cast<Index>(edges.size()) + 1;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::set<Index> centers;
        for (size_t e = 0; e < edges.size(); ++e) {
            centers.insert(mask & (1u << e) ? edges[e].first : edges[e].second);
        }
        best = std::min<Index>(best, static_cast<Index>(centers.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("star cover of a class already supported on a star") {
    HomologyClass alpha = testutil::three_spoke_star_class();
    StarCover cover = raag::min_star_cover(alpha);
    REQUIRE(cover.stars.size() == 1);
    CHECK(cover.stars[0].center == "c0");
    REQUIRE(cover.stars[0].spokes.size() == 3);
    CHECK(cover.stars[0].spokes[0] == raag::StarSpoke{"x1", Int(5)});
    CHECK(cover.stars[0].spokes[1] == raag::StarSpoke{"x2", Int(-2)});
    CHECK(cover.stars[0].spokes[2] == raag::StarSpoke{"x3", Int(7)});
    CHECK(raag::verify_star_cover(cover, alpha));
    CHECK(raag::sc_cardinality(alpha) == 1);
}

TEST_CASE("star cover of the labelled path") {
    raag::Graph g = testutil::indexed_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    HomologyClass alpha = raag::new_class(
        raag::OrientedGraph::lexicographic(g),
        {{"v00", "v01", Int(1)}, {"v01", "v02", Int(1)}, {"v02", "v03", Int(1)}});
    StarCover cover = raag::min_star_cover(alpha);
    REQUIRE(cover.stars.size() == 2);
    CHECK(cover.stars[0].center == "v01");
    CHECK(cover.stars[1].center == "v02");
    CHECK(raag::verify_star_cover(cover, alpha));
}

TEST_CASE("pinned cover cardinalities") {
    CHECK(raag::sc_cardinality(testutil::pentagon_all_ones()) == 3);
    CHECK(raag::sc_cardinality(testutil::beta_class()) == 2);
    CHECK(raag::sc_cardinality(testutil::alpha_class()) == 2);
    CHECK(raag::sc_cardinality(raag::zero_class(
              raag::OrientedGraph::lexicographic(testutil::square_graph()))) == 0);
    CHECK_THROWS_AS(raag::min_star_cover(raag::zero_class(
                        raag::OrientedGraph::lexicographic(testutil::square_graph()))),
                    raag::Error);
}

TEST_CASE("verification rejects tampered covers") {
    HomologyClass alpha = testutil::pentagon_all_ones();
    StarCover cover = raag::min_star_cover(alpha);
    CHECK(raag::verify_star_cover(cover, alpha));

    StarCover perturbed = cover;
    perturbed.stars[0].spokes[0].label += 1;
    CHECK_FALSE(raag::verify_star_cover(perturbed, alpha));

    // Two stars sharing an edge: duplicate one spoke into a second star
    // centered at its leaf.
    StarCover overlapping = cover;
    const auto& first = cover.stars[0];
    raag::Star duplicate;
    duplicate.center = first.spokes[0].leaf;
    duplicate.spokes.push_back({first.center, Int(-first.spokes[0].label)});
    overlapping.stars.push_back(duplicate);
    CHECK_FALSE(raag::verify_star_cover(overlapping, alpha));

    StarCover zero_spoke = cover;
    zero_spoke.stars[0].spokes[0].label = 0;
    CHECK_FALSE(raag::verify_star_cover(zero_spoke, alpha));

    StarCover bad_leaf = cover;
    bad_leaf.stars[0].spokes[0].leaf = "zz";
    CHECK_FALSE(raag::verify_star_cover(bad_leaf, alpha));
}

TEST_CASE("cardinality equals the brute-force star cover minimum") {
    std::mt19937 gen(307);
    int done = 0;
    while (done < 120) {
        raag::Graph g = [&] {
            std::uniform_int_distribution<int> size_dist(2, 6);
            std::bernoulli_distribution edge(0.5);
            const int n = size_dist(gen);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (edge(gen)) edges.emplace_back(i, j);
                }
            }
            return testutil::indexed_graph(n, edges);
        }();
        std::uniform_int_distribution<long> label(-2, 2);
        std::vector<raag::RawLabel> raw;
        for (auto [a, b] : g.edges()) {
            long v = label(gen);
            if (v != 0) raw.push_back({g.name(a), g.name(b), Int(v)});
        }
        if (raw.empty()) continue;
        HomologyClass alpha = raag::new_class(raag::OrientedGraph::lexicographic(g), raw);
        if (raag::support(alpha).subgraph.graph().edge_count() > 7) continue;
        StarCover cover = raag::min_star_cover(alpha);
        CHECK(raag::verify_star_cover(cover, alpha));
        CHECK(static_cast<Index>(cover.stars.size()) == brute_force_star_cover_size(alpha));
        ++done;
    }
}

TEST_CASE("tree classes have cardinality equal to the cap bound") {
    std::mt19937 gen(311);
    for (int trial = 0; trial < 300; ++trial) {
        HomologyClass alpha = testutil::random_forest_class(gen, 12, 9);
        if (raag::is_zero(alpha)) continue;
        CHECK(raag::sc_cardinality(alpha) == raag::cap_bound(alpha));
    }
}

TEST_CASE("cardinality is additive over support components") {
    std::mt19937 gen(313);
    for (int trial = 0; trial < 80; ++trial) {
        HomologyClass alpha = testutil::random_forest_class(gen, 10, 4);
        if (raag::is_zero(alpha)) continue;
        Index total = raag::sc_cardinality(alpha);
        Index sum = 0;
        for (const auto& piece : raag::component_classes(alpha)) {
            sum += raag::sc_cardinality(piece);
        }
        CHECK(total == sum);
    }
}

TEST_CASE("star classes reproduce their stars") {
    HomologyClass alpha = testutil::pentagon_all_ones();
    StarCover cover = raag::min_star_cover(alpha);
    HomologyClass sum = raag::zero_class(alpha.ambient);
    for (const auto& star : cover.stars) {
        sum = raag::add(sum, raag::star_class(star, alpha.ambient));
    }
    CHECK(sum == alpha);
}
