#pragma once

#include <string>
#include <vector>

#include "raag/homology.hpp"
#include "raag/vertex_cover.hpp"

namespace raag {

// Labelled star K_{1,n}. Spoke labels are read from the center, i.e. the
// value of l(center, leaf).
struct StarSpoke {
    std::string leaf;
    Int label;

    friend bool operator==(const StarSpoke&, const StarSpoke&) = default;
};

struct Star {
    std::string center;
    std::vector<StarSpoke> spokes;  // sorted by leaf name

    friend bool operator==(const Star&, const Star&) = default;
};

// Edge-disjoint labelled stars whose labels sum to a target class edgewise.
struct StarCover {
    std::vector<Star> stars;

    friend bool operator==(const StarCover&, const StarCover&) = default;
};

// Minimum-cardinality star cover of a nonzero class: a minimum vertex cover
// of the support provides the centers, every support edge is assigned to its
// smallest covering center, and each star carries the target labels.
StarCover min_star_cover(const HomologyClass& alpha, Index budget = kDefaultCoverBudget);

// Checks the cover invariants against the target: stars are well formed and
// sit inside the ambient graph, no two stars share an edge, nonzero spoke
// labels, and labels sum to the target on every edge.
bool verify_star_cover(const StarCover& cover, const HomologyClass& target);

// 0 for the zero class, otherwise |min_star_cover|.
Index sc_cardinality(const HomologyClass& alpha, Index budget = kDefaultCoverBudget);

// The class carrying exactly one star's labels, on the given ambient graph.
HomologyClass star_class(const Star& star, const OrientedGraph& ambient);

}  // namespace raag
