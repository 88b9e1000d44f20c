#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "raag/exact_linalg.hpp"
#include "raag/graph.hpp"

namespace raag {

// Integer labels on the oriented edges of an ambient graph. Labels are
// stored keyed by the ambient orientation; reversed queries negate.
struct HomologyClass {
    OrientedGraph ambient;
    std::vector<Int> labels;  // one per ambient edge

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

struct RawLabel {
    std::string from;
    std::string to;
    Int value;
};

// Builds a class from labels given on either orientation of each edge.
HomologyClass new_class(OrientedGraph g, const std::vector<RawLabel>& raw);

HomologyClass zero_class(OrientedGraph g);

bool is_zero(const HomologyClass& alpha);

// Signed label of the ordered pair (tail, head); zero for non-edges.
Int label_of(const HomologyClass& alpha, Index tail, Index head);

// The subgraph spanned by the nonzero-labelled edges, with those labels.
struct Support {
    OrientedGraph subgraph;
    std::vector<Index> ambient_vertex;  // subgraph vertex -> ambient vertex
    std::vector<Index> ambient_edge;    // subgraph edge -> ambient edge
    std::vector<Int> labels;            // per subgraph edge, ambient orientation
};

Support support(const HomologyClass& alpha);

// Skew-symmetric matrix over all ambient vertices with (v, w) entry the
// signed label of (v, w).
struct ConnectionMatrix {
    std::vector<std::string> index;
    IntMatrix matrix;
};

ConnectionMatrix connection_matrix(const HomologyClass& alpha);

// Half the rank of the connection matrix; a lower bound for the genus of
// any surface representative.
Index cap_bound(const HomologyClass& alpha);

HomologyClass add(const HomologyClass& a, const HomologyClass& b);
HomologyClass scale(const HomologyClass& alpha, const Int& c);

// Connected components of the support, as sorted ambient vertex lists
// ordered by smallest vertex.
std::vector<std::vector<Index>> support_components(const HomologyClass& alpha);

// Class agreeing with alpha on the edges inside the given support component
// and zero elsewhere. The argument must be exactly a support component.
HomologyClass restrict_to_component(const HomologyClass& alpha,
                                    const std::vector<Index>& component_vertices);

// All component restrictions, in component order; their sum is alpha.
std::vector<HomologyClass> component_classes(const HomologyClass& alpha);

}  // namespace raag
