#include "raag/star_cover.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace raag {

StarCover min_star_cover(const HomologyClass& alpha, Index budget) {
    if (is_zero(alpha)) fail(ErrorCode::ZeroClass, "the zero class has no star cover");
    Support s = support(alpha);
    const Graph& ambient = alpha.ambient.graph();
    VertexCover cover = min_vertex_cover(s.subgraph.graph(), budget);

    // Group support edges by their assigned center. Minimum covers are
    // inclusion-minimal, so every center receives at least one edge.
    std::map<Index, std::vector<std::pair<std::string, Int>>> spokes_of;
    for (size_t e = 0; e < cover.assignment.size(); ++e) {
        const Index center = cover.assignment[e];
        auto [a, b] = s.subgraph.graph().edges()[e];
        const Index leaf = (a == center) ? b : a;
        const Index ambient_center = s.ambient_vertex[static_cast<size_t>(center)];
        const Index ambient_leaf = s.ambient_vertex[static_cast<size_t>(leaf)];
        spokes_of[center].emplace_back(ambient.name(ambient_leaf),
                                       label_of(alpha, ambient_center, ambient_leaf));
    }

    StarCover out;
    for (auto& [center, spokes] : spokes_of) {
        Star star;
        star.center = s.subgraph.graph().name(center);
        std::sort(spokes.begin(), spokes.end());
        for (auto& [leaf, value] : spokes) star.spokes.push_back({leaf, value});
        out.stars.push_back(std::move(star));
    }
    return out;
}

bool verify_star_cover(const StarCover& cover, const HomologyClass& target) {
    const Graph& g = target.ambient.graph();
    std::map<std::pair<Index, Index>, Int> sum;  // keyed by (small, large) endpoints
    std::set<std::pair<Index, Index>> used_edges;
    for (const Star& star : cover.stars) {
        auto center = g.find_vertex(star.center);
        if (!center) return false;
        if (star.spokes.empty()) return false;
        std::set<std::string> leaves;
        for (const StarSpoke& spoke : star.spokes) {
            auto leaf = g.find_vertex(spoke.leaf);
            if (!leaf || *leaf == *center) return false;
            if (!g.has_edge(*center, *leaf)) return false;
            if (spoke.label == 0) return false;
            if (!leaves.insert(spoke.leaf).second) return false;
            auto key = std::make_pair(std::min(*center, *leaf), std::max(*center, *leaf));
            if (!used_edges.insert(key).second) return false;  // stars overlap
            // Accumulate in the (small, large) direction.
            sum[key] += (key.first == *center) ? spoke.label : Int(-spoke.label);
        }
    }
    for (Index e = 0; e < g.edge_count(); ++e) {
        auto key = g.edges()[static_cast<size_t>(e)];
        Int covered = sum.count(key) ? sum[key] : Int(0);
        if (covered != label_of(target, key.first, key.second)) return false;
    }
    return true;
}

Index sc_cardinality(const HomologyClass& alpha, Index budget) {
    if (is_zero(alpha)) return 0;
    return static_cast<Index>(min_star_cover(alpha, budget).stars.size());
}

HomologyClass star_class(const Star& star, const OrientedGraph& ambient) {
    std::vector<RawLabel> raw;
    for (const StarSpoke& spoke : star.spokes) {
        raw.push_back({star.center, spoke.leaf, spoke.label});
    }
    return new_class(ambient, raw);
}

}  // namespace raag
