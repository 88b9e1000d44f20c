#include "raag/homology.hpp"

#include <algorithm>
#include <set>

namespace raag {

HomologyClass new_class(OrientedGraph g, const std::vector<RawLabel>& raw) {
    std::vector<Int> labels(static_cast<size_t>(g.graph().edge_count()), Int(0));
    std::vector<char> seen(labels.size(), 0);
    for (const auto& entry : raw) {
        auto from = g.graph().find_vertex(entry.from);
        auto to = g.graph().find_vertex(entry.to);
        std::optional<Index> e;
        if (from && to) e = g.graph().edge_index(*from, *to);
        if (!e) {
            fail(ErrorCode::UnknownEdge,
                 "labelled pair is not an edge: (" + entry.from + "," + entry.to + ")");
        }
        if (seen[static_cast<size_t>(*e)]) {
            fail(ErrorCode::DuplicateLabel,
                 "edge labelled twice: (" + entry.from + "," + entry.to + ")");
        }
        seen[static_cast<size_t>(*e)] = 1;
        auto [tail, head] = g.oriented_edge(*e);
        labels[static_cast<size_t>(*e)] = (tail == *from) ? entry.value : Int(-entry.value);
    }
    return HomologyClass{std::move(g), std::move(labels)};
}

HomologyClass zero_class(OrientedGraph g) {
    std::vector<Int> labels(static_cast<size_t>(g.graph().edge_count()), Int(0));
    return HomologyClass{std::move(g), std::move(labels)};
}

bool is_zero(const HomologyClass& alpha) {
    return std::all_of(alpha.labels.begin(), alpha.labels.end(),
                       [](const Int& x) { return x == 0; });
}

Int label_of(const HomologyClass& alpha, Index tail, Index head) {
    auto e = alpha.ambient.graph().edge_index(tail, head);
    if (!e) return Int(0);
    const Int& stored = alpha.labels[static_cast<size_t>(*e)];
    return alpha.ambient.oriented_edge(*e).first == tail ? stored : Int(-stored);
}

Support support(const HomologyClass& alpha) {
    const Graph& g = alpha.ambient.graph();
    std::set<Index> vertex_set;
    std::vector<Index> edges;
    for (Index e = 0; e < g.edge_count(); ++e) {
        if (alpha.labels[static_cast<size_t>(e)] == 0) continue;
        edges.push_back(e);
        vertex_set.insert(g.edges()[static_cast<size_t>(e)].first);
        vertex_set.insert(g.edges()[static_cast<size_t>(e)].second);
    }

    std::vector<std::string> names;
    std::vector<Index> ambient_vertex(vertex_set.begin(), vertex_set.end());
    for (Index v : ambient_vertex) names.push_back(g.name(v));
    std::vector<std::pair<std::string, std::string>> edge_names;
    for (Index e : edges) {
        auto [a, b] = g.edges()[static_cast<size_t>(e)];
        edge_names.emplace_back(g.name(a), g.name(b));
    }
    Graph sub = Graph::validate(names, edge_names);

    // Vertex order is name order in both graphs, so each subgraph edge is
    // the ambient edge with the same endpoint names; both edge lists sort
    // by index pairs, hence by name pairs, so positions line up.
    Support s;
    std::vector<char> flipped;
    std::vector<std::pair<std::string, std::string>> oriented;
    for (Index e : edges) {
        auto [tail, head] = alpha.ambient.oriented_edge(e);
        oriented.emplace_back(g.name(tail), g.name(head));
        s.labels.push_back(alpha.labels[static_cast<size_t>(e)]);
    }
    s.subgraph = OrientedGraph::validate(std::move(sub), oriented);
    s.ambient_vertex = std::move(ambient_vertex);
    s.ambient_edge = std::move(edges);
    return s;
}

ConnectionMatrix connection_matrix(const HomologyClass& alpha) {
    const Graph& g = alpha.ambient.graph();
    const Index n = g.vertex_count();
    ConnectionMatrix m;
    m.index = g.vertex_names();
    m.matrix = IntMatrix::Zero(n, n);
    for (Index e = 0; e < g.edge_count(); ++e) {
        auto [tail, head] = alpha.ambient.oriented_edge(e);
        const Int& value = alpha.labels[static_cast<size_t>(e)];
        m.matrix(tail, head) = value;
        m.matrix(head, tail) = -value;
    }
    return m;
}

Index cap_bound(const HomologyClass& alpha) {
    return rank(connection_matrix(alpha).matrix) / 2;
}

HomologyClass add(const HomologyClass& a, const HomologyClass& b) {
    if (a.ambient != b.ambient) {
        fail(ErrorCode::AmbientMismatch, "classes live on different oriented graphs");
    }
    HomologyClass out = a;
    for (size_t e = 0; e < out.labels.size(); ++e) out.labels[e] += b.labels[e];
    return out;
}

HomologyClass scale(const HomologyClass& alpha, const Int& c) {
    HomologyClass out = alpha;
    for (auto& label : out.labels) label *= c;
    return out;
}

std::vector<std::vector<Index>> support_components(const HomologyClass& alpha) {
    Support s = support(alpha);
    std::vector<std::vector<Index>> components;
    for (const auto& comp : connected_components(s.subgraph.graph())) {
        std::vector<Index> ambient;
        for (Index v : comp) ambient.push_back(s.ambient_vertex[static_cast<size_t>(v)]);
        components.push_back(std::move(ambient));
    }
    return components;
}

HomologyClass restrict_to_component(const HomologyClass& alpha,
                                    const std::vector<Index>& component_vertices) {
    auto components = support_components(alpha);
    std::vector<Index> wanted = component_vertices;
    std::sort(wanted.begin(), wanted.end());
    if (std::find(components.begin(), components.end(), wanted) == components.end()) {
        fail(ErrorCode::NotAComponent,
             "vertex set is not a connected component of the support");
    }
    std::set<Index> in_component(wanted.begin(), wanted.end());
    HomologyClass out = alpha;
    const Graph& g = alpha.ambient.graph();
    for (Index e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[static_cast<size_t>(e)];
        if (!in_component.count(a) || !in_component.count(b)) {
            out.labels[static_cast<size_t>(e)] = 0;
        }
    }
    return out;
}

std::vector<HomologyClass> component_classes(const HomologyClass& alpha) {
    std::vector<HomologyClass> out;
    for (const auto& comp : support_components(alpha)) {
        out.push_back(restrict_to_component(alpha, comp));
    }
    return out;
}

}  // namespace raag
