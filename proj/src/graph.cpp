#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

namespace raag {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (std::isspace(c) || !std::isprint(c)) return false;
    }
    return true;
}

}  // namespace

Graph Graph::validate(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    for (const auto& v : vertices) {
        if (!valid_token(v)) {
            fail(ErrorCode::InvalidArgument,
                 "vertex name must be a nonempty printable token without whitespace");
        }
    }
    g.names_ = vertices;
    std::sort(g.names_.begin(), g.names_.end());
    for (size_t i = 1; i < g.names_.size(); ++i) {
        if (g.names_[i] == g.names_[i - 1]) {
            fail(ErrorCode::DuplicateVertex, "vertex listed twice: " + g.names_[i]);
        }
    }

    g.adjacency_.assign(g.names_.size(), {});
    std::set<std::pair<Index, Index>> seen;
    for (const auto& [sa, sb] : edges) {
        auto ia = g.find_vertex(sa);
        if (!ia) fail(ErrorCode::UnknownEndpoint, "edge endpoint is not a vertex: " + sa);
        auto ib = g.find_vertex(sb);
        if (!ib) fail(ErrorCode::UnknownEndpoint, "edge endpoint is not a vertex: " + sb);
        if (*ia == *ib) fail(ErrorCode::LoopEdge, "loop at vertex: " + sa);
        auto key = std::make_pair(std::min(*ia, *ib), std::max(*ia, *ib));
        if (!seen.insert(key).second) {
            fail(ErrorCode::DuplicateEdge, "edge listed twice: {" + sa + "," + sb + "}");
        }
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (Index e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges_[static_cast<size_t>(e)];
        g.adjacency_[static_cast<size_t>(a)].push_back(b);
        g.adjacency_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    return g;
}

Index Graph::index_of(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) fail(ErrorCode::UnknownVertex, "unknown vertex: " + name);
    return *v;
}

std::optional<Index> Graph::find_vertex(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Index>(it - names_.begin());
}

std::optional<Index> Graph::edge_index(Index a, Index b) const {
    if (a == b) return std::nullopt;
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<Index>(it - edges_.begin());
}

OrientedGraph OrientedGraph::lexicographic(Graph g) {
    OrientedGraph og;
    og.flipped_.assign(static_cast<size_t>(g.edge_count()), 0);
    og.graph_ = std::move(g);
    return og;
}

OrientedGraph OrientedGraph::validate(
    Graph g, const std::vector<std::pair<std::string, std::string>>& oriented) {
    OrientedGraph og;
    std::vector<char> flipped(static_cast<size_t>(g.edge_count()), 0);
    std::vector<char> covered(static_cast<size_t>(g.edge_count()), 0);
    for (const auto& [st, sh] : oriented) {
        auto t = g.find_vertex(st);
        if (!t) fail(ErrorCode::UnknownEndpoint, "oriented edge endpoint is not a vertex: " + st);
        auto h = g.find_vertex(sh);
        if (!h) fail(ErrorCode::UnknownEndpoint, "oriented edge endpoint is not a vertex: " + sh);
        auto e = g.edge_index(*t, *h);
        if (!e) fail(ErrorCode::UnknownEdge, "oriented pair is not an edge: (" + st + "," + sh + ")");
        if (covered[static_cast<size_t>(*e)]) {
            fail(ErrorCode::DuplicateEdge, "edge oriented twice: {" + st + "," + sh + "}");
        }
        covered[static_cast<size_t>(*e)] = 1;
        flipped[static_cast<size_t>(*e)] = (*t > *h) ? 1 : 0;
    }
    for (Index e = 0; e < g.edge_count(); ++e) {
        if (!covered[static_cast<size_t>(e)]) {
            auto [a, b] = g.edges()[static_cast<size_t>(e)];
            fail(ErrorCode::InvalidArgument,
                 "orientation does not cover edge {" + g.name(a) + "," + g.name(b) + "}");
        }
    }
    og.flipped_ = std::move(flipped);
    og.graph_ = std::move(g);
    return og;
}

std::vector<std::vector<Index>> connected_components(const Graph& g) {
    std::vector<std::vector<Index>> components;
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    for (Index start = 0; start < g.vertex_count(); ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        std::vector<Index> comp;
        std::queue<Index> queue;
        queue.push(start);
        visited[static_cast<size_t>(start)] = 1;
        while (!queue.empty()) {
            Index v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (Index w : g.neighbors(v)) {
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = 1;
                    queue.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

Graph full_subgraph(const Graph& g, std::vector<Index> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<std::string> names;
    for (Index v : vertices) {
        if (v < 0 || v >= g.vertex_count()) {
            fail(ErrorCode::UnknownVertex, "vertex index out of range");
        }
        names.push_back(g.name(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.has_edge(vertices[i], vertices[j])) {
                edges.emplace_back(names[i], names[j]);
            }
        }
    }
    return Graph::validate(names, edges);
}

Graph full_subgraph(const Graph& g, const std::vector<std::string>& vertices) {
    std::vector<Index> idx;
    idx.reserve(vertices.size());
    for (const auto& name : vertices) idx.push_back(g.index_of(name));
    return full_subgraph(g, std::move(idx));
}

bool is_complete(const Graph& g) {
    const Index n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_forest(const Graph& g) {
    // DFS back-edge detection; components counted independently in tests.
    std::vector<Index> parent(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    for (Index start = 0; start < g.vertex_count(); ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        std::vector<Index> stack{start};
        visited[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            Index v = stack.back();
            stack.pop_back();
            for (Index w : g.neighbors(v)) {
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = 1;
                    parent[static_cast<size_t>(w)] = v;
                    stack.push_back(w);
                } else if (w != parent[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<Bipartition> complete_bipartite_parts(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    auto components = connected_components(g);
    if (components.size() != 1) return std::nullopt;

    // 2-color from vertex 0; part_a is the class of the smallest vertex.
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<Index> queue;
    queue.push(0);
    color[0] = 0;
    while (!queue.empty()) {
        Index v = queue.front();
        queue.pop();
        for (Index w : g.neighbors(v)) {
            if (color[static_cast<size_t>(w)] == -1) {
                color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                queue.push(w);
            } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                return std::nullopt;
            }
        }
    }
    Bipartition parts;
    for (Index v = 0; v < g.vertex_count(); ++v) {
        (color[static_cast<size_t>(v)] == 0 ? parts.part_a : parts.part_b).push_back(v);
    }
    // All edges are cross edges; completeness is then a counting matter.
    const Index cross = static_cast<Index>(parts.part_a.size()) *
                        static_cast<Index>(parts.part_b.size());
    if (g.edge_count() != cross) return std::nullopt;
    return parts;
}

std::optional<std::vector<std::vector<Index>>> complete_multipartite_parts(const Graph& g) {
    const Index n = g.vertex_count();
    if (n == 0) return std::nullopt;

    // Parts are the components of the complement graph.
    std::vector<Index> part_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<Index>> parts;
    for (Index start = 0; start < n; ++start) {
        if (part_of[static_cast<size_t>(start)] != -1) continue;
        const Index id = static_cast<Index>(parts.size());
        parts.push_back({});
        std::queue<Index> queue;
        queue.push(start);
        part_of[static_cast<size_t>(start)] = id;
        while (!queue.empty()) {
            Index v = queue.front();
            queue.pop();
            parts[static_cast<size_t>(id)].push_back(v);
            for (Index w = 0; w < n; ++w) {
                if (w == v || part_of[static_cast<size_t>(w)] != -1) continue;
                if (!g.has_edge(v, w)) {
                    part_of[static_cast<size_t>(w)] = id;
                    queue.push(w);
                }
            }
        }
        std::sort(parts[static_cast<size_t>(id)].begin(), parts[static_cast<size_t>(id)].end());
    }
    for (Index v = 0; v < n; ++v) {
        for (Index w = v + 1; w < n; ++w) {
            const bool same = part_of[static_cast<size_t>(v)] == part_of[static_cast<size_t>(w)];
            if (same == g.has_edge(v, w)) return std::nullopt;
        }
    }
    return parts;
}

std::optional<Index> is_star(const Graph& g) {
    const Index n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return std::nullopt;
    Index center = -1;
    Index leaves = 0;
    for (Index v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1 && center == -1) {
            center = v;
        } else if (g.degree(v) == 1) {
            ++leaves;
        } else {
            return std::nullopt;
        }
    }
    if (center == -1 || leaves != n - 1) return std::nullopt;
    return center;
}

}  // namespace raag
