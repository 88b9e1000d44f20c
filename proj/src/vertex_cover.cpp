#include "raag/vertex_cover.hpp"

#include <algorithm>

namespace raag {

namespace {

// Branch and bound: any cover either contains the pivot or all of its
// neighbors. Seeded with a greedy cover, pruned by a matching lower bound.
struct SearchState {
    const Graph* g;
    std::vector<char> in_cover;
    Index chosen = 0;
    std::vector<Index> best;

    // Degree counting only edges not yet covered by a chosen vertex.
    Index live_degree(Index v) const {
        if (in_cover[static_cast<size_t>(v)]) return 0;
        Index d = 0;
        for (Index w : g->neighbors(v)) {
            if (!in_cover[static_cast<size_t>(w)]) ++d;
        }
        return d;
    }

    // Greedy maximal matching on uncovered edges; its size is a lower bound
    // for any cover of them.
    Index matching_bound() const {
        std::vector<char> matched(static_cast<size_t>(g->vertex_count()), 0);
        Index size = 0;
        for (auto [a, b] : g->edges()) {
            if (in_cover[static_cast<size_t>(a)] || in_cover[static_cast<size_t>(b)]) continue;
            if (matched[static_cast<size_t>(a)] || matched[static_cast<size_t>(b)]) continue;
            matched[static_cast<size_t>(a)] = 1;
            matched[static_cast<size_t>(b)] = 1;
            ++size;
        }
        return size;
    }

    void search() {
        if (chosen + matching_bound() >= static_cast<Index>(best.size())) return;

        // Max live degree, ties to the smallest vertex.
        Index pivot = -1;
        Index pivot_degree = 0;
        for (Index v = 0; v < g->vertex_count(); ++v) {
            const Index d = live_degree(v);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot == -1) {
            // No live edges; the chosen set is a cover strictly better
            // than the incumbent (the prune above was passed).
            std::vector<Index> cover;
            for (Index v = 0; v < g->vertex_count(); ++v) {
                if (in_cover[static_cast<size_t>(v)]) cover.push_back(v);
            }
            best = std::move(cover);
            return;
        }

        in_cover[static_cast<size_t>(pivot)] = 1;
        ++chosen;
        search();
        --chosen;
        in_cover[static_cast<size_t>(pivot)] = 0;

        std::vector<Index> taken;
        for (Index w : g->neighbors(pivot)) {
            if (!in_cover[static_cast<size_t>(w)]) {
                in_cover[static_cast<size_t>(w)] = 1;
                taken.push_back(w);
            }
        }
        chosen += static_cast<Index>(taken.size());
        search();
        chosen -= static_cast<Index>(taken.size());
        for (Index u : taken) in_cover[static_cast<size_t>(u)] = 0;
    }
};

std::vector<Index> greedy_cover(const Graph& g) {
    std::vector<char> covered_vertex(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<Index> cover;
    for (;;) {
        Index pivot = -1;
        Index pivot_degree = 0;
        for (Index v = 0; v < g.vertex_count(); ++v) {
            if (covered_vertex[static_cast<size_t>(v)]) continue;
            Index d = 0;
            for (Index w : g.neighbors(v)) {
                if (!covered_vertex[static_cast<size_t>(w)]) ++d;
            }
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot == -1) return cover;
        covered_vertex[static_cast<size_t>(pivot)] = 1;
        cover.push_back(pivot);
    }
}

}  // namespace

VertexCover min_vertex_cover(const Graph& g, Index budget) {
    if (g.vertex_count() > budget) {
        fail(ErrorCode::SizeLimitExceeded,
             "exact cover search limited to " + std::to_string(budget) + " vertices");
    }
    SearchState state;
    state.g = &g;
    state.in_cover.assign(static_cast<size_t>(g.vertex_count()), 0);
    state.best = greedy_cover(g);
    state.search();
    std::sort(state.best.begin(), state.best.end());

    VertexCover cover;
    cover.centers = std::move(state.best);
    std::vector<char> in_cover(static_cast<size_t>(g.vertex_count()), 0);
    for (Index v : cover.centers) in_cover[static_cast<size_t>(v)] = 1;
    for (auto [a, b] : g.edges()) {
        // Smaller eligible endpoint; minimum covers are inclusion-minimal,
        // so every edge has one.
        cover.assignment.push_back(in_cover[static_cast<size_t>(a)] ? a : b);
    }
    return cover;
}

bool is_vertex_cover(const Graph& g, const std::vector<Index>& centers) {
    std::vector<char> in_cover(static_cast<size_t>(g.vertex_count()), 0);
    for (Index v : centers) in_cover[static_cast<size_t>(v)] = 1;
    for (auto [a, b] : g.edges()) {
        if (!in_cover[static_cast<size_t>(a)] && !in_cover[static_cast<size_t>(b)]) return false;
    }
    return true;
}

Index forest_cover_size(const Graph& g) {
    // Rooted-tree DP: take[v] covers all edges below and at v,
    // skip[v] forces every child into the cover.
    std::vector<Index> take(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<Index> skip(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    Index total = 0;
    for (Index root = 0; root < g.vertex_count(); ++root) {
        if (visited[static_cast<size_t>(root)]) continue;
        std::vector<std::pair<Index, Index>> stack{{root, -1}};
        std::vector<std::pair<Index, Index>> order;
        visited[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            order.emplace_back(v, parent);
            for (Index w : g.neighbors(v)) {
                if (w == parent) continue;
                visited[static_cast<size_t>(w)] = 1;
                stack.emplace_back(w, v);
            }
        }
        // Children precede parents in reverse discovery order.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto [v, parent] = *it;
            take[static_cast<size_t>(v)] = 1;
            skip[static_cast<size_t>(v)] = 0;
            for (Index w : g.neighbors(v)) {
                if (w == parent) continue;
                take[static_cast<size_t>(v)] +=
                    std::min(take[static_cast<size_t>(w)], skip[static_cast<size_t>(w)]);
                skip[static_cast<size_t>(v)] += take[static_cast<size_t>(w)];
            }
        }
        total += std::min(take[static_cast<size_t>(root)], skip[static_cast<size_t>(root)]);
    }
    return total;
}

}  // namespace raag
