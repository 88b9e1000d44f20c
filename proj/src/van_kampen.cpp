#include "raag/van_kampen.hpp"

#include <algorithm>
#include <numeric>

#include "raag/errors.hpp"

namespace raag {

namespace {

struct UnionFind {
    std::vector<Index> parent;

    explicit UnionFind(Index n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), Index{0});
    }

    Index find(Index v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }

    void unite(Index a, Index b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// corner k of square s is the start of side k; 4 corners per square
Index corner_id(const SideSlot& slot, Index corner) {
    return 4 * slot.first + ((slot.second + corner) & 3);
}

}  // namespace

VanKampenDiagram validate_diagram(Graph ambient, std::vector<Square> squares,
                                  std::vector<std::pair<SideSlot, SideSlot>> gluing) {
    for (size_t s = 0; s < squares.size(); ++s) {
        const auto& sides = squares[s].sides;
        const std::string where = "square " + std::to_string(s);
        for (const auto& side : sides) {
            if (side.sign != 1 && side.sign != -1) {
                fail(ErrorCode::InvalidArgument, "side sign must be +1 or -1", where);
            }
            if (!ambient.find_vertex(side.generator)) {
                fail(ErrorCode::UnknownGenerator,
                     "side generator '" + side.generator + "' is not a vertex", where);
            }
        }
        for (int k : {0, 1}) {
            if (sides[static_cast<size_t>(k)].generator != sides[static_cast<size_t>(k + 2)].generator ||
                sides[static_cast<size_t>(k)].sign != -sides[static_cast<size_t>(k + 2)].sign) {
                fail(ErrorCode::OppositeSideMismatch,
                     "opposite sides must carry the same generator with flipped signs", where);
            }
        }
        if (sides[0].generator != sides[1].generator &&
            !ambient.has_edge(*ambient.find_vertex(sides[0].generator),
                              *ambient.find_vertex(sides[1].generator))) {
            fail(ErrorCode::NonCommutingLabels,
                 "generators '" + sides[0].generator + "' and '" + sides[1].generator +
                     "' do not span an edge",
                 where);
        }
    }

    const Index slot_count = static_cast<Index>(4 * squares.size());
    std::vector<char> seen(static_cast<size_t>(slot_count), 0);
    for (const auto& [a, b] : gluing) {
        for (const SideSlot& slot : {a, b}) {
            if (slot.first < 0 || slot.first >= static_cast<Index>(squares.size()) ||
                slot.second < 0 || slot.second >= 4) {
                fail(ErrorCode::InvalidArgument, "gluing refers to a side slot out of range",
                     "gluing");
            }
        }
        if (a == b) {
            fail(ErrorCode::IncompleteMatching, "a side slot is glued to itself", "gluing");
        }
        for (const SideSlot& slot : {a, b}) {
            const Index id = 4 * slot.first + slot.second;
            if (seen[static_cast<size_t>(id)]) {
                fail(ErrorCode::IncompleteMatching, "a side slot appears in two gluing pairs",
                     "gluing");
            }
            seen[static_cast<size_t>(id)] = 1;
        }
        const SquareSide& sa = squares[static_cast<size_t>(a.first)].sides[static_cast<size_t>(a.second)];
        const SquareSide& sb = squares[static_cast<size_t>(b.first)].sides[static_cast<size_t>(b.second)];
        if (sa.generator != sb.generator) {
            fail(ErrorCode::GeneratorMismatchAtGluing,
                 "glued sides carry generators '" + sa.generator + "' and '" + sb.generator + "'",
                 "gluing");
        }
        if (sa.sign != -sb.sign) {
            fail(ErrorCode::OrientationIncompatibleGluing,
                 "glued sides must have opposite signs", "gluing");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        fail(ErrorCode::IncompleteMatching, "some side slot is not glued", "gluing");
    }
    return VanKampenDiagram{std::move(ambient), std::move(squares), std::move(gluing)};
}

SurfaceSummary surface_summary(const VanKampenDiagram& d) {
    const Index faces = static_cast<Index>(d.squares.size());

    // Corner orbits: the identification maps the start of one glued side to
    // the end of the other and vice versa.
    UnionFind corners(4 * faces);
    UnionFind comps(faces);
    for (const auto& [a, b] : d.gluing) {
        corners.unite(corner_id(a, 0), corner_id(b, 1));
        corners.unite(corner_id(a, 1), corner_id(b, 0));
        comps.unite(a.first, b.first);
    }

    std::vector<Index> comp_index(static_cast<size_t>(faces), -1);
    SurfaceSummary out;
    for (Index s = 0; s < faces; ++s) {
        const Index root = comps.find(s);
        if (comp_index[static_cast<size_t>(root)] == -1) {
            comp_index[static_cast<size_t>(root)] = static_cast<Index>(out.components.size());
            out.components.push_back({});
        }
        out.components[static_cast<size_t>(comp_index[static_cast<size_t>(root)])].faces += 1;
    }
    for (const auto& [a, b] : d.gluing) {
        const Index c = comp_index[static_cast<size_t>(comps.find(a.first))];
        out.components[static_cast<size_t>(c)].edges += 1;
    }
    std::vector<char> counted(static_cast<size_t>(4 * faces), 0);
    for (Index s = 0; s < faces; ++s) {
        for (Index k = 0; k < 4; ++k) {
            const Index root = corners.find(4 * s + k);
            if (counted[static_cast<size_t>(root)]) continue;
            counted[static_cast<size_t>(root)] = 1;
            const Index c = comp_index[static_cast<size_t>(comps.find(s))];
            out.components[static_cast<size_t>(c)].vertices += 1;
        }
    }

    for (auto& comp : out.components) {
        comp.euler = static_cast<long>(comp.vertices - comp.edges + comp.faces);
        if (comp.euler % 2 != 0 || comp.euler > 2) {
            fail(ErrorCode::OddEulerCharacteristic,
                 "component euler characteristic " + std::to_string(comp.euler) +
                     " is not that of a closed oriented surface",
                 "surface_summary");
        }
        comp.genus = static_cast<Index>((2 - comp.euler) / 2);
        out.total_genus += comp.genus;
    }
    return out;
}

HomologyClass induced_class(const VanKampenDiagram& d, const OrientedGraph& orientation) {
    if (orientation.graph() != d.ambient) {
        fail(ErrorCode::AmbientMismatch, "orientation is over a different graph",
             "induced_class");
    }
    HomologyClass out = zero_class(orientation);
    for (const auto& square : d.squares) {
        const auto& sides = square.sides;
        if (sides[0].generator == sides[1].generator) continue;
        const Index v = *d.ambient.find_vertex(sides[0].generator);
        const Index w = *d.ambient.find_vertex(sides[1].generator);
        const Index e = *d.ambient.edge_index(v, w);
        const auto [tail, head] = orientation.oriented_edge(e);
        const int sign = sides[0].sign * sides[1].sign;
        out.labels[static_cast<size_t>(e)] += (tail == v) ? sign : -sign;
    }
    return out;
}

bool represents(const VanKampenDiagram& d, const HomologyClass& alpha) {
    if (alpha.ambient.graph() != d.ambient) {
        fail(ErrorCode::AmbientMismatch, "class is over a different graph", "represents");
    }
    return induced_class(d, alpha.ambient) == alpha;
}

Index genus_of(const VanKampenDiagram& d) { return surface_summary(d).total_genus; }

}  // namespace raag
