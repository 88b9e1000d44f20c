#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "raag/homology.hpp"

namespace raag {

// One side of a square: a generator with +1 when the side's arrow agrees
// with the square's counterclockwise boundary traversal, -1 otherwise.
struct SquareSide {
    std::string generator;
    int sign = 1;

    friend bool operator==(const SquareSide&, const SquareSide&) = default;
};

// Sides indexed 0..3 counterclockwise. Opposite sides carry the same
// generator with flipped signs, so the boundary spells a commutator.
struct Square {
    std::array<SquareSide, 4> sides;

    friend bool operator==(const Square&, const Square&) = default;
};

// (square index, side index)
using SideSlot = std::pair<Index, Index>;

// Square-tiled closed oriented surface: squares plus a perfect matching of
// side slots. Paired sides carry the same generator with opposite signs, so
// every identification reverses boundary orientation.
struct VanKampenDiagram {
    Graph ambient;
    std::vector<Square> squares;
    std::vector<std::pair<SideSlot, SideSlot>> gluing;
};

// Checks all square and gluing invariants against the ambient graph.
// Throws UnknownGenerator, OppositeSideMismatch, NonCommutingLabels,
// IncompleteMatching, GeneratorMismatchAtGluing,
// OrientationIncompatibleGluing, or InvalidArgument (slot out of range).
VanKampenDiagram validate_diagram(Graph ambient, std::vector<Square> squares,
                                  std::vector<std::pair<SideSlot, SideSlot>> gluing);

struct SurfaceComponent {
    Index vertices = 0;
    Index edges = 0;
    Index faces = 0;
    long euler = 0;
    Index genus = 0;

    friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};

struct SurfaceSummary {
    std::vector<SurfaceComponent> components;
    Index total_genus = 0;
};

// Quotient cell structure of a validated diagram: per face-adjacency
// component, F = squares, E = 2F, V = corner orbits under the gluing.
// Components are ordered by smallest square index.
SurfaceSummary surface_summary(const VanKampenDiagram& d);

// The second homology class of the surface's fundamental class: each square
// with distinct generators contributes sign(0) * sign(1) to the label of
// (generator(0), generator(1)), re-keyed to the given orientation.
// Throws AmbientMismatch when the orientation is over a different graph.
HomologyClass induced_class(const VanKampenDiagram& d, const OrientedGraph& orientation);

// True iff the induced class equals alpha labelwise. Throws AmbientMismatch.
bool represents(const VanKampenDiagram& d, const HomologyClass& alpha);

// Total genus over all components.
Index genus_of(const VanKampenDiagram& d);

}  // namespace raag
