#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "raag/homology.hpp"
#include "raag/star_cover.hpp"

namespace raag {

// One elementary wedge lambda * (a ^ b), vectors over the ambient vertices.
struct WedgeTerm {
    Int lambda;
    IntVector a;
    IntVector b;
};

// Sum of elementary wedges reconstructing a connection matrix:
//   sum_i lambda_i * (a_i b_i^T - b_i a_i^T) = M.
struct WedgeDecomposition {
    std::vector<WedgeTerm> terms;
};

// One pure tensor d * (x (x) y) with x over the A part and y over the B part.
struct TensorTerm {
    Int d;
    IntVector x;
    IntVector y;
};

// Sum of pure tensors reconstructing the label block L (rows part_a, columns
// part_b): sum_i d_i * x_i y_i^T = L.
struct TensorDecomposition {
    std::vector<std::string> part_a;
    std::vector<std::string> part_b;
    std::vector<TensorTerm> terms;
};

// One part of a torus certificate: a vertex set with an integer direction,
// entries parallel to `vertices`.
struct TorusPart {
    std::vector<std::string> vertices;
    std::vector<Int> nu;
};

// Single-torus witness: parts with directions nu_i and coordinate vectors
// c, d indexed by parts. Certifies l(x, y) = (c_i d_j - d_i c_j) *
// nu_i[x] * nu_j[y] for x, y in distinct parts i, j and 0 elsewhere.
struct TorusCertificate {
    std::vector<TorusPart> parts;
    std::vector<Int> c;
    std::vector<Int> d;
};

// A star cover together with one torus per star.
struct StarToriCertificate {
    StarCover cover;
    std::vector<TorusCertificate> tori;
};

struct Certificate;

// Per-support-component certificates, ordered like component_classes.
struct CompositeCertificate {
    std::vector<Certificate> components;
};

struct Certificate {
    std::variant<WedgeDecomposition, TensorDecomposition, TorusCertificate,
                 StarToriCertificate, CompositeCertificate>
        value;
};

struct GenusResult {
    Index lower = 0;
    Index upper = 0;
    std::optional<Index> exact;
    std::string method;
    std::optional<Certificate> certificate;
};

// Writes a class whose support spans a complete full subgraph as
// cap_bound(alpha) elementary wedges, read off the inverse of the skew
// normal form witness. Throws NotComplete otherwise.
WedgeDecomposition wedge_decompose(const HomologyClass& alpha);

// Writes a class whose support admits a bipartition with complete bipartite
// closure inside the ambient graph as rank(L) pure tensors, read off the
// Smith form of the label block. Component color classes are assigned to the
// two sides by an ascending mask search (first success wins, at most 1024
// assignments tried). Throws NotBipartiteCoverable when no assignment closes.
TensorDecomposition tensor_decompose(const HomologyClass& alpha);

// Witness that a class with cap_bound 1 is carried by a single torus. The
// support is re-verified to be complete multipartite and the extracted wedge
// is split along parts into primitive directions with integer coordinates.
// Throws RankNotTwo for other ranks; SupportNotMultipartite and
// DependenceFailure flag internal inconsistencies.
TorusCertificate torus_certificate(const HomologyClass& alpha);

// Torus carrying exactly one labelled star: center part with direction (1),
// leaf part with the spoke labels as direction.
TorusCertificate star_to_torus(const Star& star);

bool verify_certificate(const WedgeDecomposition& cert, const HomologyClass& alpha);
bool verify_certificate(const TensorDecomposition& cert, const HomologyClass& alpha);
bool verify_certificate(const TorusCertificate& cert, const HomologyClass& alpha);
bool verify_certificate(const StarToriCertificate& cert, const HomologyClass& alpha);
bool verify_certificate(const CompositeCertificate& cert, const HomologyClass& alpha);
bool verify_certificate(const Certificate& cert, const HomologyClass& alpha);

// Total genus of the disjoint union of tori described by a certificate.
Index implied_genus(const Certificate& cert);

// Genus bounds with a certificate on the solved families, dispatched per
// support component: rank 2 -> one torus; complete support -> wedges;
// bipartite-coverable support -> tensors; tree support -> star cover of
// tori; otherwise bounds only (cap bound below, star cover size above).
GenusResult genus(const HomologyClass& alpha, Index budget = kDefaultCoverBudget);

// True iff a single torus represents the class, i.e. rank(M) = 2.
// Throws ZeroClass on the zero class.
bool torus_representable(const HomologyClass& alpha);

}  // namespace raag
