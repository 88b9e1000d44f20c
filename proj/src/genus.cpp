#include "raag/genus.hpp"

#include <cstdint>
#include <utility>

#include "raag/errors.hpp"

namespace raag {

namespace {

bool is_zero_vector(const IntVector& v) {
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return false;
    }
    return true;
}

Int floor_quotient(const Int& x, const Int& y) {
    Int q = x / y;
    if (x % y != 0 && (x < 0) != (y < 0)) q -= 1;
    return q;
}

// Replaces (a, b) by the canonical lattice basis of span{a, b}: the Hermite
// basis, with the second row negated when the row transform has determinant
// -1 so that a ^ b is preserved exactly.
void canonicalize_plane(IntVector& a, IntVector& b) {
    const Index n = a.size();
    int det = 1;
    Index col = 0;
    while (col < n && a[col] == 0 && b[col] == 0) ++col;
    while (a[col] != 0 && b[col] != 0) {
        if (abs(a[col]) <= abs(b[col])) {
            b -= a * Int(b[col] / a[col]);
        } else {
            a -= b * Int(a[col] / b[col]);
        }
    }
    if (a[col] == 0) {
        a.swap(b);
        det = -det;
    }
    if (a[col] < 0) {
        a = -a;
        det = -det;
    }
    Index col2 = col + 1;
    while (b[col2] == 0) ++col2;
    if (b[col2] < 0) {
        b = -b;
        det = -det;
    }
    a -= b * floor_quotient(a[col2], b[col2]);
    if (det < 0) b = -b;
}

// x = coord * nu, or DependenceFailure.
Int coordinate_along(const IntVector& x, const IntVector& nu, const char* where) {
    Index k = 0;
    while (nu[k] == 0) ++k;
    if (x[k] % nu[k] != 0) fail(ErrorCode::DependenceFailure, "restriction is not parallel to its direction", where);
    Int coord = x[k] / nu[k];
    for (Index i = 0; i < x.size(); ++i) {
        if (x[i] != coord * nu[i]) {
            fail(ErrorCode::DependenceFailure, "restriction is not parallel to its direction", where);
        }
    }
    return coord;
}

// True when every vertex with a nonzero entry of a is adjacent to every
// other vertex with a nonzero entry of b. This is what lets the two
// abelianized vectors lift to commuting group elements.
bool letters_commute(const Graph& g, const IntVector& a, const IntVector& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (Index j = 0; j < b.size(); ++j) {
            if (b[j] == 0 || i == j) continue;
            if (!g.has_edge(i, j)) return false;
        }
    }
    return true;
}

}  // namespace

WedgeDecomposition wedge_decompose(const HomologyClass& alpha) {
    Support supp = support(alpha);
    Graph closure = full_subgraph(alpha.ambient.graph(), supp.subgraph.graph().vertex_names());
    if (!is_complete(closure)) {
        fail(ErrorCode::NotComplete, "support vertices do not span a complete subgraph",
             "wedge_decompose");
    }
    ConnectionMatrix cm = connection_matrix(alpha);
    SkewNormalForm nf = skew_normal_form(cm.matrix);
    IntMatrix w = unimodular_inverse(nf.U);
    WedgeDecomposition out;
    for (size_t i = 0; i < nf.lambdas.size(); ++i) {
        WedgeTerm term;
        term.lambda = nf.lambdas[i];
        term.a = w.col(static_cast<Index>(2 * i));
        term.b = w.col(static_cast<Index>(2 * i + 1));
        out.terms.push_back(std::move(term));
    }
    return out;
}

TensorDecomposition tensor_decompose(const HomologyClass& alpha) {
    Support supp = support(alpha);
    const Graph& sg = supp.subgraph.graph();
    const Graph& ambient = alpha.ambient.graph();
    std::vector<std::vector<Index>> comps = connected_components(sg);

    // 2-color every support component, color 0 on its smallest vertex.
    std::vector<int> color(static_cast<size_t>(sg.vertex_count()), -1);
    for (const auto& comp : comps) {
        color[static_cast<size_t>(comp[0])] = 0;
        std::vector<Index> stack = {comp[0]};
        while (!stack.empty()) {
            Index v = stack.back();
            stack.pop_back();
            for (Index u : sg.neighbors(v)) {
                if (color[static_cast<size_t>(u)] == -1) {
                    color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(u);
                } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
                    fail(ErrorCode::NotBipartiteCoverable, "support contains an odd cycle",
                         "tensor_decompose");
                }
            }
        }
    }

    // Assign each component's two color classes to the sides A and B; try
    // assignments in ascending mask order, first one whose complete
    // bipartite closure lies inside the ambient graph wins.
    const size_t k = comps.size();
    const std::uint64_t mask_limit = k >= 10 ? 1024u : (std::uint64_t{1} << k);
    std::vector<Index> side_a, side_b;
    bool found = false;
    for (std::uint64_t mask = 0; mask < mask_limit && !found; ++mask) {
        side_a.clear();
        side_b.clear();
        for (size_t i = 0; i < k; ++i) {
            const bool swap_sides = (mask >> i) & 1;
            for (Index v : comps[i]) {
                const bool in_a = (color[static_cast<size_t>(v)] == 0) != swap_sides;
                (in_a ? side_a : side_b).push_back(supp.ambient_vertex[static_cast<size_t>(v)]);
            }
        }
        found = true;
        for (Index u : side_a) {
            for (Index v : side_b) {
                if (!ambient.has_edge(u, v)) {
                    found = false;
                    break;
                }
            }
            if (!found) break;
        }
    }
    if (!found) {
        fail(ErrorCode::NotBipartiteCoverable, "no bipartition closes inside the ambient graph",
             "tensor_decompose");
    }
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());

    IntMatrix block(static_cast<Index>(side_a.size()), static_cast<Index>(side_b.size()));
    for (size_t i = 0; i < side_a.size(); ++i) {
        for (size_t j = 0; j < side_b.size(); ++j) {
            block(static_cast<Index>(i), static_cast<Index>(j)) =
                label_of(alpha, side_a[i], side_b[j]);
        }
    }
    SmithForm sf = smith_normal_form(block);
    IntMatrix x_side = unimodular_inverse(sf.U);
    IntMatrix y_side = unimodular_inverse(sf.V);

    TensorDecomposition out;
    for (Index v : side_a) out.part_a.push_back(ambient.name(v));
    for (Index v : side_b) out.part_b.push_back(ambient.name(v));
    const Index terms = std::min(sf.D.rows(), sf.D.cols());
    for (Index i = 0; i < terms; ++i) {
        if (sf.D(i, i) == 0) continue;
        TensorTerm term;
        term.d = sf.D(i, i);
        term.x = x_side.col(i);
        term.y = y_side.row(i).transpose();
        Index lead = 0;
        while (lead < term.x.size() && term.x[lead] == 0) ++lead;
        if (lead < term.x.size() && term.x[lead] < 0) {
            term.x = -term.x;
            term.y = -term.y;
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

TorusCertificate torus_certificate(const HomologyClass& alpha) {
    ConnectionMatrix cm = connection_matrix(alpha);
    if (rank(cm.matrix) != 2) {
        fail(ErrorCode::RankNotTwo, "connection matrix rank is not 2", "torus_certificate");
    }
    Support supp = support(alpha);
    auto parts = complete_multipartite_parts(supp.subgraph.graph());
    if (!parts) {
        fail(ErrorCode::SupportNotMultipartite,
             "rank 2 support is not complete multipartite", "torus_certificate");
    }

    SkewNormalForm nf = skew_normal_form(cm.matrix);
    IntMatrix w = unimodular_inverse(nf.U);
    IntVector a = w.col(0) * nf.lambdas[0];
    IntVector b = w.col(1);
    canonicalize_plane(a, b);

    TorusCertificate cert;
    for (const auto& part : *parts) {
        IntVector restr_a(static_cast<Index>(part.size()));
        IntVector restr_b(static_cast<Index>(part.size()));
        TorusPart tp;
        for (size_t i = 0; i < part.size(); ++i) {
            const Index amb = supp.ambient_vertex[static_cast<size_t>(part[i])];
            tp.vertices.push_back(alpha.ambient.graph().name(amb));
            restr_a[static_cast<Index>(i)] = a[amb];
            restr_b[static_cast<Index>(i)] = b[amb];
        }
        if (is_zero_vector(restr_a) && is_zero_vector(restr_b)) continue;

        IntVector nu = is_zero_vector(restr_a) ? restr_b : restr_a;
        Int g = 0;
        for (Index i = 0; i < nu.size(); ++i) g = gcd(g, nu[i]);
        nu /= g;
        Index lead = 0;
        while (nu[lead] == 0) ++lead;
        if (nu[lead] < 0) nu = -nu;

        cert.c.push_back(coordinate_along(restr_a, nu, "torus_certificate"));
        cert.d.push_back(coordinate_along(restr_b, nu, "torus_certificate"));
        tp.nu.assign(nu.data(), nu.data() + nu.size());
        cert.parts.push_back(std::move(tp));
    }
    return cert;
}

TorusCertificate star_to_torus(const Star& star) {
    TorusCertificate cert;
    TorusPart center;
    center.vertices.push_back(star.center);
    center.nu.push_back(1);
    cert.parts.push_back(std::move(center));
    TorusPart leaves;
    for (const auto& spoke : star.spokes) {
        leaves.vertices.push_back(spoke.leaf);
        leaves.nu.push_back(spoke.label);
    }
    cert.parts.push_back(std::move(leaves));
    cert.c = {Int(1), Int(0)};
    cert.d = {Int(0), Int(1)};
    return cert;
}

bool verify_certificate(const WedgeDecomposition& cert, const HomologyClass& alpha) {
    ConnectionMatrix cm = connection_matrix(alpha);
    const Index n = cm.matrix.rows();
    IntMatrix sum = IntMatrix::Zero(n, n);
    for (const auto& term : cert.terms) {
        if (term.lambda <= 0) return false;
        if (term.a.size() != n || term.b.size() != n) return false;
        if (!letters_commute(alpha.ambient.graph(), term.a, term.b)) return false;
        sum += (term.a * term.b.transpose() - term.b * term.a.transpose()) * term.lambda;
    }
    return sum == cm.matrix;
}

bool verify_certificate(const TensorDecomposition& cert, const HomologyClass& alpha) {
    const Graph& g = alpha.ambient.graph();
    const Index n = g.vertex_count();
    std::vector<Index> side_a, side_b;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (const auto* part : {&cert.part_a, &cert.part_b}) {
        for (const auto& name : *part) {
            auto v = g.find_vertex(name);
            if (!v || used[static_cast<size_t>(*v)]) return false;
            used[static_cast<size_t>(*v)] = 1;
            (part == &cert.part_a ? side_a : side_b).push_back(*v);
        }
    }

    ConnectionMatrix cm = connection_matrix(alpha);
    IntMatrix sum = IntMatrix::Zero(n, n);
    for (const auto& term : cert.terms) {
        if (term.d == 0) return false;
        if (term.x.size() != static_cast<Index>(side_a.size())) return false;
        if (term.y.size() != static_cast<Index>(side_b.size())) return false;
        IntVector xa = IntVector::Zero(n);
        IntVector yb = IntVector::Zero(n);
        for (size_t i = 0; i < side_a.size(); ++i) xa[side_a[i]] = term.x[static_cast<Index>(i)];
        for (size_t j = 0; j < side_b.size(); ++j) yb[side_b[j]] = term.y[static_cast<Index>(j)];
        if (!letters_commute(g, xa, yb)) return false;
        sum += (xa * yb.transpose() - yb * xa.transpose()) * term.d;
    }
    return sum == cm.matrix;
}

bool verify_certificate(const TorusCertificate& cert, const HomologyClass& alpha) {
    const Graph& g = alpha.ambient.graph();
    const Index n = g.vertex_count();
    if (cert.c.size() != cert.parts.size() || cert.d.size() != cert.parts.size()) return false;

    // part id and direction entry per ambient vertex covered by a part
    std::vector<Index> part_of(static_cast<size_t>(n), -1);
    std::vector<Int> entry(static_cast<size_t>(n), 0);
    for (size_t p = 0; p < cert.parts.size(); ++p) {
        const auto& part = cert.parts[p];
        if (part.nu.size() != part.vertices.size()) return false;
        for (size_t i = 0; i < part.vertices.size(); ++i) {
            auto v = g.find_vertex(part.vertices[i]);
            if (!v || part_of[static_cast<size_t>(*v)] != -1) return false;
            part_of[static_cast<size_t>(*v)] = static_cast<Index>(p);
            entry[static_cast<size_t>(*v)] = part.nu[i];
        }
    }

    for (Index u = 0; u < n; ++u) {
        if (part_of[static_cast<size_t>(u)] == -1 || entry[static_cast<size_t>(u)] == 0) continue;
        for (Index v = u + 1; v < n; ++v) {
            if (part_of[static_cast<size_t>(v)] == -1 || entry[static_cast<size_t>(v)] == 0) continue;
            if (part_of[static_cast<size_t>(u)] == part_of[static_cast<size_t>(v)]) continue;
            if (!g.has_edge(u, v)) return false;
        }
    }

    ConnectionMatrix cm = connection_matrix(alpha);
    IntMatrix sum = IntMatrix::Zero(n, n);
    for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
            const Index i = part_of[static_cast<size_t>(u)];
            const Index j = part_of[static_cast<size_t>(v)];
            if (i == -1 || j == -1 || i == j) continue;
            sum(u, v) = (cert.c[static_cast<size_t>(i)] * cert.d[static_cast<size_t>(j)] -
                         cert.d[static_cast<size_t>(i)] * cert.c[static_cast<size_t>(j)]) *
                        entry[static_cast<size_t>(u)] * entry[static_cast<size_t>(v)];
        }
    }
    return sum == cm.matrix;
}

bool verify_certificate(const StarToriCertificate& cert, const HomologyClass& alpha) {
    if (!verify_star_cover(cert.cover, alpha)) return false;
    if (cert.tori.size() != cert.cover.stars.size()) return false;
    for (size_t i = 0; i < cert.tori.size(); ++i) {
        if (!verify_certificate(cert.tori[i], star_class(cert.cover.stars[i], alpha.ambient))) {
            return false;
        }
    }
    return true;
}

bool verify_certificate(const CompositeCertificate& cert, const HomologyClass& alpha) {
    std::vector<HomologyClass> pieces = component_classes(alpha);
    if (pieces.size() != cert.components.size()) return false;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (!verify_certificate(cert.components[i], pieces[i])) return false;
    }
    return true;
}

bool verify_certificate(const Certificate& cert, const HomologyClass& alpha) {
    return std::visit([&](const auto& c) { return verify_certificate(c, alpha); }, cert.value);
}

Index implied_genus(const Certificate& cert) {
    struct Visitor {
        Index operator()(const WedgeDecomposition& c) const {
            return static_cast<Index>(c.terms.size());
        }
        Index operator()(const TensorDecomposition& c) const {
            return static_cast<Index>(c.terms.size());
        }
        Index operator()(const TorusCertificate&) const { return 1; }
        Index operator()(const StarToriCertificate& c) const {
            return static_cast<Index>(c.tori.size());
        }
        Index operator()(const CompositeCertificate& c) const {
            Index sum = 0;
            for (const auto& inner : c.components) sum += implied_genus(inner);
            return sum;
        }
    };
    return std::visit(Visitor{}, cert.value);
}

namespace {

GenusResult component_genus(const HomologyClass& piece, Index budget) {
    const Index cap = cap_bound(piece);
    if (cap == 0) {
        return {0, 0, 0, "zero", Certificate{WedgeDecomposition{}}};
    }
    if (cap == 1) {
        return {1, 1, 1, "rank2-torus", Certificate{torus_certificate(piece)}};
    }
    Support supp = support(piece);
    Graph closure = full_subgraph(piece.ambient.graph(), supp.subgraph.graph().vertex_names());
    if (is_complete(closure)) {
        WedgeDecomposition cert = wedge_decompose(piece);
        const Index k = static_cast<Index>(cert.terms.size());
        return {k, k, k, "complete", Certificate{std::move(cert)}};
    }
    try {
        TensorDecomposition cert = tensor_decompose(piece);
        const Index k = static_cast<Index>(cert.terms.size());
        return {k, k, k, "bipartite", Certificate{std::move(cert)}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotBipartiteCoverable) throw;
    }
    if (is_forest(supp.subgraph.graph())) {
        StarToriCertificate cert;
        cert.cover = min_star_cover(piece, budget);
        for (const auto& star : cert.cover.stars) cert.tori.push_back(star_to_torus(star));
        const Index k = static_cast<Index>(cert.cover.stars.size());
        return {k, k, k, "forest", Certificate{std::move(cert)}};
    }
    return {cap, sc_cardinality(piece, budget), std::nullopt, "bounds-only", std::nullopt};
}

}  // namespace

GenusResult genus(const HomologyClass& alpha, Index budget) {
    std::vector<HomologyClass> pieces = component_classes(alpha);
    if (pieces.empty()) {
        return {0, 0, 0, "zero", Certificate{WedgeDecomposition{}}};
    }
    if (pieces.size() == 1) {
        return component_genus(pieces[0], budget);
    }
    GenusResult out;
    out.method = "componentwise";
    CompositeCertificate composite;
    bool all_exact = true;
    Index exact_sum = 0;
    for (const auto& piece : pieces) {
        GenusResult r = component_genus(piece, budget);
        out.lower += r.lower;
        out.upper += r.upper;
        if (all_exact && r.exact.has_value() && r.certificate.has_value()) {
            exact_sum += *r.exact;
            composite.components.push_back(std::move(*r.certificate));
        } else {
            all_exact = false;
        }
    }
    if (all_exact) {
        out.exact = exact_sum;
        out.certificate = Certificate{std::move(composite)};
    }
    return out;
}

bool torus_representable(const HomologyClass& alpha) {
    if (is_zero(alpha)) {
        fail(ErrorCode::ZeroClass, "the zero class is not represented by a torus",
             "torus_representable");
    }
    return cap_bound(alpha) == 1;
}

}  // namespace raag
