#include "raag/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

namespace raag {

namespace {

[[noreturn]] void parse_fail(const std::string& message, const std::string& location) {
    fail(ErrorCode::ParseError, message, location);
}

const Json& member(const Json& j, const char* key, const char* where) {
    if (!j.is_object()) parse_fail("expected an object", where);
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"", where);
    return *it;
}

const Json& array_of(const Json& j, const char* where) {
    if (!j.is_array()) parse_fail("expected an array", where);
    return j;
}

std::string string_of(const Json& j, const char* where) {
    if (!j.is_string()) parse_fail("expected a string", where);
    return j.get<std::string>();
}

long long small_int_of(const Json& j, const char* where) {
    if (j.is_number_unsigned()) {
        auto u = j.get<unsigned long long>();
        if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            parse_fail("integer out of range", where);
        return static_cast<long long>(u);
    }
    if (!j.is_number_integer()) parse_fail("expected an integer", where);
    return j.get<long long>();
}

std::vector<std::string> string_list(const Json& j, const char* where) {
    std::vector<std::string> out;
    for (const Json& item : array_of(j, where)) out.push_back(string_of(item, where));
    return out;
}

std::pair<std::string, std::string> name_pair(const Json& j, const char* where) {
    if (!j.is_array() || j.size() != 2) parse_fail("expected a [from, to] pair", where);
    return {string_of(j[0], where), string_of(j[1], where)};
}

Json int_list_to_json(const std::vector<Int>& values) {
    Json out = Json::array();
    for (const Int& v : values) out.push_back(int_to_string(v));
    return out;
}

std::vector<Int> int_list_from_json(const Json& j, const char* where) {
    std::vector<Int> out;
    for (const Json& item : array_of(j, where)) out.push_back(int_from_json(item));
    return out;
}

Json evec_to_json(const IntVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(int_to_string(v(i)));
    return out;
}

IntVector evec_from_json(const Json& j, const char* where) {
    const Json& arr = array_of(j, where);
    IntVector out(static_cast<Index>(arr.size()));
    Index i = 0;
    for (const Json& item : arr) out(i++) = int_from_json(item);
    return out;
}

TorusCertificate torus_cert_fields(const Json& j) {
    TorusCertificate cert;
    for (const Json& pj : array_of(member(j, "parts", "certificate"), "parts")) {
        TorusPart part;
        part.vertices = string_list(member(pj, "vertices", "parts"), "vertices");
        part.nu = int_list_from_json(member(pj, "nu", "parts"), "nu");
        cert.parts.push_back(std::move(part));
    }
    cert.c = int_list_from_json(member(j, "c", "certificate"), "c");
    cert.d = int_list_from_json(member(j, "d", "certificate"), "d");
    return cert;
}

}  // namespace

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail("malformed JSON", "input");
    return j;
}

Json int_to_json(const Int& value) {
    static const Int kMin = std::numeric_limits<std::int64_t>::min();
    static const Int kMax = std::numeric_limits<std::int64_t>::max();
    if (value >= kMin && value <= kMax) return Json(value.convert_to<std::int64_t>());
    return Json(value.str());
}

std::string int_to_string(const Int& value) { return value.str(); }

Int int_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        size_t pos = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (pos == s.size()) parse_fail("expected a decimal string", "label");
        for (size_t i = pos; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') parse_fail("expected a decimal string", "label");
        return Int(s);
    }
    parse_fail("expected an integer or decimal string", "label");
}

Json to_json(const Graph& g) {
    Json j = Json::object();
    j["vertices"] = g.vertex_names();
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back(Json::array({g.name(a), g.name(b)}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    try {
        auto vertices = string_list(member(j, "vertices", "graph"), "vertices");
        std::vector<std::pair<std::string, std::string>> edges;
        for (const Json& e : array_of(member(j, "edges", "graph"), "edges"))
            edges.push_back(name_pair(e, "edges"));
        return Graph::validate(vertices, edges);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(e.what(), "graph");
    }
}

Json orientation_to_json(const OrientedGraph& g) {
    Json j = Json::object();
    Json oriented = Json::array();
    for (Index e = 0; e < g.graph().edge_count(); ++e) {
        auto [tail, head] = g.oriented_edge(e);
        oriented.push_back(Json::array({g.graph().name(tail), g.graph().name(head)}));
    }
    j["oriented_edges"] = std::move(oriented);
    return j;
}

OrientedGraph orientation_from_json(Graph g, const Json& j) {
    try {
        std::vector<std::pair<std::string, std::string>> oriented;
        for (const Json& e : array_of(member(j, "oriented_edges", "orientation"), "oriented_edges"))
            oriented.push_back(name_pair(e, "oriented_edges"));
        return OrientedGraph::validate(std::move(g), oriented);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(e.what(), "orientation");
    }
}

std::vector<RawLabel> labels_from_json(const Json& j) {
    try {
        std::vector<RawLabel> out;
        for (const Json& lj : array_of(j, "labels")) {
            RawLabel raw;
            raw.from = string_of(member(lj, "from", "labels"), "from");
            raw.to = string_of(member(lj, "to", "labels"), "to");
            raw.value = int_from_json(member(lj, "label", "labels"));
            out.push_back(std::move(raw));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        parse_fail(e.what(), "labels");
    }
}

Json labels_to_json(const HomologyClass& alpha) {
    const Graph& g = alpha.ambient.graph();
    Json out = Json::array();
    for (Index e = 0; e < g.edge_count(); ++e) {
        if (alpha.labels[static_cast<size_t>(e)] == 0) continue;
        auto [tail, head] = alpha.ambient.oriented_edge(e);
        Json lj = Json::object();
        lj["from"] = g.name(tail);
        lj["to"] = g.name(head);
        lj["label"] = int_to_json(alpha.labels[static_cast<size_t>(e)]);
        out.push_back(std::move(lj));
    }
    return out;
}

Json to_json(const HomologyClass& alpha) {
    Json j = Json::object();
    j["graph"] = to_json(alpha.ambient.graph());
    j["labels"] = labels_to_json(alpha);
    return j;
}

HomologyClass class_from_json(const Json& j) {
    Graph g = graph_from_json(member(j, "graph", "class"));
    auto raw = labels_from_json(member(j, "labels", "class"));
    return new_class(OrientedGraph::lexicographic(std::move(g)), raw);
}

HomologyClass class_from_json(const Json& j, OrientedGraph orientation) {
    Graph g = graph_from_json(member(j, "graph", "class"));
    if (!(orientation.graph() == g))
        fail(ErrorCode::AmbientMismatch, "orientation is over a different graph", "orientation");
    auto raw = labels_from_json(member(j, "labels", "class"));
    return new_class(std::move(orientation), raw);
}

Json to_json(const StarCover& cover) {
    Json out = Json::array();
    for (const Star& star : cover.stars) {
        Json sj = Json::object();
        sj["center"] = star.center;
        Json spokes = Json::array();
        for (const StarSpoke& spoke : star.spokes) {
            Json pj = Json::object();
            pj["leaf"] = spoke.leaf;
            pj["label"] = int_to_json(spoke.label);
            spokes.push_back(std::move(pj));
        }
        sj["spokes"] = std::move(spokes);
        out.push_back(std::move(sj));
    }
    return out;
}

StarCover star_cover_from_json(const Json& j) {
    try {
        StarCover cover;
        for (const Json& sj : array_of(j, "star cover")) {
            Star star;
            star.center = string_of(member(sj, "center", "star"), "center");
            for (const Json& pj : array_of(member(sj, "spokes", "star"), "spokes")) {
                StarSpoke spoke;
                spoke.leaf = string_of(member(pj, "leaf", "spokes"), "leaf");
                spoke.label = int_from_json(member(pj, "label", "spokes"));
                star.spokes.push_back(std::move(spoke));
            }
            std::sort(star.spokes.begin(), star.spokes.end(),
                      [](const StarSpoke& a, const StarSpoke& b) { return a.leaf < b.leaf; });
            cover.stars.push_back(std::move(star));
        }
        return cover;
    } catch (const nlohmann::json::exception& e) {
        parse_fail(e.what(), "star cover");
    }
}

Json to_json(const WedgeDecomposition& cert) {
    Json j = Json::object();
    j["kind"] = "wedge";
    Json terms = Json::array();
    for (const WedgeTerm& t : cert.terms) {
        Json tj = Json::object();
        tj["lambda"] = int_to_string(t.lambda);
        tj["a"] = evec_to_json(t.a);
        tj["b"] = evec_to_json(t.b);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const TensorDecomposition& cert) {
    Json j = Json::object();
    j["kind"] = "tensor";
    j["part_a"] = cert.part_a;
    j["part_b"] = cert.part_b;
    Json terms = Json::array();
    for (const TensorTerm& t : cert.terms) {
        Json tj = Json::object();
        tj["d"] = int_to_string(t.d);
        tj["x"] = evec_to_json(t.x);
        tj["y"] = evec_to_json(t.y);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const TorusCertificate& cert) {
    Json j = Json::object();
    j["kind"] = "torus";
    Json parts = Json::array();
    for (const TorusPart& part : cert.parts) {
        Json pj = Json::object();
        pj["vertices"] = part.vertices;
        pj["nu"] = int_list_to_json(part.nu);
        parts.push_back(std::move(pj));
    }
    j["parts"] = std::move(parts);
    j["c"] = int_list_to_json(cert.c);
    j["d"] = int_list_to_json(cert.d);
    return j;
}

Json to_json(const StarToriCertificate& cert) {
    Json j = Json::object();
    j["kind"] = "star-tori";
    j["cover"] = to_json(cert.cover);
    Json tori = Json::array();
    for (const TorusCertificate& t : cert.tori) tori.push_back(to_json(t));
    j["tori"] = std::move(tori);
    return j;
}

Json to_json(const CompositeCertificate& cert) {
    Json j = Json::object();
    j["kind"] = "composite";
    Json components = Json::array();
    for (const Certificate& c : cert.components) components.push_back(to_json(c));
    j["components"] = std::move(components);
    return j;
}

Json to_json(const Certificate& cert) {
    return std::visit([](const auto& c) { return to_json(c); }, cert.value);
}

Certificate certificate_from_json(const Json& j) {
    try {
        const std::string kind = string_of(member(j, "kind", "certificate"), "kind");
        if (kind == "wedge") {
            WedgeDecomposition cert;
            for (const Json& tj : array_of(member(j, "terms", "certificate"), "terms")) {
                WedgeTerm t;
                t.lambda = int_from_json(member(tj, "lambda", "terms"));
                t.a = evec_from_json(member(tj, "a", "terms"), "a");
                t.b = evec_from_json(member(tj, "b", "terms"), "b");
                cert.terms.push_back(std::move(t));
            }
            return Certificate{std::move(cert)};
        }
        if (kind == "tensor") {
            TensorDecomposition cert;
            cert.part_a = string_list(member(j, "part_a", "certificate"), "part_a");
            cert.part_b = string_list(member(j, "part_b", "certificate"), "part_b");
            for (const Json& tj : array_of(member(j, "terms", "certificate"), "terms")) {
                TensorTerm t;
                t.d = int_from_json(member(tj, "d", "terms"));
                t.x = evec_from_json(member(tj, "x", "terms"), "x");
                t.y = evec_from_json(member(tj, "y", "terms"), "y");
                cert.terms.push_back(std::move(t));
            }
            return Certificate{std::move(cert)};
        }
        if (kind == "torus") return Certificate{torus_cert_fields(j)};
        if (kind == "star-tori") {
            StarToriCertificate cert;
            cert.cover = star_cover_from_json(member(j, "cover", "certificate"));
            for (const Json& tj : array_of(member(j, "tori", "certificate"), "tori")) {
                if (string_of(member(tj, "kind", "tori"), "kind") != "torus")
                    parse_fail("star-tori entries must have kind \"torus\"", "tori");
                cert.tori.push_back(torus_cert_fields(tj));
            }
            return Certificate{std::move(cert)};
        }
        if (kind == "composite") {
            CompositeCertificate cert;
            for (const Json& cj : array_of(member(j, "components", "certificate"), "components"))
                cert.components.push_back(certificate_from_json(cj));
            return Certificate{std::move(cert)};
        }
        parse_fail("unknown certificate kind \"" + kind + "\"", "kind");
    } catch (const nlohmann::json::exception& e) {
        parse_fail(e.what(), "certificate");
    }
}

Json to_json(const GenusResult& result) {
    Json j = Json::object();
    j["lower"] = result.lower;
    j["upper"] = result.upper;
    if (result.exact) j["exact"] = *result.exact;
    j["method"] = result.method;
    if (result.certificate) j["certificate"] = to_json(*result.certificate);
    return j;
}

Json to_json(const SurfaceSummary& summary) {
    Json j = Json::object();
    Json components = Json::array();
    for (const SurfaceComponent& c : summary.components) {
        Json cj = Json::object();
        cj["vertices"] = c.vertices;
        cj["edges"] = c.edges;
        cj["faces"] = c.faces;
        cj["euler"] = c.euler;
        cj["genus"] = c.genus;
        components.push_back(std::move(cj));
    }
    j["components"] = std::move(components);
    j["total_genus"] = summary.total_genus;
    return j;
}

Json to_json(const VanKampenDiagram& d) {
    Json j = Json::object();
    j["graph"] = to_json(d.ambient);
    Json squares = Json::array();
    for (const Square& sq : d.squares) {
        Json sides = Json::array();
        for (const SquareSide& side : sq.sides) {
            Json sj = Json::object();
            sj["gen"] = side.generator;
            sj["sign"] = side.sign;
            sides.push_back(std::move(sj));
        }
        Json qj = Json::object();
        qj["sides"] = std::move(sides);
        squares.push_back(std::move(qj));
    }
    j["squares"] = std::move(squares);
    Json gluing = Json::array();
    for (const auto& [a, b] : d.gluing) {
        gluing.push_back(Json::array({Json::array({a.first, a.second}),
                                      Json::array({b.first, b.second})}));
    }
    j["gluing"] = std::move(gluing);
    return j;
}

namespace {

SideSlot slot_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) parse_fail("expected a [square, side] pair", "gluing");
    return {static_cast<Index>(small_int_of(j[0], "gluing")),
            static_cast<Index>(small_int_of(j[1], "gluing"))};
}

}  // namespace

VanKampenDiagram diagram_from_json(const Json& j) {
    try {
        Graph g = graph_from_json(member(j, "graph", "diagram"));
        std::vector<Square> squares;
        for (const Json& qj : array_of(member(j, "squares", "diagram"), "squares")) {
            const Json& sides = array_of(member(qj, "sides", "squares"), "sides");
            if (sides.size() != 4) parse_fail("a square needs exactly 4 sides", "sides");
            Square sq;
            for (size_t k = 0; k < 4; ++k) {
                sq.sides[k].generator = string_of(member(sides[k], "gen", "sides"), "gen");
                long long sign = small_int_of(member(sides[k], "sign", "sides"), "sign");
                if (sign < std::numeric_limits<int>::min() || sign > std::numeric_limits<int>::max())
                    parse_fail("sign out of range", "sign");
                sq.sides[k].sign = static_cast<int>(sign);
            }
            squares.push_back(std::move(sq));
        }
        std::vector<std::pair<SideSlot, SideSlot>> gluing;
        for (const Json& pj : array_of(member(j, "gluing", "diagram"), "gluing")) {
            if (!pj.is_array() || pj.size() != 2)
                parse_fail("expected a pair of [square, side] slots", "gluing");
            gluing.emplace_back(slot_from_json(pj[0]), slot_from_json(pj[1]));
        }
        return validate_diagram(std::move(g), std::move(squares), std::move(gluing));
    } catch (const nlohmann::json::exception& e) {
        parse_fail(e.what(), "diagram");
    }
}

}  // namespace raag
