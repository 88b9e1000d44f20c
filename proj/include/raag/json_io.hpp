#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "raag/genus.hpp"
#include "raag/van_kampen.hpp"

namespace raag {

// Insertion-ordered so emitted key order is deterministic.
using Json = nlohmann::ordered_json;

// Throws ParseError on malformed text.
Json parse_text(const std::string& text);

// Integer fields named "label"/"lambda"/"d" and all vector entries travel as
// decimal strings when they exceed 64 bits; plain labels that fit emit as
// JSON numbers. Input accepts both encodings everywhere.
Json int_to_json(const Int& value);
std::string int_to_string(const Int& value);
Int int_from_json(const Json& j);

Json to_json(const Graph& g);
Json orientation_to_json(const OrientedGraph& g);
Json to_json(const HomologyClass& alpha);
// Bare nonzero label list, in ambient edge order.
Json labels_to_json(const HomologyClass& alpha);
Json to_json(const StarCover& cover);
Json to_json(const WedgeDecomposition& cert);
Json to_json(const TensorDecomposition& cert);
Json to_json(const TorusCertificate& cert);
Json to_json(const StarToriCertificate& cert);
Json to_json(const CompositeCertificate& cert);
Json to_json(const Certificate& cert);
Json to_json(const GenusResult& result);
Json to_json(const SurfaceSummary& summary);
Json to_json(const VanKampenDiagram& d);

Graph graph_from_json(const Json& j);
OrientedGraph orientation_from_json(Graph g, const Json& j);
std::vector<RawLabel> labels_from_json(const Json& j);
// {"graph", "labels"} with the canonical lexicographic orientation.
HomologyClass class_from_json(const Json& j);
// Same, keyed by a caller-supplied orientation of the embedded graph.
HomologyClass class_from_json(const Json& j, OrientedGraph orientation);
StarCover star_cover_from_json(const Json& j);
// Dispatches on the "kind" tag: wedge | tensor | torus | star-tori | composite.
Certificate certificate_from_json(const Json& j);
// Parses and validates.
VanKampenDiagram diagram_from_json(const Json& j);

}  // namespace raag
