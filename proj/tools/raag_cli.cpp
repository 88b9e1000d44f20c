// Command-line front end: every subcommand reads JSON files and writes one
// JSON report to stdout (or -o <file>). Errors are reported as a JSON object
// {code, message, location} with exit code 1 for bad input, 2 for exceeded
// search budgets, 3 for internal invariant violations.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "raag/genus.hpp"
#include "raag/json_io.hpp"
#include "raag/star_cover.hpp"
#include "raag/van_kampen.hpp"

namespace {

using raag::Certificate;
using raag::ErrorCode;
using raag::Graph;
using raag::HomologyClass;
using raag::Index;
using raag::Json;
using raag::OrientedGraph;
using raag::VanKampenDiagram;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raag::fail(ErrorCode::ParseError, "cannot read file", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json load_json(const std::string& path) { return raag::parse_text(read_file(path)); }

OrientedGraph orientation_for(Graph g, const std::string& orientation_path) {
    if (orientation_path.empty()) return OrientedGraph::lexicographic(std::move(g));
    return raag::orientation_from_json(std::move(g), load_json(orientation_path));
}

HomologyClass load_class(const std::string& path, const std::string& orientation_path) {
    Json j = load_json(path);
    if (orientation_path.empty()) return raag::class_from_json(j);
    if (!j.is_object() || !j.contains("graph"))
        raag::fail(ErrorCode::ParseError, "missing field \"graph\"", path);
    Graph g = raag::graph_from_json(j["graph"]);
    return raag::class_from_json(j, orientation_for(std::move(g), orientation_path));
}

void emit(const Json& report, const std::string& output_path) {
    const std::string text = report.dump() + "\n";
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) raag::fail(ErrorCode::ParseError, "cannot write file", output_path);
    out << text;
}

Json name_list(const Graph& g, const std::vector<Index>& vertices) {
    Json out = Json::array();
    for (Index v : vertices) out.push_back(g.name(v));
    return out;
}

Json run_classify(const std::string& graph_path) {
    Graph g = raag::graph_from_json(load_json(graph_path));
    Json j = Json::object();
    j["complete"] = raag::is_complete(g);
    j["forest"] = raag::is_forest(g);
    auto bipartite = raag::complete_bipartite_parts(g);
    j["complete_bipartite"] = bipartite.has_value();
    if (bipartite) {
        j["bipartite_parts"] =
            Json::array({name_list(g, bipartite->part_a), name_list(g, bipartite->part_b)});
    }
    auto multipartite = raag::complete_multipartite_parts(g);
    j["complete_multipartite"] = multipartite.has_value();
    if (multipartite) {
        Json parts = Json::array();
        for (const auto& part : *multipartite) parts.push_back(name_list(g, part));
        j["multipartite_parts"] = std::move(parts);
    }
    auto center = raag::is_star(g);
    j["star"] = center.has_value();
    if (center) j["center"] = g.name(*center);
    Json components = Json::array();
    for (const auto& component : raag::connected_components(g))
        components.push_back(name_list(g, component));
    j["components"] = std::move(components);
    return j;
}

Json run_cap_bound(const std::string& class_path, const std::string& orientation_path) {
    HomologyClass alpha = load_class(class_path, orientation_path);
    const Index cap = raag::cap_bound(alpha);
    Json j = Json::object();
    j["rank"] = 2 * cap;
    j["cap_bound"] = cap;
    return j;
}

Json run_genus(const std::string& class_path, const std::string& orientation_path, Index budget) {
    return raag::to_json(raag::genus(load_class(class_path, orientation_path), budget));
}

Json run_certificate(const std::string& class_path, const std::string& cert_path,
                     const std::string& orientation_path) {
    HomologyClass alpha = load_class(class_path, orientation_path);
    Certificate cert = raag::certificate_from_json(load_json(cert_path));
    const bool valid = raag::verify_certificate(cert, alpha);
    Json j = Json::object();
    j["valid"] = valid;
    j["reason"] = valid ? "certificate reproduces the class"
                        : "certificate does not verify against the class";
    return j;
}

Json run_star_cover(const std::string& class_path, const std::string& orientation_path,
                    Index budget) {
    return raag::to_json(raag::min_star_cover(load_class(class_path, orientation_path), budget));
}

Json run_decompose(const std::string& class_path, const std::string& kind,
                   const std::string& orientation_path) {
    HomologyClass alpha = load_class(class_path, orientation_path);
    if (kind == "wedge") return raag::to_json(raag::wedge_decompose(alpha));
    return raag::to_json(raag::tensor_decompose(alpha));
}

Json run_check_diagram(const std::string& diagram_path, const std::string& class_path,
                       const std::string& orientation_path) {
    VanKampenDiagram d = raag::diagram_from_json(load_json(diagram_path));
    Json j = raag::to_json(raag::surface_summary(d));
    OrientedGraph orientation = orientation_for(d.ambient, orientation_path);
    j["induced_class"] = raag::labels_to_json(raag::induced_class(d, orientation));
    if (!class_path.empty()) {
        HomologyClass target = load_class(class_path, orientation_path);
        j["represents"] = raag::represents(d, target);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal genus bounds and surface certificates for second homology classes "
                 "of right-angled Artin groups"};
    app.require_subcommand(1);

    std::string graph_path, class_path, cert_path, diagram_path;
    std::string orientation_path, output_path, kind;
    Index budget = raag::kDefaultCoverBudget;

    auto* classify = app.add_subcommand("classify", "Report structural families of a graph");
    classify->add_option("graph", graph_path, "graph JSON file")->required();
    classify->add_option("-o,--output", output_path, "write the report to a file");

    auto add_class_options = [&](CLI::App* sub) {
        sub->add_option("class", class_path, "class JSON file")->required();
        sub->add_option("--orientation", orientation_path,
                        "orientation JSON file overriding the lexicographic default");
        sub->add_option("-o,--output", output_path, "write the report to a file");
    };

    auto* cap = app.add_subcommand("cap-bound", "Connection matrix rank and the genus lower bound");
    add_class_options(cap);

    auto* gen = app.add_subcommand("genus", "Genus bounds with a certificate where available");
    add_class_options(gen);
    gen->add_option("--budget", budget, "exact search size cap");

    auto* cert = app.add_subcommand("certificate", "Verify a certificate against a class");
    add_class_options(cert);
    cert->add_option("--verify", cert_path, "certificate JSON file")->required();

    auto* cover = app.add_subcommand("star-cover", "Minimum star cover of a class");
    add_class_options(cover);
    cover->add_option("--budget", budget, "exact search size cap");

    auto* decompose = app.add_subcommand("decompose", "Wedge or tensor decomposition");
    add_class_options(decompose);
    decompose->add_option("--kind", kind, "decomposition kind")
        ->required()
        ->check(CLI::IsMember({"wedge", "tensor"}));

    auto* check = app.add_subcommand("check-diagram", "Validate a diagram and summarize it");
    check->add_option("diagram", diagram_path, "diagram JSON file")->required();
    check->add_option("--class", class_path, "class JSON file to compare against");
    check->add_option("--orientation", orientation_path,
                      "orientation JSON file overriding the lexicographic default");
    check->add_option("-o,--output", output_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return 0;
        }
        Json err = Json::object();
        err["code"] = "InvalidArgument";
        err["message"] = e.what();
        err["location"] = "argv";
        std::cout << err.dump() << "\n";
        return 1;
    }

    try {
        Json report;
        if (classify->parsed()) {
            report = run_classify(graph_path);
        } else if (cap->parsed()) {
            report = run_cap_bound(class_path, orientation_path);
        } else if (gen->parsed()) {
            report = run_genus(class_path, orientation_path, budget);
        } else if (cert->parsed()) {
            report = run_certificate(class_path, cert_path, orientation_path);
        } else if (cover->parsed()) {
            report = run_star_cover(class_path, orientation_path, budget);
        } else if (decompose->parsed()) {
            report = run_decompose(class_path, kind, orientation_path);
        } else {
            report = run_check_diagram(diagram_path, class_path, orientation_path);
        }
        emit(report, output_path);
        return 0;
    } catch (const raag::Error& e) {
        Json err = Json::object();
        err["code"] = raag::to_string(e.code());
        err["message"] = e.what();
        err["location"] = e.location();
        std::cout << err.dump() << "\n";
        if (e.code() == ErrorCode::SizeLimitExceeded) return 2;
        return raag::is_internal(e.code()) ? 3 : 1;
    } catch (const std::exception& e) {
        Json err = Json::object();
        err["code"] = "InternalError";
        err["message"] = e.what();
        err["location"] = "";
        std::cout << err.dump() << "\n";
        return 3;
    }
}
