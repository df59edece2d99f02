#include "clustercolor/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clustercolor {
namespace io {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::InvalidInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

json graph_json(int n, const std::vector<std::vector<int>>& rotations,
                const std::optional<Dart>& outer) {
    json j;
    j["n"] = n;
    j["rotations"] = rotations;
    if (outer)
        j["outer"] = {outer->first, outer->second};
    else
        j["outer"] = nullptr;
    return j;
}

}  // namespace

RawGraph read_graph_file(const std::string& path) {
    json j = parse_file(path);
    RawGraph g;
    try {
        g.n = j.at("n").get<int>();
        g.rotations = j.at("rotations").get<std::vector<std::vector<int>>>();
        if (!j.at("outer").is_null()) {
            auto pair = j.at("outer").get<std::vector<int>>();
            require(pair.size() == 2, ErrorCode::InvalidInput,
                    "outer dart must have two entries");
            g.outer = Dart{pair[0], pair[1]};
        }
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, "bad graph file " + path + ": " + e.what());
    }
    return g;
}

std::string graph_to_json(const RawGraph& graph) {
    return graph_json(graph.n, graph.rotations, graph.outer).dump(2) + "\n";
}

std::string graph_to_json(const PlaneGraph& graph) {
    return graph_json(graph.vertex_count(), graph.rotations(), graph.outer_dart())
               .dump(2) +
           "\n";
}

void write_graph_file(const std::string& path, const PlaneGraph& graph) {
    write_text_file(path, graph_to_json(graph));
}

Coloring read_coloring_file(const std::string& path, int expected_n) {
    json j = parse_file(path);
    Coloring colors;
    try {
        colors = j.at("colors").get<std::vector<int>>();
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, "bad coloring file " + path + ": " + e.what());
    }
    require(static_cast<int>(colors.size()) == expected_n, ErrorCode::InvalidInput,
            "coloring length does not match the graph");
    for (int c : colors)
        require(c >= 1 && c <= 3, ErrorCode::InvalidInput,
                "colors must lie in {1,2,3}");
    return colors;
}

std::string coloring_to_json(const Coloring& coloring) {
    json j;
    j["colors"] = coloring;
    return j.dump(2) + "\n";
}

void write_coloring_file(const std::string& path, const Coloring& coloring) {
    write_text_file(path, coloring_to_json(coloring));
}

std::string report_to_json(const std::vector<PropertyReport>& reports,
                           const std::vector<ComponentReport>& censuses,
                           bool pass) {
    json out;
    out["pass"] = pass;
    out["components"] = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        json comp;
        comp["component"] = i;
        comp["checks"] = json::array();
        for (const auto& c : reports[i].checks) {
            json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["asserted"] = c.asserted;
            if (!c.bound.empty()) jc["bound"] = c.bound;
            if (c.witness_vertex) jc["witness_vertex"] = *c.witness_vertex;
            if (!c.witness_component.empty()) jc["witness_component"] = c.witness_component;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            comp["checks"].push_back(jc);
        }
        if (i < censuses.size()) {
            json census;
            for (const auto& [color, cc] : censuses[i].per_color) {
                json entry;
                entry["count"] = cc.component_count;
                entry["max_size"] = cc.max_size;
                json hist = json::object();
                for (const auto& [size, cnt] : cc.size_histogram)
                    hist[std::to_string(size)] = cnt;
                entry["size_histogram"] = hist;
                census[std::to_string(color)] = entry;
            }
            comp["census"] = census;
        }
        out["components"].push_back(comp);
    }
    return out.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    require(out.good(), ErrorCode::InvalidInput, "cannot write " + path);
    out << text;
    require(out.good(), ErrorCode::InvalidInput, "failed writing " + path);
}

namespace {

std::string dot_impl(int n, const std::vector<std::vector<int>>& rotations,
                     const Coloring* coloring) {
    static const char* palette[4] = {"white", "#e41a1c", "#377eb8", "#4daf4a"};
    std::ostringstream out;
    out << "graph G {\n  node [style=filled];\n";
    for (int v = 0; v < n; ++v) {
        const char* fill = "white";
        if (coloring && v < static_cast<int>(coloring->size()) &&
            (*coloring)[v] >= 1 && (*coloring)[v] <= 3)
            fill = palette[(*coloring)[v]];
        out << "  v" << v << " [fillcolor=\"" << fill << "\"];\n";
    }
    for (int u = 0; u < n; ++u)
        for (int v : rotations[u])
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const RawGraph& graph, const Coloring* coloring) {
    return dot_impl(graph.n, graph.rotations, coloring);
}

std::string to_dot(const PlaneGraph& graph, const Coloring* coloring) {
    return dot_impl(graph.vertex_count(), graph.rotations(), coloring);
}

}  // namespace io
}  // namespace clustercolor
