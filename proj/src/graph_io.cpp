#include "edfk/graph_io.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace edfk {

using nlohmann::json;

graph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("graph document: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("graph document: top level must be an object");
    if (!doc.contains("t") || !doc["t"].is_number_integer())
        throw parse_error("graph document: missing integer field \"t\"");
    int t = doc["t"].get<int>();
    if (t < 0) throw parse_error("graph document: \"t\" must be nonnegative");

    std::vector<std::string> atoms;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw parse_error("graph document: \"labels\" must be an array");
        for (const auto& a : doc["labels"]) {
            if (!a.is_string()) throw parse_error("graph document: label atoms must be strings");
            atoms.push_back(a.get<std::string>());
        }
    }

    graph_builder b(t, atoms);
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw parse_error("graph document: missing array field \"vertices\"");
    std::set<std::string> seen;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw parse_error("graph document: each vertex needs a string \"id\"");
        std::string id = v["id"].get<std::string>();
        if (!seen.insert(id).second) throw parse_error("graph document: duplicate vertex id \"" + id + "\"");
        std::set<std::string> labels;
        if (v.contains("lab")) {
            if (!v["lab"].is_array()) throw parse_error("vertex \"" + id + "\": \"lab\" must be an array");
            for (const auto& l : v["lab"]) {
                if (!l.is_string()) throw parse_error("vertex \"" + id + "\": labels must be strings");
                std::string atom = l.get<std::string>();
                if (!labels.insert(atom).second)
                    throw parse_error("vertex \"" + id + "\": duplicate label \"" + atom + "\"");
            }
        }
        int bx = 0;
        if (v.contains("bidx") && !v["bidx"].is_null()) {
            if (!v["bidx"].is_number_integer())
                throw parse_error("vertex \"" + id + "\": \"bidx\" must be an integer or null");
            bx = v["bidx"].get<int>();
            if (bx < 1 || bx > t)
                throw parse_error("vertex \"" + id + "\": boundary index out of range 1..t");
        }
        try {
            b.add_vertex(id, labels, bx);
        } catch (const argument_error& e) {
            throw parse_error("vertex \"" + id + "\": " + e.what());
        }
    }

    std::set<std::pair<std::string, std::string>> edge_seen;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw parse_error("graph document: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw parse_error("graph document: each edge must be a pair of vertex ids");
            std::string a = e[0].get<std::string>(), c = e[1].get<std::string>();
            if (a == c) throw parse_error("edge [" + a + "," + c + "]: loops are not allowed");
            auto key = std::minmax(a, c);
            if (!edge_seen.insert(key).second)
                throw parse_error("edge [" + a + "," + c + "]: duplicate edge");
            try {
                b.add_edge(a, c);
            } catch (const argument_error& err) {
                throw parse_error("edge [" + a + "," + c + "]: " + err.what());
            }
        }
    }
    graph g = b.build();
    // injectivity of bidx is validated by build(); report as parse error context
    return g;
}

std::string serialize_graph(const graph& g, bool pretty) {
    json doc;
    doc["t"] = g.t;
    json labels = json::array();
    for (const auto& a : g.atoms) labels.push_back(a);
    doc["labels"] = labels;

    json vertices = json::array();
    for (int v : g.vertices_by_id()) {
        json jv;
        jv["id"] = g.ids[static_cast<size_t>(v)];
        json jl = json::array();
        for (const auto& l : g.labels_of(v)) jl.push_back(l);
        jv["lab"] = jl;
        if (g.bidx[static_cast<size_t>(v)] > 0)
            jv["bidx"] = g.bidx[static_cast<size_t>(v)];
        else
            jv["bidx"] = nullptr;
        vertices.push_back(jv);
    }
    doc["vertices"] = vertices;

    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edges) {
        auto p = std::minmax(g.ids[static_cast<size_t>(u)], g.ids[static_cast<size_t>(v)]);
        es.emplace_back(p.first, p.second);
    }
    std::sort(es.begin(), es.end());
    json edges = json::array();
    for (const auto& [a, b] : es) edges.push_back(json::array({a, b}));
    doc["edges"] = edges;

    return pretty ? doc.dump(2) : doc.dump();
}

graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_graph(text);
}

void save_graph_file(const graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write file: " + path);
    out << serialize_graph(g, true) << "\n";
}

}  // namespace edfk
