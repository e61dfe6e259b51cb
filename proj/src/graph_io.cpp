#include <map>
#include <sstream>

#include "json.hpp"
#include "starcover/graph.hpp"

namespace starcover {

using nlohmann::json;

namespace {

// Undirected edges with multiplicities, keyed by (min, max) endpoint.
std::map<std::pair<int, int>, int> edge_multiplicities(const Graph& g) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& d : g.darts()) {
        if (d.origin < d.terminus) {
            ++out[{d.origin, d.terminus}];
        } else if (d.origin == d.terminus) {
            ++out[{d.origin, d.origin}];
        }
    }
    for (auto& [key, mult] : out) {
        if (key.first == key.second) {
            mult /= 2;  // both darts of a loop were counted
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) {
        throw GraphFormatError(where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw GraphFormatError(where, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

int require_int(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number_integer()) {
        throw GraphFormatError(where + "/" + key, "expected an integer");
    }
    return v.get<int>();
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v;
        if (!g.label(v).empty()) {
            out << " [label=\"" << dot_escape(g.label(v)) << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [key, mult] : edge_multiplicities(g)) {
        for (int k = 0; k < mult; ++k) {
            out << "  v" << key.first << " -- v" << key.second << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const Graph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json entry{{"id", v}};
        if (!g.label(v).empty()) {
            entry["label"] = g.label(v);
        }
        vertices.push_back(std::move(entry));
    }
    json edges = json::array();
    for (const auto& [key, mult] : edge_multiplicities(g)) {
        edges.push_back({{"u", key.first}, {"v", key.second}, {"multiplicity", mult}});
    }
    return json{{"vertices", vertices}, {"edges", edges}}.dump();
}

Graph from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphFormatError("byte " + std::to_string(e.byte), e.what());
    }
    const json& vertices = require(doc, "vertices", "/");
    const json& edges = require(doc, "edges", "/");
    if (!vertices.is_array()) {
        throw GraphFormatError("/vertices", "expected an array");
    }
    if (!edges.is_array()) {
        throw GraphFormatError("/edges", "expected an array");
    }
    Graph g;
    std::map<int, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "/vertices/" + std::to_string(i);
        const int id = require_int(vertices[i], "id", where);
        std::string label;
        if (auto it = vertices[i].find("label"); it != vertices[i].end()) {
            if (!it->is_string()) {
                throw GraphFormatError(where + "/label", "expected a string");
            }
            label = it->get<std::string>();
        }
        if (!index.emplace(id, g.add_vertex(std::move(label))).second) {
            throw GraphFormatError(where + "/id", "duplicate vertex id " + std::to_string(id));
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "/edges/" + std::to_string(i);
        const int u = require_int(edges[i], "u", where);
        const int v = require_int(edges[i], "v", where);
        int mult = 1;
        if (edges[i].contains("multiplicity")) {
            mult = require_int(edges[i], "multiplicity", where);
        }
        if (mult < 1) {
            throw GraphFormatError(where + "/multiplicity", "must be positive");
        }
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end() || iv == index.end()) {
            throw GraphFormatError(where, "edge references an unknown vertex id");
        }
        for (int k = 0; k < mult; ++k) {
            g.add_edge(iu->second, iv->second);
        }
    }
    return g;
}

}  // namespace starcover
