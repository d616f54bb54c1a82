#include "pebble/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pebble {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

template <class F>
auto with_context(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

const json& field(const json& doc, const char* key, const char* what) {
    if (!doc.is_object() || !doc.contains(key))
        throw InputError(std::string(what) + ": missing \"" + key + "\"");
    return doc.at(key);
}

Vertex as_vertex(const json& x, const char* what) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() > 0xffffffffULL)
        throw InputError(std::string(what) + ": vertex indices must be non-negative integers");
    return x.get<Vertex>();
}

}  // namespace

Graph graph_from_json(const std::string& text) {
    const json doc = parse(text, "graph");
    return with_context("graph", [&] {
        const auto n = field(doc, "n", "graph").get<std::size_t>();
        std::vector<Graph::Edge> edges;
        for (const auto& e : field(doc, "edges", "graph")) {
            if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge must be a pair");
            edges.emplace_back(as_vertex(e[0], "graph"), as_vertex(e[1], "graph"));
        }
        return Graph(n, edges);
    });
}

std::string graph_to_json(const Graph& g) {
    ordered doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = ordered::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump() + "\n";
}

Configuration config_from_json(const std::string& text) {
    const json doc = parse(text, "configuration");
    return with_context("configuration", [&] {
        const auto& arr = field(doc, "pebbles", "configuration");
        std::vector<Count> pebbles;
        for (const auto& x : arr) {
            if (!x.is_number_unsigned()) throw InputError("configuration: pebble counts must be non-negative integers");
            pebbles.push_back(x.get<Count>());
        }
        return Configuration(std::move(pebbles));
    });
}

std::string config_to_json(const Configuration& c) {
    ordered doc;
    doc["pebbles"] = c.pebbles();
    return doc.dump() + "\n";
}

MoveCertificate certificate_from_json(const std::string& text) {
    const json doc = parse(text, "certificate");
    return with_context("certificate", [&] {
        MoveCertificate m;
        for (const auto& mv : field(doc, "moves", "certificate")) {
            if (!mv.is_array() || mv.size() != 3) throw InputError("certificate: each move must be [i, j, count]");
            if (!mv[2].is_number_unsigned()) throw InputError("certificate: move counts must be non-negative");
            m.add(as_vertex(mv[0], "certificate"), as_vertex(mv[1], "certificate"), mv[2].get<Count>());
        }
        return m;
    });
}

std::string certificate_to_json(const MoveCertificate& m) {
    ordered doc;
    doc["moves"] = ordered::array();
    for (const auto& [key, k] : m.moves()) doc["moves"].push_back({key.first, key.second, k});
    return doc.dump() + "\n";
}

X4CInstance instance_from_json(const std::string& text) {
    const json doc = parse(text, "instance");
    return with_context("instance", [&] {
        X4CInstance x;
        x.ground_set_size = field(doc, "ground_set_size", "instance").get<std::size_t>();
        for (const auto& s : field(doc, "sets", "instance")) {
            if (!s.is_array()) throw InputError("instance: each set must be an array");
            auto& set = x.sets.emplace_back();
            for (const auto& e : s) set.push_back(as_vertex(e, "instance"));
        }
        return x;
    });
}

std::string instance_to_json(const X4CInstance& x) {
    ordered doc;
    doc["ground_set_size"] = x.ground_set_size;
    doc["sets"] = x.sets;
    return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace pebble
