#include <fstream>
#include <sstream>

#include "spg/error.hpp"
#include "spg/io.hpp"

namespace spg {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::SchemaError, "field '" + field + "': " + what);
}

const json& require(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        schema_error(field, "missing");
    }
    return *it;
}

std::int64_t integer(const json& value, const std::string& field) {
    if (!value.is_number_integer()) {
        schema_error(field, "expected an integer");
    }
    return value.get<std::int64_t>();
}

VertexId index(const json& value, const std::string& field, std::size_t n) {
    const std::int64_t v = integer(value, field);
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        schema_error(field, "index " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    }
    return static_cast<VertexId>(v);
}

} // namespace

GraphSpec graph_from_json(const json& doc) {
    if (!doc.is_object()) {
        schema_error("<root>", "expected an object");
    }
    GraphSpec spec;
    const json& directed = require(doc, "directed");
    if (!directed.is_boolean()) {
        schema_error("directed", "expected a boolean");
    }
    spec.directed = directed.get<bool>();

    const std::int64_t n = integer(require(doc, "n"), "n");
    if (n < 1 || n >= static_cast<std::int64_t>(kNoVertex)) {
        schema_error("n", "must be a positive vertex count");
    }
    spec.n = static_cast<std::size_t>(n);

    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array() || it->size() != spec.n) {
            schema_error("labels", "expected an array of n strings");
        }
        for (std::size_t i = 0; i < spec.n; ++i) {
            if (!(*it)[i].is_string()) {
                schema_error("labels[" + std::to_string(i) + "]", "expected a string");
            }
            spec.labels.push_back((*it)[i].get<std::string>());
        }
    }

    const json& edges = require(doc, "edges");
    if (!edges.is_array()) {
        schema_error("edges", "expected an array");
    }
    spec.edges.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 3) {
            schema_error(field, "expected [u, v, cost]");
        }
        const std::int64_t cost = integer(e[2], field + "[2]");
        if (cost < 0) {
            throw Error(ErrorCode::NegativeCost, field + " has negative cost");
        }
        spec.edges.push_back({index(e[0], field + "[0]", spec.n), index(e[1], field + "[1]", spec.n), cost});
    }

    spec.s = index(require(doc, "s"), "s", spec.n);
    spec.t = index(require(doc, "t"), "t", spec.n);
    return spec;
}

nlohmann::ordered_json graph_to_json(const GraphSpec& spec) {
    nlohmann::ordered_json doc;
    doc["directed"] = spec.directed;
    doc["n"] = spec.n;
    if (!spec.labels.empty()) {
        doc["labels"] = spec.labels;
    }
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : spec.edges) {
        edges.push_back({e.u, e.v, e.cost});
    }
    doc["edges"] = std::move(edges);
    doc["s"] = spec.s;
    doc["t"] = spec.t;
    return doc;
}

GraphSpec parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

std::string serialize_graph(const GraphSpec& spec) { return graph_to_json(spec).dump() + "\n"; }

GraphSpec read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void write_graph_file(const std::string& path, const GraphSpec& spec) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    }
    out << serialize_graph(spec);
}

} // namespace spg
