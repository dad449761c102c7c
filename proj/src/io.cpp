#include "quivarity/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace quivarity {

namespace {

using json = nlohmann::ordered_json;

Int require_int(const json& j, const char* what, Int min_value) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    Int value = j.get<Int>();
    if (value < min_value)
        throw ParseError(std::string(what) + " must be >= " + std::to_string(min_value));
    return value;
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string() || j.get<std::string>().empty())
        throw ParseError(std::string(what) + " must be a non-empty string");
    return j.get<std::string>();
}

}  // namespace

QuiverSetting parse_quiver_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());  // message carries line/column
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("document must be an object with a 'vertices' array");

    std::vector<std::string> ids;
    std::map<std::string, Int> dims;
    for (const json& v : doc["vertices"]) {
        if (!v.is_object()) throw ParseError("vertex entries must be objects");
        std::string id = require_string(v.at("id"), "vertex id");
        Int dim = require_int(v.at("dim"), "vertex dim", 0);
        if (dims.count(id)) throw ParseError("duplicate vertex id '" + id + "'");
        ids.push_back(id);
        dims[id] = dim;
    }

    std::vector<std::pair<std::string, std::string>> arrows;
    if (doc.contains("arrows")) {
        if (!doc["arrows"].is_array()) throw ParseError("'arrows' must be an array");
        for (const json& a : doc["arrows"]) {
            if (!a.is_object()) throw ParseError("arrow entries must be objects");
            std::string from = require_string(a.at("from"), "arrow 'from'");
            std::string to = require_string(a.at("to"), "arrow 'to'");
            Int count = a.contains("count") ? require_int(a["count"], "arrow count", 1) : 1;
            if (!dims.count(from))
                throw ParseError("arrow references undeclared vertex '" + from + "'");
            if (!dims.count(to))
                throw ParseError("arrow references undeclared vertex '" + to + "'");
            for (Int i = 0; i < count; ++i) arrows.emplace_back(from, to);
        }
    }

    Quiver q(ids, arrows);
    std::vector<Int> alpha;
    alpha.reserve(static_cast<std::size_t>(q.vertex_count()));
    for (const std::string& id : q.vertex_ids()) alpha.push_back(dims[id]);
    return QuiverSetting(std::move(q), DimensionVector(std::move(alpha)));
}

QuiverSetting load_quiver_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_quiver_file(buffer.str());
}

std::string serialize_quiver_file(const QuiverSetting& s) {
    json doc;
    doc["vertices"] = json::array();
    for (int v = 0; v < s.quiver.vertex_count(); ++v)
        doc["vertices"].push_back({{"id", s.quiver.vertex_id(v)}, {"dim", s.alpha[v]}});
    doc["arrows"] = json::array();
    std::map<std::pair<int, int>, Int> counts;
    for (const Arrow& a : s.quiver.arrows()) ++counts[{a.src, a.dst}];
    for (const auto& [pair, count] : counts)
        doc["arrows"].push_back({{"from", s.quiver.vertex_id(pair.first)},
                                 {"to", s.quiver.vertex_id(pair.second)},
                                 {"count", count}});
    return doc.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& id) {
    std::string out;
    for (char c : id) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const QuiverSetting& s) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (int v = 0; v < s.quiver.vertex_count(); ++v) {
        std::string id = dot_escape(s.quiver.vertex_id(v));
        out << "  \"" << id << "\" [label=\"" << id << "/" << s.alpha[v] << "\"];\n";
    }
    for (const Arrow& a : s.quiver.arrows())
        out << "  \"" << dot_escape(s.quiver.vertex_id(a.src)) << "\" -> \""
            << dot_escape(s.quiver.vertex_id(a.dst)) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace quivarity
