#include "pfsdist/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pfsdist {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(std::string_view origin, const std::string& message) {
    throw ParseError(std::string(origin) + ": " + message);
}

std::size_t line_of_offset(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

double require_degree(const json& obj, const char* key,
                      std::string_view origin, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        fail(origin, where + ": missing numeric \"" + key + "\"");
    }
    return obj[key].get<double>();
}

}  // namespace

const PfsSet& Dataset::find(std::string_view name) const {
    for (const auto& s : sets) {
        if (s.name() == name) return s;
    }
    throw ParseError("dataset has no set named '" + std::string(name) + "'");
}

Dataset parse_dataset(std::string_view text, std::string_view origin,
                      const ValidationPolicy& policy) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, "line " + std::to_string(line_of_offset(text, e.byte)) +
                     ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("sets")) {
        fail(origin, "expected an object with \"universe\" and \"sets\"");
    }
    if (!doc["universe"].is_array() || doc["universe"].empty()) {
        fail(origin, "\"universe\" must be a nonempty array of labels");
    }

    Dataset out;
    for (const auto& label : doc["universe"]) {
        if (!label.is_string()) {
            fail(origin, "\"universe\" entries must be strings");
        }
        out.universe.push_back(label.get<std::string>());
    }

    if (!doc["sets"].is_object() || doc["sets"].empty()) {
        fail(origin, "\"sets\" must be a nonempty object");
    }

    for (const auto& [set_name, body] : doc["sets"].items()) {
        if (!body.is_object()) {
            fail(origin, "set '" + set_name + "' must be an object");
        }
        if (body.size() != out.universe.size()) {
            fail(origin, "set '" + set_name + "' covers " +
                         std::to_string(body.size()) + " labels, universe has " +
                         std::to_string(out.universe.size()));
        }
        std::vector<PfsElement> elements;
        elements.reserve(out.universe.size());
        for (const auto& label : out.universe) {
            if (!body.contains(label)) {
                fail(origin, "set '" + set_name + "' is missing label '" +
                             label + "'");
            }
            const std::string where = "set '" + set_name + "', label '" + label + "'";
            const double mu = require_degree(body[label], "mu", origin, where);
            const double nu = require_degree(body[label], "nu", origin, where);
            try {
                elements.emplace_back(label, mu, nu, policy);
            } catch (const Error& e) {
                fail(origin, where + ": " + e.what());
            }
        }
        out.sets.emplace_back(set_name, std::move(elements));
    }
    return out;
}

Dataset load_dataset(const std::filesystem::path& path,
                     const ValidationPolicy& policy) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open dataset file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str(), path.string(), policy);
}

}  // namespace pfsdist
