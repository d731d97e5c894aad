#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "susp/analyzer.hpp"
#include "susp/parser.hpp"

namespace susp {

namespace detail {

using json = nlohmann::json;

inline void allow_fields(const json& obj, const std::set<std::string>& allowed, const std::string& kind) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key)) throw SchemaError("unknown field '" + key + "' in " + kind + " spec");
}

inline const json& require(const json& obj, const std::string& key, const std::string& kind) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(kind + " spec is missing field '" + key + "'");
    return *it;
}

inline std::vector<std::string> string_array(const json& v, const std::string& field) {
    if (!v.is_array()) throw SchemaError("field '" + field + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw SchemaError("field '" + field + "' must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline Polynomial parse_field(const std::string& text, const Context& ctx, const std::string& field) {
    try {
        return parse_polynomial(text, ctx);
    } catch (const ParseError& e) {
        throw ParseError(field + ": " + e.message(), e.line(), e.column());
    }
}

inline VarietySpec tower_from_json(const json& j, Limits limits, const GroebnerOptions& opts) {
    allow_fields(j, {"kind", "base_vars", "levels", "suspension_vars"}, "tower");
    const auto base = string_array(require(j, "base_vars", "tower"), "base_vars");
    const auto level_text = string_array(require(j, "levels", "tower"), "levels");
    std::vector<std::pair<std::string, std::string>> names;
    if (auto it = j.find("suspension_vars"); it != j.end()) {
        if (!it->is_array()) throw SchemaError("field 'suspension_vars' must be an array of [u, v] pairs");
        for (const auto& pair : *it) {
            const auto uv = string_array(pair, "suspension_vars");
            if (uv.size() != 2) throw SchemaError("each entry of 'suspension_vars' must name exactly two variables");
            names.emplace_back(uv[0], uv[1]);
        }
        if (names.size() != level_text.size())
            throw SchemaError("'suspension_vars' must have one pair per level");
    } else {
        for (std::size_t i = 1; i <= level_text.size(); ++i)
            names.emplace_back("u" + std::to_string(i), "v" + std::to_string(i));
    }
    Context ctx = make_context(base, limits);
    std::vector<Polynomial> levels;
    for (std::size_t i = 0; i < level_text.size(); ++i) {
        levels.push_back(parse_field(level_text[i], ctx, "levels[" + std::to_string(i) + "]"));
        ctx = extend_context(ctx, {names[i].first, names[i].second});
    }
    return SuspensionTower(base, std::move(levels), std::move(names), limits, opts);
}

inline VarietySpec danielewski_from_json(const json& j, Limits limits) {
    allow_fields(j, {"kind", "n", "f"}, "danielewski");
    const json& n = require(j, "n", "danielewski");
    if (!n.is_number_integer() || n.get<long long>() < 1)
        throw SchemaError("field 'n' must be a positive integer");
    const json& f = require(j, "f", "danielewski");
    if (!f.is_string()) throw SchemaError("field 'f' must be a string");
    const Context ctx = make_context({"y"}, limits);
    return DanielewskiSurface(static_cast<unsigned>(n.get<long long>()), parse_field(f.get<std::string>(), ctx, "f"));
}

inline VarietySpec factored_from_json(const json& j, Limits limits) {
    const std::string kind = "factored_suspension";
    allow_fields(j, {"kind", "vars", "factors", "variable_witness", "irreducibility_attested"}, kind);
    const auto vars = string_array(require(j, "vars", kind), "vars");
    const auto factor_text = string_array(require(j, "factors", kind), "factors");
    const Context ctx = make_context(vars, limits);
    std::vector<Polynomial> factors;
    for (std::size_t i = 0; i < factor_text.size(); ++i)
        factors.push_back(parse_field(factor_text[i], ctx, "factors[" + std::to_string(i) + "]"));
    std::optional<std::vector<Polynomial>> witness;
    if (auto it = j.find("variable_witness"); it != j.end() && !it->is_null()) {
        const auto text = string_array(*it, "variable_witness");
        witness.emplace();
        for (std::size_t i = 0; i < text.size(); ++i)
            witness->push_back(parse_field(text[i], ctx, "variable_witness[" + std::to_string(i) + "]"));
    }
    bool attested = false;
    if (auto it = j.find("irreducibility_attested"); it != j.end()) {
        if (!it->is_boolean()) throw SchemaError("field 'irreducibility_attested' must be a boolean");
        attested = it->get<bool>();
    }
    return FactoredSuspension(ctx, std::move(factors), std::move(witness), attested);
}

}  // namespace detail

/// Builds a variety from a parsed spec document. Unknown fields are rejected.
inline VarietySpec spec_from_json(const nlohmann::json& j, Limits limits = {}, const GroebnerOptions& opts = {}) {
    if (!j.is_object()) throw SchemaError("spec must be a JSON object");
    const auto it = j.find("kind");
    if (it == j.end() || !it->is_string()) throw SchemaError("spec needs a string field 'kind'");
    const std::string kind = it->get<std::string>();
    if (kind == "tower") return detail::tower_from_json(j, limits, opts);
    if (kind == "danielewski") return detail::danielewski_from_json(j, limits);
    if (kind == "factored_suspension") return detail::factored_from_json(j, limits);
    throw SchemaError("unknown kind '" + kind + "'");
}

inline VarietySpec parse_spec(std::string_view text, Limits limits = {}, const GroebnerOptions& opts = {}) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover line and column from the byte offset.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", line, column);
    }
    return spec_from_json(j, limits, opts);
}

inline VarietySpec load_spec(const std::string& path, Limits limits = {}, const GroebnerOptions& opts = {}) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), limits, opts);
}

}  // namespace susp
