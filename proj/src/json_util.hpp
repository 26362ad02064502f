#pragma once

// Internal helpers shared by the JSON readers.

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bicover/errors.hpp"

namespace bicover::detail {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

inline json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", line, column);
    }
}

inline void check_schema_version(const json& doc) {
    if (!doc.contains("schema_version")) return;
    const auto& v = doc.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != schema_version)
        throw ParseError("unsupported schema_version " + v.dump());
}

inline const json& require(const json& doc, const char* key) {
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

inline long long require_integer(const json& value, const std::string& what) {
    if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
    return value.get<long long>();
}

} // namespace bicover::detail
