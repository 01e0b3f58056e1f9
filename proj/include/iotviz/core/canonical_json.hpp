#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "iotviz/core/error.hpp"

namespace iotviz {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline void append_escaped(std::string& out, std::string_view s) {
    out.push_back('"');
    for (const char ch : s) {
        const auto c = static_cast<unsigned char>(ch);
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    static constexpr char hex[] = "0123456789abcdef";
                    out += "\\u00";
                    out.push_back(hex[c >> 4]);
                    out.push_back(hex[c & 0xF]);
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
}

inline void append_double(std::string& out, double v) {
    if (!std::isfinite(v)) throw SchemaError("cannot serialize non-finite number");
    if (v == 0.0) v = 0.0;  // fold -0 so equal values print identically
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    std::string_view text(buf.data(), static_cast<std::size_t>(end - buf.data()));
    out += text;
    // keep floats recognizable as floats on re-parse
    if (text.find_first_of(".eE") == std::string_view::npos) out += ".0";
}

inline void append_canonical(std::string& out, const ordered_json& j) {
    switch (j.type()) {
        case ordered_json::value_t::null: out += "null"; break;
        case ordered_json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case ordered_json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
        case ordered_json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
        case ordered_json::value_t::number_float: append_double(out, j.get<double>()); break;
        case ordered_json::value_t::string: append_escaped(out, j.get_ref<const std::string&>()); break;
        case ordered_json::value_t::array: {
            out.push_back('[');
            bool first = true;
            for (const auto& e : j) {
                if (!first) out.push_back(',');
                first = false;
                append_canonical(out, e);
            }
            out.push_back(']');
            break;
        }
        case ordered_json::value_t::object: {
            out.push_back('{');
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) out.push_back(',');
                first = false;
                append_escaped(out, k);
                out.push_back(':');
                append_canonical(out, v);
            }
            out.push_back('}');
            break;
        }
        default: throw SchemaError("unsupported JSON value in canonical writer");
    }
}

}  // namespace detail

// Compact JSON with insertion-ordered keys and shortest round-trip floats
// (std::to_chars). Equal values always produce identical bytes, which is what
// content hashing relies on.
inline std::string canonical_dump(const ordered_json& j) {
    std::string out;
    detail::append_canonical(out, j);
    return out;
}

}  // namespace iotviz
