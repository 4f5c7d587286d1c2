#ifndef CLUSTER_A11_LAURENT_IO_HPP
#define CLUSTER_A11_LAURENT_IO_HPP

// Text forms of LaurentPoly.
//
// JSON (exact contract):
//   {"vars":["x1","x2"],"terms":[{"e1":<int>,"e2":<int>,"c":"<decimal>"},...]}
// with terms strictly ascending in (e1, e2), nonzero canonical decimal
// coefficients and no whitespace. `terms` is empty for the zero polynomial.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cluster_a11/errors.hpp"
#include "cluster_a11/laurent_poly.hpp"

namespace cluster_a11 {

inline std::string to_json(const LaurentPoly& p) {
    std::string out = R"({"vars":["x1","x2"],"terms":[)";
    bool first = true;
    for (const auto& t : p) {
        if (!first) out += ',';
        first = false;
        out += R"({"e1":)";
        out += std::to_string(t.mono.e1);
        out += R"(,"e2":)";
        out += std::to_string(t.mono.e2);
        out += R"(,"c":")";
        out += to_decimal(t.coeff);
        out += R"("})";
    }
    out += "]}";
    return out;
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
    throw ParseError("invalid polynomial JSON at " + path + ": " + what, ParseError::npos, path);
}

inline std::int64_t exponent_field(const nlohmann::json& term, const char* key, const std::string& path) {
    const auto it = term.find(key);
    if (it == term.end()) schema_error(path, std::string("missing \"") + key + "\"");
    if (it->is_number_integer() && !it->is_number_unsigned()) return it->get<std::int64_t>();
    if (it->is_number_unsigned() && it->get<std::uint64_t>() <= static_cast<std::uint64_t>(INT64_MAX)) {
        return static_cast<std::int64_t>(it->get<std::uint64_t>());
    }
    schema_error(path + "/" + key, "expected a 64-bit signed integer");
}

}  // namespace detail

/// Parses the JSON form. Syntax errors report a byte offset; schema errors a
/// JSON pointer to the offending element.
inline LaurentPoly from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }

    if (!doc.is_object()) detail::schema_error("", "expected an object");
    if (doc.size() != 2 || !doc.contains("vars") || !doc.contains("terms")) {
        detail::schema_error("", R"(expected exactly the keys "vars" and "terms")");
    }
    if (doc["vars"] != nlohmann::json::array({"x1", "x2"})) {
        detail::schema_error("/vars", R"(must be ["x1","x2"])");
    }
    const auto& raw = doc["terms"];
    if (!raw.is_array()) detail::schema_error("/terms", "expected an array");

    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string path = "/terms/" + std::to_string(i);
        const auto& t = raw[i];
        if (!t.is_object() || t.size() != 3) detail::schema_error(path, R"(expected {"e1","e2","c"})");
        const Monomial m{detail::exponent_field(t, "e1", path), detail::exponent_field(t, "e2", path)};
        const auto c = t.find("c");
        if (c == t.end() || !c->is_string()) detail::schema_error(path + "/c", "expected a decimal string");
        const auto& digits = c->get_ref<const std::string&>();
        if (!is_canonical_decimal(digits)) detail::schema_error(path + "/c", "not a canonical decimal integer");
        if (digits == "0") detail::schema_error(path + "/c", "zero coefficients are not stored");
        if (!terms.empty() && !(terms.back().mono < m)) {
            detail::schema_error(path, "terms must be strictly ascending in (e1, e2)");
        }
        terms.push_back({m, BigCoeff(digits, 10)});
    }
    return LaurentPoly::from_canonical(std::move(terms));
}

/// `c * x1^a * x2^b` per term, joined by ` + `; zero exponents are omitted
/// and the zero polynomial prints as `0`.
inline std::string to_human(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p) {
        if (!out.empty()) out += " + ";
        out += to_decimal(t.coeff);
        if (t.mono.e1 != 0) out += " * x1^" + std::to_string(t.mono.e1);
        if (t.mono.e2 != 0) out += " * x2^" + std::to_string(t.mono.e2);
    }
    return out;
}

}  // namespace cluster_a11

#endif  // CLUSTER_A11_LAURENT_IO_HPP
