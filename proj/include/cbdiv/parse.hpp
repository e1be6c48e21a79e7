/*
  parse.hpp

  Textual input syntax shared by the command line and the tests.

    algebra   "sl4"
    weight    "[3,1,1,0]"  or  "2w1+w3"  or  "0"
    tuple     semicolon-separated weights, each with an optional
              repetition suffix: "[1,0,0,0];[3,1,1,0]^3"
    hassett   "1/4^9" or "1/2;1/3^5" (rationals with repetition)
    fcurve    "1|2|3|4,5,6" (four blocks, comma-separated points)
*/

#pragma once

#include "fcurve.hpp"
#include "weight.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace cbdiv {

namespace detail {

inline void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

inline long parse_long(std::string_view& s, const char* what) {
    skip_ws(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front())))
        throw validation_error(std::string("expected an integer while parsing ") + what);
    long v = 0;
    while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
        v = v * 10 + (s.front() - '0');
        s.remove_prefix(1);
    }
    return neg ? -v : v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace detail

inline int parse_algebra(std::string_view s) {
    detail::skip_ws(s);
    if (s.substr(0, 2) != "sl") throw validation_error("algebra must look like \"sl4\"");
    s.remove_prefix(2);
    long k = detail::parse_long(s, "algebra rank");
    detail::skip_ws(s);
    if (!s.empty() || k < 2) throw validation_error("algebra must look like \"sl4\" with rank >= 2");
    return static_cast<int>(k);
}

/// One weight: bracketed rows or a fundamental-weight combination.
inline Weight parse_weight(std::string_view s, int rank_plus_one) {
    detail::skip_ws(s);
    if (s.empty()) throw validation_error("empty weight");
    if (s.front() == '[') {
        s.remove_prefix(1);
        std::vector<int> rows;
        for (;;) {
            rows.push_back(static_cast<int>(detail::parse_long(s, "weight row")));
            detail::skip_ws(s);
            if (!s.empty() && s.front() == ',') {
                s.remove_prefix(1);
                continue;
            }
            break;
        }
        if (s.empty() || s.front() != ']') throw validation_error("weight is missing the closing ']'");
        s.remove_prefix(1);
        detail::skip_ws(s);
        if (!s.empty()) throw validation_error("trailing characters after weight");
        if (static_cast<int>(rows.size()) != rank_plus_one)
            throw validation_error("weight " + Weight(rows).str() + " has wrong length for sl" +
                                   std::to_string(rank_plus_one));
        return Weight(std::move(rows));
    }

    // fundamental-weight syntax: "2w1+w3", "w2", "0"
    std::vector<int> rows(static_cast<std::size_t>(rank_plus_one), 0);
    for (;;) {
        detail::skip_ws(s);
        long coeff = 1;
        if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front())))
            coeff = detail::parse_long(s, "coefficient");
        detail::skip_ws(s);
        if (s.empty() || (s.front() != 'w' && s.front() != 'W')) {
            if (coeff == 0) break; // bare "0": the zero weight
            throw validation_error("expected 'w<index>' in fundamental-weight syntax");
        }
        s.remove_prefix(1);
        long idx = detail::parse_long(s, "fundamental weight index");
        if (idx < 1 || idx > rank_plus_one - 1)
            throw validation_error("fundamental weight index out of range for sl" +
                                   std::to_string(rank_plus_one));
        for (long i = 0; i < idx; ++i) rows[static_cast<std::size_t>(i)] += static_cast<int>(coeff);
        detail::skip_ws(s);
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
            continue;
        }
        break;
    }
    detail::skip_ws(s);
    if (!s.empty()) throw validation_error("trailing characters after weight");
    return Weight(std::move(rows));
}

/// Semicolon-separated weights with "^k" repetition.
inline WeightTuple parse_weight_tuple(std::string_view s, int rank_plus_one) {
    std::vector<Weight> ws;
    for (const auto& part : detail::split(s, ';')) {
        std::string_view p(part);
        detail::skip_ws(p);
        if (p.empty()) throw validation_error("empty component in weight tuple");
        long repeat = 1;
        auto caret = p.rfind('^');
        std::string_view body = p;
        if (caret != std::string_view::npos && p.find(']', caret) == std::string_view::npos) {
            std::string_view tail = p.substr(caret + 1);
            repeat = detail::parse_long(tail, "repetition count");
            detail::skip_ws(tail);
            if (!tail.empty()) throw validation_error("bad repetition suffix");
            if (repeat < 1) throw validation_error("repetition count must be positive");
            body = p.substr(0, caret);
        }
        Weight w = parse_weight(body, rank_plus_one);
        for (long i = 0; i < repeat; ++i) ws.push_back(w);
    }
    if (ws.empty()) throw validation_error("empty weight tuple");
    return WeightTuple(rank_plus_one, std::move(ws));
}

inline Rat parse_rational(std::string_view& s) {
    long num = detail::parse_long(s, "rational");
    detail::skip_ws(s);
    if (!s.empty() && s.front() == '/') {
        s.remove_prefix(1);
        long den = detail::parse_long(s, "denominator");
        if (den == 0) throw validation_error("zero denominator");
        return Rat(num, den);
    }
    return Rat(num);
}

/// Hassett weight list: rationals separated by ';' or ',' with "^k".
inline std::vector<Rat> parse_rational_list(std::string_view s) {
    std::vector<Rat> out;
    char sep = s.find(';') != std::string_view::npos ? ';' : ',';
    for (const auto& part : detail::split(s, sep)) {
        std::string_view p(part);
        detail::skip_ws(p);
        if (p.empty()) throw validation_error("empty component in weight list");
        Rat value = parse_rational(p);
        long repeat = 1;
        detail::skip_ws(p);
        if (!p.empty() && p.front() == '^') {
            p.remove_prefix(1);
            repeat = detail::parse_long(p, "repetition count");
            if (repeat < 1) throw validation_error("repetition count must be positive");
        }
        detail::skip_ws(p);
        if (!p.empty()) throw validation_error("trailing characters in weight list");
        for (long i = 0; i < repeat; ++i) out.push_back(value);
    }
    return out;
}

/// F-curve blocks: "1|2|3|4,5,6".
inline FCurve parse_fcurve(std::string_view s, int n) {
    auto parts = detail::split(s, '|');
    if (parts.size() != 4) throw validation_error("an F-curve needs four '|'-separated blocks");
    std::array<std::vector<int>, 4> blocks;
    for (std::size_t b = 0; b < 4; ++b) {
        for (const auto& item : detail::split(parts[b], ',')) {
            std::string_view p(item);
            long v = detail::parse_long(p, "point label");
            detail::skip_ws(p);
            if (!p.empty()) throw validation_error("bad point label");
            blocks[b].push_back(static_cast<int>(v));
        }
    }
    return FCurve(n, std::move(blocks));
}

} // namespace cbdiv
