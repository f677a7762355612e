#pragma once

// Ordered sequences of notations, with an optional common comma factored out
// of every note, and the file format for them: whitespace-separated notation
// tokens, ';' comment lines, and an optional trailing bracket-group token
// holding the common comma.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ji/comma.hpp"
#include "ji/monzo.hpp"
#include "ji/notation.hpp"
#include "ji/text.hpp"

namespace ji {

struct Melody {
    std::vector<Notation> notes;
    std::optional<Fraction> common_comma;

    friend bool operator==(const Melody& a, const Melody& b) {
        return a.notes == b.notes && a.common_comma == b.common_comma;
    }
    friend bool operator!=(const Melody& a, const Melody& b) { return !(a == b); }
};

// Fold the common comma back into each note. Lossless: factoring and then
// expanding reproduces the input exactly.
inline Melody expand(const Melody& m) {
    if (!m.common_comma || m.common_comma->is_one()) {
        return {m.notes, std::nullopt};
    }
    Melody out;
    out.notes.reserve(m.notes.size());
    for (const Notation& n : m.notes) {
        out.notes.emplace_back(n.label(), n.sharps(), n.octave(), n.comma() * *m.common_comma);
    }
    return out;
}

inline Melody transpose_up(const Melody& m, const Notation& by, const CommaTable& table) {
    Melody out;
    out.notes.reserve(m.notes.size());
    for (const Notation& n : m.notes) out.notes.push_back(mul(n, by, table));
    out.common_comma = m.common_comma;
    return out;
}

inline Melody transpose_down(const Melody& m, const Notation& by, const CommaTable& table) {
    Melody out;
    out.notes.reserve(m.notes.size());
    for (const Notation& n : m.notes) out.notes.push_back(divide(n, by, table));
    out.common_comma = m.common_comma;
    return out;
}

// Ratios between consecutive notes; empty for melodies shorter than two
// notes. Invariant under transposition.
inline std::vector<Monzo> intervals(const Melody& m, const CommaTable& table) {
    Melody e = expand(m);
    std::vector<Monzo> out;
    if (e.notes.size() < 2) return out;
    out.reserve(e.notes.size() - 1);
    Monzo previous = eval(e.notes[0], table);
    for (std::size_t i = 1; i < e.notes.size(); ++i) {
        Monzo current = eval(e.notes[i], table);
        out.push_back(current * inverse(previous));
        previous = std::move(current);
    }
    return out;
}

// Pull the largest shared comma out of every note: per prime, the smallest
// exponent in absolute value when every note carries that prime with the
// same sign, zero otherwise. The result always has common_comma set (1/1
// when nothing is shared).
inline Melody factor_common_comma(const Melody& m, const CommaTable&) {
    Melody expanded = expand(m);
    std::vector<std::map<std::int64_t, std::int64_t>> label_exponents;
    label_exponents.reserve(expanded.notes.size());
    for (const Notation& n : expanded.notes) {
        std::map<std::int64_t, std::int64_t> exps;
        for (const auto& [p, e] : factorize(n.comma().num())) exps[p] = e;
        for (const auto& [p, e] : factorize(n.comma().den())) exps[p] = -e;
        label_exponents.push_back(std::move(exps));
    }

    std::map<std::int64_t, std::int64_t> shared;
    if (!label_exponents.empty()) {
        for (const auto& [p, e] : label_exponents.front()) {
            std::int64_t common = e;
            for (const auto& exps : label_exponents) {
                auto it = exps.find(p);
                if (it == exps.end() || (it->second > 0) != (e > 0)) {
                    common = 0;
                    break;
                }
                std::int64_t candidate = it->second;
                if (std::abs(candidate) < std::abs(common)) common = candidate;
            }
            if (common != 0) shared[p] = common;
        }
    }

    BigInt num = 1, den = 1;
    for (const auto& [p, e] : shared) {
        if (e > 0) {
            num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
        } else {
            den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-e));
        }
    }
    Fraction common(std::move(num), std::move(den));

    Melody out;
    out.notes.reserve(expanded.notes.size());
    for (const Notation& n : expanded.notes) {
        out.notes.emplace_back(n.label(), n.sharps(), n.octave(),
                               n.comma() * common.inverse());
    }
    out.common_comma = std::move(common);
    return out;
}

namespace detail {

// A token consisting solely of bracket groups; used for the trailing
// common-comma token of a melody file.
inline Fraction parse_comma_token(std::string_view text) {
    TokenParser p{text};
    BigInt num = 1, den = 1;
    while (!p.done()) {
        if (p.peek() != '[') p.fail("expected '['", p.i);
        p.parse_group(num, den);
    }
    return p.finish_comma(std::move(num), std::move(den), 0, 0);
}

}  // namespace detail

inline Melody parse_melody(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string_view::npos || line[start] == ';') continue;
        while (start != std::string_view::npos) {
            std::size_t end = line.find_first_of(" \t\r", start);
            tokens.emplace_back(line.substr(
                start, end == std::string_view::npos ? std::string_view::npos : end - start));
            start = line.find_first_not_of(" \t\r", end);
        }
    }

    Melody out;
    if (!tokens.empty() && tokens.back().front() == '[') {
        out.common_comma = detail::parse_comma_token(tokens.back());
        tokens.pop_back();
    }
    out.notes.reserve(tokens.size());
    for (const std::string& token : tokens) {
        out.notes.push_back(parse_notation(token));
    }
    return out;
}

// One notation per line; the common comma, when present and nontrivial,
// becomes a final bracket-group line. The output parses back to the input.
inline std::string print_melody(const Melody& m, const NotationStyle& style = {}) {
    std::string out;
    for (const Notation& n : m.notes) {
        out += print_notation(n, style);
        out += '\n';
    }
    if (m.common_comma && !m.common_comma->is_one()) {
        out += detail::comma_text(*m.common_comma);
        out += '\n';
    }
    return out;
}

}  // namespace ji
