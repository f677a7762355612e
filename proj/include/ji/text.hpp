#pragma once

// ASCII grammar for notations, case sensitive throughout (B is a label, b is
// a flat):
//
//   notation    = label accidentals marks components
//   label       = 'A'..'G'
//   accidentals = '#'* | 'b'*              (mixing rejected)
//   marks       = '\''* | '.'*             (each ' is x80/81 on the comma
//                                           label, each . is x81/80; mixing
//                                           rejected)
//   components  = comma groups and one octave number, in either order
//   octave      = '-'? digits | '(' '-' digits ')'
//   group       = '[' integer ('/' integer)? ']'
//
// Adjacent comma groups multiply and the result is reduced; it must end up
// 5-rough. Pitch classes take no octave and additionally allow '~x' for
// comma [x], '_y' for [1/y], and '~x_y' for [x/y].

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ji/monzo.hpp"
#include "ji/notation.hpp"

namespace ji {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string input, std::size_t column)
        : std::runtime_error(what), input_(std::move(input)), column_(column) {}

    const std::string& input() const { return input_; }
    std::size_t column() const { return column_; }  // 1-based

    std::string describe() const {
        return std::string(what()) + " in \"" + input_ + "\" at position " +
               std::to_string(column_);
    }

private:
    std::string input_;
    std::size_t column_;
};

struct NotationStyle {
    enum class Form { OctaveThenComma, CommaThenOctave };
    Form form = Form::OctaveThenComma;
    bool shorthand_fives = false;  // print '/'.'/ marks for factors of 5
};

namespace detail {

struct TokenParser {
    std::string_view s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, std::string(s), at + 1);
    }

    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool done() const { return i >= s.size(); }

    Label parse_label() {
        char c = peek();
        switch (c) {
            case 'A': ++i; return Label::A;
            case 'B': ++i; return Label::B;
            case 'C': ++i; return Label::C;
            case 'D': ++i; return Label::D;
            case 'E': ++i; return Label::E;
            case 'F': ++i; return Label::F;
            case 'G': ++i; return Label::G;
            default: fail("expected a note label A-G", i);
        }
    }

    int parse_accidentals() {
        int sharps = 0;
        if (peek() == '#') {
            while (peek() == '#') { ++sharps; ++i; }
            if (peek() == 'b') fail("mixed sharps and flats", i);
        } else if (peek() == 'b') {
            while (peek() == 'b') { --sharps; ++i; }
            if (peek() == '#') fail("mixed sharps and flats", i);
        }
        return sharps;
    }

    int parse_marks() {
        int fives = 0;
        if (peek() == '\'') {
            while (peek() == '\'') { ++fives; ++i; }
            if (peek() == '.') fail("mixed comma marks ' and .", i);
        } else if (peek() == '.') {
            while (peek() == '.') { --fives; ++i; }
            if (peek() == '\'') fail("mixed comma marks ' and .", i);
        }
        return fives;
    }

    BigInt parse_uint(const std::string& what) {
        std::size_t start = i;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
        if (i == start) fail("expected " + what, i);
        if (i - start > static_cast<std::size_t>(Monzo::kDefaultDigitGuard)) {
            fail(what + " exceeds " + std::to_string(Monzo::kDefaultDigitGuard) +
                     " decimal digits",
                 start);
        }
        BigInt value(std::string(s.substr(start, i - start)));
        if (value == 0) fail(what + " must be positive", start);
        return value;
    }

    // One bracket group, multiplied onto num/den.
    void parse_group(BigInt& num, BigInt& den) {
        ++i;  // '['
        num *= parse_uint("comma numerator");
        if (peek() == '/') {
            ++i;
            den *= parse_uint("comma denominator");
        }
        if (peek() != ']') fail("expected ']'", i);
        ++i;
    }

    int parse_octave() {
        bool negative = false;
        bool parenthesized = false;
        if (peek() == '(') {
            parenthesized = true;
            ++i;
            if (peek() != '-') fail("expected '-' after '('", i);
        }
        if (peek() == '-') {
            negative = true;
            ++i;
        }
        std::size_t start = i;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
        if (i == start) fail("expected octave digits", i);
        if (i - start > 6) fail("octave out of range", start);
        int value = std::stoi(std::string(s.substr(start, i - start)));
        if (parenthesized) {
            if (peek() != ')') fail("expected ')'", i);
            ++i;
        }
        return negative ? -value : value;
    }

    // Comma label from accumulated group factors and the 5-exponent of the
    // ' and . marks; reduces and validates 5-roughness.
    Fraction finish_comma(BigInt num, BigInt den, int fives, std::size_t blame) const {
        if (fives > 0) {
            num *= boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(fives));
        } else if (fives < 0) {
            den *= boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(-fives));
        }
        Fraction comma(std::move(num), std::move(den));
        if (comma.num() % 2 == 0 || comma.num() % 3 == 0 || comma.den() % 2 == 0 ||
            comma.den() % 3 == 0) {
            fail("comma " + comma.str() + " is not 5-rough", blame);
        }
        return comma;
    }
};

}  // namespace detail

inline Notation parse_notation(std::string_view text) {
    detail::TokenParser p{text};
    Label label = p.parse_label();
    int sharps = p.parse_accidentals();
    int fives = p.parse_marks();

    BigInt num = 1, den = 1;
    bool have_octave = false;
    int octave = 0;
    std::size_t first_group = 0;
    bool saw_group = false;
    while (!p.done()) {
        char c = p.peek();
        if (c == '[') {
            if (!saw_group) {
                saw_group = true;
                first_group = p.i;
            }
            p.parse_group(num, den);
        } else if (c == '-' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
            if (have_octave) p.fail("unexpected second octave number", p.i);
            octave = p.parse_octave();
            have_octave = true;
        } else {
            p.fail("unexpected character", p.i);
        }
    }
    if (!have_octave) p.fail("missing octave number", p.i);
    Fraction comma = p.finish_comma(std::move(num), std::move(den), fives, first_group);
    return Notation(label, sharps, octave, std::move(comma));
}

inline PitchClass parse_pitch_class(std::string_view text) {
    detail::TokenParser p{text};
    Label label = p.parse_label();
    int sharps = p.parse_accidentals();
    int fives = p.parse_marks();

    BigInt num = 1, den = 1;
    std::size_t first_group = 0;
    bool saw_group = false;
    if (p.peek() == '~') {
        first_group = p.i;
        saw_group = true;
        ++p.i;
        num *= p.parse_uint("comma numerator");
        if (p.peek() == '_') {
            ++p.i;
            den *= p.parse_uint("comma denominator");
        }
    } else if (p.peek() == '_') {
        first_group = p.i;
        saw_group = true;
        ++p.i;
        den *= p.parse_uint("comma denominator");
    } else {
        while (p.peek() == '[') {
            if (!saw_group) {
                saw_group = true;
                first_group = p.i;
            }
            p.parse_group(num, den);
        }
    }
    if (!p.done()) {
        char c = p.peek();
        if (c == '-' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
            p.fail("pitch class has no octave number", p.i);
        }
        p.fail("unexpected character", p.i);
    }
    Fraction comma = p.finish_comma(std::move(num), std::move(den), fives, first_group);
    return PitchClass(label, sharps, std::move(comma));
}

namespace detail {

inline std::string comma_text(const Fraction& comma) {
    if (comma.is_one()) return "";
    if (comma.den() == 1) return "[" + comma.num().str() + "]";
    return "[" + comma.num().str() + "/" + comma.den().str() + "]";
}

}  // namespace detail

// Deterministic printer; parse_notation(print_notation(n)) == n for every
// style. The comma is omitted when it is 1/1, negative octaves are
// parenthesized.
inline std::string print_notation(const Notation& n, const NotationStyle& style = {}) {
    std::string out(1, label_char(n.label()));
    out.append(static_cast<std::size_t>(n.sharps() < 0 ? -n.sharps() : n.sharps()),
               n.sharps() < 0 ? 'b' : '#');

    Fraction comma = n.comma();
    if (style.shorthand_fives) {
        BigInt num = comma.num(), den = comma.den();
        int fives = 0;
        while (num % 5 == 0) { num /= 5; ++fives; }
        while (den % 5 == 0) { den /= 5; --fives; }
        if (fives != 0) {
            out.append(static_cast<std::size_t>(fives < 0 ? -fives : fives),
                       fives > 0 ? '\'' : '.');
            comma = Fraction(std::move(num), std::move(den));
        }
    }

    std::string octave = n.octave() < 0 ? "(" + std::to_string(n.octave()) + ")"
                                        : std::to_string(n.octave());
    if (style.form == NotationStyle::Form::OctaveThenComma) {
        return out + octave + detail::comma_text(comma);
    }
    return out + detail::comma_text(comma) + octave;
}

}  // namespace ji
