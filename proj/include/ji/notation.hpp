#pragma once

// The notation value type L[x/y]_z and its arithmetic. A notation splits
// into four exact factors: octave shift 2^(z-4), diatonic scale note,
// sharp factor (2187/2048)^k, and the value of the 5-rough comma [x/y].
// Multiplication and inversion work factor by factor; the scale-note step
// goes through the 3-limit decomposition and may carry into the sharp and
// octave numbers.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "ji/comma.hpp"
#include "ji/monzo.hpp"

namespace ji {

// Scale note labels indexed along the chain of fifths: 3^m lands on label m.
enum class Label : int { F = -1, C = 0, G = 1, D = 2, A = 3, E = 4, B = 5 };

constexpr std::array<Label, 7> kPitchOrder = {Label::C, Label::D, Label::E, Label::F,
                                              Label::G, Label::A, Label::B};
constexpr std::array<Label, 7> kFifthOrder = {Label::F, Label::C, Label::G, Label::D,
                                              Label::A, Label::E, Label::B};

constexpr char label_char(Label l) {
    switch (l) {
        case Label::F: return 'F';
        case Label::C: return 'C';
        case Label::G: return 'G';
        case Label::D: return 'D';
        case Label::A: return 'A';
        case Label::E: return 'E';
        case Label::B: return 'B';
    }
    return '?';
}

// 2-exponent of the octave-4 scale note: C4 = 1/1, G4 = 3/2 = 3 * 2^-1,
// D4 = 9/8 = 3^2 * 2^-3, and so on along the chain of fifths.
constexpr int two_exponent(Label l) {
    switch (l) {
        case Label::F: return 2;
        case Label::C: return 0;
        case Label::G: return -1;
        case Label::D: return -3;
        case Label::A: return -4;
        case Label::E: return -6;
        case Label::B: return -7;
    }
    return 0;
}

inline void check_five_rough(const Fraction& comma) {
    if (comma.num() % 2 == 0 || comma.num() % 3 == 0 || comma.den() % 2 == 0 ||
        comma.den() % 3 == 0) {
        throw std::domain_error("comma " + comma.str() + " is not 5-rough");
    }
}

// A full frequency notation: label, sharp count (negative = flats), octave
// number centred on 4, and a reduced 5-rough comma fraction. Every value of
// this type is canonical; distinct values denote distinct rationals.
class Notation {
public:
    Notation() : label_(Label::C), sharps_(0), octave_(4) {}

    Notation(Label label, int sharps, int octave, Fraction comma = Fraction())
        : label_(label), sharps_(sharps), octave_(octave), comma_(std::move(comma)) {
        check_five_rough(comma_);
    }

    Label label() const { return label_; }
    int sharps() const { return sharps_; }
    int octave() const { return octave_; }
    const Fraction& comma() const { return comma_; }

    friend bool operator==(const Notation& a, const Notation& b) {
        return a.label_ == b.label_ && a.sharps_ == b.sharps_ && a.octave_ == b.octave_ &&
               a.comma_ == b.comma_;
    }
    friend bool operator!=(const Notation& a, const Notation& b) { return !(a == b); }

private:
    Label label_;
    int sharps_;
    int octave_;
    Fraction comma_;
};

// Notation with the octave dropped: names a pitch up to octave shifts.
class PitchClass {
public:
    PitchClass() : label_(Label::C), sharps_(0) {}

    PitchClass(Label label, int sharps, Fraction comma = Fraction())
        : label_(label), sharps_(sharps), comma_(std::move(comma)) {
        check_five_rough(comma_);
    }

    Label label() const { return label_; }
    int sharps() const { return sharps_; }
    const Fraction& comma() const { return comma_; }

    friend bool operator==(const PitchClass& a, const PitchClass& b) {
        return a.label_ == b.label_ && a.sharps_ == b.sharps_ && a.comma_ == b.comma_;
    }
    friend bool operator!=(const PitchClass& a, const PitchClass& b) { return !(a == b); }

private:
    Label label_;
    int sharps_;
    Fraction comma_;
};

struct PythagoreanParts {
    Label label;
    int sharps;
    int octave;
};

// Unique (label, sharps, octave) for a 3-limit value 2^a * 3^b: the sharp
// count k is the integer putting b - 7k on the label chain F..B, and the
// octave falls out of the leftover 2-exponent.
inline PythagoreanParts pythagorean_decompose(const Monzo& m) {
    for (const Monzo::Entry& e : m.entries()) {
        if (e.first != 2 && e.first != 3) {
            throw std::domain_error("not a 3-limit value: contains prime " +
                                    std::to_string(e.first));
        }
    }
    std::int64_t a = m.exponent(2);
    std::int64_t b = m.exponent(3);
    std::int64_t k = floor_div(b + 1, 7);
    Label label = static_cast<Label>(b - 7 * k);
    std::int64_t z = 4 + a - two_exponent(label) + 11 * k;
    return {label, static_cast<int>(k), static_cast<int>(z)};
}

inline Monzo eval(const Notation& n, const CommaTable& table) {
    std::int64_t e3 = static_cast<std::int64_t>(n.label()) + 7LL * n.sharps();
    std::int64_t e2 = (n.octave() - 4LL) + two_exponent(n.label()) - 11LL * n.sharps();
    return Monzo({{2, e2}, {3, e3}}) * table.comma_value(n.comma());
}

// Canonical notation of any positive rational: the comma is exactly the
// 5-rough part of the value, and what remains after dividing the comma's
// value back out is 3-limit by construction.
inline Notation notate(const Monzo& value, const CommaTable& table) {
    Fraction comma = fraction(split_five_rough(value).second);
    Monzo residual = value * inverse(table.comma_value(comma));
    PythagoreanParts p = pythagorean_decompose(residual);
    return Notation(p.label, p.sharps, p.octave, std::move(comma));
}

inline Notation mul(const Notation& a, const Notation& b, const CommaTable&) {
    Fraction comma = a.comma() * b.comma();
    Monzo note_product({{2, two_exponent(a.label()) + two_exponent(b.label())},
                        {3, static_cast<int>(a.label()) + static_cast<int>(b.label())}});
    PythagoreanParts p = pythagorean_decompose(note_product);
    return Notation(p.label, a.sharps() + b.sharps() + p.sharps,
                    a.octave() + b.octave() - 8 + p.octave, std::move(comma));
}

inline Notation inverse(const Notation& a, const CommaTable&) {
    Monzo note_inverse({{2, -two_exponent(a.label())},
                        {3, -static_cast<int>(a.label())}});
    PythagoreanParts p = pythagorean_decompose(note_inverse);
    return Notation(p.label, -a.sharps() + p.sharps, 4 - a.octave() + p.octave,
                    a.comma().inverse());
}

inline Notation divide(const Notation& a, const Notation& b, const CommaTable& table) {
    return mul(a, inverse(b, table), table);
}

enum class TableOrder { Fifths, Pitch };

struct TableCell {
    Notation notation;
    Fraction fraction;
};

// 7x7 grid of products of the octave-4 scale notes, rows and columns in the
// requested order.
inline std::array<std::array<TableCell, 7>, 7> mul_table(TableOrder order,
                                                         const CommaTable& table) {
    const std::array<Label, 7>& labels = order == TableOrder::Fifths ? kFifthOrder : kPitchOrder;
    std::array<std::array<TableCell, 7>, 7> grid;
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            Notation product = mul(Notation(labels[i], 0, 4), Notation(labels[j], 0, 4), table);
            Fraction value = fraction(eval(product, table));
            grid[i][j] = {std::move(product), std::move(value)};
        }
    }
    return grid;
}

// Inverses of the octave-4 scale notes, in pitch order C..B.
inline std::array<TableCell, 7> inv_table(const CommaTable& table) {
    std::array<TableCell, 7> rows;
    for (std::size_t i = 0; i < 7; ++i) {
        Notation inv = inverse(Notation(kPitchOrder[i], 0, 4), table);
        Fraction value = fraction(eval(inv, table));
        rows[i] = {std::move(inv), std::move(value)};
    }
    return rows;
}

}  // namespace ji
