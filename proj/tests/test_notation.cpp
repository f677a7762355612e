#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "golden_tables.hpp"
#include "ji/ji.hpp"

using ji::BigInt;
using ji::CommaTable;
using ji::Fraction;
using ji::Label;
using ji::Monzo;
using ji::Notation;

namespace {

Monzo value(std::int64_t num, std::int64_t den) {
    return Monzo::from_fraction(BigInt(num), BigInt(den));
}

Fraction frac(std::int64_t num, std::int64_t den) { return Fraction(BigInt(num), BigInt(den)); }

Monzo mz(std::vector<Monzo::Entry> entries) { return Monzo(std::move(entries)); }

const CommaTable& table() {
    static const CommaTable t;
    return t;
}

Notation N(const char* text) { return ji::parse_notation(text); }

using Cell = testgen::GoldenCell;
using testgen::kFifthsGrid;
using testgen::kInverseRows;
using testgen::kPitchGrid;

}  // namespace

TEST_CASE("eval of the modified diatonic scale", "[notation]") {
    CHECK(eval(N("E4[5]"), table()) == value(5, 4));
    const std::pair<const char*, std::pair<std::int64_t, std::int64_t>> scale[] = {
        {"C4", {1, 1}}, {"D4", {9, 8}},  {"E'4", {5, 4}},    {"F4", {4, 3}},
        {"G4", {3, 2}}, {"A'4", {5, 3}}, {"Bb4[7]", {7, 4}},
    };
    for (const auto& [text, f] : scale) {
        CHECK(eval(N(text), table()) == value(f.first, f.second));
    }
}

TEST_CASE("eval golden values", "[notation]") {
    CHECK(eval(Notation(), table()) == Monzo());
    CHECK(eval(N("Fbb3[7/25]"), table()) == value(3584, 6075));
    CHECK(eval(N("Ab1[1/5]"), table()) == value(1, 5));
    CHECK_THROWS_AS(Notation(Label::C, 0, 4, frac(10, 1)), std::domain_error);
}

TEST_CASE("pythagorean decomposition", "[notation]") {
    ji::PythagoreanParts p = ji::pythagorean_decompose(value(8, 9));
    CHECK(p.label == Label::B);
    CHECK(p.sharps == -1);
    CHECK(p.octave == 3);

    p = ji::pythagorean_decompose(Monzo());
    CHECK(p.label == Label::C);
    CHECK(p.sharps == 0);
    CHECK(p.octave == 4);

    p = ji::pythagorean_decompose(value(6561, 2048));
    CHECK(p.label == Label::G);
    CHECK(p.sharps == 1);
    CHECK(p.octave == 5);

    CHECK_THROWS_AS(ji::pythagorean_decompose(value(5, 4)), std::domain_error);
}

TEST_CASE("notate golden values", "[notation]") {
    CHECK(notate(value(27, 2), table()) == N("A7"));
    CHECK(notate(value(5, 1), table()) == N("E6[5]"));
    CHECK(notate(value(13, 20), table()) == N("F3[13/5]"));
}

TEST_CASE("multiplication facts for the fifth transposition", "[notation]") {
    CHECK(mul(N("C4"), N("G4"), table()) == N("G4"));
    CHECK(mul(N("D4"), N("G4"), table()) == N("A4"));
    CHECK(mul(N("E'4"), N("G4"), table()) == N("B'4"));
    CHECK(mul(N("F4"), N("G4"), table()) == N("C5"));
    CHECK(mul(N("G4"), N("G4"), table()) == N("D5"));
    CHECK(mul(N("A'4"), N("G4"), table()) == N("E'5"));
    CHECK(mul(N("Bb4[7]"), N("G4"), table()) == N("F5[7]"));
}

TEST_CASE("compound multiplication golden cases", "[notation]") {
    CHECK(mul(N("F#5[5]"), N("Eb6[1/5]"), table()) == N("A7"));
    CHECK(eval(N("F#5[5]"), table()) == value(45, 16));
    CHECK(eval(N("Eb6[1/5]"), table()) == value(24, 5));
    CHECK(eval(N("A7"), table()) == value(27, 2));

    Notation left = N("A###(-5)[77/13]");
    Notation right = N("Bbbbbb9[23/55]");
    CHECK(eval(left, table()) == mz({{2, -58}, {3, 30}, {7, 1}, {11, 1}, {13, -1}}));
    CHECK(eval(right, table()) == mz({{2, 59}, {3, -33}, {5, -1}, {11, -1}, {23, 1}}));
    Notation product = mul(left, right, table());
    CHECK(product == N("Gb1[161/65]"));
    CHECK(eval(product, table()) == mz({{2, 1}, {3, -3}, {5, -1}, {7, 1}, {13, -1}, {23, 1}}));

    Notation anything = N("Db.7[13/19]");
    CHECK(mul(anything, Notation(), table()) == anything);
}

TEST_CASE("inversion golden cases", "[notation]") {
    CHECK(inverse(N("E6[5]"), table()) == N("Ab1[1/5]"));
    CHECK(eval(N("E6[5]"), table()) == value(5, 1));

    Notation inv2 = inverse(N("Fbb3[7/25]"), table());
    CHECK(inv2 == N("G##4[25/7]"));
    CHECK(eval(inv2, table()) == value(6075, 3584));
    CHECK_THAT(cents(eval(inv2, table())), Catch::Matchers::WithinAbs(913.58, 0.01));
    CHECK_THAT(cents(eval(N("Fbb3[7/25]"), table())), Catch::Matchers::WithinAbs(-913.58, 0.01));

    CHECK(inverse(Notation(), table()) == Notation());
    CHECK(divide(N("G4"), N("G4"), table()) == Notation());

    // opposite pairs around the identity
    CHECK(inverse(N("F4"), table()) == N("G3"));
    CHECK(inverse(N("G4"), table()) == N("F3"));
    CHECK(inverse(N("D4"), table()) == N("Bb3"));
}

TEST_CASE("scale-note product grid in fifth order", "[notation][table]") {
    auto grid = ji::mul_table(ji::TableOrder::Fifths, table());
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            const Cell& want = kFifthsGrid[i][j];
            INFO("row " << i << " col " << j << " expected " << want.notation);
            CHECK(grid[i][j].notation == N(want.notation));
            CHECK(grid[i][j].fraction == frac(want.num, want.den));
        }
    }
}

TEST_CASE("scale-note product grid in pitch order", "[notation][table]") {
    auto grid = ji::mul_table(ji::TableOrder::Pitch, table());
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            const Cell& want = kPitchGrid[i][j];
            INFO("row " << i << " col " << j << " expected " << want.notation);
            CHECK(grid[i][j].notation == N(want.notation));
            CHECK(grid[i][j].fraction == frac(want.num, want.den));
        }
    }
}

TEST_CASE("scale-note inversion rows", "[notation][table]") {
    auto rows = ji::inv_table(table());
    for (std::size_t i = 0; i < 7; ++i) {
        const Cell& want = kInverseRows[i];
        INFO("row " << i << " expected " << want.notation);
        CHECK(rows[i].notation == N(want.notation));
        CHECK(rows[i].fraction == frac(want.num, want.den));
    }
}

TEST_CASE("shortcut identities", "[notation]") {
    CHECK(mul(N("D4"), N("E4"), table()) == N("F#4"));
    CHECK(mul(N("Db4"), N("E4"), table()) == N("F4"));
    CHECK(mul(N("D4"), N("Eb4"), table()) == N("F4"));

    CHECK(mul(N("Bb3"), N("E4"), table()) == N("D4"));
    CHECK(mul(N("Bb.3"), N("E4"), table()) == N("D.4"));
    CHECK(mul(N("Bb.3"), N("E5"), table()) == N("D.5"));
    CHECK(mul(N("Bb3[1/5]"), N("E5[7]"), table()) == N("D5[7/5]"));
}

TEST_CASE("component path agrees with the value path", "[notation][property]") {
    testgen::Rng rng(0x5eed1001);
    for (int i = 0; i < 1000; ++i) {
        Notation a = testgen::random_notation(rng);
        Notation b = testgen::random_notation(rng);
        Notation componentwise = mul(a, b, table());
        Notation via_values = notate(eval(a, table()) * eval(b, table()), table());
        REQUIRE(componentwise == via_values);
        REQUIRE(eval(componentwise, table()) == eval(a, table()) * eval(b, table()));
    }
}

TEST_CASE("notate and eval are mutually inverse", "[notation][property]") {
    testgen::Rng rng(0x5eed1002);
    for (int i = 0; i < 1000; ++i) {
        Notation n = testgen::random_notation(rng);
        REQUIRE(notate(eval(n, table()), table()) == n);
        Monzo m = testgen::random_monzo(rng);
        REQUIRE(eval(notate(m, table()), table()) == m);
    }
}

TEST_CASE("notations form a commutative group", "[notation][property]") {
    testgen::Rng rng(0x5eed1003);
    for (int i = 0; i < 1000; ++i) {
        Notation a = testgen::random_notation(rng);
        Notation b = testgen::random_notation(rng);
        Notation c = testgen::random_notation(rng);
        REQUIRE(mul(mul(a, b, table()), c, table()) == mul(a, mul(b, c, table()), table()));
        REQUIRE(mul(a, b, table()) == mul(b, a, table()));
        REQUIRE(mul(a, Notation(), table()) == a);
        REQUIRE(mul(a, inverse(a, table()), table()) == Notation());
        REQUIRE(divide(a, b, table()) == mul(a, inverse(b, table()), table()));
    }
}

TEST_CASE("comma labels are conserved through multiplication", "[notation][property]") {
    testgen::Rng rng(0x5eed1004);
    for (int i = 0; i < 1000; ++i) {
        Notation a = testgen::random_notation(rng);
        Notation b = testgen::random_notation(rng);
        REQUIRE(mul(a, b, table()).comma() == a.comma() * b.comma());
    }
}
