#pragma once

// Deterministic random-value generators and independent oracles shared by
// the unit and acceptance suites. The oracles deliberately avoid the library
// code paths they are used to check: rational arithmetic is done directly on
// big integers here.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ji/ji.hpp"

namespace testgen {

using Rng = std::mt19937;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Reduced big-integer rational, multiplied out independently of ji::Fraction.
struct Rational {
    ji::BigInt num = 1;
    ji::BigInt den = 1;

    void reduce() {
        ji::BigInt g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
    }

    friend Rational multiply(const Rational& a, const Rational& b) {
        Rational out{a.num * b.num, a.den * b.den};
        out.reduce();
        return out;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Multiply out a prime-exponent vector by repeated big-integer multiplication.
inline Rational multiply_out(const std::vector<std::pair<std::int64_t, std::int64_t>>& entries) {
    Rational out;
    for (const auto& [p, e] : entries) {
        for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
            (e > 0 ? out.num : out.den) *= p;
        }
    }
    out.reduce();
    return out;
}

inline const std::vector<std::int64_t>& small_primes() {
    static const std::vector<std::int64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    return primes;
}

inline const std::vector<std::int64_t>& comma_primes() {
    static const std::vector<std::int64_t> primes = {5, 7, 11, 13, 17, 19, 23};
    return primes;
}

// Monzo over primes <= 23 with exponents in [-max_exp, max_exp], sparse-ish.
inline ji::Monzo random_monzo(Rng& rng, std::int64_t max_exp = 8) {
    std::vector<ji::Monzo::Entry> entries;
    for (std::int64_t p : small_primes()) {
        if (pick(rng, 0, 2) == 0) {
            entries.emplace_back(p, pick(rng, -max_exp, max_exp));
        }
    }
    return ji::Monzo(std::move(entries));
}

// Reduced 5-rough comma label over primes 5..23, |exponent| <= max_exp.
inline ji::Fraction random_comma_label(Rng& rng, std::int64_t max_exp = 6) {
    ji::BigInt num = 1, den = 1;
    for (std::int64_t p : comma_primes()) {
        if (pick(rng, 0, 3) != 0) continue;
        std::int64_t e = pick(rng, -max_exp, max_exp);
        for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
            (e > 0 ? num : den) *= p;
        }
    }
    return ji::Fraction(std::move(num), std::move(den));
}

inline ji::Notation random_notation(Rng& rng) {
    ji::Label label = ji::kPitchOrder[static_cast<std::size_t>(pick(rng, 0, 6))];
    int sharps = static_cast<int>(pick(rng, -5, 5));
    int octave = static_cast<int>(pick(rng, -16, 16));
    return ji::Notation(label, sharps, octave, random_comma_label(rng));
}

inline ji::Melody random_melody(Rng& rng, std::size_t max_len = 6) {
    ji::Melody m;
    std::size_t len = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(max_len)));
    m.notes.reserve(len);
    for (std::size_t i = 0; i < len; ++i) m.notes.push_back(random_notation(rng));
    return m;
}

}  // namespace testgen
