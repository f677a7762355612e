#pragma once

// Prime commas: every prime p >= 5 gets a near-unison fraction of the form
// 2^a * 3^b * p that encodes the microtonal shift for that prime. Candidates
// are recentred into [1/sqrt2, sqrt2] and ranked by the comma measure
// CM = AO * LCY; rational commas [x/y] multiply prime commas with
// multiplicity over the factorisation of x/y.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ji/monzo.hpp"

namespace ji {

namespace detail {

// A comma must contain its prime exactly once, carry only 2s and 3s
// otherwise, and stay smaller than a semitone.
inline void check_comma_entry(std::int64_t p, const Monzo& m) {
    for (const Monzo::Entry& e : m.entries()) {
        if (e.first == p) {
            if (e.second != 1) throw std::logic_error("comma must contain its prime once");
        } else if (e.first != 2 && e.first != 3) {
            throw std::logic_error("comma may only mix its prime with 2 and 3");
        }
    }
    if (m.exponent(p) != 1) throw std::logic_error("comma must contain its prime once");
    if (std::abs(cents(m)) >= 100.0) {
        throw std::logic_error("selected comma is not smaller than a semitone");
    }
}

}  // namespace detail

// Search 2^a * 3^b * p over b in [-bound, bound], with a the unique integer
// placing the value within half an octave of 1/1. Candidates at a semitone
// or larger are not commas and are skipped; the survivor with minimal CM
// wins (ties: smaller complexity, then smaller |b|).
//
// The default half-width is 7. Anything wider admits freak near-unison
// fractions with huge complexity (at width 8 the schisma 32805/32768
// displaces 80/81 as the comma for 5), while width 7 is still wide enough
// for 2176/2187, the published comma for 17.
inline constexpr int kDefaultCommaSearchBound = 7;

inline Monzo select_prime_comma(std::int64_t p, int bound = kDefaultCommaSearchBound) {
    if (p < 5 || !is_prime(p)) {
        throw std::domain_error("prime comma requires a prime >= 5, got " + std::to_string(p));
    }
    if (bound < 1) throw std::domain_error("search bound must be >= 1");

    const double log2_3 = std::log2(3.0);
    const double log2_p = std::log2(static_cast<double>(p));

    bool have_best = false;
    Monzo best;
    double best_cm = 0.0;
    BigInt best_cy;
    std::int64_t best_abs_b = 0;

    for (std::int64_t b = -bound; b <= bound; ++b) {
        std::int64_t a = -std::llround(b * log2_3 + log2_p);
        // Recentre exactly: need 1/2 <= value^2 <= 2, and equality cannot
        // occur for a rational, so the floating-point estimate only ever
        // needs a one-step correction.
        Fraction f = fraction(Monzo({{2, a}, {3, b}, {p, 1}}));
        BigInt num = f.num(), den = f.den();
        while (num * num > (den * den) << 1) {
            den <<= 1;
            --a;
        }
        while ((num * num) << 1 < den * den) {
            num <<= 1;
            ++a;
        }
        Monzo candidate({{2, a}, {3, b}, {p, 1}});
        Measures ms = measures(candidate);
        if (ms.abs_octaves >= 100.0 / 1200.0) continue;
        std::int64_t abs_b = b < 0 ? -b : b;
        bool better = !have_best || ms.comma_measure < best_cm ||
                      (ms.comma_measure == best_cm &&
                       (ms.complexity < best_cy ||
                        (ms.complexity == best_cy && abs_b < best_abs_b)));
        if (better) {
            have_best = true;
            best = candidate;
            best_cm = ms.comma_measure;
            best_cy = ms.complexity;
            best_abs_b = abs_b;
        }
    }
    if (!have_best) {
        throw std::domain_error("no comma candidate within a semitone for prime " +
                                std::to_string(p));
    }
    detail::check_comma_entry(p, best);
    return best;
}

// Prime -> comma map, pre-seeded with the commas for 5, 7, 11, 13, 17, 19
// and 23. Construction cross-checks the seeds against the search so the two
// can never drift apart; lookups for other primes run the search once and
// memoize under a lock.
class CommaTable {
public:
    explicit CommaTable(int search_bound = kDefaultCommaSearchBound)
        : search_bound_(search_bound) {
        static const std::pair<std::int64_t, std::pair<int, int>> kSeeds[] = {
            {5, {80, 81}},     {7, {63, 64}},     {11, {33, 32}},  {13, {26, 27}},
            {17, {2176, 2187}}, {19, {513, 512}}, {23, {736, 729}},
        };
        for (const auto& [p, frac] : kSeeds) {
            Monzo seeded = Monzo::from_fraction(BigInt(frac.first), BigInt(frac.second));
            detail::check_comma_entry(p, seeded);
            if (select_prime_comma(p, search_bound_) != seeded) {
                throw std::logic_error("comma search diverges from seed for prime " +
                                       std::to_string(p));
            }
            entries_.emplace(p, std::move(seeded));
        }
    }

    int search_bound() const { return search_bound_; }

    Monzo prime_comma(std::int64_t p) const {
        if (p < 5 || !is_prime(p)) {
            throw std::domain_error("prime comma requires a prime >= 5, got " +
                                    std::to_string(p));
        }
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(p);
        if (it == entries_.end()) {
            it = entries_.emplace(p, select_prime_comma(p, search_bound_)).first;
        }
        return it->second;
    }

    // Value of the rational comma [x/y]: the product of prime commas over
    // the factorisation of x/y with multiplicity. x/y must be 5-rough.
    Monzo comma_value(const Fraction& label) const {
        if (label.num() % 2 == 0 || label.num() % 3 == 0 || label.den() % 2 == 0 ||
            label.den() % 3 == 0) {
            throw std::domain_error("comma " + label.str() + " is not 5-rough");
        }
        Monzo out;
        for (const auto& [p, e] : factorize(label.num())) {
            out = out * pow(prime_comma(p), e);
        }
        for (const auto& [p, e] : factorize(label.den())) {
            out = out * pow(prime_comma(p), -e);
        }
        return out;
    }

    Monzo comma_value(const BigInt& x, const BigInt& y) const {
        return comma_value(Fraction(x, y));
    }

    // Snapshot of everything computed so far, sorted by prime.
    std::map<std::int64_t, Monzo> entries() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return entries_;
    }

private:
    int search_bound_;
    mutable std::mutex mutex_;
    mutable std::map<std::int64_t, Monzo> entries_;
};

// One row of the "what if the comma map covered 3" comparison: the
// candidate 3 * 2^a with its four measures.
struct ThreeCandidateRow {
    Fraction fraction;
    double decimal;
    BigInt complexity;
    double log_complexity;
    double abs_octaves;
    double comma_measure;
    bool minimal;
};

// Candidates 3 * 2^a for a in [a_min, a_max], ascending by value; exactly
// one row is flagged as the CM minimiser. The default window spans 3/16
// through 24/1.
inline std::vector<ThreeCandidateRow> analyze_three_candidates(int a_min = -4, int a_max = 3) {
    if (a_min > a_max) throw std::domain_error("empty candidate range");
    std::vector<ThreeCandidateRow> rows;
    std::size_t min_index = 0;
    for (int a = a_min; a <= a_max; ++a) {
        Monzo candidate({{2, a}, {3, 1}});
        Measures ms = measures(candidate);
        Fraction f = fraction(candidate);
        double decimal = f.num().convert_to<double>() / f.den().convert_to<double>();
        rows.push_back({std::move(f), decimal, ms.complexity, ms.log_complexity,
                        ms.abs_octaves, ms.comma_measure, false});
        if (rows.back().comma_measure < rows[min_index].comma_measure) {
            min_index = rows.size() - 1;
        }
    }
    rows[min_index].minimal = true;
    return rows;
}

}  // namespace ji
