#pragma once

// Exact positive rationals stored as prime-exponent vectors, plus the
// size/distance measures (complexity, log-complexity, absolute octaves,
// comma measure) used to rank near-unison fractions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ji {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::int64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    std::int64_t r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// Positive rational in lowest terms. Denominator and numerator are both
// strictly positive; there is no sign to carry.
class Fraction {
public:
    Fraction() : num_(1), den_(1) {}

    Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_ <= 0 || den_ <= 0) {
            throw std::domain_error("fraction requires positive numerator and denominator");
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Fraction inverse() const { return Fraction(den_, num_); }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

private:
    BigInt num_;
    BigInt den_;
};

// Trial division. Factors are returned sorted ascending with positive
// exponents; n must be >= 1. No upper bound on factor size, so very large
// semiprimes will take as long as they take.
inline std::vector<std::pair<std::int64_t, std::int64_t>> factorize(BigInt n) {
    if (n < 1) throw std::domain_error("factorize requires a positive integer");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    auto divide_out = [&](const BigInt& p) {
        std::int64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p.convert_to<std::int64_t>(), e);
    };
    divide_out(2);
    divide_out(3);
    for (BigInt d = 5; d * d <= n; d += 6) {
        divide_out(d);
        divide_out(d + 2);
    }
    if (n > 1) {
        if (n > std::numeric_limits<std::int64_t>::max()) {
            throw std::domain_error("prime factor exceeds supported range");
        }
        out.emplace_back(n.convert_to<std::int64_t>(), 1);
    }
    return out;
}

// Prime-exponent vector for a positive rational: the empty vector is 1/1.
// Entries are kept sorted by prime with all zero exponents pruned, so
// structural equality is value equality and iteration order is stable.
class Monzo {
public:
    using Entry = std::pair<std::int64_t, std::int64_t>;  // (prime, exponent)

    static constexpr int kDefaultDigitGuard = 64;

    Monzo() = default;

    explicit Monzo(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
        entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                      [](const Entry& e) { return e.second == 0; }),
                       entries_.end());
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!is_prime(entries_[i].first)) {
                throw std::domain_error("monzo key " + std::to_string(entries_[i].first) +
                                        " is not prime");
            }
            if (i > 0 && entries_[i].first == entries_[i - 1].first) {
                throw std::domain_error("duplicate monzo key " +
                                        std::to_string(entries_[i].first));
            }
        }
    }

    // Front door for textual/user input; factors num/den by trial division.
    // digit_guard > 0 rejects operands with more decimal digits than that,
    // digit_guard == 0 disables the check.
    static Monzo from_fraction(const BigInt& num, const BigInt& den,
                               int digit_guard = kDefaultDigitGuard) {
        if (num < 1 || den < 1) {
            throw std::domain_error("fraction parts must be positive integers");
        }
        if (digit_guard > 0) {
            if (num.str().size() > static_cast<std::size_t>(digit_guard) ||
                den.str().size() > static_cast<std::size_t>(digit_guard)) {
                throw std::domain_error("input exceeds " + std::to_string(digit_guard) +
                                        " decimal digits");
            }
        }
        std::vector<Entry> den_entries = factorize(den);
        for (Entry& e : den_entries) e.second = -e.second;
        return Monzo(factorize(num)) * Monzo(std::move(den_entries));
    }

    static Monzo from_fraction(const Fraction& f, int digit_guard = kDefaultDigitGuard) {
        return from_fraction(f.num(), f.den(), digit_guard);
    }

    const std::vector<Entry>& entries() const { return entries_; }

    std::int64_t exponent(std::int64_t prime) const {
        for (const Entry& e : entries_) {
            if (e.first == prime) return e.second;
        }
        return 0;
    }

    bool is_one() const { return entries_.empty(); }

    friend bool operator==(const Monzo& a, const Monzo& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Monzo& a, const Monzo& b) { return !(a == b); }

    friend Monzo operator*(const Monzo& a, const Monzo& b) {
        Monzo out;
        out.entries_.reserve(a.entries_.size() + b.entries_.size());
        std::size_t i = 0, j = 0;
        while (i < a.entries_.size() || j < b.entries_.size()) {
            if (j == b.entries_.size() ||
                (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
                out.entries_.push_back(a.entries_[i++]);
            } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
                out.entries_.push_back(b.entries_[j++]);
            } else {
                std::int64_t e = a.entries_[i].second + b.entries_[j].second;
                if (e != 0) out.entries_.emplace_back(a.entries_[i].first, e);
                ++i;
                ++j;
            }
        }
        return out;
    }

private:
    std::vector<Entry> entries_;
};

inline Monzo inverse(const Monzo& m) {
    std::vector<Monzo::Entry> entries = m.entries();
    for (Monzo::Entry& e : entries) e.second = -e.second;
    return Monzo(std::move(entries));
}

inline Monzo pow(const Monzo& m, std::int64_t n) {
    std::vector<Monzo::Entry> entries = m.entries();
    for (Monzo::Entry& e : entries) e.second *= n;
    return Monzo(std::move(entries));
}

inline Fraction fraction(const Monzo& m) {
    BigInt num = 1, den = 1;
    for (const Monzo::Entry& e : m.entries()) {
        if (e.second > 0) {
            num *= boost::multiprecision::pow(BigInt(e.first),
                                              static_cast<unsigned>(e.second));
        } else {
            den *= boost::multiprecision::pow(BigInt(e.first),
                                              static_cast<unsigned>(-e.second));
        }
    }
    return Fraction(std::move(num), std::move(den));
}

// Split into the 3-limit part (primes 2 and 3) and the 5-rough part
// (primes 5 and above). The two multiply back to the input.
inline std::pair<Monzo, Monzo> split_five_rough(const Monzo& m) {
    std::vector<Monzo::Entry> low, high;
    for (const Monzo::Entry& e : m.entries()) {
        (e.first < 5 ? low : high).push_back(e);
    }
    return {Monzo(std::move(low)), Monzo(std::move(high))};
}

inline double log2_value(const Monzo& m) {
    double sum = 0.0;
    for (const Monzo::Entry& e : m.entries()) {
        sum += static_cast<double>(e.second) * std::log2(static_cast<double>(e.first));
    }
    return sum;
}

inline double cents(const Monzo& m) { return 1200.0 * log2_value(m); }

struct Measures {
    BigInt complexity;       // numerator times denominator of the reduced fraction
    double log_complexity;   // log2 of complexity
    double abs_octaves;      // |log2 value|
    double comma_measure;    // abs_octaves * log_complexity
};

inline Measures measures(const Monzo& m) {
    Measures out;
    out.complexity = 1;
    out.log_complexity = 0.0;
    for (const Monzo::Entry& e : m.entries()) {
        std::int64_t mag = e.second < 0 ? -e.second : e.second;
        out.complexity *= boost::multiprecision::pow(BigInt(e.first),
                                                     static_cast<unsigned>(mag));
        out.log_complexity += static_cast<double>(mag) *
                              std::log2(static_cast<double>(e.first));
    }
    out.abs_octaves = std::abs(log2_value(m));
    out.comma_measure = out.abs_octaves * out.log_complexity;
    return out;
}

}  // namespace ji
