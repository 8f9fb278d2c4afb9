#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic substrate.
 *
 * Arbitrary-precision integers and eagerly normalized rationals, plus the
 * handful of number-theoretic functions the moment formulas need:
 * binomials, Euler's totient, the Moebius function and Ramanujan sums.
 */

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qade {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

// ---------------------------------------------------------------------------
// Number theory
// ---------------------------------------------------------------------------

/// C(n, t); zero when t > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t t) {
    if (t > n) return 0;
    if (t > n - t) t = n - t;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        r *= n - t + i;
        r /= i;
    }
    return r;
}

namespace detail {

struct PrimePower {
    std::int64_t p;
    int e;
};

inline std::vector<PrimePower> factor(std::int64_t n) {
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline void require_positive(std::int64_t d, const char* what) {
    if (d < 1) throw std::domain_error(std::string(what) + " requires a positive argument");
}

}  // namespace detail

inline std::int64_t euler_phi(std::int64_t d) {
    detail::require_positive(d, "euler_phi");
    std::int64_t r = d;
    for (auto [p, e] : detail::factor(d)) r = r / p * (p - 1);
    return r;
}

inline int mobius(std::int64_t d) {
    detail::require_positive(d, "mobius");
    int r = 1;
    for (auto [p, e] : detail::factor(d)) {
        if (e > 1) return 0;
        r = -r;
    }
    return r;
}

/// Positive divisors of n in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    detail::require_positive(n, "divisors");
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        lo.push_back(i);
        if (i != n / i) hi.push_back(n / i);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/**
 * Sum of zeta^m over the primitive d-th roots of unity zeta.
 *
 * Uses the closed form mu(d/g) phi(d) / phi(d/g) with g = gcd(d, |m|), so the
 * result is an exact integer without touching the roots themselves.
 */
inline std::int64_t ramanujan_sum(std::int64_t d, std::int64_t m) {
    detail::require_positive(d, "ramanujan_sum");
    if (m == 0) return euler_phi(d);
    std::int64_t g = std::gcd(d, m < 0 ? -m : m);
    std::int64_t q = d / g;
    return mobius(q) * (euler_phi(d) / euler_phi(q));
}

// ---------------------------------------------------------------------------
// Moment sequences
// ---------------------------------------------------------------------------

/// Exact moments c_0..c_K. The common currency for comparing objects.
struct MomentSequence {
    std::vector<Rational> values;

    MomentSequence() = default;
    explicit MomentSequence(std::vector<Rational> v) : values(std::move(v)) {}
    static MomentSequence from_integers(const std::vector<BigInt>& v) {
        return MomentSequence(std::vector<Rational>(v.begin(), v.end()));
    }

    std::size_t size() const { return values.size(); }
    /// Highest stored order K (size - 1).
    std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
    const Rational& operator[](std::size_t k) const { return values.at(k); }

    bool all_integers() const {
        for (const auto& v : values)
            if (!is_integer(v)) return false;
        return true;
    }
    bool all_nonnegative() const {
        for (const auto& v : values)
            if (v < 0) return false;
        return true;
    }

    /// Agreement on c_0..c_K. Both sequences must reach order K.
    bool agrees_to(const MomentSequence& other, std::size_t K) const {
        if (size() <= K || other.size() <= K)
            throw std::out_of_range("moment sequence shorter than requested order");
        for (std::size_t k = 0; k <= K; ++k)
            if (values[k] != other.values[k]) return false;
        return true;
    }

    MomentSequence prefix(std::size_t K) const {
        if (size() <= K) throw std::out_of_range("moment sequence shorter than requested order");
        return MomentSequence(std::vector<Rational>(values.begin(), values.begin() + K + 1));
    }

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const MomentSequence& m) {
    os << '[';
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? ", " : "") << to_string(m.values[k]);
    return os << ']';
}

inline MomentSequence moments_of(std::initializer_list<long long> v) {
    std::vector<Rational> out;
    for (auto x : v) out.emplace_back(x);
    return MomentSequence(std::move(out));
}

}  // namespace qade
