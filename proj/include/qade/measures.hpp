#pragma once

/**
 * @file measures.hpp
 * @brief Exact circular measures on the unit circle.
 *
 * A circular measure is stored as a rational combination of Galois-orbit
 * bases: u_d, the uniform probability measure on the primitive d-th roots of
 * unity, plus the Lebesgue (uniform) measure on the whole circle. Every term
 * carries a polynomial density in x = (q + q̄)^2, which is how the weight
 * alpha(q) = 2 Im(q)^2 = 2 - x/2 enters without irrational atom weights.
 *
 * Moments c_k = ∫ (q + q̄)^{2k} are computed exactly: for u_d they reduce to
 * Ramanujan sums, for Lebesgue to central binomials, and a density term
 * x^j only shifts the moment index by j.
 */

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace qade {

/// Raised when two independent routes to the same answer disagree.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct MeasureBase {
    bool lebesgue = false;
    std::int64_t d = 1;  // order of the roots; unused for Lebesgue

    static MeasureBase orbit(std::int64_t d) {
        if (d < 1) throw std::domain_error("orbit base needs d >= 1");
        return {false, d};
    }
    static MeasureBase uniform() { return {true, 0}; }

    friend auto operator<=>(const MeasureBase&, const MeasureBase&) = default;
};

/// Polynomial sum p_j x^j in x = (q + q̄)^2; trailing zeros are trimmed.
class DensityPoly {
public:
    DensityPoly() = default;
    explicit DensityPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static DensityPoly constant(const Rational& v) { return DensityPoly({v}); }
    static DensityPoly alpha() { return DensityPoly({Rational(2), Rational(-1, 2)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; zero polynomial reports 0.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }

    DensityPoly& operator+=(const DensityPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensityPoly& operator*=(const Rational& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }
    friend DensityPoly operator*(const DensityPoly& a, const DensityPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return DensityPoly(std::move(r));
    }
    friend bool operator==(const DensityPoly&, const DensityPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Signed measure on the circle in canonical orbit form.
class CircularMeasure {
public:
    using Terms = std::map<MeasureBase, DensityPoly>;

    CircularMeasure() = default;
    CircularMeasure(const MeasureBase& b, const DensityPoly& p) { add(b, p); }

    static CircularMeasure orbit(std::int64_t d, const Rational& w = 1) {
        return {MeasureBase::orbit(d), DensityPoly::constant(w)};
    }
    static CircularMeasure uniform(const Rational& w = 1) {
        return {MeasureBase::uniform(), DensityPoly::constant(w)};
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool density_free() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second.is_constant(); });
    }
    std::size_t max_density_degree() const {
        std::size_t r = 0;
        for (const auto& [b, p] : terms_) r = std::max(r, p.degree());
        return r;
    }

    void add(const MeasureBase& b, const DensityPoly& p) {
        if (p.is_zero()) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, p);
            return;
        }
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }

    CircularMeasure& operator+=(const CircularMeasure& o) {
        for (const auto& [b, p] : o.terms_) add(b, p);
        return *this;
    }
    CircularMeasure& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, p] : terms_) p *= s;
        return *this;
    }
    friend CircularMeasure operator+(CircularMeasure a, const CircularMeasure& b) { return a += b; }
    friend CircularMeasure operator-(CircularMeasure a, CircularMeasure b) { return a += (b *= -1); }
    friend CircularMeasure operator*(const Rational& s, CircularMeasure m) { return m *= s; }
    friend CircularMeasure operator/(CircularMeasure m, const Rational& s) {
        if (s == 0) throw std::domain_error("division of a measure by zero");
        return m *= 1 / s;
    }
    friend bool operator==(const CircularMeasure&, const CircularMeasure&) = default;

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Uniform measure on the 2n-th roots of unity.
inline CircularMeasure mk_dn(std::int64_t n) {
    if (n < 1) throw std::domain_error("d_n needs n >= 1");
    CircularMeasure m;
    for (auto d : divisors(2 * n)) m += CircularMeasure::orbit(d, Rational(euler_phi(d), 2 * n));
    return m;
}

/// Uniform measure on the odd 4n-th roots of unity.
inline CircularMeasure mk_dnp(std::int64_t n) {
    if (n < 1) throw std::domain_error("d_n' needs n >= 1");
    CircularMeasure m;
    for (auto d : divisors(4 * n))
        if ((2 * n) % d != 0) m += CircularMeasure::orbit(d, Rational(euler_phi(d), 2 * n));
    return m;
}

inline CircularMeasure mk_en(std::int64_t n) {
    if (n < 1) throw std::domain_error("e_n needs n >= 1");
    return n % 2 == 0 ? mk_dnp(1) : mk_dnp(2);
}

/// Uniform measure on the solutions of (q + q̄)^2 = s, for integer s in 0..4.
inline CircularMeasure mk_gamma(int s) {
    switch (s) {
        case 0: return CircularMeasure::orbit(4);
        case 1: return (CircularMeasure::orbit(3) + CircularMeasure::orbit(6)) / 2;
        case 2: return CircularMeasure::orbit(8);
        case 3: return CircularMeasure::orbit(12);
        case 4: return (CircularMeasure::orbit(1) + CircularMeasure::orbit(2)) / 2;
        default: throw std::domain_error("gamma_s is only available for integer s in 0..4");
    }
}

inline CircularMeasure mk_uniform() { return CircularMeasure::uniform(); }

inline CircularMeasure apply_alpha(const CircularMeasure& m) {
    CircularMeasure r;
    for (const auto& [b, p] : m.terms()) r.add(b, p * DensityPoly::alpha());
    return r;
}

inline CircularMeasure lin_comb(const std::vector<Rational>& coeffs,
                                const std::vector<CircularMeasure>& ms) {
    if (coeffs.size() != ms.size())
        throw std::invalid_argument("lin_comb: coefficient and measure counts differ");
    CircularMeasure r;
    for (std::size_t i = 0; i < ms.size(); ++i) r += coeffs[i] * ms[i];
    return r;
}

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

/// b_0..b_N for a bare base (trivial density).
inline std::vector<Rational> base_moments(const MeasureBase& b, std::size_t N) {
    std::vector<Rational> out;
    out.reserve(N + 1);
    if (b.lebesgue) {
        for (std::size_t k = 0; k <= N; ++k) out.emplace_back(binomial(2 * k, k));
        return out;
    }
    const std::int64_t phi = euler_phi(b.d);
    for (std::size_t k = 0; k <= N; ++k) {
        BigInt s = 0;
        const auto two_k = static_cast<std::int64_t>(2 * k);
        for (std::int64_t t = 0; t <= two_k; ++t)
            s += binomial(two_k, t) * ramanujan_sum(b.d, two_k - 2 * t);
        out.push_back(make_rational(s, phi));
    }
    return out;
}

inline MomentSequence moments(const CircularMeasure& m, std::size_t K) {
    std::vector<Rational> c(K + 1);
    for (const auto& [b, p] : m.terms()) {
        auto bm = base_moments(b, K + p.degree());
        const auto& coeffs = p.coeffs();
        for (std::size_t k = 0; k <= K; ++k)
            for (std::size_t j = 0; j < coeffs.size(); ++j) c[k] += coeffs[j] * bm[k + j];
    }
    return MomentSequence(std::move(c));
}

inline Rational mass(const CircularMeasure& m) { return moments(m, 0)[0]; }

// ---------------------------------------------------------------------------
// Pushforward classes
// ---------------------------------------------------------------------------

/**
 * q and -q have the same image under (q + q̄)^2, so u_d and u_{2d} (d odd)
 * push forward to the same measure. Classes are keyed by the even member.
 */
inline std::int64_t pushforward_class(std::int64_t d) { return d % 2 == 1 ? 2 * d : d; }

/// Number of distinct values 4cos^2(2 pi a / e), gcd(a, e) = 1, for a class key e.
inline std::size_t class_atom_count(std::int64_t e) {
    std::set<std::int64_t> vals;
    for (std::int64_t a = 0; a < e; ++a) {
        if (std::gcd(a, e) != 1) continue;
        std::int64_t r = (2 * a) % e;
        vals.insert(std::min(r, e - r));
    }
    return vals.size();
}

/// Exact integer value of a class whose atoms are all one integer, if any.
inline std::optional<int> class_integer_value(std::int64_t e) {
    switch (e) {
        case 2: return 4;
        case 4: return 0;
        case 6: return 1;
        case 8: return 2;
        case 12: return 3;
        default: return std::nullopt;
    }
}

namespace detail {

struct ClassForm {
    std::map<std::int64_t, Rational> classes;
    Rational uniform = 0;
    friend bool operator==(const ClassForm&, const ClassForm&) = default;
};

inline ClassForm class_form(const CircularMeasure& m) {
    ClassForm f;
    for (const auto& [b, p] : m.terms()) {
        if (b.lebesgue) {
            f.uniform += p.constant_term();
            continue;
        }
        auto& slot = f.classes[pushforward_class(b.d)];
        slot += p.constant_term();
    }
    std::erase_if(f.classes, [](const auto& kv) { return kv.second == 0; });
    return f;
}

}  // namespace detail

/**
 * Moment equality up to order K.
 *
 * For density-free inputs the symmetrized canonical forms are compared as
 * well. Forms that agree while moments differ, or moments that agree to an
 * order high enough to separate every atom of the difference while the forms
 * differ, raise InternalInconsistency.
 */
inline bool measure_eq(const CircularMeasure& a, const CircularMeasure& b, std::size_t K) {
    const bool by_moments = moments(a, K) == moments(b, K);
    if (!a.density_free() || !b.density_free()) return by_moments;

    auto fa = detail::class_form(a), fb = detail::class_form(b);
    const bool by_form = fa == fb;
    if (by_form && !by_moments)
        throw InternalInconsistency("measure_eq: equal canonical forms with different moments");
    if (!by_form && by_moments) {
        if (fa.uniform != fb.uniform) return by_moments;  // not atomic; finite K is inconclusive
        std::size_t atoms = 0;
        std::set<std::int64_t> keys;
        for (const auto& [e, w] : fa.classes) keys.insert(e);
        for (const auto& [e, w] : fb.classes) keys.insert(e);
        for (auto e : keys) {
            auto ia = fa.classes.find(e), ib = fb.classes.find(e);
            Rational wa = ia == fa.classes.end() ? Rational(0) : ia->second;
            Rational wb = ib == fb.classes.end() ? Rational(0) : ib->second;
            if (wa != wb) atoms += class_atom_count(e);
        }
        if (K + 1 >= atoms)
            throw InternalInconsistency("measure_eq: equal moments with different canonical forms");
    }
    return by_moments;
}

// ---------------------------------------------------------------------------
// Spectral measures
// ---------------------------------------------------------------------------

/// Atom location: either an exact integer s, or the orbit of values 4cos^2(2 pi a / e).
struct SpectralValue {
    bool integral = true;
    std::int64_t value = 0;  // s when integral, class key e otherwise

    std::string str() const {
        return integral ? std::to_string(value) : "orbit(" + std::to_string(value) + ")";
    }
    friend auto operator<=>(const SpectralValue&, const SpectralValue&) = default;
};

struct SpectralMeasure {
    std::map<SpectralValue, Rational> atoms;
    Rational continuous = 0;  // mass carried by the Lebesgue term

    Rational total() const {
        Rational t = continuous;
        for (const auto& [v, w] : atoms) t += w;
        return t;
    }

    /// (location, weight) pairs with orbit atoms spread uniformly over their values.
    std::vector<std::pair<double, double>> numeric_atoms() const {
        std::vector<std::pair<double, double>> out;
        for (const auto& [v, w] : atoms) {
            const double wd = w.convert_to<double>();
            if (v.integral) {
                out.emplace_back(static_cast<double>(v.value), wd);
                continue;
            }
            const std::int64_t e = v.value;
            const double share = wd / static_cast<double>(euler_phi(e));
            for (std::int64_t a = 0; a < e; ++a) {
                if (std::gcd(a, e) != 1) continue;
                double c = 2 * std::cos(2 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(e));
                out.emplace_back(c * c, share);
            }
        }
        return out;
    }
};

inline SpectralMeasure pushforward(const CircularMeasure& m) {
    if (!m.density_free())
        throw std::invalid_argument("pushforward is only defined for density-free measures");
    SpectralMeasure s;
    auto form = detail::class_form(m);
    s.continuous = form.uniform;
    for (const auto& [e, w] : form.classes) {
        auto iv = class_integer_value(e);
        SpectralValue v = iv ? SpectralValue{true, *iv} : SpectralValue{false, e};
        s.atoms[v] += w;
    }
    std::erase_if(s.atoms, [](const auto& kv) { return kv.second == 0; });
    return s;
}

// ---------------------------------------------------------------------------
// Notation
// ---------------------------------------------------------------------------

inline std::string orbit_string(const CircularMeasure& m) {
    if (m.is_zero()) return "0";
    std::string out;
    for (const auto& [b, p] : m.terms()) {
        std::string base = b.lebesgue ? "d" : "u_" + std::to_string(b.d);
        std::string dens;
        const auto& c = p.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            std::string mono = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
            std::string coef = to_string(c[j]);
            if (!dens.empty() && c[j] > 0) dens += "+";
            dens += mono.empty() ? coef : (c[j] == 1 ? mono : (c[j] == -1 ? "-" + mono : coef + mono));
        }
        if (!out.empty()) out += " + ";
        out += p.is_constant() ? dens + "*" + base : "(" + dens + ")*" + base;
    }
    return out;
}

/**
 * A circular measure paired with its rendering in d_n / d_n' / e_n / gamma_s
 * notation, e.g. "(d_1'+d_3)/2". Arithmetic keeps both sides in step.
 */
class MeasureExpr {
public:
    MeasureExpr() : text_("0"), prec_(kAtom) {}

    static MeasureExpr atom(std::string text, CircularMeasure value) {
        return MeasureExpr(std::move(text), kAtom, std::move(value));
    }
    static MeasureExpr d(std::int64_t n) { return atom("d_" + std::to_string(n), mk_dn(n)); }
    static MeasureExpr dp(std::int64_t n) { return atom("d_" + std::to_string(n) + "'", mk_dnp(n)); }
    static MeasureExpr e(std::int64_t n) { return atom("e_" + std::to_string(n), mk_en(n)); }
    static MeasureExpr gamma(int s) { return atom("gamma_" + std::to_string(s), mk_gamma(s)); }
    static MeasureExpr uniform() { return atom("d", mk_uniform()); }
    static MeasureExpr u(std::int64_t d) { return atom("u_" + std::to_string(d), CircularMeasure::orbit(d)); }

    const std::string& text() const { return text_; }
    const CircularMeasure& value() const { return value_; }

    friend MeasureExpr alpha(const MeasureExpr& x) {
        return MeasureExpr("alpha " + x.wrapped(kAtom), kProduct, apply_alpha(x.value_));
    }
    friend MeasureExpr operator+(const MeasureExpr& a, const MeasureExpr& b) {
        return MeasureExpr(a.text_ + "+" + b.text_, kSum, a.value_ + b.value_);
    }
    friend MeasureExpr operator-(const MeasureExpr& a, const MeasureExpr& b) {
        return MeasureExpr(a.text_ + "-" + b.wrapped(kProduct), kSum, a.value_ - b.value_);
    }
    friend MeasureExpr operator-(const MeasureExpr& a) {
        return MeasureExpr("-" + a.wrapped(kProduct), kProduct, Rational(-1) * a.value_);
    }
    friend MeasureExpr operator*(const BigInt& k, const MeasureExpr& x) {
        if (k == 1) return x;
        if (k == -1) return -x;
        return MeasureExpr(k.str() + x.wrapped(kAtom), kProduct, Rational(k) * x.value_);
    }
    friend MeasureExpr operator*(long long k, const MeasureExpr& x) { return BigInt(k) * x; }
    friend MeasureExpr operator/(const MeasureExpr& x, const BigInt& k) {
        if (k == 0) throw std::domain_error("division of a measure by zero");
        return MeasureExpr(x.wrapped(kProduct) + "/" + k.str(), kProduct, x.value_ / Rational(k));
    }
    friend MeasureExpr operator/(const MeasureExpr& x, long long k) { return x / BigInt(k); }
    friend MeasureExpr operator*(const Rational& q, const MeasureExpr& x) {
        MeasureExpr r = numerator(q) * x;
        return denominator(q) == 1 ? r : r / denominator(q);
    }

private:
    enum Prec { kSum = 0, kProduct = 1, kAtom = 2 };

    MeasureExpr(std::string t, int p, CircularMeasure v) : text_(std::move(t)), prec_(p), value_(std::move(v)) {}

    std::string wrapped(int needed) const { return prec_ >= needed ? text_ : "(" + text_ + ")"; }

    std::string text_;
    int prec_;
    CircularMeasure value_;
};

/**
 * Parses measure notation such as "(d_1'+d_3)/2" or "alpha d_4 + (d_3-d_4)/2".
 *
 * Atoms: d_n, d_n', e_n, gamma_s, u_d, and d (Lebesgue); underscores are
 * optional. "alpha" applies the density to the following factor.
 */
class MeasureParser {
public:
    explicit MeasureParser(std::string src) : s_(std::move(src)) {}

    MeasureExpr parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("measure notation '" + s_ + "': " + why + " at offset " +
                                    std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::optional<std::int64_t> number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        if (pos_ - start > 12) fail("number too large");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    MeasureExpr expr() {
        MeasureExpr acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    MeasureExpr term() {
        MeasureExpr acc = factor();
        for (;;) {
            if (!eat('/')) return acc;
            auto n = number();
            if (!n || *n == 0) fail("expected a positive integer divisor");
            acc = acc / *n;
        }
    }

    MeasureExpr factor() {
        if (eat('-')) return -factor();
        if (eat('(')) {
            auto e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (auto k = number()) {
            eat('*');
            return BigInt(*k) * factor();
        }
        std::string w = word();
        if (w.empty()) fail("expected a measure");
        if (w == "alpha") return alpha(factor());
        if (w == "leb" || w == "lebesgue") return MeasureExpr::uniform();
        const bool underscore = eat('_');
        auto idx = number();
        if (underscore && !idx) fail("expected an index after '_'");
        if (w == "d") {
            if (!idx) return MeasureExpr::uniform();
            if (eat('\'')) return MeasureExpr::dp(positive(*idx));
            return MeasureExpr::d(positive(*idx));
        }
        if (w == "dp") return MeasureExpr::dp(positive(require(idx)));
        if (w == "e") return MeasureExpr::e(positive(require(idx)));
        if (w == "u") return MeasureExpr::u(positive(require(idx)));
        if (w == "gamma" || w == "g") {
            auto s = require(idx);
            if (s > 4) fail("gamma_s needs s in 0..4");
            return MeasureExpr::gamma(static_cast<int>(s));
        }
        fail("unknown measure '" + w + "'");
    }
    std::int64_t require(std::optional<std::int64_t> v) {
        if (!v) fail("expected an index");
        return *v;
    }
    std::int64_t positive(std::int64_t v) {
        if (v < 1) fail("index must be positive");
        return v;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline MeasureExpr parse_measure(const std::string& text) { return MeasureParser(text).parse(); }

}  // namespace qade
