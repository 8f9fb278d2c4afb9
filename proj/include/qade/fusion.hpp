#pragma once

/**
 * @file fusion.hpp
 * @brief Fusion semiring of O_{-1}(2), the same as that of O(2).
 *
 * Simple objects are 1, the group-like d, and the two-dimensional V_k (k >= 1):
 *     V_i (x) V_j = V_{i+j} + V_{|i-j|}   (i != j)
 *     V_i (x) V_i = 1 + d + V_{2i}
 *     d (x) d = 1,   d (x) V_i = V_i (x) d = V_i
 */

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace qade {

struct FusionLabel {
    enum class Kind { one, d, v };
    Kind kind = Kind::one;
    int k = 0;  // only for V_k

    static FusionLabel one() { return {Kind::one, 0}; }
    static FusionLabel det() { return {Kind::d, 0}; }
    static FusionLabel v(int k) {
        if (k < 1) throw std::invalid_argument("V_k needs k >= 1");
        return {Kind::v, k};
    }

    int dimension() const { return kind == Kind::v ? 2 : 1; }
    std::string str() const {
        switch (kind) {
            case Kind::one: return "1";
            case Kind::d: return "d";
            case Kind::v: return "V_" + std::to_string(k);
        }
        return "?";
    }
    friend auto operator<=>(const FusionLabel&, const FusionLabel&) = default;
};

class FusionVector {
public:
    FusionVector() = default;
    FusionVector(std::initializer_list<FusionLabel> labels) {
        for (const auto& l : labels) add(l, 1);
    }

    void add(const FusionLabel& l, const BigInt& mult) {
        if (mult == 0) return;
        auto& slot = m_[l];
        slot += mult;
        if (slot == 0) m_.erase(l);
    }
    BigInt multiplicity(const FusionLabel& l) const {
        auto it = m_.find(l);
        return it == m_.end() ? BigInt(0) : it->second;
    }
    const std::map<FusionLabel, BigInt>& terms() const { return m_; }

    BigInt dimension() const {
        BigInt d = 0;
        for (const auto& [l, m] : m_) d += m * l.dimension();
        return d;
    }
    std::string str() const {
        if (m_.empty()) return "0";
        std::string s;
        for (const auto& [l, m] : m_) {
            if (!s.empty()) s += " + ";
            s += (m == 1 ? "" : m.str() + "*") + l.str();
        }
        return s;
    }

    friend bool operator==(const FusionVector&, const FusionVector&) = default;

private:
    std::map<FusionLabel, BigInt> m_;
};

inline FusionVector tensor(const FusionLabel& a, const FusionLabel& b) {
    using K = FusionLabel::Kind;
    if (a.kind == K::one) return {b};
    if (b.kind == K::one) return {a};
    if (a.kind == K::d && b.kind == K::d) return {FusionLabel::one()};
    if (a.kind == K::d) return {b};
    if (b.kind == K::d) return {a};
    if (a.k == b.k) return {FusionLabel::one(), FusionLabel::det(), FusionLabel::v(2 * a.k)};
    return {FusionLabel::v(a.k + b.k), FusionLabel::v(a.k > b.k ? a.k - b.k : b.k - a.k)};
}

/// Bilinear extension of the label rules.
inline FusionVector tensor(const FusionVector& a, const FusionVector& b) {
    FusionVector r;
    for (const auto& [la, ma] : a.terms())
        for (const auto& [lb, mb] : b.terms()) {
            const auto prod = tensor(la, lb);
            for (const auto& [l, m] : prod.terms()) r.add(l, ma * mb * m);
        }
    return r;
}

/// Multiplicity of 1 in u^{(x) k}.
inline BigInt trivial_multiplicity(const FusionVector& u, std::size_t k) {
    FusionVector w{FusionLabel::one()};
    for (std::size_t i = 0; i < k; ++i) w = tensor(w, u);
    return w.multiplicity(FusionLabel::one());
}

inline MomentSequence fusion_moments(const FusionVector& u, std::size_t K) {
    std::vector<Rational> c;
    FusionVector w{FusionLabel::one()};
    for (std::size_t k = 0; k <= K; ++k) {
        if (k > 0) w = tensor(w, u);
        c.emplace_back(w.multiplicity(FusionLabel::one()));
    }
    return MomentSequence(std::move(c));
}

/// Four-dimensional fundamental object of O_{-1}(2) inside Q_4.
inline FusionVector o_minus1_2_fundamental() {
    return {FusionLabel::one(), FusionLabel::det(), FusionLabel::v(1)};
}

// ---------------------------------------------------------------------------
// Finite quotients: dimension and block metadata
// ---------------------------------------------------------------------------

struct QuotientRecord {
    std::string algebra;             // "A(3,1)", "C(S_4^tau)", ...
    std::string quantum_group;       // "D_6^tau", ...
    std::int64_t dimension = 0;
    /// (block size, count): the algebra is a sum of count copies of M_n(C), with block size n^2.
    std::vector<std::pair<std::int64_t, std::int64_t>> blocks;

    std::int64_t block_total() const {
        std::int64_t t = 0;
        for (auto [size, count] : blocks) t += size * count;
        return t;
    }
    /// Empty block list means only the dimension is recorded.
    bool consistent() const { return blocks.empty() || block_total() == dimension; }
};

/// dim A(k, ±1) = 4k for k = 2..kmax, plus the algebra structures of C(S_4^tau) and C(A_5^tau).
inline std::vector<QuotientRecord> quotient_metadata(int kmax = 8) {
    std::vector<QuotientRecord> out;
    for (int k = 2; k <= kmax; ++k) {
        std::string ks = std::to_string(k);
        out.push_back({"A(" + ks + ",1)", k == 2 ? "D_4" : "D_" + std::to_string(2 * k) + "^tau", 4 * k, {}});
        out.push_back({"A(" + ks + ",-1)", "DC_" + ks + "^tau", 4 * k, {}});
    }
    out.push_back({"C(S_4^tau)", "S_4^tau", 24, {{1, 8}, {16, 1}}});
    out.push_back({"C(A_5^tau)", "A_5^tau", 60, {{1, 12}, {16, 3}}});
    return out;
}

}  // namespace qade
