#pragma once

/**
 * @file duals.hpp
 * @brief Invariants of the dihedral group duals D̂_n and D̂_∞.
 *
 * For a group dual with diagonal fundamental representation diag(g_1..g_4),
 * c_k is the number of words g_{i_1}...g_{i_k} equal to the identity. With
 * the multiset (1, g, 1, h) this is a walk count on the Cayley graph of D_n,
 * computed here with the group elements themselves as transfer states.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace qade {

/// r^rotation s^flip in D_n (or D_∞), with s r s = r^{-1}.
struct DihedralElement {
    std::int64_t rotation = 0;
    bool flip = false;

    static DihedralElement one() { return {0, false}; }
    static DihedralElement g() { return {0, true}; }
    static DihedralElement h() { return {1, true}; }

    /// Reduced alternating word in g, h ("1" for the identity).
    std::string word() const {
        // with g = s and h = r s: r = h g and r^{-1} = g h
        std::string w;
        const std::int64_t k = rotation < 0 ? -rotation : rotation;
        const char* pair = rotation >= 0 ? "hg" : "gh";
        for (std::int64_t i = 0; i < k; ++i) w += pair;
        if (flip) {
            // r^k s with s = g: appending g cancels a trailing g
            if (!w.empty() && w.back() == 'g')
                w.pop_back();
            else
                w += 'g';
        }
        return w.empty() ? "1" : w;
    }

    friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

/// Product in D_n; order == nullopt means D_∞.
inline DihedralElement multiply(const DihedralElement& a, const DihedralElement& b,
                                std::optional<std::int64_t> order) {
    std::int64_t r = a.rotation + (a.flip ? -b.rotation : b.rotation);
    if (order) {
        r %= *order;
        if (r < 0) r += *order;
    }
    return {r, a.flip != b.flip};
}

/**
 * Counts of length-k words over `letters` that multiply to the identity,
 * k = 0..K. Finite n uses the 2n group elements as states; n = ∞ keeps the
 * reachable ball, which after k steps is exact.
 */
inline MomentSequence dual_moments_multiset(std::optional<std::int64_t> n,
                                            const std::vector<DihedralElement>& letters, std::size_t K) {
    if (n && *n < 1) throw std::invalid_argument("dihedral order must be positive");
    std::map<DihedralElement, BigInt> state{{DihedralElement::one(), 1}};
    std::vector<Rational> c{Rational(1)};
    for (std::size_t k = 1; k <= K; ++k) {
        std::map<DihedralElement, BigInt> next;
        for (const auto& [x, w] : state)
            for (const auto& l : letters) next[multiply(x, l, n)] += w;
        state = std::move(next);
        auto it = state.find(DihedralElement::one());
        c.emplace_back(it == state.end() ? BigInt(0) : it->second);
    }
    return MomentSequence(std::move(c));
}

inline std::vector<DihedralElement> standard_letters() {
    return {DihedralElement::one(), DihedralElement::g(), DihedralElement::one(), DihedralElement::h()};
}

/// c_0..c_K for D̂_n (n >= 3) or D̂_∞ (nullopt) with the multiset (1, g, 1, h).
inline MomentSequence dual_moments(std::optional<std::int64_t> n, std::size_t K) {
    if (n && *n < 3) throw std::invalid_argument("dual of D_n is considered for n >= 3");
    return dual_moments_multiset(n, standard_letters(), K);
}

}  // namespace qade
