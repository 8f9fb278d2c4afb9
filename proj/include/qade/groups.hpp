#pragma once

/**
 * @file groups.hpp
 * @brief Finite permutation groups and their fixed-point invariants.
 *
 * For G acting on n points, m_s counts the elements with exactly s fixed
 * points. The trivial-representation multiplicities are then
 *     c_k = (1/|G|) sum_s m_s s^k,
 * and for n = 4 the circular measure is (1/|G|) sum_s m_s gamma_s.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "measures.hpp"

namespace qade {

inline constexpr int kMaxDegree = 8;

/// Bijection of {0..n-1}; points are 0-indexed, cycle notation is 1-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("permutation images are not a bijection");
            seen[v] = true;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    /// Parses "(1 2)(3 4)"; "()" or "" is the identity.
    static Permutation from_cycles(const std::string& text, int degree) {
        if (degree < 1 || degree > kMaxDegree)
            throw std::invalid_argument("degree must be in 1.." + std::to_string(kMaxDegree));
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        std::vector<bool> used(degree, false);
        std::size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip();
        while (i < text.size()) {
            if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in '" + text + "'");
            ++i;
            std::vector<int> cyc;
            for (;;) {
                skip();
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (start == i) throw std::invalid_argument("cycle notation: expected a point in '" + text + "'");
                int p = std::stoi(text.substr(start, i - start)) - 1;
                if (p < 0 || p >= degree || used[p])
                    throw std::invalid_argument("cycle notation: bad or repeated point in '" + text + "'");
                used[p] = true;
                cyc.push_back(p);
                if (i < text.size() && text[i] == ',') ++i;
            }
            for (std::size_t j = 0; j < cyc.size(); ++j) img[cyc[j]] = cyc[(j + 1) % cyc.size()];
            skip();
        }
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i); }
    const std::vector<int>& images() const { return img_; }

    /// (p * q)(i) = p(q(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw std::invalid_argument("composing permutations of different degree");
        std::vector<int> r(p.img_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.img_[q.img_[i]];
        return Permutation(std::move(r));
    }
    Permutation inverse() const {
        std::vector<int> r(img_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[img_[i]] = static_cast<int>(i);
        return Permutation(std::move(r));
    }
    int fixed_points() const {
        int f = 0;
        for (std::size_t i = 0; i < img_.size(); ++i) f += img_[i] == static_cast<int>(i);
        return f;
    }
    bool is_identity() const { return fixed_points() == degree(); }

    std::string cycles() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (seen[s] || img_[s] == static_cast<int>(s)) continue;
            out += "(";
            for (std::size_t j = s; !seen[j]; j = img_[j]) {
                if (j != s) out += " ";
                out += std::to_string(j + 1);
                seen[j] = true;
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

class PermGroup {
public:
    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }

    friend PermGroup closure(int degree, const std::vector<Permutation>& generators);

private:
    int degree_ = 0;
    std::vector<Permutation> elements_;  // sorted
};

/// Subgroup generated by the given permutations (breadth-first products).
inline PermGroup closure(int degree, const std::vector<Permutation>& generators) {
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("closure: degree must be in 1.." + std::to_string(kMaxDegree));
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("closure: generator degree mismatch");

    std::set<Permutation> seen{Permutation::identity(degree)};
    std::deque<Permutation> queue{Permutation::identity(degree)};
    while (!queue.empty()) {
        Permutation x = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation y = x * g;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    PermGroup G;
    G.degree_ = degree;
    G.elements_.assign(seen.begin(), seen.end());
    return G;
}

inline PermGroup closure(const std::vector<Permutation>& generators) {
    if (generators.empty()) throw std::invalid_argument("closure: degree unknown without generators");
    return closure(generators.front().degree(), generators);
}

/// m_0..m_n: number of elements with exactly s fixed points.
struct FixedPointProfile {
    std::vector<std::int64_t> m;

    std::int64_t order() const { return std::accumulate(m.begin(), m.end(), std::int64_t{0}); }
    std::int64_t operator[](std::size_t s) const { return s < m.size() ? m[s] : 0; }
    friend bool operator==(const FixedPointProfile&, const FixedPointProfile&) = default;
};

inline FixedPointProfile fixed_profile(const PermGroup& g) {
    FixedPointProfile p{std::vector<std::int64_t>(g.degree() + 1, 0)};
    for (const auto& x : g.elements()) ++p.m[x.fixed_points()];
    return p;
}

inline MomentSequence profile_moments(const FixedPointProfile& p, std::size_t K) {
    std::vector<Rational> c;
    const std::int64_t order = p.order();
    for (std::size_t k = 0; k <= K; ++k) {
        BigInt s = 0;
        for (std::size_t f = 0; f < p.m.size(); ++f) {
            BigInt pw = 1;
            for (std::size_t i = 0; i < k; ++i) pw *= f;
            s += p.m[f] * pw;
        }
        c.push_back(make_rational(s, order));
    }
    return MomentSequence(std::move(c));
}

inline MomentSequence group_moments(const PermGroup& g, std::size_t K) {
    return profile_moments(fixed_profile(g), K);
}

inline CircularMeasure profile_circular(const FixedPointProfile& p) {
    if (p.m.size() != 5)
        throw std::domain_error("circular measure defined only for spectral support in [0,4]");
    CircularMeasure e;
    for (int s = 0; s <= 4; ++s)
        if (p.m[s] != 0) e += Rational(p.m[s]) * mk_gamma(s);
    return e / Rational(p.order());
}

inline CircularMeasure group_circular(const PermGroup& g) {
    if (g.degree() != 4) throw std::domain_error("circular measure defined only for spectral support in [0,4]");
    return profile_circular(fixed_profile(g));
}

/// Orbits of G on its points (Burnside's lemma gives the same number as c_1).
inline std::size_t orbit_count(const PermGroup& g) {
    std::vector<int> parent(g.degree());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.elements())
        for (int i = 0; i < g.degree(); ++i) parent[find(i)] = find(e(i));
    std::size_t n = 0;
    for (int i = 0; i < g.degree(); ++i) n += find(i) == i;
    return n;
}

// ---------------------------------------------------------------------------
// Catalog of subgroups of S_4
// ---------------------------------------------------------------------------

struct SubgroupCatalogEntry {
    std::string name;                    // "Z_2", "D_1", ...
    std::string alias;                   // shell-safe: "Z2", "D1", ...
    std::vector<Permutation> generators;
    FixedPointProfile expected_profile;
    MeasureExpr expected_epsilon;        // reduced form
    MeasureExpr formula_epsilon;         // form stated by the classification formula
    bool in_tables = true;
    std::string note;

    PermGroup group() const { return closure(4, generators); }
};

namespace detail {

inline std::vector<Permutation> gens4(std::initializer_list<const char*> cycles) {
    std::vector<Permutation> out;
    for (auto c : cycles) out.push_back(Permutation::from_cycles(c, 4));
    return out;
}

inline SubgroupCatalogEntry entry(std::string name, std::string alias, std::vector<Permutation> gens,
                                  std::vector<std::int64_t> profile, MeasureExpr reduced,
                                  MeasureExpr formula) {
    return {std::move(name), std::move(alias), std::move(gens), FixedPointProfile{std::move(profile)},
            std::move(reduced), std::move(formula), true, {}};
}

}  // namespace detail

/// The ten designated embeddings in table order, followed by the excluded D_2.
inline std::vector<SubgroupCatalogEntry> subgroup_catalog() {
    using E = MeasureExpr;
    using detail::entry;
    using detail::gens4;
    const auto a4_reduced = E::d(3) + (E::dp(1) - E::d(1)) / 4;
    const auto s4_reduced = (E::d(3) + E::d(4)) / 2 + (E::dp(1) - E::d(1)) / 4;

    std::vector<SubgroupCatalogEntry> cat;
    //                     m_0 m_1 m_2 m_3 m_4
    cat.push_back(entry("Z_1", "Z1", {}, {0, 0, 0, 0, 1}, E::d(1), E::d(1)));
    cat.push_back(entry("Z_2", "Z2", gens4({"(1 2)(3 4)"}), {1, 0, 0, 0, 1}, E::d(2), E::d(2)));
    cat.push_back(entry("Z_3", "Z3", gens4({"(1 2 3)"}), {0, 2, 0, 0, 1}, E::d(3), E::d(3)));
    cat.push_back(entry("V", "V", gens4({"(1 2)", "(3 4)"}), {1, 0, 2, 0, 1}, E::d(4), E::d(4)));
    cat.push_back(entry("D_1", "D1", gens4({"(1 2)"}), {0, 0, 1, 0, 1}, (E::e(1) + E::d(1)) / 2,
                        (E::e(1) + E::d(1)) / 2));
    cat.push_back(entry("Z_4", "Z4", gens4({"(1 2 3 4)"}), {3, 0, 0, 0, 1}, (E::e(2) + E::d(2)) / 2,
                        (E::e(2) + E::d(2)) / 2));
    cat.push_back(entry("S_3", "S3", gens4({"(1 2 3)", "(1 2)"}), {0, 2, 3, 0, 1}, (E::e(3) + E::d(3)) / 2,
                        (E::e(3) + E::d(3)) / 2));
    cat.push_back(entry("D_4", "D4", gens4({"(1 2 3 4)", "(1 3)"}), {5, 0, 2, 0, 1}, (E::e(4) + E::d(4)) / 2,
                        (E::e(4) + E::d(4)) / 2));
    cat.push_back(entry("A_4", "A4", gens4({"(1 2 3)", "(1 2)(3 4)"}), {3, 8, 0, 0, 1}, a4_reduced,
                        alpha(E::d(3)) + (E::d(2) - E::d(3)) / 2));
    cat.push_back(entry("S_4", "S4", gens4({"(1 2 3 4)", "(1 2)"}), {9, 8, 6, 0, 1}, s4_reduced,
                        alpha(E::d(4)) + (E::d(3) - E::d(4)) / 2));

    auto d2 = entry("D_2", "D2", gens4({"(1 2)(3 4)", "(1 3)(2 4)"}), {3, 0, 0, 0, 1},
                    (E::e(2) + E::d(2)) / 2, (E::e(2) + E::d(2)) / 2);
    d2.in_tables = false;
    d2.note = "alias of Z_4 invariants";
    cat.push_back(std::move(d2));
    return cat;
}

inline const SubgroupCatalogEntry& find_subgroup(const std::vector<SubgroupCatalogEntry>& cat,
                                                 const std::string& key) {
    for (const auto& e : cat)
        if (e.name == key || e.alias == key) return e;
    throw std::invalid_argument("unknown subgroup '" + key + "'");
}

}  // namespace qade
