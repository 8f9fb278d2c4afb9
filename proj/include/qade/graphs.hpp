#pragma once

/**
 * @file graphs.hpp
 * @brief Rooted (optionally signed) graphs and exact loop counting.
 *
 * The loop number c_k is the number of 2k-loops based at the root, with a
 * loop through negative edges contributing the product of its edge signs.
 * That is exactly (A^{2k})[root, root] for the signed adjacency matrix A, so
 * multi-edges are adjacency entries > 1 and negative edges are entries < 0.
 */

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "exact.hpp"

namespace qade {

class RootedGraph {
public:
    RootedGraph(std::string label, int n, int root = 0) : label_(std::move(label)), n_(n), adj_(n * n, 0) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
        set_root(root);
    }

    /// From a full adjacency matrix (row-major), which must be symmetric.
    RootedGraph(std::string label, int n, std::vector<std::int64_t> adj, int root)
        : label_(std::move(label)), n_(n), adj_(std::move(adj)) {
        if (n < 1 || adj_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("adjacency matrix has the wrong shape");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (at(i, j) != at(j, i)) throw std::invalid_argument("adjacency matrix is not symmetric");
        set_root(root);
    }

    /// Adds w to A[i][j] and A[j][i] (once on the diagonal for a self-loop).
    void add_edge(int i, int j, std::int64_t w = 1) {
        check(i);
        check(j);
        adj_[i * n_ + j] += w;
        if (i != j) adj_[j * n_ + i] += w;
    }
    void set_root(int r) {
        check(r);
        root_ = r;
    }
    void mark(const std::string& name, int v) {
        check(v);
        marks_[name] = v;
    }
    void set_label(std::string l) { label_ = std::move(l); }

    const std::string& label() const { return label_; }
    int size() const { return n_; }
    int root() const { return root_; }
    std::int64_t at(int i, int j) const { return adj_[i * n_ + j]; }
    const std::map<std::string, int>& marks() const { return marks_; }
    int marked(const std::string& name) const {
        auto it = marks_.find(name);
        if (it == marks_.end()) throw std::out_of_range("graph " + label_ + " has no vertex marked " + name);
        return it->second;
    }

    bool is_signed() const {
        return std::any_of(adj_.begin(), adj_.end(), [](auto v) { return v < 0; });
    }
    std::int64_t max_degree() const {
        std::int64_t best = 0;
        for (int i = 0; i < n_; ++i) {
            std::int64_t d = 0;
            for (int j = 0; j < n_; ++j) d += std::abs(at(i, j));
            best = std::max(best, d);
        }
        return best;
    }

    /// Edges (i <= j) with their signed multiplicities.
    std::vector<std::tuple<int, int, std::int64_t>> edges() const {
        std::vector<std::tuple<int, int, std::int64_t>> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                if (at(i, j) != 0) out.emplace_back(i, j, at(i, j));
        return out;
    }

    /// Largest |eigenvalue| of A, computed in floating point.
    double spectral_radius() const {
        Eigen::MatrixXd a(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a(i, j) = static_cast<double>(at(i, j));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    std::string label_;
    int n_;
    std::vector<std::int64_t> adj_;
    int root_ = 0;
    std::map<std::string, int> marks_;
};

/// c_0..c_K as exact integers.
struct LoopCounts {
    std::vector<BigInt> values;

    std::size_t size() const { return values.size(); }
    const BigInt& operator[](std::size_t k) const { return values.at(k); }
    MomentSequence moments() const { return MomentSequence::from_integers(values); }
    friend bool operator==(const LoopCounts&, const LoopCounts&) = default;
};

namespace detail {

inline std::vector<BigInt> apply(const RootedGraph& g, const std::vector<BigInt>& v) {
    const int n = g.size();
    std::vector<BigInt> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (auto a = g.at(i, j); a != 0 && v[j] != 0) r[i] += a * v[j];
    return r;
}

inline std::vector<BigInt> indicator(const RootedGraph& g, int v) {
    std::vector<BigInt> e(g.size());
    e[v] = 1;
    return e;
}

inline BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

/// (A^{2k})[root, target] for k = 0..K, via w_k = A^k e_root: the value is w_k . (A^k e_target).
inline LoopCounts path_counts(const RootedGraph& g, int target, std::size_t K) {
    auto w = detail::indicator(g, g.root());
    auto t = detail::indicator(g, target);
    LoopCounts out{{detail::dot(w, t)}};
    for (std::size_t k = 1; k <= K; ++k) {
        w = detail::apply(g, w);
        t = detail::apply(g, t);
        out.values.push_back(detail::dot(w, t));
    }
    return out;
}

inline LoopCounts loop_counts(const RootedGraph& g, std::size_t K) { return path_counts(g, g.root(), K); }

/// Closed walks of length k (not 2k) at the root: (A^k)[root, root].
inline LoopCounts walk_counts(const RootedGraph& g, std::size_t K) {
    auto w = detail::indicator(g, g.root());
    LoopCounts out{{1}};
    for (std::size_t k = 1; k <= K; ++k) {
        w = detail::apply(g, w);
        out.values.push_back(w[g.root()]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Ã_n: the (n+1)-cycle; Ã_1 is two vertices joined by a double edge.
inline RootedGraph affine_a(int n) {
    if (n < 1) throw std::invalid_argument("A~n needs n >= 1");
    RootedGraph g("A~" + std::to_string(n), n + 1);
    if (n == 1) {
        g.add_edge(0, 1, 2);
        return g;
    }
    for (int i = 0; i <= n; ++i) g.add_edge(i, (i + 1) % (n + 1));
    return g;
}

/// D̃_n: a path of n-3 vertices with two leaves at each end; root on a leaf.
inline RootedGraph affine_d(int n) {
    if (n < 4) throw std::invalid_argument("D~n needs n >= 4");
    RootedGraph g("D~" + std::to_string(n), n + 1);
    const int first = 2, last = first + (n - 4);  // 0, 1: leaves at the left fork
    for (int v = first; v < last; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, first);
    g.add_edge(1, first);
    g.add_edge(last, last + 1);
    g.add_edge(last, last + 2);
    return g;
}

namespace detail {

/// Star with the given arm lengths; vertex 0 is the centre. Returns the end of arm 0 as root.
inline RootedGraph star(std::string label, std::vector<int> arms) {
    int n = 1;
    for (int a : arms) n += a;
    RootedGraph g(std::move(label), n);
    int next = 1, root = 0;
    for (std::size_t k = 0; k < arms.size(); ++k) {
        int prev = 0;
        for (int i = 0; i < arms[k]; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        if (k == 0) root = prev;
    }
    g.set_root(root);
    return g;
}

}  // namespace detail

/// Ẽ_6, Ẽ_7, Ẽ_8 rooted at the end of the longest arm.
inline RootedGraph affine_e(int n) {
    switch (n) {
        case 6: return detail::star("E~6", {2, 2, 2});
        case 7: return detail::star("E~7", {3, 3, 1});
        case 8: return detail::star("E~8", {5, 2, 1});
        default: throw std::invalid_argument("E~n exists only for n = 6, 7, 8");
    }
}

/**
 * Ghost graphs: D̃_6 rooted at a trivalent vertex (Δ̃_6) and Ẽ_7 rooted at the
 * second vertex of a long arm (Δ̃_7). Marked vertices d, e are the ones whose
 * 2k-path counts enter the loop recurrences.
 */
inline RootedGraph ghost_delta(int n) {
    if (n == 6) {
        RootedGraph g("Delta~6", 7);
        // c=0 with leaves 1, 2; c-3-4; 4 carries leaves 5, 6
        for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}}) g.add_edge(a, b);
        g.mark("d", 4);
        return g;
    }
    if (n == 7) {
        RootedGraph g("Delta~7", 8);
        // chain 1-0-2-3-5-6-7 with a leaf 4 on 3; root 0
        for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}}) g.add_edge(a, b);
        g.mark("d", 3);
        g.mark("e", 6);
        return g;
    }
    throw std::invalid_argument("Delta~n exists only for n = 6, 7");
}

/**
 * Signed graph X_4 with loop numbers (6 2^k + 4^k)/8.
 *
 * Root c (0) with a leaf-like vertex L (1) and a chain c-v1-v2-v3 (2, 3, 4);
 * v3 carries a1, a2 (5, 6) and v1 carries a3 (7), which closes the square
 * c-v1-a3-L-c through the single negative edge L-a3. Norm is exactly 2.
 */
inline RootedGraph signed_x4() {
    RootedGraph g("X4", 8);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {2, 7}}) g.add_edge(a, b);
    g.add_edge(1, 7, -1);
    g.mark("d", 3);
    g.mark("e", 5);
    return g;
}

enum class InfiniteFamily { a_half, a_line, d_half };

inline std::string family_label(InfiniteFamily f) {
    switch (f) {
        case InfiniteFamily::a_half: return "A_inf";
        case InfiniteFamily::a_line: return "A_-inf,inf";
        case InfiniteFamily::d_half: return "D_inf";
    }
    return "?";
}

/// Finite piece of A∞, A±∞ or D∞ that is exact for loop counts up to order K.
inline RootedGraph truncated_infinite(InfiniteFamily f, std::size_t K, std::size_t depth = 0) {
    const int reach = static_cast<int>(std::max<std::size_t>(depth, K + 2));
    switch (f) {
        case InfiniteFamily::a_half: {
            RootedGraph g(family_label(f), reach + 1);
            for (int i = 0; i < reach; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case InfiniteFamily::a_line: {
            RootedGraph g(family_label(f), 2 * reach + 1, reach);
            for (int i = 0; i < 2 * reach; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case InfiniteFamily::d_half: {
            // leaves 0 (root) and 1 on vertex 2, then the tail 2-3-...
            RootedGraph g(family_label(f), reach + 2);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            for (int i = 2; i < reach + 1; ++i) g.add_edge(i, i + 1);
            return g;
        }
    }
    throw std::invalid_argument("unknown infinite family");
}

/**
 * Looks up a graph by shell-safe alias: Atilde<n>, Dtilde<n>, Etilde<n>,
 * Delta6, Delta7, X4, Ainf, Apminf, Dinf. Truncations are sized for order K.
 */
inline RootedGraph graph_catalog(const std::string& alias, std::size_t K = 16) {
    auto suffix = [&](const std::string& prefix) -> std::optional<int> {
        if (alias.rfind(prefix, 0) != 0 || alias.size() == prefix.size()) return std::nullopt;
        auto rest = alias.substr(prefix.size());
        if (rest.size() > 6 || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return std::nullopt;
        return std::stoi(rest);
    };
    if (alias == "Ainf") return truncated_infinite(InfiniteFamily::a_half, K);
    if (alias == "Apminf") return truncated_infinite(InfiniteFamily::a_line, K);
    if (alias == "Dinf") return truncated_infinite(InfiniteFamily::d_half, K);
    if (alias == "X4") return signed_x4();
    if (auto n = suffix("Atilde")) return affine_a(*n);
    if (auto n = suffix("Dtilde")) return affine_d(*n);
    if (auto n = suffix("Etilde")) return affine_e(*n);
    if (auto n = suffix("Delta")) return ghost_delta(*n);
    throw std::invalid_argument("unknown graph '" + alias + "'");
}

inline std::string to_dot(const RootedGraph& g) {
    std::ostringstream os;
    os << "graph \"" << g.label() << "\" {\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  " << v << (v == g.root() ? " [shape=doublecircle];\n" : " [shape=circle];\n");
    for (auto [i, j, w] : g.edges()) {
        os << "  " << i << " -- " << j;
        if (w != 1) os << " [label=\"" << w << "\"" << (w < 0 ? ", style=dashed" : "") << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qade
