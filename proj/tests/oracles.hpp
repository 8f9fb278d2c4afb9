#pragma once

// Reference computations that share no code with the library: raw atom lists
// evaluated in long double, Pascal triangles, brute-force word enumeration and
// dense matrix powers.

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Real = long double;

constexpr Real kPi = 3.141592653589793238462643383279502884L;

// A finite measure on the circle: (angle, weight) pairs.
struct Atoms {
    std::vector<std::pair<Real, Real>> pts;

    Atoms& add(const Atoms& o, Real scale = 1) {
        for (auto [t, w] : o.pts) pts.emplace_back(t, scale * w);
        return *this;
    }
    Atoms scaled(Real s) const {
        Atoms r;
        return r.add(*this, s);
    }
    // weight by alpha(q) = 2 Im(q)^2
    Atoms alpha() const {
        Atoms r;
        for (auto [t, w] : pts) r.pts.emplace_back(t, w * 2 * std::sin(t) * std::sin(t));
        return r;
    }
    Real moment(int k) const {
        Real s = 0;
        for (auto [t, w] : pts) s += w * std::pow(4 * std::cos(t) * std::cos(t), k);
        return s;
    }
};

inline Atoms sum(const Atoms& a, const Atoms& b, Real wa = 1, Real wb = 1) {
    Atoms r;
    r.add(a, wa);
    r.add(b, wb);
    return r;
}

// uniform on the N-th roots of unity
inline Atoms roots(int N) {
    Atoms a;
    for (int j = 0; j < N; ++j) a.pts.emplace_back(2 * kPi * j / N, Real(1) / N);
    return a;
}

inline Atoms d(int n) { return roots(2 * n); }

// odd 4n-th roots: exp(2 pi i (2j+1) / 4n)
inline Atoms dprime(int n) {
    Atoms a;
    for (int j = 0; j < 2 * n; ++j) a.pts.emplace_back(2 * kPi * (2 * j + 1) / (4 * n), Real(1) / (2 * n));
    return a;
}

inline Atoms e(int n) { return n % 2 == 0 ? dprime(1) : dprime(2); }

// uniform measure on the solutions of (q + conj q)^2 = s
inline Atoms gamma(int s) {
    const Real c = std::sqrt(Real(s)) / 2;
    const Real t = std::acos(c);
    std::set<long long> seen;
    std::vector<Real> angles;
    for (Real a : {t, -t, kPi - t, kPi + t}) {
        long long key = std::llround(std::fmod(a + 4 * kPi, 2 * kPi) * 1e9L);
        if (seen.insert(key).second) angles.push_back(a);
    }
    Atoms r;
    for (Real a : angles) r.pts.emplace_back(a, Real(1) / angles.size());
    return r;
}

// Lebesgue measure, sampled on enough points to be exact for low-degree trig polynomials
inline Atoms lebesgue() { return roots(720); }

// ---------------------------------------------------------------------------

inline std::vector<std::vector<Big>> pascal(int rows) {
    std::vector<std::vector<Big>> t(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

inline std::vector<Big> catalan(int K) {
    std::vector<Big> c(K + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= K; ++n)
        for (int i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
    return c;
}

// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<Big>>;

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix r(n, std::vector<Big>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// (A^{2k})[r][r] for k = 0..K by full matrix squaring steps
inline std::vector<Big> dense_loops(const Matrix& A, std::size_t r, int K) {
    const std::size_t n = A.size();
    Matrix P(n, std::vector<Big>(n, 0));
    for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
    const Matrix A2 = multiply(A, A);
    std::vector<Big> out;
    for (int k = 0; k <= K; ++k) {
        out.push_back(P[r][r]);
        P = multiply(P, A2);
    }
    return out;
}

inline Matrix from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
    Matrix A(n, std::vector<Big>(n, 0));
    for (auto [a, b, w] : edges) {
        A[a][b] += w;
        A[b][a] += w;
    }
    return A;
}

// ---------------------------------------------------------------------------

// D_n acting on Z_n: g(i) = -i, h(i) = 1 - i. Count words of length k over
// (1, g, 1, h) whose product is the identity.
inline std::vector<Big> dual_words(int n, int K) {
    using Perm = std::vector<int>;
    Perm id(n), g(n), h(n);
    for (int i = 0; i < n; ++i) {
        id[i] = i;
        g[i] = (n - i) % n;
        h[i] = ((1 - i) % n + n) % n;
    }
    const std::array<Perm, 4> letters{id, g, id, h};
    std::vector<Big> out{1};
    std::vector<Perm> layer{id};
    for (int k = 1; k <= K; ++k) {
        std::vector<Perm> next;
        next.reserve(layer.size() * 4);
        for (const auto& p : layer)
            for (const auto& l : letters) {
                Perm q(n);
                for (int i = 0; i < n; ++i) q[i] = l[p[i]];
                next.push_back(std::move(q));
            }
        layer = std::move(next);
        Big c = 0;
        for (const auto& p : layer) c += (p == id);
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------

// subgroup of S_n generated by images, by breadth-first closure
inline std::vector<std::vector<int>> generate(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> queue{id};
    for (std::size_t at = 0; at < queue.size(); ++at)
        for (const auto& g : gens) {
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) p[i] = g[queue[at][i]];
            if (seen.insert(p).second) queue.push_back(p);
        }
    return queue;
}

// moments of sum over a finite rotation group: list of (rotation angle, class size)
inline Real rotation_moment(const std::vector<std::pair<Real, int>>& classes, int k) {
    Real s = 0;
    int order = 0;
    for (auto [theta, count] : classes) {
        s += count * std::pow(2 + 2 * std::cos(theta), k);
        order += count;
    }
    return s / order;
}

// Haar integral over SO(3) of (2 + 2cos theta)^k; class density (1 - cos theta)/pi on [0, pi]
inline Real so3_moment(int k) {
    const int N = 2000;
    Real s = 0;
    for (int j = 0; j < N; ++j) {
        Real t = 2 * kPi * j / N;
        s += std::pow(2 + 2 * std::cos(t), k) * (1 - std::cos(t));
    }
    return s / N;
}

inline Real so2_moment(int k) {
    const int N = 2000;
    Real s = 0;
    for (int j = 0; j < N; ++j) s += std::pow(2 + 2 * std::cos(2 * kPi * j / N), k);
    return s / N;
}

}  // namespace oracle
