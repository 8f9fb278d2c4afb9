#pragma once

// Matrix-level checks: scalar magic unitaries, the Fourier conjugation of
// S_4 permutation matrices into 3x3 signed permutations, the SO_{-1}(3)
// relations on scalar matrices, and the Pauli-tensor representation.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "exact.hpp"
#include "groups.hpp"
#include "measures.hpp"

namespace qade {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long long v : r) a_.emplace_back(v);
        }
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        RationalMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        RationalMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix m) {
        for (auto& v : m.a_) v *= s;
        return m;
    }
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + to_string((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// 0/1 entries, every row and column summing to 1.
inline bool is_magic(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("magic unitary must be square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        Rational row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) != 0 && m(i, j) != 1) return false;
            row += m(i, j);
            col += m(j, i);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

/// P[p(j)][j] = 1, so that P_{pq} = P_p P_q.
inline RationalMatrix permutation_matrix(const Permutation& p) {
    RationalMatrix m(p.degree(), p.degree());
    for (int j = 0; j < p.degree(); ++j) m(p(j), j) = 1;
    return m;
}

inline RationalMatrix fourier_matrix() {
    return {{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}};
}

/// Entries in {0, ±1}, exactly one nonzero per row and column.
inline bool is_signed_permutation(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int row = 0, col = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (const Rational* v : {&m(i, j), &m(j, i)})
                if (*v != 0 && *v != 1 && *v != -1) return false;
            row += m(i, j) != 0;
            col += m(j, i) != 0;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

/// The 3x3 block R of (1/4) M P M = diag(1, R).
inline RationalMatrix so3_block(const Permutation& p) {
    if (p.degree() != 4) throw std::invalid_argument("Fourier conjugation acts on S_4");
    const auto M = fourier_matrix();
    const RationalMatrix c = Rational(1, 4) * (M * permutation_matrix(p) * M);
    if (c(0, 0) != 1)
        throw InternalInconsistency("Fourier conjugate of " + p.cycles() + " has corner " + to_string(c(0, 0)));
    for (std::size_t i = 1; i < 4; ++i)
        if (c(0, i) != 0 || c(i, 0) != 0)
            throw InternalInconsistency("Fourier conjugate of " + p.cycles() + " is not block diagonal");
    const auto R = c.block(1, 1, 3, 3);
    if (!is_signed_permutation(R))
        throw InternalInconsistency("Fourier block of " + p.cycles() + " is not a signed permutation");
    return R;
}

inline RationalMatrix fourier_conjugate(const Permutation& p) {
    const auto R = so3_block(p);
    RationalMatrix c(4, 4);
    c(0, 0) = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) c(i + 1, j + 1) = R(i, j);
    return c;
}

// ---------------------------------------------------------------------------
// Relation reports
// ---------------------------------------------------------------------------

enum class Verdict { pass, fail, invalid_input };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::invalid_input: return "invalid-input";
    }
    return "?";
}

inline const std::array<const char*, 5>& relation_names() {
    static const std::array<const char*, 5> names{"orthogonality", "row-anticommutation", "column-anticommutation",
                                                 "cross-commutation", "quantum-determinant"};
    return names;
}

struct RelationReport {
    std::array<double, 5> residual{};  // indexed like relation_names()
    double tolerance = 0;
    Verdict verdict = Verdict::pass;
    std::string message;

    bool passed() const { return verdict == Verdict::pass; }
    void settle() {
        if (verdict == Verdict::invalid_input) return;
        verdict = Verdict::pass;
        for (double r : residual)
            if (!(r <= tolerance)) verdict = Verdict::fail;
    }
};

inline const std::array<std::array<int, 3>, 6>& s3_permutations() {
    static const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return perms;
}

/// Sign-free sum over S_3 of R[0,s0] R[1,s1] R[2,s2].
inline Rational quantum_determinant(const RationalMatrix& R) {
    Rational s = 0;
    for (const auto& p : s3_permutations()) s += R(0, p[0]) * R(1, p[1]) * R(2, p[2]);
    return s;
}

namespace detail {
inline double rabs(const Rational& q) { return std::fabs(q.convert_to<double>()); }
}  // namespace detail

/**
 * The SO_{-1}(3) relations on a scalar 3x3 matrix. Anticommutation of two
 * scalars forces their product to vanish; cross-commutation is automatic.
 */
inline RelationReport check_so3m1_scalar(const RationalMatrix& R) {
    if (R.rows() != 3 || R.cols() != 3) throw std::invalid_argument("expected a 3x3 matrix");
    RelationReport rep;
    const auto I = RationalMatrix::identity(3);
    const auto a = R * R.transpose(), b = R.transpose() * R;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            rep.residual[0] = std::max({rep.residual[0], detail::rabs(a(i, j) - I(i, j)), detail::rabs(b(i, j) - I(i, j))});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                if (j == k) continue;
                rep.residual[1] = std::max(rep.residual[1], detail::rabs(2 * R(i, j) * R(i, k)));
                rep.residual[2] = std::max(rep.residual[2], detail::rabs(2 * R(j, i) * R(k, i)));
            }
    rep.residual[4] = detail::rabs(quantum_determinant(R) - 1);
    rep.settle();
    return rep;
}

// ---------------------------------------------------------------------------
// Pauli matrices
// ---------------------------------------------------------------------------

/// Gaussian integer, enough for exact identities among the Pauli matrices.
struct GaussInt {
    long long re = 0, im = 0;
    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
    friend bool operator==(GaussInt, GaussInt) = default;
};

using GaussMatrix2 = std::array<std::array<GaussInt, 2>, 2>;

inline GaussMatrix2 operator*(const GaussMatrix2& a, const GaussMatrix2& b) {
    GaussMatrix2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}
inline GaussMatrix2 operator-(GaussMatrix2 a) {
    for (auto& row : a)
        for (auto& v : row) v = -v;
    return a;
}

/// tau_1 = diag(i,-i), tau_2 = [[0,1],[-1,0]], tau_3 = tau_2 tau_1; index 0..2.
inline GaussMatrix2 pauli_exact(int i) {
    const GaussMatrix2 t1{{{GaussInt{0, 1}, GaussInt{}}, {GaussInt{}, GaussInt{0, -1}}}};
    const GaussMatrix2 t2{{{GaussInt{}, GaussInt{1, 0}}, {GaussInt{-1, 0}, GaussInt{}}}};
    switch (i) {
        case 0: return t1;
        case 1: return t2;
        case 2: return t2 * t1;
    }
    throw std::out_of_range("Pauli index is 0, 1 or 2");
}

inline GaussMatrix2 gauss_identity2() { return {{{GaussInt{1, 0}, GaussInt{}}, {GaussInt{}, GaussInt{1, 0}}}}; }

inline Eigen::Matrix2cd pauli(int i) {
    const auto g = pauli_exact(i);
    Eigen::Matrix2cd m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m(r, c) = {static_cast<double>(g[r][c].re), static_cast<double>(g[r][c].im)};
    return m;
}

inline Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}

/// A_ij = x_ij (tau_i (x) tau_j).
inline std::array<std::array<Eigen::Matrix4cd, 3>, 3> pauli_embedding(const Eigen::Matrix3d& x) {
    std::array<std::array<Eigen::Matrix4cd, 3>, 3> A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[i][j] = x(i, j) * kron(pauli(i), pauli(j));
    return A;
}

/**
 * Checks the SO_{-1}(3) relations on the Pauli representation of x as
 * matrix identities (max-norm residuals). Self-adjointness of the entries
 * is folded into the orthogonality residual.
 */
inline RelationReport pauli_embed_check(const Eigen::Matrix3d& x, double tol = 1e-10) {
    RelationReport rep;
    rep.tolerance = tol;
    const double orth = (x * x.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    const double det = x.determinant();
    if (!(orth <= tol) || !(std::fabs(det - 1) <= tol)) {
        rep.verdict = Verdict::invalid_input;
        rep.message = "x must be special orthogonal (orthogonality defect " + std::to_string(orth) +
                      ", det " + std::to_string(det) + ")";
        return rep;
    }
    const auto A = pauli_embedding(x);
    const Eigen::Matrix4cd I = Eigen::Matrix4cd::Identity();
    auto norm = [](const Eigen::Matrix4cd& m) { return m.cwiseAbs().maxCoeff(); };
    auto bump = [&](int r, double v) { rep.residual[r] = std::max(rep.residual[r], v); };

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            bump(0, norm(A[i][j] - A[i][j].adjoint()));
            Eigen::Matrix4cd rows = Eigen::Matrix4cd::Zero(), cols = Eigen::Matrix4cd::Zero();
            for (int k = 0; k < 3; ++k) {
                rows += A[i][k] * A[j][k];
                cols += A[k][i] * A[k][j];
            }
            const Eigen::Matrix4cd target = i == j ? I : Eigen::Matrix4cd::Zero();
            bump(0, norm(rows - target));
            bump(0, norm(cols - target));
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                if (j == k) continue;
                bump(1, norm(A[i][j] * A[i][k] + A[i][k] * A[i][j]));
                bump(2, norm(A[j][i] * A[k][i] + A[k][i] * A[j][i]));
            }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (i != k && j != l) bump(3, norm(A[i][j] * A[k][l] - A[k][l] * A[i][j]));
    Eigen::Matrix4cd qdet = Eigen::Matrix4cd::Zero();
    for (const auto& p : s3_permutations()) qdet += A[0][p[0]] * A[1][p[1]] * A[2][p[2]];
    bump(4, norm(qdet - I));
    rep.settle();
    return rep;
}

/// Gram-Schmidt on a Gaussian 3x3 sample, last column flipped if det < 0.
inline Eigen::Matrix3d random_special_orthogonal(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix3d q;
    for (;;) {
        Eigen::Matrix3d a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = normal(rng);
        bool degenerate = false;
        for (int c = 0; c < 3 && !degenerate; ++c) {
            Eigen::Vector3d v = a.col(c);
            for (int p = 0; p < c; ++p) v -= q.col(p).dot(v) * q.col(p);
            const double n = v.norm();
            if (n < 1e-8) degenerate = true;
            else q.col(c) = v / n;
        }
        if (!degenerate) break;
    }
    if (q.determinant() < 0) q.col(2) = -q.col(2);
    return q;
}

}  // namespace qade
