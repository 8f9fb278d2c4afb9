#include <gtest/gtest.h>

#include <qade/duals.hpp>
#include <qade/fusion.hpp>
#include <qade/graphs.hpp>
#include <qade/measures.hpp>

#include "oracles.hpp"

using namespace qade;

namespace {

MomentSequence seq(std::initializer_list<long long> v) { return moments_of(v); }

std::vector<BigInt> dense(const RootedGraph& g, int K) {
    std::vector<std::array<int, 3>> edges;
    for (auto [a, b, w] : g.edges()) edges.push_back({a, b, static_cast<int>(w)});
    return oracle::dense_loops(oracle::from_edges(g.size(), edges), g.root(), K);
}

std::vector<BigInt> values(const LoopCounts& l) { return l.values; }

BigInt pow_big(long long b, int k) { return boost::multiprecision::pow(BigInt(b), k); }

}  // namespace

// ---------------------------------------------------------------- graphs

TEST(Graphs, AffineShapes) {
    auto a1 = affine_a(1);
    EXPECT_EQ(a1.size(), 2);
    EXPECT_EQ(a1.at(0, 1), 2);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(affine_a(n).size(), n + 1);
    for (int n = 4; n <= 10; ++n) EXPECT_EQ(affine_d(n).size(), n + 1);
    for (int n = 6; n <= 8; ++n) EXPECT_EQ(affine_e(n).size(), n + 1);
    auto d4 = affine_d(4);
    EXPECT_EQ(d4.max_degree(), 4);
    int root_degree = 0;
    for (int j = 0; j < d4.size(); ++j) root_degree += static_cast<int>(d4.at(d4.root(), j));
    EXPECT_EQ(root_degree, 1);
    EXPECT_THROW(affine_d(3), std::invalid_argument);
    EXPECT_THROW(affine_e(9), std::invalid_argument);
    EXPECT_THROW(ghost_delta(8), std::invalid_argument);
    EXPECT_THROW(graph_catalog("Ztilde3"), std::invalid_argument);
}

TEST(Graphs, AffineGraphsHaveNormTwo) {
    for (int n = 1; n <= 9; ++n) EXPECT_NEAR(affine_a(n).spectral_radius(), 2, 1e-9);
    for (int n = 4; n <= 10; ++n) EXPECT_NEAR(affine_d(n).spectral_radius(), 2, 1e-9);
    for (int n = 6; n <= 8; ++n) EXPECT_NEAR(affine_e(n).spectral_radius(), 2, 1e-9);
    EXPECT_NEAR(signed_x4().spectral_radius(), 2, 1e-9);
    EXPECT_TRUE(signed_x4().is_signed());
}

TEST(Graphs, LoopCountsMatchDenseMatrixPowers) {
    std::vector<RootedGraph> all{signed_x4(), ghost_delta(6), ghost_delta(7)};
    for (int n = 1; n <= 9; ++n) all.push_back(affine_a(n));
    for (int n = 4; n <= 10; ++n) all.push_back(affine_d(n));
    for (int n = 6; n <= 8; ++n) all.push_back(affine_e(n));
    for (const auto& g : all) EXPECT_EQ(values(loop_counts(g, 16)), dense(g, 16)) << g.label();
}

TEST(Graphs, LoopCountExamples) {
    EXPECT_EQ(loop_counts(ghost_delta(7), 4).moments(), seq({1, 2, 5, 15, 51}));
    EXPECT_EQ(loop_counts(ghost_delta(6), 3).moments(), seq({1, 3, 10, 36}));
    EXPECT_EQ(loop_counts(signed_x4(), 4).moments(), seq({1, 2, 5, 14, 44}));
    EXPECT_EQ(loop_counts(affine_a(3), 3).moments(), seq({1, 2, 8, 32}));
    EXPECT_EQ(loop_counts(affine_d(6), 3).moments(), seq({1, 1, 3, 10}));
}

// the X4 formula counts loops of positive length; c_0 = 1
TEST(Graphs, ClosedForms) {
    const auto d6 = loop_counts(ghost_delta(6), 16);
    const auto x4 = loop_counts(signed_x4(), 16);
    for (int k = 0; k <= 16; ++k) {
        EXPECT_EQ(d6[k], (pow_big(4, k) + pow_big(2, k)) / 2) << k;
        if (k > 0) EXPECT_EQ(x4[k], (6 * pow_big(2, k) + pow_big(4, k)) / 8) << k;
    }
}

TEST(Graphs, LoopRecurrences) {
    const int K = 16;
    auto d6 = ghost_delta(6);
    auto c6 = loop_counts(d6, K + 1), e6 = path_counts(d6, d6.marked("d"), K);
    for (int k = 0; k <= K; ++k) EXPECT_EQ(c6[k + 1], 3 * c6[k] + e6[k]) << k;

    auto d7 = ghost_delta(7);
    auto c7 = loop_counts(d7, K + 1), e7 = path_counts(d7, d7.marked("d"), K);
    for (int k = 0; k <= K; ++k) EXPECT_EQ(c7[k + 1], 2 * c7[k] + e7[k]) << k;

    auto x = signed_x4();
    auto c = loop_counts(x, K + 1), d = path_counts(x, x.marked("d"), K + 1), e = path_counts(x, x.marked("e"), K + 1);
    // starts consistent with c_2 = 5; d_1 = 2 would give c_2 = 6
    EXPECT_EQ(c[1], 2);
    EXPECT_EQ(d[1], 1);
    EXPECT_EQ(e[1], 0);
    EXPECT_EQ(c[2], 5);
    EXPECT_NE(2 * c[1] + 2, c[2]);
    for (int k = 1; k <= K; ++k) {
        EXPECT_EQ(c[k + 1], 2 * c[k] + d[k]) << k;
        EXPECT_EQ(d[k + 1], c[k] + 2 * d[k] + 3 * e[k]) << k;
        EXPECT_EQ(e[k + 1], d[k] + 2 * e[k]) << k;
    }
}

TEST(Graphs, GhostGraphsShareGroupInvariants) {
    const auto d6 = loop_counts(ghost_delta(6), 16);
    const auto d7 = loop_counts(ghost_delta(7), 16);
    for (int k = 0; k <= 16; ++k) {
        // D_1 = <(1 2)>: fixed points 4 and 2
        EXPECT_EQ(d6[k], (pow_big(4, k) + pow_big(2, k)) / 2);
        // S_3 on 4 points: 1 identity, 3 transpositions (2 fixed), 2 three-cycles (1 fixed)
        EXPECT_EQ(d7[k], (pow_big(4, k) + 3 * pow_big(2, k) + 2) / 6);
    }
}

TEST(Graphs, InfiniteTruncations) {
    const auto cat = oracle::catalan(12);
    const auto pas = oracle::pascal(24);
    const auto a = loop_counts(truncated_infinite(InfiniteFamily::a_half, 12), 12);
    const auto l = loop_counts(truncated_infinite(InfiniteFamily::a_line, 12), 12);
    const auto d = loop_counts(truncated_infinite(InfiniteFamily::d_half, 12), 12);
    for (int k = 0; k <= 12; ++k) {
        EXPECT_EQ(a[k], cat[k]);
        EXPECT_EQ(l[k], pas[2 * k][k]);
        EXPECT_EQ(d[k], k == 0 ? BigInt(1) : BigInt(pas[2 * k][k] / 2));
    }
    EXPECT_EQ(loop_counts(truncated_infinite(InfiniteFamily::a_half, 4), 4).moments(), seq({1, 1, 2, 5, 14}));
    EXPECT_EQ(loop_counts(truncated_infinite(InfiniteFamily::a_line, 3), 3).moments(), seq({1, 2, 6, 20}));
    EXPECT_EQ(loop_counts(truncated_infinite(InfiniteFamily::d_half, 3), 3).moments(), seq({1, 1, 3, 10}));
}

TEST(Graphs, TruncationDepthIsSufficient) {
    for (auto f : {InfiniteFamily::a_half, InfiniteFamily::a_line, InfiniteFamily::d_half})
        for (std::size_t K : {1u, 5u, 12u})
            EXPECT_EQ(values(loop_counts(truncated_infinite(f, K), K)),
                      values(loop_counts(truncated_infinite(f, K, 2 * (K + 2)), K)));
}

TEST(Graphs, UnsignedLoopBounds) {
    for (int n = 4; n <= 10; ++n) {
        auto g = affine_d(n);
        auto c = loop_counts(g, 12);
        for (int k = 0; k <= 12; ++k) {
            EXPECT_GE(c[k], 0);
            EXPECT_LE(c[k], pow_big(g.max_degree(), 2 * k));
        }
    }
}

TEST(Graphs, CatalogAliases) {
    EXPECT_EQ(graph_catalog("Atilde3").label(), "A~3");
    EXPECT_EQ(graph_catalog("Dtilde6").label(), "D~6");
    EXPECT_EQ(graph_catalog("Etilde7").label(), "E~7");
    EXPECT_EQ(graph_catalog("Delta7").label(), "Delta~7");
    EXPECT_EQ(graph_catalog("X4").label(), "X4");
    EXPECT_EQ(graph_catalog("Dinf", 5).label(), "D_inf");
    EXPECT_NE(to_dot(affine_a(3)).find("graph"), std::string::npos);
}

TEST(Graphs, FullMatrixConstructorChecksSymmetry) {
    EXPECT_THROW(RootedGraph("bad", 2, {0, 1, 0, 0}, 0), std::invalid_argument);
    RootedGraph g("path", 2, {0, 1, 1, 0}, 1);
    EXPECT_EQ(loop_counts(g, 3).moments(), seq({1, 1, 1, 1}));
}

// ---------------------------------------------------------------- duals

TEST(Duals, WordCountsMatchEnumeration) {
    for (int n = 3; n <= 8; ++n) {
        const auto ref = oracle::dual_words(n, 8);
        const auto got = dual_moments(n, 8);
        for (int k = 0; k <= 8; ++k) EXPECT_EQ(got[k], Rational(ref[k])) << n << " k=" << k;
    }
    EXPECT_EQ(dual_moments(3, 2), seq({1, 2, 6}));
    EXPECT_THROW(dual_moments(2, 2), std::invalid_argument);
}

TEST(Duals, InfiniteDualIsCentralBinomial) {
    const auto pas = oracle::pascal(32);
    const auto c = dual_moments(std::nullopt, 16);
    for (int k = 0; k <= 16; ++k) EXPECT_EQ(c[k], Rational(pas[2 * k][k]));
}

TEST(Duals, CayleyGraphIsCycle) {
    // same invariants as the 4n-cycle
    for (int n = 3; n <= 8; ++n)
        EXPECT_EQ(dual_moments(n, 12), loop_counts(affine_a(4 * n - 1), 12).moments()) << n;
}

TEST(Duals, Words) {
    EXPECT_EQ(DihedralElement::one().word(), "1");
    EXPECT_EQ(DihedralElement::g().word(), "g");
    EXPECT_EQ(DihedralElement::h().word(), "h");
    EXPECT_EQ(multiply(DihedralElement::h(), DihedralElement::g(), 5).word(), "hg");
    auto gg = multiply(DihedralElement::g(), DihedralElement::g(), 4);
    EXPECT_EQ(gg, DihedralElement::one());
}

// ---------------------------------------------------------------- fusion

TEST(Fusion, Rules) {
    using L = FusionLabel;
    EXPECT_EQ(tensor(L::det(), L::det()), (FusionVector{L::one()}));
    EXPECT_EQ(tensor(L::det(), L::v(3)), (FusionVector{L::v(3)}));
    EXPECT_EQ(tensor(L::v(2), L::v(2)), (FusionVector{L::one(), L::det(), L::v(4)}));
    EXPECT_EQ(tensor(L::v(1), L::v(3)), (FusionVector{L::v(4), L::v(2)}));
    EXPECT_THROW(L::v(0), std::invalid_argument);
    EXPECT_EQ(o_minus1_2_fundamental().dimension(), 4);
    EXPECT_EQ(tensor(o_minus1_2_fundamental(), o_minus1_2_fundamental()).str(), "3*1 + 3*d + 4*V_1 + V_2");
}

TEST(Fusion, TripleAgreement) {
    const auto u = o_minus1_2_fundamental();
    const auto f = fusion_moments(u, 12);
    EXPECT_EQ(f, loop_counts(truncated_infinite(InfiniteFamily::d_half, 12), 12).moments());
    EXPECT_EQ(f, moments((mk_dnp(1) + mk_uniform()) / Rational(2), 12));
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(Rational(trivial_multiplicity(u, k)), f[k]);
}

TEST(Fusion, DimensionIsMultiplicative) {
    std::vector<FusionLabel> labels{FusionLabel::one(), FusionLabel::det()};
    for (int k = 1; k <= 6; ++k) labels.push_back(FusionLabel::v(k));
    for (const auto& a : labels)
        for (const auto& b : labels) {
            EXPECT_EQ(tensor(a, b).dimension(), a.dimension() * b.dimension());
            EXPECT_EQ(tensor(a, b), tensor(b, a));
        }
}

TEST(Fusion, QuotientMetadata) {
    const auto q = quotient_metadata(8);
    for (const auto& r : q) EXPECT_TRUE(r.consistent()) << r.algebra;
    auto find = [&](const std::string& a) {
        return *std::find_if(q.begin(), q.end(), [&](const QuotientRecord& r) { return r.algebra == a; });
    };
    EXPECT_EQ(find("A(2,1)").quantum_group, "D_4");
    EXPECT_EQ(find("A(3,-1)").dimension, 12);
    EXPECT_EQ(find("C(S_4^tau)").block_total(), 24);
    EXPECT_EQ(find("C(A_5^tau)").block_total(), 60);
}
