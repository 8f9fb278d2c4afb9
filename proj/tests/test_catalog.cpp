#include <gtest/gtest.h>

#include <set>

#include <qade/correspond.hpp>
#include <qade/relcheck.hpp>
#include <qade/serialize.hpp>
#include <qade/verify.hpp>

#include "oracles.hpp"

using namespace qade;
using oracle::kPi;

namespace {

MomentSequence seq(std::initializer_list<long long> v) { return moments_of(v); }

void expect_near_moments(const MomentSequence& m, const std::function<long double(int)>& ref, int K,
                         const std::string& what) {
    for (int k = 0; k <= K; ++k) {
        long double want = ref(k);
        EXPECT_NEAR(m[k].convert_to<long double>(), want, 1e-7L * std::max<long double>(1, want)) << what << " k=" << k;
    }
}

// "A~11" -> "Atilde11", "Delta~6" -> "Delta6", "D_inf" -> "Dinf"
std::string alias_of(const std::string& label) {
    if (label == "A_inf") return "Ainf";
    if (label == "A_-inf,inf") return "Apminf";
    if (label == "D_inf") return "Dinf";
    auto t = label.find('~');
    if (t == std::string::npos) return label;
    const auto head = label.substr(0, t), tail = label.substr(t + 1);
    return head.size() == 1 ? head + "tilde" + tail : head + tail;
}

std::vector<std::pair<long double, int>> cyclic(int n) {
    std::vector<std::pair<long double, int>> c;
    for (int j = 0; j < n; ++j) c.emplace_back(2 * kPi * j / n, 1);
    return c;
}

}  // namespace

// ---------------------------------------------------------------- relcheck

TEST(Relcheck, FourierImages) {
    auto f = [](const char* c) { return so3_block(Permutation::from_cycles(c, 4)).str(); };
    EXPECT_EQ(f("()"), "[[1,0,0],[0,1,0],[0,0,1]]");
    EXPECT_EQ(f("(1 2)(3 4)"), "[[-1,0,0],[0,-1,0],[0,0,1]]");
    EXPECT_EQ(f("(1 3)(2 4)"), "[[-1,0,0],[0,1,0],[0,0,-1]]");
    EXPECT_EQ(f("(1 4)(2 3)"), "[[1,0,0],[0,-1,0],[0,0,-1]]");
    EXPECT_EQ(f("(1 2)"), "[[0,-1,0],[-1,0,0],[0,0,1]]");
}

TEST(Relcheck, AllPermutationsGiveSO3Blocks) {
    std::set<std::string> images;
    const auto s4 = closure(4, {Permutation::from_cycles("(1 2 3 4)", 4), Permutation::from_cycles("(1 2)", 4)});
    for (const auto& p : s4.elements()) {
        const auto c = fourier_conjugate(p);
        EXPECT_EQ(c(0, 0), 1);
        const auto R = so3_block(p);
        EXPECT_TRUE(is_signed_permutation(R));
        EXPECT_EQ(R * R.transpose(), RationalMatrix::identity(3));
        EXPECT_EQ(quantum_determinant(R), 1) << p.cycles();
        EXPECT_TRUE(check_so3m1_scalar(R).passed()) << p.cycles();
        EXPECT_TRUE(is_magic(permutation_matrix(p)));
        images.insert(R.str());
        for (const auto& q : s4.elements()) ASSERT_EQ(so3_block(p * q), so3_block(p) * so3_block(q));
    }
    EXPECT_EQ(images.size(), 24u);
}

TEST(Relcheck, ScalarRelationsRejectGenericRotation) {
    // a rotation by 90 degrees mixing two axes is orthogonal but has anticommutation defects
    RationalMatrix R{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
    auto rep = check_so3m1_scalar(R);
    EXPECT_EQ(rep.residual[0], 0);
    EXPECT_FALSE(rep.passed());
    RationalMatrix M{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_FALSE(check_so3m1_scalar(M).passed());
}

TEST(Relcheck, PauliAlgebra) {
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(pauli_exact(i) * pauli_exact(i), -gauss_identity2());
        for (int j = 0; j < 3; ++j)
            if (i != j) EXPECT_EQ(pauli_exact(i) * pauli_exact(j), -(pauli_exact(j) * pauli_exact(i)));
    }
    EXPECT_EQ(pauli_exact(2), pauli_exact(1) * pauli_exact(0));
}

TEST(Relcheck, PauliEmbeddingOnRandomRotations) {
    std::mt19937_64 rng(42);
    for (int s = 0; s < 100; ++s) {
        const auto x = random_special_orthogonal(rng);
        EXPECT_NEAR(x.determinant(), 1, 1e-12);
        const auto rep = pauli_embed_check(x);
        EXPECT_TRUE(rep.passed()) << rep.message;
        for (double r : rep.residual) EXPECT_LT(r, 1e-10);
    }
}

TEST(Relcheck, PauliEmbeddingRejectsNonRotations) {
    Eigen::Matrix3d reflect = Eigen::Matrix3d::Identity();
    reflect(2, 2) = -1;
    EXPECT_EQ(pauli_embed_check(reflect).verdict, Verdict::invalid_input);
    EXPECT_EQ(pauli_embed_check(2 * Eigen::Matrix3d::Identity()).verdict, Verdict::invalid_input);
}

TEST(Relcheck, SamplerIsSeeded) {
    std::mt19937_64 a(7), b(7);
    EXPECT_TRUE(random_special_orthogonal(a).isApprox(random_special_orthogonal(b), 0));
}

// ---------------------------------------------------------------- catalogs

TEST(Catalog, SO3MomentsAgainstRotationClasses) {
    const auto cat = so3_catalog(8, 12);
    for (int n = 1; n <= 8; ++n) {
        expect_near_moments(find_record(cat, "so3:Z" + std::to_string(n)).moments,
                            [&](int k) { return oracle::rotation_moment(cyclic(n), k); }, 12, "Z" + std::to_string(n));
        if (n < 2) continue;
        auto dn = cyclic(n);
        dn.emplace_back(kPi, n);
        expect_near_moments(find_record(cat, "so3:D" + std::to_string(n)).moments,
                            [&](int k) { return oracle::rotation_moment(dn, k); }, 12, "D" + std::to_string(n));
    }
    const long double t = 2 * kPi / 3;
    expect_near_moments(find_record(cat, "so3:A4").moments,
                        [&](int k) { return oracle::rotation_moment({{0, 1}, {t, 8}, {kPi, 3}}, k); }, 12, "A4");
    expect_near_moments(find_record(cat, "so3:S4").moments,
                        [&](int k) {
                            return oracle::rotation_moment({{0, 1}, {t, 8}, {kPi / 2, 6}, {kPi, 9}}, k);
                        },
                        12, "S4");
    expect_near_moments(find_record(cat, "so3:A5").moments,
                        [&](int k) {
                            return oracle::rotation_moment(
                                {{0, 1}, {t, 20}, {kPi, 15}, {2 * kPi / 5, 12}, {4 * kPi / 5, 12}}, k);
                        },
                        12, "A5");
    expect_near_moments(find_record(cat, "so3:SO2").moments, oracle::so2_moment, 12, "SO2");
    expect_near_moments(find_record(cat, "so3:O2").moments,
                        [](int k) { return (oracle::so2_moment(k) + (k == 0 ? 1 : 0)) / 2; }, 12, "O2");
    expect_near_moments(find_record(cat, "so3:SO3").moments, oracle::so3_moment, 12, "SO3");
}

TEST(Catalog, S4AsRotationGroupHasGroupMoments) {
    // the cube group acting on 4 diagonals is S_4 on four points
    const auto so3 = find_record(so3_catalog(8, 16), "so3:S4").moments;
    const auto s4 = group_moments(find_subgroup(subgroup_catalog(), "S4").group(), 16);
    EXPECT_EQ(so3, s4);
    for (int k = 1; k <= 16; ++k) {
        BigInt want = (boost::multiprecision::pow(BigInt(4), k) + 8 + 6 * boost::multiprecision::pow(BigInt(2), k)) / 24;
        EXPECT_EQ(s4[k], Rational(want));
    }
}

TEST(Catalog, QuantumEntries) {
    const auto q = quantum_catalog(8, 16);
    auto rec = [&](const std::string& id) -> const InvariantRecord& {
        for (const auto& e : q)
            if (e.record.id == id) return e.record;
        throw std::out_of_range(id);
    };
    EXPECT_EQ(rec("quantum:Q4").moments.prefix(5), seq({1, 1, 2, 5, 14, 42}));
    EXPECT_EQ(rec("quantum:Om12").moments.prefix(3), seq({1, 1, 3, 10}));
    EXPECT_EQ(rec("quantum:S4tau").moments.prefix(5), seq({1, 1, 2, 5, 15, 51}));
    EXPECT_EQ(rec("dual:D3").moments.prefix(2), seq({1, 2, 6}));
    EXPECT_EQ(rec("quantum:DC3tau").moments, rec("quantum:D6tau").moments);
    EXPECT_EQ(justification_name(Justification::cayley_computation), std::string("cayley-computation"));
}

TEST(Catalog, MatchGroupsEqualSequences) {
    const auto cat = subgroup_catalog();
    std::vector<InvariantRecord> recs{group_record(find_subgroup(cat, "Z4"), 12),
                                      group_record(find_subgroup(cat, "D2"), 12),
                                      graph_record(affine_d(4), 12), group_record(find_subgroup(cat, "S4"), 12)};
    const auto classes = match(recs, 12);
    ASSERT_EQ(classes.size(), 2u);
    EXPECT_EQ(classes[0].members, (std::vector<std::string>{"graph:D~4", "group:D2", "group:Z4"}));
    EXPECT_EQ(classes[1].members, (std::vector<std::string>{"group:S4"}));
    EXPECT_THROW(match(recs, 13), std::invalid_argument);
}

// ---------------------------------------------------------------- tables

TEST(Tables, RegenerateWithAssertions) {
    const auto tables = emit_tables(16);
    ASSERT_EQ(tables.size(), 6u);
    std::set<std::string> ids;
    for (const auto& t : tables) {
        ids.insert(t.id);
        EXPECT_FALSE(t.rows.empty()) << t.id;
        for (const auto& r : t.rows) EXPECT_EQ(r.cells.size(), t.header.size()) << t.id;
    }
    EXPECT_TRUE(ids.count("thm-9.1"));
    EXPECT_TRUE(ids.count("summary-ade"));
}

TEST(Tables, EveryRowIsAMatch) {
    for (const auto& t : emit_tables(16))
        for (const auto& r : t.rows) {
            if (r.graph.empty()) continue;
            const auto g = graph_record(graph_catalog(alias_of(r.graph), 16), 16);
            EXPECT_EQ(g.moments, r.moments) << t.id << " " << r.graph;
        }
}

TEST(Tables, CorruptedRootIsReported) {
    TableOptions opt;
    opt.corrupt_root = "Etilde7";
    try {
        emit_tables(16, opt);
        FAIL() << "expected a table assertion";
    } catch (const TableAssertionError& e) {
        EXPECT_NE(std::string(e.what()).find("E~7"), std::string::npos);
    }
}

TEST(Tables, ExcludedEmbeddingSitsWithZ4) {
    TableOptions opt;
    opt.include_excluded = true;
    const auto tables = emit_tables(16, opt);
    bool seen = false;
    for (const auto& t : tables)
        for (const auto& r : t.rows)
            for (const auto& o : r.objects) seen = seen || o == "group:D2";
    EXPECT_TRUE(seen);
}

TEST(Tables, Renderers) {
    const auto tables = emit_tables(16);
    const auto& t = tables.front();
    auto j = table_json(t);
    EXPECT_EQ(j["table"], t.id);
    EXPECT_EQ(j["rows"].size(), t.rows.size());
    EXPECT_NE(table_csv(t).find(csv_field(t.header[0])), std::string::npos);
    EXPECT_NE(table_text(t).find(t.title), std::string::npos);
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    auto big = moments_json(MomentSequence::from_integers({BigInt(1), boost::multiprecision::pow(BigInt(10), 30)}));
    EXPECT_TRUE(big[1].is_string());
    EXPECT_EQ(emit_tables(16).front().rows.size(), t.rows.size());
    EXPECT_EQ(table_text(emit_tables(16).back()), table_text(tables.back()));
}

// ---------------------------------------------------------------- serialization

TEST(Serialize, MeasureRoundTrip) {
    for (std::string src : {"(d_1'+d)/2", "alpha d_4+(d_3-d_4)/2", "gamma_3", "(e_3+d_3)/2"}) {
        const auto m = parse_measure(src).value();
        EXPECT_EQ(measure_from_json(json::parse(measure_to_json(m).dump())), m) << src;
    }
    EXPECT_THROW(measure_from_json(json::parse(R"({"terms":[{"base":{"type":"disk"},"density":[1]}]})")),
                 JsonInputError);
}

TEST(Serialize, GroupAndGraph) {
    auto g = group_from_json(json::parse(R"({"degree":4,"generators":[[1,0,2,3],[0,1,3,2]]})"));
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(fixed_profile(g).m, (std::vector<std::int64_t>{1, 0, 2, 0, 1}));
    EXPECT_THROW(group_from_json(json::parse(R"({"degree":4,"generators":[[0,0,1,2]]})")), std::invalid_argument);
    EXPECT_THROW(group_from_json(json::parse(R"({"generators":[]})")), JsonInputError);

    const auto d6 = affine_d(6);
    const auto back = graph_from_json(graph_to_json(d6));
    EXPECT_EQ(back.label(), "D~6");
    EXPECT_EQ(loop_counts(back, 10).values, loop_counts(d6, 10).values);
    EXPECT_THROW(graph_from_json(json::parse(R"({"n":2,"edges":[[0,5]]})")), std::out_of_range);
}

TEST(Serialize, RecordRoundTrip) {
    const auto r = group_record(find_subgroup(subgroup_catalog(), "S4"), 10);
    const auto back = record_from_json(json::parse(record_to_json(r).dump()));
    EXPECT_EQ(back.id, r.id);
    EXPECT_EQ(back.kind, RecordKind::group);
    EXPECT_EQ(back.moments, r.moments);
    ASSERT_TRUE(back.epsilon.has_value());
    EXPECT_EQ(back.epsilon->value(), r.epsilon->value());
    EXPECT_THROW(record_from_json(json::parse(R"({"id":"x"})")), JsonInputError);
}

// ---------------------------------------------------------------- suites

TEST(Verify, GraphFormulas) {
    EXPECT_EQ(graph_epsilon("Delta~6")->text(), "(d_2'+d_1)/2");
    EXPECT_EQ(graph_epsilon("D~6")->text(), "(d_1'+d_4)/2");
    EXPECT_FALSE(graph_epsilon("A~4").has_value());
    for (int n = 4; n <= 10; ++n) {
        const auto g = affine_d(n);
        EXPECT_EQ(loop_counts(g, 12).moments(), moments(graph_epsilon(g.label())->value(), 12));
    }
}

TEST(Verify, SuitesPass) {
    for (const auto& r : verify_measures()) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
    for (const auto& r : verify_relations()) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
    for (const auto& r : verify_fusion()) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}
