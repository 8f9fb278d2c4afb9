#pragma once

// Property suites behind `qade verify`: measure identities, graph and group
// coincidences, matrix relations and the O_{-1}(2) fusion oracles.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "correspond.hpp"
#include "duals.hpp"
#include "fusion.hpp"
#include "graphs.hpp"
#include "groups.hpp"
#include "measures.hpp"
#include "relcheck.hpp"

namespace qade {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

/// Known circular measure of a catalog graph, keyed by its label.
inline std::optional<MeasureExpr> graph_epsilon(const std::string& label) {
    using E = MeasureExpr;
    auto num = [&](const std::string& prefix) -> std::optional<int> {
        if (label.rfind(prefix, 0) != 0 || label.size() == prefix.size()) return std::nullopt;
        try {
            std::size_t used = 0;
            int v = std::stoi(label.substr(prefix.size()), &used);
            if (used != label.size() - prefix.size()) return std::nullopt;
            return v;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (label == "A_inf") return alpha(E::uniform());
    if (label == "A_-inf,inf") return E::uniform();
    if (label == "D_inf") return (E::dp(1) + E::uniform()) / 2;
    if (label == "X4") return (E::dp(2) + E::d(4)) / 2;
    if (label == "Delta~6") return (E::dp(2) + E::d(1)) / 2;
    if (label == "Delta~7") return (E::dp(2) + E::d(3)) / 2;
    if (label == "E~6") return alpha(E::d(3)) + (E::d(2) - E::d(3)) / 2;
    if (label == "E~7") return alpha(E::d(4)) + (E::d(3) - E::d(4)) / 2;
    if (label == "E~8") return alpha(E::d(6)) + (E::d(5) - E::d(6)) / 2;
    if (auto n = num("A~"); n && *n % 2 == 1) return E::d((*n + 1) / 2);
    if (auto n = num("D~"); n && *n >= 4) return (E::dp(1) + E::d(*n - 2)) / 2;
    return std::nullopt;
}

namespace detail {

inline CheckResult same_measure(std::string name, const MeasureExpr& a, const MeasureExpr& b, std::size_t K) {
    CheckResult r{std::move(name), false, a.text() + " = " + b.text()};
    try {
        r.pass = measure_eq(a.value(), b.value(), K);
    } catch (const InternalInconsistency& e) {
        r.detail += ": " + std::string(e.what());
    }
    return r;
}

inline CheckResult same_moments(std::string name, const MomentSequence& a, const MomentSequence& b,
                                std::string what) {
    CheckResult r{std::move(name), a == b, std::move(what)};
    if (!r.pass) {
        std::ostringstream os;
        os << ": " << a << " vs " << b;
        r.detail += os.str();
    }
    return r;
}

}  // namespace detail

/// Measure identities, the subgroup formulas and the graph formulas.
inline std::vector<CheckResult> verify_measures(std::size_t K = 24, std::size_t graph_K = 12, int nmax = 8) {
    using E = MeasureExpr;
    using detail::same_measure;
    std::vector<CheckResult> out;

    for (int n = 1; n <= nmax; ++n)
        out.push_back(same_measure("d_n+d_n'=2d_2n n=" + std::to_string(n), E::d(n) + E::dp(n), 2 * E::d(2 * n), K));

    out.push_back(same_measure("gamma_0", E::gamma(0), E::dp(1), K));
    out.push_back(same_measure("gamma_1", E::gamma(1), (3 * E::d(3) - E::d(1)) / 2, K));
    out.push_back(same_measure("gamma_2", E::gamma(2), E::dp(2), K));
    out.push_back(same_measure("gamma_3", E::gamma(3), (3 * E::dp(3) - E::dp(1)) / 2, K));
    out.push_back(same_measure("gamma_4", E::gamma(4), E::d(1), K));

    const auto g = [](int s) { return E::gamma(s); };
    out.push_back(same_measure("d_1 in gamma", E::d(1), g(4), K));
    out.push_back(same_measure("d_2 in gamma", E::d(2), (g(0) + g(4)) / 2, K));
    out.push_back(same_measure("d_3 in gamma", E::d(3), (2 * g(1) + g(4)) / 3, K));
    out.push_back(same_measure("d_4 in gamma", E::d(4), (g(0) + 2 * g(2) + g(4)) / 4, K));
    out.push_back(same_measure("d_6 in gamma", E::d(6), (g(0) + 2 * g(1) + 2 * g(3) + g(4)) / 6, K));

    const auto eps = [](int n) { return (E::dp(2) + E::d(n)) / 2; };
    out.push_back(same_measure("epsilon_1", eps(1), (g(2) + g(4)) / 2, K));
    out.push_back(same_measure("epsilon_2", eps(2), (g(0) + 2 * g(2) + g(4)) / 4, K));
    out.push_back(same_measure("epsilon_3", eps(3), (2 * g(1) + 3 * g(2) + g(4)) / 6, K));
    out.push_back(same_measure("epsilon_4", eps(4), (g(0) + 6 * g(2) + g(4)) / 8, K));
    out.push_back(same_measure("epsilon_6", eps(6), (g(0) + 2 * g(1) + 6 * g(2) + 2 * g(3) + g(4)) / 12, K));

    out.push_back(same_measure("alpha d_3 = gamma_1", alpha(E::d(3)), g(1), K));
    out.push_back(same_measure("alpha d_4", alpha(E::d(4)), (g(0) + g(2)) / 2, K));

    for (const auto& e : subgroup_catalog()) {
        const auto group = group_moments(e.group(), K);
        out.push_back(detail::same_moments("subgroup " + e.name, moments(e.formula_epsilon.value(), K), group,
                                           e.formula_epsilon.text() + " vs fixed points"));
        out.push_back(same_measure("subgroup " + e.name + " reduced", e.formula_epsilon, e.expected_epsilon, K));
        out.push_back({"subgroup " + e.name + " profile", fixed_profile(e.group()).m == e.expected_profile.m,
                       "fixed-point counts"});
    }

    std::vector<RootedGraph> graphs;
    for (int n = 1; n <= nmax; ++n) graphs.push_back(affine_a(2 * n - 1));
    for (int n = 2; n <= nmax; ++n) graphs.push_back(affine_d(n + 2));
    for (int n : {6, 7, 8}) graphs.push_back(affine_e(n));
    graphs.push_back(ghost_delta(6));
    graphs.push_back(ghost_delta(7));
    graphs.push_back(signed_x4());
    for (auto f : {InfiniteFamily::a_half, InfiniteFamily::a_line, InfiniteFamily::d_half})
        graphs.push_back(truncated_infinite(f, graph_K));
    for (const auto& gr : graphs) {
        const auto e = graph_epsilon(gr.label());
        if (!e) continue;
        out.push_back(detail::same_moments("graph " + gr.label(), loop_counts(gr, graph_K).moments(),
                                           moments(e->value(), graph_K), "loops vs " + e->text()));
    }
    return out;
}

/**
 * Fourier conjugation of all of S_4, the homomorphism property, the Klein
 * subgroup images, exact Pauli identities and `samples` seeded Pauli checks.
 */
inline std::vector<CheckResult> verify_relations(std::uint64_t seed = 42, int samples = 100, double tol = 1e-10) {
    std::vector<CheckResult> out;
    const auto s4 = closure(4, {Permutation::from_cycles("(1 2 3 4)", 4), Permutation::from_cycles("(1 2)", 4)});

    int good = 0;
    std::string bad;
    std::map<Permutation, RationalMatrix> image;
    for (const auto& p : s4.elements()) {
        try {
            const auto R = so3_block(p);
            image.emplace(p, R);
            if (is_magic(permutation_matrix(p)) && check_so3m1_scalar(R).passed()) ++good;
            else bad += " " + p.cycles();
        } catch (const InternalInconsistency& e) {
            bad += " " + p.cycles() + " (" + e.what() + ")";
        }
    }
    out.push_back({"fourier block form and relations", good == static_cast<int>(s4.order()),
                   std::to_string(good) + "/" + std::to_string(s4.order()) + " permutations" +
                       (bad.empty() ? "" : ", failing:" + bad)});

    if (image.size() == s4.order()) {
        int hom = 0, total = 0;
        for (const auto& p : s4.elements())
            for (const auto& q : s4.elements()) {
                ++total;
                hom += image.at(p * q) == image.at(p) * image.at(q);
            }
        out.push_back({"homomorphism", hom == total, std::to_string(hom) + "/" + std::to_string(total) + " products"});
        std::set<std::string> distinct;
        for (const auto& [p, R] : image) distinct.insert(R.str());
        out.push_back({"injective", distinct.size() == image.size(),
                       std::to_string(distinct.size()) + " distinct images"});
    }

    {
        const std::vector<RationalMatrix> diagonal{RationalMatrix::identity(3),
                                                   {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                                                   {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
                                                   {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
        std::set<std::string> want, got;
        for (const auto& R : diagonal) want.insert(R.str());
        for (auto c : {"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"})
            got.insert(so3_block(Permutation::from_cycles(c, 4)).str());
        const bool ok = want == got;
        out.push_back({"klein subgroup is diagonal", ok, "images of the double transpositions are the sign matrices"});
    }

    {
        bool ok = true;
        const auto I = gauss_identity2();
        for (int i = 0; i < 3; ++i) {
            ok = ok && pauli_exact(i) * pauli_exact(i) == -I;
            for (int j = 0; j < 3; ++j)
                if (i != j) ok = ok && pauli_exact(i) * pauli_exact(j) == -(pauli_exact(j) * pauli_exact(i));
        }
        ok = ok && pauli_exact(2) == pauli_exact(1) * pauli_exact(0);
        out.push_back({"pauli identities", ok, "exact Gaussian-integer arithmetic"});
    }

    std::mt19937_64 rng(seed);
    int passed = 0;
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        const auto rep = pauli_embed_check(random_special_orthogonal(rng), tol);
        passed += rep.passed();
        for (double r : rep.residual) worst = std::max(worst, r);
    }
    std::ostringstream os;
    os << passed << "/" << samples << " samples, max residual " << worst;
    out.push_back({"pauli embedding", passed == samples, os.str()});
    return out;
}

/// Fusion walk, truncated D_inf loops and the O(2) measure agree; quotient metadata is consistent.
inline std::vector<CheckResult> verify_fusion(std::size_t K = 12) {
    using E = MeasureExpr;
    std::vector<CheckResult> out;
    const auto walk = fusion_moments(o_minus1_2_fundamental(), K);
    const auto loops = loop_counts(truncated_infinite(InfiniteFamily::d_half, K), K).moments();
    const auto meas = moments(((E::dp(1) + E::uniform()) / 2).value(), K);
    out.push_back(detail::same_moments("fusion vs D_inf loops", walk, loops, "k <= " + std::to_string(K)));
    out.push_back(detail::same_moments("fusion vs (d_1'+d)/2", walk, meas, "k <= " + std::to_string(K)));

    bool dims = true;
    std::vector<FusionLabel> labels{FusionLabel::one(), FusionLabel::det()};
    for (int k = 1; k <= 12; ++k) labels.push_back(FusionLabel::v(k));
    for (const auto& a : labels)
        for (const auto& b : labels) dims = dims && tensor(a, b).dimension() == a.dimension() * b.dimension();
    out.push_back({"dimension is multiplicative", dims, "labels 1, d, V_1..V_12"});

    bool assoc = true;
    for (const auto& a : labels)
        for (const auto& b : labels)
            for (const auto& c : labels)
                assoc = assoc && tensor(tensor(FusionVector{a}, FusionVector{b}), FusionVector{c}) ==
                                     tensor(FusionVector{a}, tensor(FusionVector{b}, FusionVector{c}));
    out.push_back({"associativity", assoc, "labels 1, d, V_1..V_12"});

    bool meta = true;
    for (const auto& q : quotient_metadata()) meta = meta && q.consistent();
    out.push_back({"quotient metadata", meta, "block sums equal dimensions"});
    return out;
}

}  // namespace qade
