#pragma once

// JSON forms of measures, custom groups, graphs and invariant records.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "correspond.hpp"
#include "graphs.hpp"
#include "groups.hpp"
#include "measures.hpp"

namespace qade {

using nlohmann::json;

struct JsonInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// {"terms":[{"base":{"type":"orbit","d":6},"density":["1/2"]}, {"base":{"type":"lebesgue"},...}]}
inline json measure_to_json(const CircularMeasure& m) {
    json terms = json::array();
    for (const auto& [b, p] : m.terms()) {
        json base = b.lebesgue ? json{{"type", "lebesgue"}} : json{{"type", "orbit"}, {"d", b.d}};
        json dens = json::array();
        for (const auto& c : p.coeffs()) dens.push_back(to_string(c));
        terms.push_back({{"base", std::move(base)}, {"density", std::move(dens)}});
    }
    return {{"terms", std::move(terms)}};
}

inline Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw JsonInputError("expected an integer or a \"p/q\" string");
}

inline CircularMeasure measure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw JsonInputError("measure JSON needs a \"terms\" array");
    CircularMeasure m;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("base") || !t.contains("density") || !t["density"].is_array())
            throw JsonInputError("each term needs \"base\" and a \"density\" array");
        const auto& b = t["base"];
        const std::string type = b.value("type", "");
        MeasureBase base;
        if (type == "lebesgue") base = MeasureBase::uniform();
        else if (type == "orbit" && b.contains("d") && b["d"].is_number_integer())
            base = MeasureBase::orbit(b["d"].get<std::int64_t>());
        else throw JsonInputError("base must be {\"type\":\"orbit\",\"d\":n} or {\"type\":\"lebesgue\"}");
        std::vector<Rational> coeffs;
        for (const auto& c : t["density"]) coeffs.push_back(rational_from_json(c));
        m.add(base, DensityPoly(std::move(coeffs)));
    }
    return m;
}

// {"degree":4,"generators":[[1,0,2,3],...]} with 0-based images
inline PermGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
        throw JsonInputError("group JSON needs an integer \"degree\"");
    const int degree = j["degree"].get<int>();
    if (degree < 1 || degree > kMaxDegree)
        throw JsonInputError("degree must be in 1.." + std::to_string(kMaxDegree));
    std::vector<Permutation> gens;
    for (const auto& g : j.value("generators", json::array())) {
        if (!g.is_array()) throw JsonInputError("each generator is an array of images");
        std::vector<int> img;
        for (const auto& v : g) {
            if (!v.is_number_integer()) throw JsonInputError("permutation images are integers");
            img.push_back(v.get<int>());
        }
        if (static_cast<int>(img.size()) != degree) throw JsonInputError("generator length differs from degree");
        gens.emplace_back(std::move(img));
    }
    return closure(degree, gens);
}

// {"n":7,"edges":[[0,1,1],[1,2,-1]],"root":0}; the third entry defaults to 1
inline RootedGraph graph_from_json(const json& j, std::string label = "custom") {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw JsonInputError("graph JSON needs an integer \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1) throw JsonInputError("graph needs at least one vertex");
    RootedGraph g(j.value("label", std::move(label)), n);
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw JsonInputError("edges are [i, j] or [i, j, w]");
        for (const auto& v : e)
            if (!v.is_number_integer()) throw JsonInputError("edge entries are integers");
        g.add_edge(e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<std::int64_t>() : 1);
    }
    g.set_root(j.value("root", 0));
    return g;
}

inline json graph_to_json(const RootedGraph& g) {
    json edges = json::array();
    for (const auto& [a, b, w] : g.edges()) edges.push_back({a, b, w});
    return {{"label", g.label()}, {"n", g.size()}, {"edges", std::move(edges)}, {"root", g.root()}};
}

inline json record_to_json(const InvariantRecord& r) {
    json j{{"id", r.id},
           {"name", r.name},
           {"kind", kind_name(r.kind)},
           {"moments", moments_json(r.moments)},
           {"provenance", r.provenance}};
    if (r.epsilon) {
        j["epsilon"] = r.epsilon->text();
        j["measure"] = measure_to_json(r.epsilon->value());
    }
    return j;
}

inline RecordKind kind_from_string(const std::string& s) {
    for (auto k : {RecordKind::group, RecordKind::graph, RecordKind::dual, RecordKind::quantum, RecordKind::measure})
        if (s == kind_name(k)) return k;
    throw JsonInputError("unknown record kind '" + s + "'");
}

/// Accepts the output of record_to_json; moments may be numbers or "p/q" strings.
inline InvariantRecord record_from_json(const json& j) {
    if (!j.is_object() || !j.contains("moments") || !j["moments"].is_array())
        throw JsonInputError("record JSON needs a \"moments\" array");
    InvariantRecord r;
    r.name = j.value("name", j.value("id", std::string("record")));
    r.id = j.value("id", r.name);
    r.kind = kind_from_string(j.value("kind", std::string("group")));
    r.provenance = j.value("provenance", std::string("from JSON"));
    std::vector<Rational> c;
    for (const auto& v : j["moments"]) c.push_back(rational_from_json(v));
    if (c.empty()) throw JsonInputError("record has no moments");
    r.moments = MomentSequence(std::move(c));
    if (j.contains("epsilon") && j["epsilon"].is_string()) r.epsilon = parse_measure(j["epsilon"].get<std::string>());
    return r;
}

}  // namespace qade
