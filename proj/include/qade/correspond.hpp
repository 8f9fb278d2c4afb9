#pragma once

/**
 * @file correspond.hpp
 * @brief Invariant records, moment matching and the classification tables.
 *
 * Every producer (permutation groups, rooted graphs, group duals, the fusion
 * semiring, closed-form measures) is reduced to an InvariantRecord carrying
 * c_0..c_K. Records match when these agree exactly. Each emitted table row is
 * a match assertion over one graph and the objects listed next to it.
 */

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "duals.hpp"
#include "exact.hpp"
#include "fusion.hpp"
#include "graphs.hpp"
#include "groups.hpp"
#include "measures.hpp"

namespace qade {

enum class RecordKind { group, graph, dual, quantum, measure };

inline const char* kind_name(RecordKind k) {
    switch (k) {
        case RecordKind::group: return "group";
        case RecordKind::graph: return "graph";
        case RecordKind::dual: return "dual";
        case RecordKind::quantum: return "quantum";
        case RecordKind::measure: return "measure";
    }
    return "?";
}

struct InvariantRecord {
    std::string id;    // "group:S4", "so3:D5", "graph:E~7", "dual:D4", ...
    std::string name;  // display name
    RecordKind kind = RecordKind::group;
    MomentSequence moments;
    std::optional<MeasureExpr> epsilon;
    std::string provenance;
};

inline InvariantRecord group_record(const SubgroupCatalogEntry& e, std::size_t K) {
    return {"group:" + e.alias, e.name, RecordKind::group, group_moments(e.group(), K), e.formula_epsilon,
            "fixed points of the permutation group"};
}

inline InvariantRecord graph_record(const RootedGraph& g, std::size_t K) {
    return {"graph:" + g.label(), g.label(), RecordKind::graph, loop_counts(g, K).moments(), std::nullopt,
            g.is_signed() ? "signed 2k-loops at the root" : "2k-loops at the root"};
}

inline InvariantRecord measure_record(const MeasureExpr& m, std::size_t K) {
    return {"measure:" + m.text(), m.text(), RecordKind::measure, moments(m.value(), K), m,
            "moments of the circular measure"};
}

// ---------------------------------------------------------------------------
// Subgroups of SO(3) and their twisted versions
// ---------------------------------------------------------------------------

namespace detail {

inline InvariantRecord so3_record(std::string alias, std::string name, const MeasureExpr& eps, std::size_t K) {
    return {"so3:" + alias, std::move(name), RecordKind::group, moments(eps.value(), K), eps,
            "circular measure of the subgroup of SO(3)"};
}

inline MeasureExpr polyhedral(std::int64_t s) {
    using E = MeasureExpr;
    return alpha(E::d(s)) + (E::d(s - 1) - E::d(s)) / 2;
}

}  // namespace detail

/// Z_n (1..nmax), D_n (2..nmax), SO(2), O(2), SO(3), A_4, S_4, A_5.
inline std::vector<InvariantRecord> so3_catalog(int nmax = 8, std::size_t K = 16) {
    using E = MeasureExpr;
    if (nmax < 2) throw std::invalid_argument("so3_catalog needs nmax >= 2");
    std::vector<InvariantRecord> out;
    for (int n = 1; n <= nmax; ++n)
        out.push_back(detail::so3_record("Z" + std::to_string(n), "Z_" + std::to_string(n), E::d(n), K));
    for (int n = 2; n <= nmax; ++n)
        out.push_back(detail::so3_record("D" + std::to_string(n), "D_" + std::to_string(n),
                                         (E::dp(1) + E::d(n)) / 2, K));
    out.push_back(detail::so3_record("SO2", "SO(2)", E::uniform(), K));
    out.push_back(detail::so3_record("O2", "O(2)", (E::dp(1) + E::uniform()) / 2, K));
    out.push_back(detail::so3_record("SO3", "SO(3)", alpha(E::uniform()), K));
    out.push_back(detail::so3_record("A4", "A_4", detail::polyhedral(3), K));
    out.push_back(detail::so3_record("S4", "S_4", detail::polyhedral(4), K));
    out.push_back(detail::so3_record("A5", "A_5", detail::polyhedral(6), K));
    return out;
}

enum class Justification { twist_invariance, cayley_computation, direct };

inline const char* justification_name(Justification j) {
    switch (j) {
        case Justification::twist_invariance: return "twist-invariance";
        case Justification::cayley_computation: return "cayley-computation";
        case Justification::direct: return "direct";
    }
    return "?";
}

struct QuantumCatalogEntry {
    InvariantRecord record;
    Justification justification = Justification::direct;
    std::string source;  // id of the classical record for twists
};

inline const InvariantRecord& find_record(const std::vector<InvariantRecord>& recs, const std::string& id) {
    for (const auto& r : recs)
        if (r.id == id) return r;
    throw std::invalid_argument("no record '" + id + "'");
}

/**
 * Q_4, O_{-1}(2), D_{2n}^tau (3..nmax), DC_n^tau (2..nmax), S_4^tau, A_5^tau
 * by twist from SO(3), and the duals D̂_n (3..nmax), D̂_∞ by Cayley-graph
 * word counting. O_{-1}(2) is computed from its fusion rules and must agree
 * with O(2).
 */
inline std::vector<QuantumCatalogEntry> quantum_catalog(int nmax = 8, std::size_t K = 16) {
    using E = MeasureExpr;
    if (nmax < 3) throw std::invalid_argument("quantum_catalog needs nmax >= 3");
    const auto so3 = so3_catalog(2 * nmax, K);
    std::vector<QuantumCatalogEntry> out;

    auto twist = [&](std::string alias, std::string name, const std::string& source) {
        const auto& src = find_record(so3, source);
        InvariantRecord r{"quantum:" + alias, std::move(name), RecordKind::quantum, src.moments, src.epsilon,
                          "twist of " + src.name};
        out.push_back({std::move(r), Justification::twist_invariance, source});
    };

    twist("Q4", "Q_4", "so3:SO3");
    {
        InvariantRecord r{"quantum:Om12", "O_-1(2)", RecordKind::quantum,
                          fusion_moments(o_minus1_2_fundamental(), K), find_record(so3, "so3:O2").epsilon,
                          "fusion rules of O_-1(2), twist of O(2)"};
        out.push_back({std::move(r), Justification::twist_invariance, "so3:O2"});
    }
    for (int n = 3; n <= nmax; ++n)
        twist("D" + std::to_string(2 * n) + "tau", "D_" + std::to_string(2 * n) + "^tau",
              "so3:D" + std::to_string(2 * n));
    for (int n = 2; n <= nmax; ++n)
        twist("DC" + std::to_string(n) + "tau", "DC_" + std::to_string(n) + "^tau",
              "so3:D" + std::to_string(2 * n));
    twist("S4tau", "S_4^tau", "so3:S4");
    twist("A5tau", "A_5^tau", "so3:A5");

    for (int n = 3; n <= nmax; ++n) {
        InvariantRecord r{"dual:D" + std::to_string(n), "Dhat_" + std::to_string(n), RecordKind::dual,
                          dual_moments(n, K), E::d(2 * n), "words in (1,g,1,h) equal to 1 in D_" + std::to_string(n)};
        out.push_back({std::move(r), Justification::cayley_computation, {}});
    }
    {
        InvariantRecord r{"dual:Dinf", "Dhat_inf", RecordKind::dual, dual_moments(std::nullopt, K), E::uniform(),
                          "words in (1,g,1,h) equal to 1 in D_inf"};
        out.push_back({std::move(r), Justification::cayley_computation, {}});
    }

    for (const auto& q : out) {
        if (q.justification == Justification::twist_invariance &&
            !(q.record.moments == find_record(so3, q.source).moments))
            throw InternalInconsistency(q.record.name + " does not share the invariants of " + q.source);
        if (q.record.epsilon && !(moments(q.record.epsilon->value(), K) == q.record.moments))
            throw InternalInconsistency(q.record.name + " moments disagree with " + q.record.epsilon->text());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

struct MatchClass {
    MomentSequence moments;            // c_0..c_K
    std::vector<std::string> members;  // record ids, sorted
};

/// Classes of exactly equal c_0..c_K, in order of first appearance.
inline std::vector<MatchClass> match(const std::vector<InvariantRecord>& records, std::size_t K) {
    std::vector<MatchClass> classes;
    for (const auto& r : records) {
        if (r.moments.size() < K + 1)
            throw std::invalid_argument(r.id + " carries moments only to order " + std::to_string(r.moments.order()));
        auto key = r.moments.prefix(K);
        auto it = std::find_if(classes.begin(), classes.end(), [&](const MatchClass& c) { return c.moments == key; });
        if (it == classes.end()) classes.push_back({std::move(key), {r.id}});
        else it->members.push_back(r.id);
    }
    for (auto& c : classes) std::sort(c.members.begin(), c.members.end());
    return classes;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

inline const std::string& missing_marker() {
    static const std::string s = "□";
    return s;
}

struct TableRow {
    std::vector<std::string> cells;    // layout cells, in header order
    std::string graph;                 // graph label, empty for formula rows
    std::vector<std::string> objects;  // ids of the records matched against the graph
    MomentSequence moments;
};

struct Table {
    std::string id;
    std::string title;
    std::vector<std::string> header;
    bool transposed = false;  // printed with graphs on one line and objects on the next
    std::vector<TableRow> rows;
};

struct TableOptions {
    int nmax = 8;
    std::string corrupt_root;       // test hook: graph alias or label whose root is moved
    bool include_excluded = false;  // add the D_2 embedding next to Z_4
};

struct TableAssertionError : std::runtime_error {
    TableAssertionError(std::string table, std::string row, const std::string& detail)
        : std::runtime_error(table + ": row " + row + ": " + detail), table(std::move(table)), row(std::move(row)) {}
    std::string table;
    std::string row;
};

namespace detail {

class TableBuilder {
public:
    TableBuilder(std::size_t K, const TableOptions& opt) : K_(K), opt_(opt) {
        for (const auto& e : subgroup_catalog()) add(group_record(e, K));
        for (auto& r : so3_catalog(2 * opt.nmax, K)) add(std::move(r));
        for (auto& q : quantum_catalog(opt.nmax, K)) add(std::move(q.record));
    }

    const InvariantRecord& record(const std::string& id) const {
        auto it = records_.find(id);
        if (it == records_.end()) throw std::invalid_argument("no record '" + id + "'");
        return it->second;
    }
    const std::string& name(const std::string& id) const { return record(id).name; }

    std::string names(const std::vector<std::string>& ids) const {
        if (ids.empty()) return missing_marker();
        std::string s;
        for (const auto& id : ids) s += (s.empty() ? "" : ", ") + name(id);
        return s;
    }

    /// Graph record for a catalog alias; the corrupt_root hook moves the root to a neighbour.
    std::string graph(const std::string& alias) {
        auto g = graph_catalog(alias, K_);
        if (!opt_.corrupt_root.empty() && (opt_.corrupt_root == alias || opt_.corrupt_root == g.label())) {
            for (int v = 0; v < g.size(); ++v)
                if (v != g.root() && g.at(g.root(), v) != 0) {
                    g.set_root(v);
                    break;
                }
        }
        auto r = graph_record(g, K_);
        const std::string id = r.id;
        records_.insert_or_assign(id, std::move(r));
        return id;
    }

    std::string measure(const MeasureExpr& m) {
        auto r = measure_record(m, K_);
        const std::string id = r.id;
        records_.insert_or_assign(id, std::move(r));
        return id;
    }

    /// Adds a row after asserting that the graph (if any) and all objects form one match class.
    void row(Table& t, std::vector<std::string> cells, const std::string& graph_id, std::vector<std::string> objects) {
        std::vector<InvariantRecord> recs;
        if (!graph_id.empty()) recs.push_back(record(graph_id));
        for (const auto& id : objects) recs.push_back(record(id));
        std::string label = cells.empty() ? "?" : cells[0];
        for (std::size_t i = 1; i < cells.size() && i < 3; ++i) label += " / " + cells[i];
        if (recs.size() < 2) throw TableAssertionError(t.id, label, "nothing to match");
        const auto classes = match(recs, K_);
        if (classes.size() != 1) {
            std::ostringstream os;
            os << "invariants differ:";
            for (const auto& c : classes) {
                os << " {";
                for (std::size_t i = 0; i < c.members.size(); ++i) os << (i ? ", " : "") << c.members[i];
                os << "} c_0..c_" << std::min<std::size_t>(K_, 6) << " = " << c.moments.prefix(std::min<std::size_t>(K_, 6)) << ";";
            }
            throw TableAssertionError(t.id, label, os.str());
        }
        t.rows.push_back({std::move(cells), graph_id.empty() ? "" : record(graph_id).name, std::move(objects),
                          classes.front().moments});
    }

    /// Rows for different graphs (or different formulas when there is no graph) must not merge.
    void check_separation(const Table& t) const {
        auto key = [](const TableRow& r) {
            if (!r.graph.empty()) return r.graph;
            return r.objects.back().rfind("measure:", 0) == 0 ? r.objects.back() : r.objects.front();
        };
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            for (std::size_t j = i + 1; j < t.rows.size(); ++j)
                if (key(t.rows[i]) != key(t.rows[j]) && t.rows[i].moments == t.rows[j].moments)
                    throw TableAssertionError(t.id, key(t.rows[i]) + " and " + key(t.rows[j]),
                                              "distinct rows have equal invariants up to order " + std::to_string(K_));
    }

private:
    void add(InvariantRecord r) {
        const std::string id = r.id;
        records_.insert_or_assign(id, std::move(r));
    }

    std::size_t K_;
    TableOptions opt_;
    std::map<std::string, InvariantRecord> records_;
};

}  // namespace detail

/**
 * Builds the classification tables: thm-9.1 (formula list), thm-10.2,
 * thm-11.2, thm-11.3, summary-ade and summary-so3. Throws TableAssertionError
 * naming the first row whose backing match fails.
 */
inline std::vector<Table> emit_tables(std::size_t K, const TableOptions& opt = {}) {
    if (K < 1) throw std::invalid_argument("K must be at least 1");
    if (opt.nmax < 3) throw std::invalid_argument("nmax must be at least 3");
    detail::TableBuilder b(K, opt);
    const int nmax = opt.nmax;
    auto str = [](int v) { return std::to_string(v); };
    std::vector<Table> out;

    // Circular measures of the subgroups of S_4.
    {
        Table t{"thm-9.1", "Circular measures of the subgroups of S_4", {"subgroup", "epsilon"}, false, {}};
        for (const auto& e : subgroup_catalog()) {
            if (!e.in_tables && !opt.include_excluded) continue;
            b.row(t, {e.name, e.formula_epsilon.text()}, "", {"group:" + e.alias, b.measure(e.formula_epsilon)});
        }
        out.push_back(std::move(t));
    }

    // Subgroups of S_4 against affine and ghost graphs.
    {
        Table t{"thm-10.2", "ADE graphs and subgroups of S_4", {"graph", "subgroup"}, true, {}};
        const std::vector<std::pair<std::string, std::string>> pairs{
            {"Atilde1", "Z1"}, {"Atilde3", "Z2"}, {"Atilde5", "Z3"}, {"Atilde7", "V"},  {"Dtilde4", "Z4"},
            {"Dtilde6", "D4"}, {"Delta6", "D1"},  {"Delta7", "S3"},  {"Etilde6", "A4"}, {"Etilde7", "S4"}};
        for (const auto& [g, s] : pairs) {
            std::vector<std::string> objs{"group:" + s};
            if (s == "Z4" && opt.include_excluded) objs.push_back("group:D2");
            const auto gid = b.graph(g);
            b.row(t, {b.name(gid), b.names(objs)}, gid, objs);
        }
        out.push_back(std::move(t));
    }

    // McKay correspondence for SO(3).
    {
        Table t{"thm-11.2", "ADE graphs and subgroups of SO(3)", {"graph", "subgroup"}, true, {}};
        auto add = [&](const std::string& g, const std::string& obj) {
            const auto gid = b.graph(g);
            b.row(t, {b.name(gid), b.name(obj)}, gid, {obj});
        };
        for (int n = 1; n <= nmax; ++n) add("Atilde" + str(2 * n - 1), "so3:Z" + str(n));
        add("Apminf", "so3:SO2");
        add("Ainf", "so3:SO3");
        for (int n = 2; n <= nmax; ++n) add("Dtilde" + str(n + 2), "so3:D" + str(n));
        add("Dinf", "so3:O2");
        add("Etilde6", "so3:A4");
        add("Etilde7", "so3:S4");
        add("Etilde8", "so3:A5");
        out.push_back(std::move(t));
    }

    // Remaining quantum subgroups of Q_4.
    {
        Table t{"thm-11.3", "ADE graphs and quantum subgroups of Q_4", {"graph", "quantum group"}, true, {}};
        auto add = [&](const std::string& g, std::vector<std::string> objs) {
            const auto gid = b.graph(g);
            std::vector<std::string> cells{b.name(gid), b.names(objs)};
            b.row(t, std::move(cells), gid, std::move(objs));
        };
        for (int n = 3; n <= nmax; ++n) add("Atilde" + str(4 * n - 1), {"dual:D" + str(n)});
        add("Apminf", {"dual:Dinf"});
        add("Ainf", {"quantum:Q4"});
        for (int n = 2; n <= nmax; ++n) {
            std::vector<std::string> objs;
            if (n >= 3) objs.push_back("quantum:D" + str(2 * n) + "tau");
            objs.push_back("quantum:DC" + str(n) + "tau");
            add("Dtilde" + str(2 * n + 2), std::move(objs));
        }
        add("Dinf", {"quantum:Om12"});
        add("Etilde7", {"quantum:S4tau"});
        add("Etilde8", {"quantum:A5tau"});
        out.push_back(std::move(t));
    }

    // Graph, subgroup of Q_4, and how the correspondence is obtained.
    {
        Table t{"summary-ade", "ADE graphs and subgroups of Q_4", {"graph", "subgroup of Q_4", "correspondence"},
                false, {}};
        auto add = [&](const std::string& g, std::vector<std::string> objs, const std::string& how) {
            const auto gid = b.graph(g);
            std::vector<std::string> cells{b.name(gid), b.names(objs), how};
            b.row(t, std::move(cells), gid, std::move(objs));
        };
        const std::string s4 = "ADE for S_4";
        add("Atilde1", {"group:Z1"}, s4);
        add("Atilde3", {"group:Z2"}, s4);
        add("Atilde5", {"group:Z3"}, s4);
        add("Atilde7", {"group:V"}, s4);
        for (int n = 3; n <= nmax; ++n) add("Atilde" + str(4 * n - 1), {"dual:D" + str(n)}, "Computation");
        add("Apminf", {"dual:Dinf"}, "Computation");
        add("Ainf", {"quantum:Q4"}, "Twisted McKay");
        add("Dtilde4", {"group:Z4"}, s4);
        add("Dtilde6", {"group:D4"}, s4);
        for (int n = 2; n <= nmax; ++n) {
            std::vector<std::string> objs;
            if (n >= 3) objs.push_back("quantum:D" + str(2 * n) + "tau");
            objs.push_back("quantum:DC" + str(n) + "tau");
            add("Dtilde" + str(2 * n + 2), std::move(objs), "Twisted McKay");
        }
        add("Dinf", {"quantum:Om12"}, "Twisted McKay");
        add("Delta6", {"group:D1"}, s4);
        add("Delta7", {"group:S3"}, s4);
        add("Etilde6", {"group:A4"}, s4);
        add("Etilde7", {"group:S4", "quantum:S4tau"}, "McKay + twist");
        add("Etilde8", {"quantum:A5tau"}, "Twisted McKay");
        out.push_back(std::move(t));
    }

    // Subgroups of SO(3) and of Q_4 side by side; the marker stands for a missing subgroup.
    {
        Table t{"summary-so3", "Subgroups of SO(3), ADE graphs and subgroups of Q_4",
                {"subgroup of SO(3)", "graph", "subgroup of Q_4"}, false, {}};
        auto add = [&](std::optional<std::string> so3, const std::string& g, std::vector<std::string> quantum,
                       std::string so3_label = {}) {
            const auto gid = b.graph(g);
            std::vector<std::string> objs;
            if (so3) objs.push_back(*so3);
            objs.insert(objs.end(), quantum.begin(), quantum.end());
            if (so3_label.empty()) so3_label = so3 ? b.name(*so3) : missing_marker();
            b.row(t, {so3_label, b.name(gid), b.names(quantum)}, gid, std::move(objs));
        };
        add("so3:Z1", "Atilde1", {"group:Z1"});
        add("so3:Z2", "Atilde3", {"group:Z2"});
        add("so3:Z3", "Atilde5", {"group:Z3"});
        add("so3:Z4", "Atilde7", {"group:V"});
        for (int n = 3; n <= nmax; ++n) {
            add("so3:Z" + str(2 * n - 1), "Atilde" + str(4 * n - 3), {});
            add("so3:Z" + str(2 * n), "Atilde" + str(4 * n - 1), {"dual:D" + str(n)});
        }
        add("so3:SO2", "Apminf", {"dual:Dinf"});
        add("so3:SO3", "Ainf", {"quantum:Q4"});
        add("so3:D2", "Dtilde4", {"group:Z4"}, "V");
        add("so3:D4", "Dtilde6", {"group:D4"});
        for (int n = 2; n <= nmax; ++n) {
            add("so3:D" + str(2 * n - 1), "Dtilde" + str(2 * n + 1), {});
            std::vector<std::string> q;
            if (n >= 3) q.push_back("quantum:D" + str(2 * n) + "tau");
            q.push_back("quantum:DC" + str(n) + "tau");
            add("so3:D" + str(2 * n), "Dtilde" + str(2 * n + 2), std::move(q));
        }
        add("so3:O2", "Dinf", {"quantum:Om12"});
        add(std::nullopt, "Delta6", {"group:D1"});
        add(std::nullopt, "Delta7", {"group:S3"});
        add("so3:A4", "Etilde6", {"group:A4"});
        add("so3:S4", "Etilde7", {"group:S4", "quantum:S4tau"});
        add("so3:A5", "Etilde8", {"quantum:A5tau"});
        out.push_back(std::move(t));
    }

    for (const auto& t : out) b.check_separation(t);
    return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Integer moments fitting in 64 bits become JSON numbers, anything else a string.
inline nlohmann::json moments_json(const MomentSequence& m) {
    auto arr = nlohmann::json::array();
    for (const auto& v : m.values) {
        if (is_integer(v)) {
            const BigInt n = numerator(v);
            if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
                arr.push_back(n.convert_to<std::int64_t>());
                continue;
            }
        }
        arr.push_back(to_string(v));
    }
    return arr;
}

inline nlohmann::json table_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row;
        row["graph"] = r.graph.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.graph);
        row["objects"] = r.objects;
        row["cells"] = r.cells;
        row["moments"] = moments_json(r.moments);
        rows.push_back(std::move(row));
    }
    return {{"table", t.id}, {"title", t.title}, {"header", t.header}, {"rows", std::move(rows)}};
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// Column tables (graphs over objects) are written as two lines, like the printed layout.
inline std::string table_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
    };
    if (t.transposed) {
        for (std::size_t c = 0; c < t.header.size(); ++c) {
            std::vector<std::string> cells;
            for (const auto& r : t.rows) cells.push_back(r.cells.at(c));
            line(cells);
        }
    } else {
        line(t.header);
        for (const auto& r : t.rows) line(r.cells);
    }
    return os.str();
}

inline std::string table_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto cols = [](const std::string& s) {
        std::size_t n = 0;
        for (unsigned char c : s) n += (c & 0xC0) != 0x80;
        return n;
    };
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        width[c] = cols(t.header[c]);
        for (const auto& r : t.rows) width[c] = std::max(width[c], cols(r.cells.at(c)));
    }
    std::ostringstream os;
    os << t.id << ": " << t.title << "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << (c ? " | " : "  ") << cells[c];
            if (c + 1 < cells.size()) os << std::string(width[c] - cols(cells[c]), ' ');
        }
        os << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r.cells);
    return os.str();
}

}  // namespace qade
