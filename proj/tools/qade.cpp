// qade: invariants, classification tables, verification suites and record matching.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qade/correspond.hpp>
#include <qade/serialize.hpp>
#include <qade/verify.hpp>

namespace {

using namespace qade;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inline JSON when the text starts with '{' or '[', else a file path if one exists.
std::optional<json> json_argument(const std::string& spec) {
    auto first = spec.find_first_not_of(" \t\n");
    if (first != std::string::npos && (spec[first] == '{' || spec[first] == '['))
        return json::parse(spec);
    if (std::filesystem::is_regular_file(spec)) {
        std::ifstream in(spec);
        return json::parse(in);
    }
    return std::nullopt;
}

InvariantRecord resolve_group(const std::string& spec, std::size_t K) {
    if (auto j = json_argument(spec)) {
        const auto g = group_from_json(*j);
        InvariantRecord r{"group:custom", "custom", RecordKind::group, group_moments(g, K), std::nullopt,
                          "fixed points of the permutation group"};
        if (g.degree() == 4) {
            try {
                r.epsilon = [&] { auto m = group_circular(g); return MeasureExpr::atom(orbit_string(m), m); }();
            } catch (const std::domain_error&) {
            }
        }
        return r;
    }
    const auto cat = subgroup_catalog();
    for (const auto& e : cat)
        if (e.alias == spec || e.name == spec) {
            auto r = group_record(e, K);
            r.epsilon = e.expected_epsilon;
            return r;
        }
    std::string key = spec.rfind("so3:", 0) == 0 ? spec.substr(4) : spec;
    for (auto& r : so3_catalog(16, K))
        if (r.id == "so3:" + key || r.name == key) return r;
    for (auto& q : quantum_catalog(8, K))
        if (q.record.id == "quantum:" + key || q.record.name == key) return q.record;
    throw InputError("unknown group '" + spec + "'");
}

InvariantRecord resolve_graph(const std::string& spec, std::size_t K) {
    if (auto j = json_argument(spec)) return graph_record(graph_from_json(*j), K);
    auto r = graph_record(graph_catalog(spec, K), K);
    r.epsilon = graph_epsilon(r.name);
    return r;
}

InvariantRecord resolve_dual(const std::string& spec, std::size_t K) {
    std::string s = spec;
    if (!s.empty() && (s[0] == 'D' || s[0] == 'd')) s = s.substr(1);
    if (s == "inf" || s == "Inf") {
        return {"dual:Dinf", "Dhat_inf", RecordKind::dual, dual_moments(std::nullopt, K), MeasureExpr::uniform(),
                "words in (1,g,1,h) equal to 1 in D_inf"};
    }
    std::int64_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw InputError("unknown dual '" + spec + "' (use D<n> or Dinf)");
    }
    return {"dual:D" + std::to_string(n), "Dhat_" + std::to_string(n), RecordKind::dual, dual_moments(n, K),
            MeasureExpr::d(2 * n), "words in (1,g,1,h) equal to 1 in D_" + std::to_string(n)};
}

InvariantRecord resolve_measure(const std::string& spec, std::size_t K) {
    if (auto j = json_argument(spec)) {
        const auto m = measure_from_json(*j);
        return measure_record(MeasureExpr::atom(orbit_string(m), m), K);
    }
    return measure_record(parse_measure(spec), K);
}

std::string moments_text(const MomentSequence& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

int cmd_invariants(const std::string& kind, const std::string& spec, std::size_t K, const std::string& format) {
    InvariantRecord r;
    if (kind == "group") r = resolve_group(spec, K);
    else if (kind == "graph") r = resolve_graph(spec, K);
    else if (kind == "dual") r = resolve_dual(spec, K);
    else if (kind == "measure") r = resolve_measure(spec, K);
    else throw InputError("unknown kind '" + kind + "'");

    if (format == "json") {
        std::cout << record_to_json(r).dump(2) << "\n";
        return 0;
    }
    std::cout << r.name << " (" << kind_name(r.kind) << ")\n";
    std::cout << "moments: " << moments_text(r.moments) << "\n";
    if (r.epsilon) std::cout << "epsilon: " << r.epsilon->text() << "\n";
    std::cout << "source: " << r.provenance << "\n";
    return 0;
}

void write_or_print(const std::string& dir, const std::string& file, const std::string& body) {
    if (dir.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / file);
    if (!out) throw InputError("cannot write " + (std::filesystem::path(dir) / file).string());
    out << body;
}

int cmd_tables(std::size_t K, const TableOptions& opt, const std::string& format, const std::string& out_dir) {
    std::vector<Table> tables;
    try {
        tables = emit_tables(K, opt);
    } catch (const TableAssertionError& e) {
        std::cerr << "table assertion failed: " << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        if (out_dir.empty()) {
            json all{{"K", K}, {"nmax", opt.nmax}, {"tables", json::array()}};
            for (const auto& t : tables) all["tables"].push_back(table_json(t));
            std::cout << all.dump(2) << "\n";
        } else {
            for (const auto& t : tables) write_or_print(out_dir, t.id + ".json", table_json(t).dump(2) + "\n");
        }
    } else if (format == "csv") {
        for (const auto& t : tables) {
            if (out_dir.empty()) std::cout << "# " << t.id << "\n";
            write_or_print(out_dir, t.id + ".csv", table_csv(t));
        }
    } else {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (out_dir.empty() && i) std::cout << "\n";
            write_or_print(out_dir, tables[i].id + ".txt", table_text(tables[i]));
        }
    }
    if (!out_dir.empty()) std::cerr << tables.size() << " tables written to " << out_dir << "\n";
    return 0;
}

json pauli_residual_table(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::array<double, 5> worst{};
    for (int s = 0; s < samples; ++s) {
        const auto rep = pauli_embed_check(random_special_orthogonal(rng));
        for (std::size_t i = 0; i < worst.size(); ++i) worst[i] = std::max(worst[i], rep.residual[i]);
    }
    json j = json::object();
    for (std::size_t i = 0; i < worst.size(); ++i) j[relation_names()[i]] = worst[i];
    return j;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int samples, const std::string& format) {
    std::vector<std::pair<std::string, std::vector<CheckResult>>> runs;
    if (suite == "measures" || suite == "all") runs.emplace_back("measures", verify_measures());
    if (suite == "relations" || suite == "all") runs.emplace_back("relations", verify_relations(seed, samples));
    if (suite == "fusion" || suite == "all") runs.emplace_back("fusion", verify_fusion());
    if (runs.empty()) throw InputError("unknown suite '" + suite + "'");

    bool ok = true;
    for (const auto& [name, rs] : runs) ok = ok && all_passed(rs);
    if (format == "json") {
        json j{{"pass", ok}, {"suites", json::object()}};
        for (const auto& [name, rs] : runs) {
            json arr = json::array();
            for (const auto& r : rs) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            j["suites"][name] = std::move(arr);
        }
        if (suite == "relations" || suite == "all") j["pauli_residuals"] = pauli_residual_table(seed, samples);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [name, rs] : runs) {
            std::size_t passed = 0;
            for (const auto& r : rs) {
                passed += r.pass;
                std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.name << " (" << r.detail << ")\n";
            }
            std::cout << name << ": " << passed << "/" << rs.size() << " passed\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_match(const std::vector<std::string>& files, std::size_t K, const std::string& format) {
    std::vector<InvariantRecord> recs;
    for (const auto& f : files) {
        auto j = json_argument(f);
        if (!j) throw InputError("cannot read '" + f + "'");
        const json& list = j->is_object() && j->contains("records") ? (*j)["records"] : *j;
        if (list.is_array())
            for (const auto& item : list) recs.push_back(record_from_json(item));
        else recs.push_back(record_from_json(list));
    }
    const auto classes = match(recs, K);
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : classes) arr.push_back({{"members", c.members}, {"moments", moments_json(c.moments)}});
        std::cout << json{{"K", K}, {"classes", arr}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "class " << i + 1 << ":";
        for (const auto& m : classes[i].members) std::cout << " " << m;
        std::cout << "\n  moments: " << moments_text(classes[i].moments) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algebraic invariants of quantum permutation groups on 4 points and ADE graphs"};
    app.require_subcommand(1);

    std::size_t K = 16;
    std::string format = "text";

    auto* inv = app.add_subcommand("invariants", "moments c_0..c_K and the circular measure of one object");
    std::string kind, spec;
    inv->add_option("kind", kind, "group, graph, dual or measure")
        ->required()
        ->check(CLI::IsMember({"group", "graph", "dual", "measure"}));
    inv->add_option("spec", spec, "catalog name (S4, Dtilde6, D3, \"(d_1'+d)/2\") or JSON")->required();
    inv->add_option("--K", K, "moment depth")->check(CLI::Range(1, 400));
    inv->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* tab = app.add_subcommand("tables", "regenerate the classification tables");
    TableOptions topt;
    std::string out_dir;
    tab->add_option("--K", K, "moment depth of the backing assertions")->check(CLI::Range(1, 400));
    tab->add_option("--nmax", topt.nmax, "upper bound for parameterized rows")->check(CLI::Range(3, 64));
    tab->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    tab->add_option("--out", out_dir, "directory for one file per table");
    tab->add_option("--corrupt-root", topt.corrupt_root, "move the root of this graph (test hook)");
    tab->add_flag("--include-excluded", topt.include_excluded, "add the D_2 embedding");

    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    std::uint64_t seed = 42;
    int samples = 100;
    ver->add_option("suite", suite, "measures, relations, fusion or all")
        ->required()
        ->check(CLI::IsMember({"measures", "relations", "fusion", "all"}));
    ver->add_option("--seed", seed, "seed of the special-orthogonal sampler");
    ver->add_option("--samples", samples, "number of Pauli samples")->check(CLI::Range(1, 100000));
    ver->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* mat = app.add_subcommand("match", "group records from JSON files by equal moments");
    std::vector<std::string> files;
    mat->add_option("files", files, "record files (single record, array, or {\"records\": [...]})")->required();
    mat->add_option("--K", K, "moment depth")->check(CLI::Range(1, 400));
    mat->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*inv) return cmd_invariants(kind, spec, K, format);
        if (*tab) return cmd_tables(K, topt, format, out_dir);
        if (*ver) return cmd_verify(suite, seed, samples, format);
        if (*mat) return cmd_match(files, K, format);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
