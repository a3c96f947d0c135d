#include "foxjump/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "foxjump/covers.hpp"
#include "foxjump/fixtures.hpp"
#include "foxjump/fox.hpp"
#include "foxjump/invariants.hpp"
#include "foxjump/strata.hpp"

namespace foxjump {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string builtin;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* b = cmd->add_option("--builtin", builtin, "Built-in presentation")->check(CLI::IsMember({"cs"}));
        auto* f = cmd->add_option("--file", file, "Presentation file (gens:/rel: lines)");
        b->excludes(f);
    }

    bool is_cs() const { return file.empty(); }

    Presentation load() const {
        if (is_cs()) return cartwright_steger();
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        std::stringstream text;
        text << in.rdbuf();
        try {
            return parse_presentation(text.str());
        } catch (const ParseError& e) {
            throw UsageError(file + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(file + ": " + e.what());
        }
    }

    AbelianizationMap assignment(const Presentation& p) const {
        return is_cs() ? cartwright_steger_assignment() : monomial_assignment(p);
    }
};

std::vector<std::string> formats(std::initializer_list<const char*> names) { return {names.begin(), names.end()}; }

// ---- fox ----

struct FoxCommand {
    Source source;
    std::string format = "text";
    std::string entry;

    int run(std::ostream& out) const {
        const auto p = source.load();
        const auto map = source.assignment(p);
        const auto a = alexander_matrix(p, map);
        const auto& names = p.generator_names();

        std::vector<std::pair<std::size_t, std::size_t>> cells;
        if (!entry.empty()) {
            const auto comma = entry.find(',');
            if (comma == std::string::npos) throw UsageError("--entry expects GEN,REL_INDEX");
            std::size_t g = 0;
            try {
                g = p.generator_index(entry.substr(0, comma));
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
            long rel = 0;
            try {
                rel = std::stol(entry.substr(comma + 1));
            } catch (const std::exception&) {
                throw UsageError("--entry relation index must be an integer");
            }
            if (rel < 1 || static_cast<std::size_t>(rel) > p.relation_count())
                throw UsageError("--entry relation index out of range 1.." + std::to_string(p.relation_count()));
            cells.emplace_back(g, static_cast<std::size_t>(rel - 1));
        } else {
            for (std::size_t g = 0; g < a.generators(); ++g)
                for (std::size_t j = 0; j < a.relations(); ++j) cells.emplace_back(g, j);
        }

        if (format == "json") {
            nlohmann::json images = nlohmann::json::object();
            for (std::size_t g = 0; g < names.size(); ++g) images[names[g]] = map.image(g).exps;
            auto entries = nlohmann::json::array();
            for (auto [g, j] : cells)
                entries.push_back({{"generator", names[g]}, {"relation", j + 1}, {"terms", terms_to_json(a(g, j))}});
            out << nlohmann::json{{"variables", map.context->names()}, {"images", images}, {"entries", entries}}.dump(2)
                << '\n';
        } else if (format == "csv") {
            out << "generator,relation,polynomial\n";
            for (auto [g, j] : cells) out << names[g] << ',' << j + 1 << ",\"" << a(g, j).to_string() << "\"\n";
        } else {
            for (auto [g, j] : cells) {
                const auto& poly = a(g, j);
                out << entry_label(names[g], j) << " = " << (format == "paper" ? poly.to_paper_string() : poly.to_string())
                    << '\n';
            }
        }
        return kExitOk;
    }
};

// ---- strata ----

struct StrataCommand {
    Source source;
    std::string format = "text";
    std::string matrix = "computed";
    CertifyOptions options;

    void attach(CLI::App* cmd) {
        source.attach(cmd);
        cmd->add_option("--format", format)->check(CLI::IsMember(formats({"text", "json"})));
        cmd->add_option("--matrix", matrix, "Certify the computed matrix or the fixture tables")
            ->check(CLI::IsMember(formats({"computed", "tables"})));
        cmd->add_option("--modulus-bound", options.modulus_bound)->check(CLI::PositiveNumber);
        cmd->add_option("--samples", options.samples)->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", options.seed);
    }

    int run(std::ostream& out) const {
        const auto p = source.load();
        const auto map = source.assignment(p);
        if (matrix == "tables" && !source.is_cs()) throw UsageError("--matrix tables needs --builtin cs");
        const auto a = matrix == "tables" ? cartwright_steger_tables(map.context) : alexander_matrix(p, map).entries;
        StrataReport report;
        try {
            report = certify_cs_strata(a, options);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (format == "json")
            out << to_json(report).dump(2) << '\n';
        else
            print_report(out, report);
        return report.confirmed ? kExitOk : kExitVerificationFailed;
    }

    static void print_report(std::ostream& out, const StrataReport& r) {
        std::size_t expected = r.torsion_sweep.size() - r.sweep_failures;
        out << "minors divisible by r - s: " << r.minors_divisible << '/' << r.minors_checked << '\n'
            << "line s = r: generic rank " << r.line_generic_rank << ", drop locus "
            << (r.line_drop_locus ? r.line_drop_locus->to_string() : "-") << '\n'
            << "rank at trivial character: " << r.trivial_rank << '\n'
            << "torsion sweep: " << expected << '/' << r.torsion_sweep.size() << " characters at expected rank\n"
            << "sampling (seed " << r.seed << "): " << r.trials << " trials, min rank off line "
            << r.min_rank_off_line << '\n'
            << "verdict: " << r.verdict();
        if (!r.witness.empty()) out << " (" << r.witness << ')';
        out << '\n';
    }
};

// ---- census ----

struct CensusCommand {
    Source source;
    std::string format = "csv";
    std::int64_t n_max = 12;

    void attach(CLI::App* cmd) {
        source.attach(cmd);
        cmd->add_option("--format", format)->check(CLI::IsMember(formats({"csv", "json", "text"})));
        cmd->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    }

    static void print_row(std::ostream& out, const CensusRow& row) {
        out << "n=" << row.n << " hnf=[";
        for (std::size_t k = 0; k < row.hnf.size(); ++k) out << (k ? " " : "") << row.hnf[k];
        out << "] G=";
        bool first = true;
        for (auto d : row.invariant_factors) {
            if (d == 1) continue;
            out << (first ? "" : " x ") << "Z/" << d;
            first = false;
        }
        if (first) out << '1';
        out << " b1=" << row.b1 << '\n';
    }

    int run(std::ostream& out) const {
        const auto p = source.load();
        const auto map = source.assignment(p);
        if (format == "csv") write_csv_header(out);
        CensusSummary summary;
        try {
            summary = betti_census(p, map, n_max, [&](const CensusRow& row) {
                if (format == "csv")
                    write_csv_row(out, row);
                else if (format == "json")
                    out << to_json(row).dump() << '\n';
                else
                    print_row(out, row);
            });
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (format == "text") {
            for (const auto& t : summary.per_n)
                out << "n=" << t.n << " covers=" << t.rows << " expected=" << t.sigma << " b1=" << t.min_b1
                    << (t.min_b1 == t.max_b1 ? "" : ".." + std::to_string(t.max_b1)) << '\n';
        }
        return kExitOk;
    }
};

// ---- count ----

struct CountCommand {
    std::int64_t n = 0;
    std::size_t dim = 2;
    std::string format = "text";

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "Index")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--dim", dim, "Rank of the ambient lattice")->check(CLI::PositiveNumber);
        cmd->add_option("--format", format)->check(CLI::IsMember(formats({"text", "json"})));
    }

    int run(std::ostream& out) const {
        const auto lattices = sublattices(n, dim);
        if (format == "json") {
            auto list = nlohmann::json::array();
            for (const auto& l : lattices) list.push_back(l.upper_triangle());
            nlohmann::json doc{{"n", n}, {"dim", dim}, {"count", lattices.size()}, {"hnf", list}};
            if (dim == 2) doc["sigma"] = divisor_sum(n);
            out << doc.dump(2) << '\n';
            return kExitOk;
        }
        out << lattices.size() << '\n';
        for (const auto& l : lattices) {
            const auto& b = l.basis();
            out << '[';
            for (std::size_t i = 0; i < b.rows(); ++i) {
                out << (i ? ", [" : "[");
                for (std::size_t j = 0; j < b.cols(); ++j) out << (j ? ", " : "") << b(i, j).get_str();
                out << ']';
            }
            out << "]\n";
        }
        return kExitOk;
    }
};

// ---- invariants ----

struct InvariantsCommand {
    std::optional<std::int64_t> q, pg, c2, cover;

    void attach(CLI::App* cmd) {
        auto* cov = cmd->add_option("--cover", cover, "Degree of an abelian cover of the builtin surface");
        auto* qo = cmd->add_option("--q", q);
        auto* po = cmd->add_option("--pg", pg);
        auto* co = cmd->add_option("--c2", c2);
        for (auto* o : {qo, po, co}) o->excludes(cov);
    }

    int run(std::ostream& out, std::ostream& err) const {
        SurfaceInvariants s;
        try {
            if (cover) {
                s = cover_invariants(*cover);
            } else {
                if (!q || !pg || !c2) throw UsageError("invariants needs --q, --pg and --c2, or --cover");
                s = surface_invariants(*q, *pg, *c2);
            }
        } catch (const BoundViolation& e) {
            err << "invariants: " << e.what() << '\n';
            return kExitVerificationFailed;
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out << to_json(s).dump(2) << '\n';
        return kExitOk;
    }
};

// ---- verify-cs ----

struct VerifyCommand {
    std::string format = "text";
    CertifyOptions options;
    std::int64_t n_max = 12;
    std::optional<std::size_t> mutate;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember(formats({"text", "json"})));
        cmd->add_option("--modulus-bound", options.modulus_bound)->check(CLI::PositiveNumber);
        cmd->add_option("--samples", options.samples)->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", options.seed);
        cmd->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
        cmd->add_option("--mutate-fixture", mutate, "Add 1 to table entry K (0..35, row-major) before comparing")
            ->check(CLI::Range(0, 35));
    }

    int run(std::ostream& out, std::ostream& err) const {
        const auto& p = cartwright_steger();
        const auto map = cartwright_steger_assignment();
        const auto a = alexander_matrix(p, map);
        auto tables = cartwright_steger_tables(map.context);
        if (mutate) {
            auto& cell = tables(*mutate / a.relations(), *mutate % a.relations());
            cell += LaurentPoly::constant(map.context, 1);
        }

        std::vector<std::string> mismatches;
        for (std::size_t g = 0; g < a.generators(); ++g)
            for (std::size_t j = 0; j < a.relations(); ++j)
                if (!(a(g, j) == tables(g, j))) mismatches.push_back(entry_label(p.generator_names()[g], j));
        const auto total = a.generators() * a.relations();
        const bool tables_ok = mismatches.empty();

        const auto report = certify_cs_strata(a.entries, options);

        const auto census = betti_census(p, map, n_max);
        const bool census_ok = census.counts_match() && census.all_b1_equal(2);

        // q = b1 / 2 from the census must agree with the invariants of every cover.
        bool invariants_ok = true;
        const auto base = cover_invariants(1);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const auto s = cover_invariants(n);
            invariants_ok = invariants_ok && s.noether_holds() && s.hodge_holds() && s.ball_quotient &&
                            s.chi == n * base.chi && s.p_g == n && 2 * s.q == census.base_b1;
        }

        std::vector<std::pair<std::string, bool>> checks{{"tables", tables_ok},
                                                         {"strata", report.confirmed},
                                                         {"census", census_ok},
                                                         {"invariants", invariants_ok}};
        std::string first_failure;
        for (const auto& [name, ok] : checks)
            if (!ok && first_failure.empty()) first_failure = name;

        if (format == "json") {
            out << nlohmann::json{{"tables",
                                   {{"matched", total - mismatches.size()}, {"total", total}, {"mismatches", mismatches}}},
                                  {"strata", to_json(report)},
                                  {"census", to_json(census)},
                                  {"invariants", {{"n_max", n_max}, {"consistent", invariants_ok}}},
                                  {"passed", first_failure.empty()},
                                  {"first_failure", first_failure}}
                       .dump(2)
                << '\n';
        } else {
            out << "tables: " << total - mismatches.size() << '/' << total << " entries match";
            for (std::size_t k = 0; k < mismatches.size(); ++k) out << (k ? ", " : "; mismatched ") << mismatches[k];
            out << '\n';
            StrataCommand::print_report(out, report);
            out << "census: n <= " << n_max << ", " << census.total_rows << " covers, "
                << (census.all_b1_equal(2) ? "all b1 = 2" : "b1 != 2 for some cover") << ", counts "
                << (census.counts_match() ? "match sigma(n)" : "differ from sigma(n)") << '\n'
                << "invariants: " << (invariants_ok ? "consistent" : "inconsistent") << " for n <= " << n_max << '\n';
        }
        if (!first_failure.empty()) {
            err << "verify-cs: check failed: " << first_failure;
            if (first_failure == "tables") err << " (" << mismatches.front() << ")";
            if (first_failure == "strata") err << " (" << report.witness << ")";
            err << '\n';
            return kExitVerificationFailed;
        }
        return kExitOk;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fox calculus, Alexander strata and abelian cover Betti numbers", "foxjump"};
    app.require_subcommand(1);

    FoxCommand fox;
    auto* fox_cmd = app.add_subcommand("fox", "Print the Alexander matrix of Fox derivatives");
    fox.source.attach(fox_cmd);
    fox_cmd->add_option("--format", fox.format)->check(CLI::IsMember(formats({"text", "json", "csv", "paper"})));
    fox_cmd->add_option("--entry", fox.entry, "Single entry GEN,REL_INDEX (1-based relation)");

    StrataCommand strata;
    auto* strata_cmd = app.add_subcommand("strata", "Certify the Alexander stratification");
    strata.attach(strata_cmd);

    CensusCommand census;
    auto* census_cmd = app.add_subcommand("census", "b1 of every abelian cover up to a given degree");
    census.attach(census_cmd);

    CountCommand count;
    auto* count_cmd = app.add_subcommand("count", "List the sublattices of a given index");
    count.attach(count_cmd);

    InvariantsCommand invariants;
    auto* invariants_cmd = app.add_subcommand("invariants", "Characteristic numbers of a surface");
    invariants.attach(invariants_cmd);

    VerifyCommand verify;
    auto* verify_cmd = app.add_subcommand("verify-cs", "Full verification pipeline for the builtin presentation");
    verify.attach(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (fox_cmd->parsed()) return fox.run(out);
        if (strata_cmd->parsed()) return strata.run(out);
        if (census_cmd->parsed()) return census.run(out);
        if (count_cmd->parsed()) return count.run(out);
        if (invariants_cmd->parsed()) return invariants.run(out, err);
        if (verify_cmd->parsed()) return verify.run(out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace foxjump
