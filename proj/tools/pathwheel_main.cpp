// Command-line front end. Every subcommand prints one JSON envelope
// {command, parameters, status, result} on stdout and exits 0 (ok),
// 1 (violation found), 2 (usage error) or 3 (resource limit). --plain
// swaps the envelope for human-readable text. Nothing time-dependent is
// ever printed, so equal inputs give byte-equal output.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pathwheel/errors.hpp"
#include "pathwheel/formula.hpp"
#include "pathwheel/graph.hpp"
#include "pathwheel/lemmalab.hpp"
#include "pathwheel/report_json.hpp"
#include "pathwheel/search.hpp"
#include "pathwheel/witness.hpp"

namespace {

using pw::Json;

struct Outcome {
    std::string status = "ok";
    Json result;
};

int exit_code(const std::string& status) {
    if (status == "ok") return 0;
    if (status == "violation") return 1;
    if (status == "usage-error") return 2;
    return 3; // resource-limit
}

// "exhaustive:K" or "randomized:COUNT[:SEED]".
pw::lemmalab::Corpus parse_corpus(const std::string& spec) {
    const auto bad = [&] {
        throw std::invalid_argument("corpus spec must be exhaustive:K or randomized:COUNT[:SEED], got '" +
                                    spec + "'");
    };
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = spec.find(':', start);
        fields.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    try {
        if (fields[0] == "exhaustive" && fields.size() == 2)
            return pw::lemmalab::Corpus::exhaustive(std::stoi(fields[1]));
        if (fields[0] == "randomized" && (fields.size() == 2 || fields.size() == 3))
            return pw::lemmalab::Corpus::randomized(std::stoull(fields[1]),
                                                    fields.size() == 3 ? std::stoull(fields[2]) : 1);
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    bad();
    return {};
}

void print_plain(std::ostream& os, const std::string& command, const Outcome& out) {
    os << command << ": " << out.status << "\n";
    if (command == "table") {
        const Json& r = out.result;
        const long long m_lo = r["m_lo"].get<long long>();
        long long n = r["n_lo"].get<long long>();
        os << "R(P_n, W_m), rows n = " << n << ".." << r["n_hi"].get<long long>() << ", columns m = "
           << m_lo << ".." << r["m_hi"].get<long long>() << "\n";
        for (const Json& row : r["values"]) {
            os << "n=" << n++ << ":";
            for (const Json& v : row) os << " " << v.get<long long>();
            os << "\n";
        }
        if (!r["s_bounds"].empty()) {
            os << "s bound for n >= 5:";
            for (const Json& v : r["s_bounds"]) os << " " << v.get<long long>();
            os << "\n";
        }
        return;
    }
    os << out.result.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ramsey numbers for paths versus wheels"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --plain and friends appear after the subcommand
    bool plain = false;
    app.add_flag("--plain", plain, "human-readable output instead of the JSON envelope");

    long long n = 0, m = 0, t = 0, n_max = 0, m_max = 0;
    std::string family = "wheel", lemma, corpus_spec;
    bool emit_graph6 = false;
    pw::search::SearchLimits limits;

    const auto add_limit_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-component", limits.detector.max_component_order_for_path_dp,
                        "largest component the path detector will take");
        cmd->add_option("--max-order", limits.detector.max_order_for_cycle_search,
                        "largest graph the cycle detector will take");
        cmd->add_option("--budget", limits.catalogue_budget, "enumeration budget");
        cmd->add_option("--threads", limits.threads, "worker threads, 0 = all");
    };

    CLI::App* compute = app.add_subcommand("compute", "Ramsey value for one pair");
    compute->add_option("--n", n, "path order")->required();
    compute->add_option("--m", m, "other order (rim for wheels)")->required();
    compute->add_option("--family", family, "wheel, path or cycle")
        ->check(CLI::IsMember({"wheel", "path", "cycle"}));

    CLI::App* table = app.add_subcommand("table", "value grid plus the deficiency bound row");
    table->add_option("--n-max", n_max, "largest n, at least 3")->required();
    table->add_option("--m-max", m_max, "largest m, default 2*n-max+3");

    CLI::App* witness = app.add_subcommand("witness", "lower-bound clique partition");
    witness->add_option("--n", n)->required();
    witness->add_option("--m", m)->required();
    witness->add_flag("--emit-graph6", emit_graph6, "include the witness graph itself");

    CLI::App* verify_witness_cmd = app.add_subcommand("verify-witness", "re-check the witness graph");
    verify_witness_cmd->add_option("--n", n)->required();
    verify_witness_cmd->add_option("--m", m)->required();
    add_limit_flags(verify_witness_cmd);

    CLI::App* verify_upper = app.add_subcommand("verify-upper", "exhaustive check on t vertices");
    verify_upper->add_option("--n", n)->required();
    verify_upper->add_option("--m", m)->required();
    verify_upper->add_option("--t", t, "order to scan")->required();
    add_limit_flags(verify_upper);

    CLI::App* confirm = app.add_subcommand("confirm", "formula value pinned from both sides");
    confirm->add_option("--n", n)->required();
    confirm->add_option("--m", m)->required();
    add_limit_flags(confirm);

    CLI::App* lemma_suite = app.add_subcommand("lemma-suite", "run one statement over a corpus");
    lemma_suite->add_option("--lemma", lemma, "statement id, L2.1 .. L9")->required();
    lemma_suite->add_option("--corpus", corpus_spec, "exhaustive:K or randomized:COUNT[:SEED]")->required();
    add_limit_flags(lemma_suite);

    CLI::App* oracle_compare = app.add_subcommand("oracle-compare", "formula against the scan oracle");
    oracle_compare->add_option("--n-max", n_max, "largest n, at least 2")->required();
    oracle_compare->add_option("--m-max", m_max, "largest m")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json envelope;
        envelope["command"] = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
        envelope["parameters"] = Json::object();
        envelope["status"] = "usage-error";
        envelope["result"] = Json{{"error", e.what()}};
        std::cout << envelope.dump() << "\n";
        return 2;
    }

    CLI::App* active = app.get_subcommands()[0];
    const std::string command = active->get_name();

    Json params = Json::object();
    Outcome out;
    try {
        if (active == compute) {
            params = {{"n", n}, {"m", m}, {"family", family}};
            if (family == "wheel") {
                out.result = pw::to_json(pw::formula::ramsey_path_wheel(n, m));
            } else if (family == "path") {
                out.result = Json{{"value", pw::formula::ramsey_path_path(n, m)}};
            } else {
                out.result = Json{{"value", pw::formula::ramsey_path_cycle(n, m)}};
            }
        } else if (active == table) {
            if (n_max < 3) throw std::invalid_argument("table: --n-max must be at least 3");
            if (m_max == 0) m_max = 2 * n_max + 3;
            if (m_max < 3) throw std::invalid_argument("table: --m-max must be at least 3");
            params = {{"n_max", n_max}, {"m_max", m_max}};
            Json values = Json::array();
            for (long long row_n = 2; row_n <= n_max; ++row_n) {
                Json row = Json::array();
                for (long long col_m = 3; col_m <= m_max; ++col_m)
                    row.push_back(pw::formula::ramsey_path_wheel(row_n, col_m).value);
                values.push_back(std::move(row));
            }
            Json s_bounds = Json::array();
            for (long long row_n = 5; row_n <= std::min<long long>(16, n_max); ++row_n)
                s_bounds.push_back(pw::formula::s_bound(row_n));
            out.result = Json{{"n_lo", 2},          {"n_hi", n_max},   {"m_lo", 3}, {"m_hi", m_max},
                              {"values", values},   {"s_bound_n_lo", 5}, {"s_bounds", s_bounds}};
        } else if (active == witness) {
            params = {{"n", n}, {"m", m}};
            const pw::CliquePartition p = pw::clique_partition(n, m);
            out.result = pw::to_json(p);
            if (emit_graph6) out.result["graph6"] = pw::to_graph6(pw::build_witness(p));
        } else if (active == verify_witness_cmd) {
            params = {{"n", n}, {"m", m}};
            const pw::CliquePartition p = pw::clique_partition(n, m);
            const pw::WitnessReport report = pw::verify_witness(n, m, p, limits.detector);
            out.result = Json{{"witness", pw::to_json(p)}, {"report", pw::to_json(report)}};
            if (!(report.path_free && report.wheel_free && report.cross_checked)) out.status = "violation";
        } else if (active == verify_upper) {
            params = {{"n", n}, {"m", m}, {"t", t}};
            const pw::search::SearchReport report =
                pw::search::verify_upper_bound(static_cast<int>(n), static_cast<int>(m),
                                               static_cast<int>(t), limits);
            out.result = pw::to_json(report);
            if (!report.verified) out.status = "violation";
        } else if (active == confirm) {
            params = {{"n", n}, {"m", m}};
            const pw::search::ConfirmReport report =
                pw::search::confirm_ramsey(static_cast<int>(n), static_cast<int>(m), limits);
            out.result = pw::to_json(report);
            const bool good = report.upper_verified && report.witness_report.path_free &&
                              report.witness_report.wheel_free && report.witness_report.cross_checked;
            if (!good) out.status = "violation";
        } else if (active == lemma_suite) {
            params = {{"lemma", lemma}, {"corpus", corpus_spec}};
            const pw::lemmalab::LemmaId id = pw::lemmalab::lemma_id_from_string(lemma);
            const pw::lemmalab::Corpus corpus = parse_corpus(corpus_spec);
            const pw::lemmalab::SuiteResult result =
                pw::lemmalab::run_suite(id, corpus, limits.detector, limits.threads);
            out.result = pw::to_json(result);
            if (!result.violations.empty()) out.status = "violation";
        } else { // oracle-compare
            if (n_max < 2) throw std::invalid_argument("oracle-compare: --n-max must be at least 2");
            params = {{"n_max", n_max}, {"m_max", m_max}};
            std::uint64_t checked = 0;
            Json mismatches = Json::array();
            for (long long nn = 2; nn <= n_max; ++nn)
                for (long long mm = 2 * nn + 1; mm <= m_max; ++mm) {
                    const long long formula_value = pw::formula::ramsey_path_wheel(nn, mm).value;
                    const long long oracle_value = pw::formula::t_min_char(nn, mm);
                    ++checked;
                    if (formula_value != oracle_value)
                        mismatches.push_back(Json{{"n", nn},
                                                  {"m", mm},
                                                  {"formula", formula_value},
                                                  {"oracle", oracle_value}});
                }
            out.result = Json{{"pairs_checked", checked}, {"mismatches", mismatches}};
            if (!mismatches.empty()) out.status = "violation";
        }
    } catch (const pw::ResourceLimitError& e) {
        out.status = "resource-limit";
        out.result = Json{{"error", e.what()}};
    } catch (const std::invalid_argument& e) {
        out.status = "usage-error";
        out.result = Json{{"error", e.what()}};
    }

    if (plain) {
        print_plain(std::cout, command, out);
    } else {
        Json envelope;
        envelope["command"] = command;
        envelope["parameters"] = params;
        envelope["status"] = out.status;
        envelope["result"] = out.result;
        std::cout << envelope.dump() << "\n";
    }
    return exit_code(out.status);
}
