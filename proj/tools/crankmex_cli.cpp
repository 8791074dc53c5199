// Batch interface over the crankmex library: statistic tables, identity
// verification, and bijection checks/traces, emitted as CSV or JSON.
//
// Exit codes: 0 = success and all checks pass, 1 = a check failed or a
// map precondition was violated, 2 = usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "crankmex/bijections.hpp"
#include "crankmex/builders.hpp"
#include "crankmex/identities.hpp"
#include "crankmex/stats.hpp"

namespace cm = crankmex;
namespace bij = crankmex::bijections;
namespace ids = crankmex::identities;

namespace {

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

std::string reports_to_json(const std::vector<ids::VerifyReport>& reports) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) os << ",";
        os << reports[i].to_json();
    }
    os << "]\n";
    return os.str();
}

std::string params_to_string(const ids::Params& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) os << ";";
        os << key << "=" << value;
        first = false;
    }
    return os.str();
}

std::string reports_to_csv(const std::vector<ids::VerifyReport>& reports) {
    std::ostringstream os;
    os << "id,params,order,pass\n";
    for (const ids::VerifyReport& r : reports)
        os << r.id << "," << params_to_string(r.params) << "," << r.order << ","
           << (r.pass ? "true" : "false") << "\n";
    return os.str();
}

std::string map_report_csv(const bij::MapReport& r) {
    std::ostringstream os;
    os << "name,domain_size,involution_ok,weight_ok,sign_ok,fixed_point_ok,all_ok\n";
    os << r.name << "," << r.domain_size << "," << r.involution_ok << "," << r.weight_ok << ","
       << r.sign_ok << "," << r.fixed_point_ok << "," << r.all_ok() << "\n";
    return os.str();
}

bool contains(const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string trace_annotation(const std::string& name, const cm::Partition& in,
                             const cm::Partition& out, int j) {
    if (in == out) return "[fixed]";
    if (name == "franklin") {
        if (out.length() < in.length()) {
            int s = in.parts().back();
            return "[moved: part " + std::to_string(s) + " onto the " + std::to_string(s) +
                   " largest parts]";
        }
        int r = out.parts().back();
        return "[moved: staircase of length " + std::to_string(r) + " to a new part]";
    }
    if (name == "cor38") {
        bij::Cor38Parts a = bij::cor38_decompose(in);
        bij::Cor38Parts b = bij::cor38_decompose(out);
        if (b.nu.length() > a.nu.length()) {
            int moved = b.nu.weight() - a.nu.weight();
            return "[moved: part " + std::to_string(moved) + " from pi to nu]";
        }
        int moved = b.pi.weight() - a.pi.weight();
        return "[moved: part " + std::to_string(moved) + " from nu to pi]";
    }
    if (name == "crank0") {
        int d = cm::omega(in);
        return "[moved: " + std::to_string(d) + " parts 1 to a row of length " +
               std::to_string(d) + "]";
    }
    if (name == "crank_le_neg_j") {
        int d = cm::durfee_rect(in, j);
        return "[deleted " + std::to_string(d + j) + " parts 1, raised " + std::to_string(d) +
               " parts]";
    }
    return "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crank/mex partition statistics, identity checks, and bijections"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.fallthrough();

    auto* stats_cmd = app.add_subcommand("stats", "emit one statistic for n = 0..max-n");
    std::string stat_name;
    int max_n = 30;
    int j_flag = 0;
    stats_cmd->add_option("name", stat_name, "statistic name")->required();
    stats_cmd->add_option("--max-n", max_n, "largest weight");
    stats_cmd->add_option("--j", j_flag, "crank bound parameter");

    auto* table1_cmd = app.add_subcommand("table1", "the nine refined odd-mex rows, n = 2..15");

    auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
    std::string verify_id;
    bool verify_all_flag = false;
    int order = 40;
    std::optional<int> verify_j, verify_m;
    verify_cmd->add_option("id", verify_id, "catalog entry id");
    verify_cmd->add_flag("--all", verify_all_flag, "run the whole catalog over its default grid");
    verify_cmd->add_option("--order", order, "truncation order");
    verify_cmd->add_option("--j", verify_j, "value for entries parameterized by j");
    verify_cmd->add_option("--m", verify_m, "value for entries parameterized by m");

    auto* bij_cmd = app.add_subcommand("bijection", "check or trace one combinatorial map");
    std::string bij_name;
    std::optional<int> check_bound;
    std::optional<std::string> trace_text;
    int bij_j = 0;
    bij_cmd->add_option("name", bij_name, "map name")->required();
    bij_cmd->add_option("--check", check_bound, "verify exhaustively up to this weight");
    bij_cmd->add_option("--trace", trace_text, "apply the map to one partition");
    bij_cmd->add_option("--j", bij_j, "parameter for the j-indexed maps");

    auto* seq_cmd = app.add_subcommand("sequence", "emit a reference sequence");
    std::string seq_name;
    int seq_max_n = 30;
    seq_cmd->add_option("name", seq_name, "a064428 | p | q | q_o | q_e | euler_product")
        ->required();
    seq_cmd->add_option("--max-n", seq_max_n, "largest index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stats_cmd->parsed()) {
            cm::StatTable t = cm::stat_table(stat_name, max_n, j_flag);
            return emit(format == "json" ? cm::table_to_json(t) + "\n" : cm::table_to_csv(t),
                        out_path);
        }

        if (table1_cmd->parsed()) {
            auto rows = cm::table1();
            return emit(format == "json" ? cm::rows_to_json(rows) + "\n" : cm::rows_to_csv(rows),
                        out_path);
        }

        if (verify_cmd->parsed()) {
            std::vector<ids::VerifyReport> reports;
            if (verify_all_flag) {
                reports = ids::verify_all(order);
            } else {
                if (verify_id.empty()) {
                    std::cerr << "error: verify needs an id or --all\n";
                    return 2;
                }
                const ids::IdentityEntry& entry = ids::find_entry(verify_id);
                ids::Params params;
                if (verify_j) params["j"] = *verify_j;
                if (verify_m) params["m"] = *verify_m;
                ids::Tables tables(order);
                reports.push_back(ids::verify(entry, params, order, tables));
            }
            int rc =
                emit(format == "json" ? reports_to_json(reports) : reports_to_csv(reports),
                     out_path);
            if (rc != 0) return rc;
            for (const ids::VerifyReport& r : reports)
                if (!r.pass) return 1;
            return 0;
        }

        if (bij_cmd->parsed()) {
            bool is_involution = contains(bij::involution_names(), bij_name);
            bool is_bijection = contains(bij::bijection_names(), bij_name);
            if (!is_involution && !is_bijection) {
                std::cerr << "error: unknown map " << bij_name << "\n";
                return 2;
            }
            if (check_bound && trace_text) {
                std::cerr << "error: pass --check or --trace, not both\n";
                return 2;
            }
            if (check_bound) {
                bij::MapReport r = is_involution
                                       ? bij::check_named_involution(bij_name, *check_bound, bij_j)
                                       : bij::check_named_bijection(bij_name, *check_bound, bij_j);
                int rc = emit(format == "json" ? r.to_json() + "\n" : map_report_csv(r), out_path);
                if (rc != 0) return rc;
                return r.all_ok() ? 0 : 1;
            }
            if (trace_text) {
                cm::Partition in = cm::parse_partition(*trace_text);
                cm::Partition result;
                if (bij_name == "franklin")
                    result = bij::franklin(in);
                else if (bij_name == "cor38")
                    result = bij::cor38_involution(in);
                else if (bij_name == "crank0")
                    result = bij::crank0_map(in);
                else if (bij_name == "crank_le_neg_j")
                    result = bij::crank_le_neg_j_map(in, bij_j);
                else {
                    std::cerr << "error: " << bij_name
                              << " traces triples; only --check is supported\n";
                    return 2;
                }
                std::ostringstream os;
                os << cm::format_partition(in) << " → " << cm::format_partition(result);
                std::string note = trace_annotation(bij_name, in, result, bij_j);
                if (!note.empty()) os << " " << note;
                os << "\n";
                return emit(os.str(), out_path);
            }
            std::cerr << "error: bijection needs --check or --trace\n";
            return 2;
        }

        if (seq_cmd->parsed()) {
            cm::StatTable t;
            if (seq_name == "a064428") {
                t = cm::odd_mex_reference();
                if (seq_max_n < t.last_n()) {
                    int keep = std::max(0, seq_max_n - t.first_n + 1);
                    t.values.resize(static_cast<std::size_t>(keep));
                }
            } else if (seq_name == "p" || seq_name == "q" || seq_name == "q_o" ||
                       seq_name == "q_e") {
                t = cm::stat_table(seq_name, seq_max_n);
            } else if (seq_name == "euler_product") {
                cm::Series s = cm::pentagonal_series(seq_max_n);
                t.name = seq_name;
                t.first_n = 0;
                for (int k = 0; k <= seq_max_n; ++k)
                    t.values.push_back(static_cast<cm::Count>(s.coeff(k).convert_to<long long>()));
            } else {
                std::cerr << "error: unknown sequence " << seq_name << "\n";
                return 2;
            }
            return emit(format == "json" ? cm::table_to_json(t) + "\n" : cm::table_to_csv(t),
                        out_path);
        }
    } catch (const std::invalid_argument& e) {
        // Contract violations on user input: unknown names or parameters
        // out of range are usage errors; map preconditions are check
        // failures.
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        bool usage = what.find("unknown") != std::string::npos ||
                     what.find("out of range") != std::string::npos ||
                     what.find("takes no parameter") != std::string::npos ||
                     what.find("needs parameter") != std::string::npos;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
