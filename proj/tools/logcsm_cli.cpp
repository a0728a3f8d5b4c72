#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logcsm/parser.hpp"
#include "logcsm/verifier.hpp"

using namespace logcsm;

namespace {

struct CommonArgs {
    std::string input;
    std::string out;
    std::string format = "json";
    int degree_bound = -1;
    long step_cap = 1000000;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input) {
    auto* in = cmd->add_option("--input", args.input, "input file (JSON)");
    if (needs_input) in->required();
    cmd->add_option("--out", args.out, "write the report JSON to this path");
    cmd->add_option("--format", args.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--degree-bound", args.degree_bound, "derivation degree bound");
    cmd->add_option("--step-cap", args.step_cap, "Groebner reduction step cap");
}

int emit(const JobResult& res, const CommonArgs& args) {
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        out << res.report.dump(2) << "\n";
    }
    if (args.format == "json") {
        std::cout << res.report.dump(2) << "\n";
    } else {
        nlohmann::json r = res.report;
        if (r.contains("lhs_pretty")) std::cout << "lhs: " << r["lhs_pretty"].get<std::string>() << "\n";
        if (r.contains("rhs_pretty")) std::cout << "rhs: " << r["rhs_pretty"].get<std::string>() << "\n";
        if (r.contains("equal")) std::cout << "equal: " << r["equal"].dump() << "\n";
        if (r.contains("verdict")) std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
        if (r.contains("linear_type")) std::cout << "linear type: " << r["linear_type"].dump() << "\n";
        if (r.contains("witness")) std::cout << "witness: " << r["witness"].get<std::string>() << "\n";
        if (r.contains("pretty")) std::cout << r["pretty"].get<std::string>() << "\n";
        if (r.contains("ok")) std::cout << "ok: " << r["ok"].dump() << "\n";
        if (r.contains("transcript"))
            for (auto& s : r["transcript"])
                std::cout << "  [" << (s["ok"].get<bool>() ? "ok" : "FAIL") << "] "
                          << s["label"].get<std::string>() << ": "
                          << s["form"].get<std::string>() << "\n";
        if (r.contains("error")) std::cout << "error: " << r["error"].get<std::string>() << "\n";
    }
    return res.exit_code;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return nlohmann::json::parse(in);
}

JobSpec payload_job(const std::string& kind_name, const nlohmann::json& payload_or_job,
                    const CommonArgs& args) {
    nlohmann::json j;
    if (payload_or_job.is_object() && payload_or_job.contains("kind")) {
        j = payload_or_job;  // already a full job file
    } else {
        j["kind"] = kind_name;
        j["arrangement"] = payload_or_job;
    }
    j["options"]["degree_bound"] = args.degree_bound;
    j["options"]["step_cap"] = args.step_cap;
    return parse_job(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for Chern classes of logarithmic derivations vs CSM classes "
                 "of arrangement complements"};
    app.require_subcommand(1);

    CommonArgs verify_args, free_args, lt_args, chi_args, chain_args, batch_args;
    std::string poly_text, vars_text;
    std::string lt_poly, lt_vars;
    bool lt_jacobian = false;
    int chain_n = 0;

    auto* verify = app.add_subcommand("verify", "verify the identity for an arrangement");
    add_common(verify, verify_args, true);

    auto* freeness = app.add_subcommand("freeness", "search for a free basis of log derivations");
    add_common(freeness, free_args, false);
    freeness->add_option("--poly", poly_text, "defining polynomial");
    freeness->add_option("--vars", vars_text, "comma-separated variable names");

    auto* linear = app.add_subcommand("linear-type", "Rees = Sym test for an ideal");
    add_common(linear, lt_args, false);
    linear->add_option("--poly", lt_poly, "comma-separated ideal generators");
    linear->add_option("--vars", lt_vars, "comma-separated variable names");
    linear->add_flag("--jacobian", lt_jacobian, "take the Jacobian ideal of the payload first");

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of an arrangement");
    add_common(charpoly, chi_args, true);

    auto* chain = app.add_subcommand("proof-chain", "symbolic pushforward identity check");
    add_common(chain, chain_args, false);
    chain->add_option("--n", chain_n, "rank / base dimension")->required();

    auto* batch = app.add_subcommand("batch", "run a directory of job files");
    add_common(batch, batch_args, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return emit(run_job(payload_job("verify-arrangement", load_json(verify_args.input),
                                            verify_args)),
                        verify_args);
        if (charpoly->parsed())
            return emit(run_job(payload_job("char-poly", load_json(chi_args.input), chi_args)),
                        chi_args);
        if (freeness->parsed() || linear->parsed()) {
            bool is_free = freeness->parsed();
            CommonArgs& args = is_free ? free_args : lt_args;
            nlohmann::json j;
            if (!args.input.empty()) {
                j = load_json(args.input);
            } else {
                j["kind"] = is_free ? "freeness" : "linear-type";
                std::string text = is_free ? poly_text : lt_poly;
                if (text.empty()) throw std::invalid_argument("need --poly or --input");
                j["polynomial"] = text;
                std::string vars = is_free ? vars_text : lt_vars;
                if (!vars.empty()) {
                    std::vector<std::string> names;
                    std::stringstream ss(vars);
                    std::string piece;
                    while (std::getline(ss, piece, ',')) names.push_back(piece);
                    j["variables"] = names;
                }
                if (!is_free && lt_jacobian) j["options"]["jacobian"] = true;
            }
            j["options"]["degree_bound"] = args.degree_bound;
            j["options"]["step_cap"] = args.step_cap;
            if (!is_free && lt_jacobian) j["options"]["jacobian"] = true;
            return emit(run_job(parse_job(j)), args);
        }
        if (chain->parsed()) {
            nlohmann::json j;
            j["kind"] = "proof-chain";
            j["n"] = chain_n;
            return emit(run_job(parse_job(j)), chain_args);
        }
        if (batch->parsed()) {
            BatchSummary s = batch_verify(batch_args.input,
                                          batch_args.out.empty() ? "" : batch_args.out);
            std::cout << s.table;
            return s.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
