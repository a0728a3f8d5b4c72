#include "logcsm/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "logcsm/parser.hpp"
#include "logcsm/proj_bundle.hpp"

namespace logcsm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json chow_json(const ChowClass& c) {
    nlohmann::json j = nlohmann::json::array();
    for (long long a : c.coeffs) j.push_back(a);
    return j;
}

std::vector<std::string> presentation_names(const std::vector<std::string>& base, int k) {
    std::vector<std::string> names = base;
    for (int i = 1; i <= k; ++i) names.push_back("T" + std::to_string(i));
    return names;
}

const char* verdict_name(FreenessVerdict v) {
    switch (v) {
        case FreenessVerdict::Free: return "free";
        case FreenessVerdict::CertifiedNonFree: return "certified-non-free";
        case FreenessVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    if (lhs) {
        j["lhs"] = chow_json(*lhs);
        j["lhs_pretty"] = lhs->to_string();
    }
    if (rhs) {
        j["rhs"] = chow_json(*rhs);
        j["rhs_pretty"] = rhs->to_string();
    }
    nlohmann::json hyp;
    hyp["free"]["verdict"] = verdict_name(freeness.verdict);
    if (!freeness.exponents.empty() || freeness.verdict == FreenessVerdict::Free)
        hyp["free"]["exponents"] = freeness.exponents;
    if (!freeness.detail.empty()) hyp["free"]["detail"] = freeness.detail;
    if (linear_type) {
        hyp["linear_type"]["verdict"] = linear_type->linear_type;
        if (linear_type->witness) {
            int base = linear_type->witness->nvars();
            // witness lives in the presentation ring; count T's from the tail
            hyp["linear_type"]["witness"] =
                linear_type->witness->to_string(presentation_names(
                    default_var_names(n + 1), base - (n + 1)));
        }
    } else if (linear_type_error) {
        hyp["linear_type"]["verdict"] = "error";
        hyp["linear_type"]["error"] = *linear_type_error;
    }
    j["hypotheses"] = hyp;
    if (equal)
        j["equal"] = *equal;
    else
        j["equal"] = "not-applicable";
    j["euler_check"] = euler_check;
    if (euler_characteristic) j["euler_characteristic"] = *euler_characteristic;
    nlohmann::json t;
    for (auto& [k, v] : timings_ms) t[k] = v;
    j["timings"] = t;
    return j;
}

VerificationReport verify_formula(const Arrangement& A, const GroebnerOptions& opts) {
    validate(A);
    VerificationReport rep;
    rep.n = A.n;

    auto t0 = Clock::now();
    rep.lhs = csm_complement(A);
    rep.euler_characteristic = euler_characteristic_complement(A);
    rep.euler_check = rep.lhs->coeffs[A.n] == *rep.euler_characteristic;
    rep.timings_ms.emplace_back("lhs", ms_since(t0));

    t0 = Clock::now();
    rep.freeness = arrangement_freeness(A);
    rep.timings_ms.emplace_back("freeness", ms_since(t0));

    if (rep.freeness.verdict == FreenessVerdict::Free) {
        rep.rhs = chern_log_sheaf(rep.freeness.exponents, A.n);
        rep.equal = (*rep.lhs == *rep.rhs);
    }

    t0 = Clock::now();
    if (A.hyperplanes.empty()) {
        rep.linear_type = LinearTypeResult{true, std::nullopt};
    } else {
        try {
            Ideal jac = jacobian_ideal(defining_polynomial(A));
            rep.linear_type = is_linear_type(jac.generators, opts);
        } catch (const ResourceLimitError& e) {
            rep.linear_type_error = e.what();
        }
    }
    rep.timings_ms.emplace_back("linear_type", ms_since(t0));
    return rep;
}

Arrangement parse_arrangement(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes"))
        throw std::invalid_argument("arrangement needs fields 'n' and 'hyperplanes'");
    Arrangement A;
    A.n = j.at("n").get<int>();
    for (auto& row : j.at("hyperplanes")) {
        std::vector<Rational> h;
        for (auto& entry : row) {
            if (entry.is_number_integer())
                h.push_back(Rational(entry.get<long long>()));
            else
                h.push_back(parse_rational(entry.get<std::string>()));
        }
        A.hyperplanes.push_back(std::move(h));
    }
    validate(A);
    return A;
}

JobSpec parse_job(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("job needs a 'kind' field");
    JobSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "verify-arrangement") spec.kind = JobKind::VerifyArrangement;
    else if (kind == "freeness") spec.kind = JobKind::Freeness;
    else if (kind == "linear-type") spec.kind = JobKind::LinearType;
    else if (kind == "char-poly") spec.kind = JobKind::CharPoly;
    else if (kind == "proof-chain") spec.kind = JobKind::ProofChain;
    else throw std::invalid_argument("unknown job kind: " + kind);

    if (j.contains("options")) {
        auto& o = j.at("options");
        if (o.contains("degree_bound")) spec.options.degree_bound = o.at("degree_bound").get<int>();
        if (o.contains("step_cap")) spec.options.step_cap = o.at("step_cap").get<long>();
        if (o.contains("jacobian")) spec.options.jacobian = o.at("jacobian").get<bool>();
    }

    switch (spec.kind) {
        case JobKind::VerifyArrangement:
        case JobKind::CharPoly:
            if (!j.contains("arrangement"))
                throw std::invalid_argument("job needs an 'arrangement' payload");
            spec.arrangement = parse_arrangement(j.at("arrangement"));
            break;
        case JobKind::ProofChain:
            if (!j.contains("n")) throw std::invalid_argument("job needs 'n'");
            spec.n = j.at("n").get<int>();
            if (spec.n < 1 || spec.n > 8)
                throw std::invalid_argument("proof-chain rank bound out of range");
            break;
        case JobKind::Freeness:
        case JobKind::LinearType: {
            if (!j.contains("polynomial"))
                throw std::invalid_argument("job needs a 'polynomial' payload");
            std::string text = j.at("polynomial").get<std::string>();
            if (j.contains("variables"))
                spec.varnames = j.at("variables").get<std::vector<std::string>>();
            else
                spec.varnames = detect_variables(text);
            if (spec.varnames.empty())
                throw std::invalid_argument("no variables in polynomial payload");
            // comma-separated generator lists are allowed
            std::stringstream ss(text);
            std::string piece;
            while (std::getline(ss, piece, ','))
                spec.polynomials.push_back(parse_polynomial(piece, spec.varnames));
            if (spec.polynomials.empty())
                throw std::invalid_argument("empty polynomial payload");
            break;
        }
    }
    return spec;
}

JobResult run_job(const JobSpec& spec) {
    JobResult res;
    GroebnerOptions gopts;
    gopts.step_cap = spec.options.step_cap;
    try {
        switch (spec.kind) {
            case JobKind::VerifyArrangement: {
                VerificationReport rep = verify_formula(*spec.arrangement, gopts);
                res.report = rep.to_json();
                res.report["kind"] = "verify-arrangement";
                bool hypothesis_false =
                    rep.freeness.verdict == FreenessVerdict::CertifiedNonFree ||
                    (rep.linear_type && !rep.linear_type->linear_type);
                bool inconclusive =
                    rep.freeness.verdict == FreenessVerdict::Inconclusive ||
                    rep.linear_type_error.has_value();
                if (rep.equal.has_value() && !hypothesis_false && !inconclusive)
                    res.exit_code = *rep.equal ? 0 : 1;
                else if (hypothesis_false)
                    res.exit_code = 1;
                else
                    res.exit_code = 2;
                break;
            }
            case JobKind::Freeness: {
                const Polynomial& h = spec.polynomials.front();
                FreeBasisResult r = find_free_basis(h, spec.options.degree_bound);
                res.report["kind"] = "freeness";
                res.report["verdict"] = r.verdict == FreenessVerdict::Free
                                            ? "free"
                                            : (r.verdict == FreenessVerdict::CertifiedNonFree
                                                   ? "certified-non-free"
                                                   : "inconclusive");
                if (r.certificate) {
                    res.report["exponents"] = r.exponents;
                    res.report["unit"] = rational_to_string(r.certificate->unit);
                    nlohmann::json basis = nlohmann::json::array();
                    for (auto& theta : r.certificate->basis) {
                        nlohmann::json row = nlohmann::json::array();
                        for (auto& p : theta.coeffs) row.push_back(p.to_string(spec.varnames));
                        basis.push_back(row);
                    }
                    res.report["basis"] = basis;
                    res.report["determinant"] =
                        r.certificate->determinant.to_string(spec.varnames);
                }
                if (!r.detail.empty()) res.report["detail"] = r.detail;
                res.exit_code = r.verdict == FreenessVerdict::Free
                                    ? 0
                                    : (r.verdict == FreenessVerdict::CertifiedNonFree ? 1 : 2);
                break;
            }
            case JobKind::LinearType: {
                std::vector<Polynomial> gens = spec.polynomials;
                if (spec.options.jacobian) {
                    if (gens.size() != 1)
                        throw std::invalid_argument("jacobian option expects one polynomial");
                    gens = jacobian_ideal(gens.front()).generators;
                }
                LinearTypeResult r = is_linear_type(gens, gopts);
                res.report["kind"] = "linear-type";
                res.report["linear_type"] = r.linear_type;
                if (r.witness) {
                    int base = (int)spec.varnames.size();
                    res.report["witness"] = r.witness->to_string(
                        presentation_names(spec.varnames, r.witness->nvars() - base));
                }
                res.exit_code = r.linear_type ? 0 : 1;
                break;
            }
            case JobKind::CharPoly: {
                CharPoly chi = characteristic_polynomial(*spec.arrangement);
                res.report["kind"] = "char-poly";
                res.report["coefficients"] = chi.coeffs;
                res.report["pretty"] = chi.to_string();
                res.exit_code = 0;
                break;
            }
            case JobKind::ProofChain: {
                ProofChainResult r = proof_chain_check(spec.n);
                res.report["kind"] = "proof-chain";
                res.report["n"] = spec.n;
                res.report["ok"] = r.ok;
                nlohmann::json steps = nlohmann::json::array();
                for (auto& s : r.steps)
                    steps.push_back({{"label", s.label}, {"form", s.rendered}, {"ok", s.ok}});
                res.report["transcript"] = steps;
                res.exit_code = r.ok ? 0 : 1;
                break;
            }
        }
    } catch (const ResourceLimitError& e) {
        res.report["error"] = e.what();
        res.exit_code = 2;
    } catch (const std::exception& e) {
        res.report["error"] = e.what();
        res.exit_code = 3;
    }
    return res;
}

JobResult run_job_file(const std::filesystem::path& job_path,
                       const std::filesystem::path& out_path) {
    JobResult res;
    try {
        std::ifstream in(job_path);
        if (!in) throw std::invalid_argument("cannot open " + job_path.string());
        nlohmann::json j = nlohmann::json::parse(in);
        res = run_job(parse_job(j));
    } catch (const std::exception& e) {
        res.exit_code = 3;
        res.report = {{"error", e.what()}};
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << res.report.dump(2) << "\n";
    }
    return res;
}

BatchSummary batch_verify(const std::filesystem::path& dir,
                          const std::filesystem::path& out_dir) {
    BatchSummary summary;
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(dir))
        for (auto& e : std::filesystem::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".json")
                files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::ostringstream table;
    table << "case\tequal\tfree\tlinear_type\texit\n";
    for (auto& f : files) {
        std::filesystem::path out;
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            out = out_dir / (f.stem().string() + ".report.json");
        }
        JobResult r = run_job_file(f, out);
        summary.exit_code = std::max(summary.exit_code, r.exit_code);
        auto field = [&](const char* key) -> std::string {
            if (!r.report.contains(key)) return "-";
            return r.report.at(key).dump();
        };
        std::string free_v = "-";
        if (r.report.contains("hypotheses") && r.report["hypotheses"].contains("free"))
            free_v = r.report["hypotheses"]["free"]["verdict"].get<std::string>();
        std::string lt = "-";
        if (r.report.contains("hypotheses") && r.report["hypotheses"].contains("linear_type"))
            lt = r.report["hypotheses"]["linear_type"]["verdict"].dump();
        table << f.filename().string() << "\t" << field("equal") << "\t" << free_v << "\t"
              << lt << "\t" << r.exit_code << "\n";
        summary.per_file.emplace_back(f.filename().string(), std::move(r));
    }
    summary.table = table.str();
    return summary;
}

}  // namespace logcsm
