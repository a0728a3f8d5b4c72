#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcsm/arrangement.hpp"
#include "logcsm/chow.hpp"
#include "logcsm/groebner.hpp"
#include "logcsm/logder.hpp"

namespace logcsm {

struct VerificationReport {
    int n = 0;
    std::optional<ChowClass> lhs;  // csm of the complement
    std::optional<ChowClass> rhs;  // Chern class of the log derivation sheaf
    FreeBasisResult freeness;
    std::optional<LinearTypeResult> linear_type;
    std::optional<std::string> linear_type_error;
    std::optional<bool> equal;  // unset when the rhs is unavailable
    bool euler_check = false;
    std::optional<long long> euler_characteristic;
    std::vector<std::pair<std::string, double>> timings_ms;

    nlohmann::json to_json() const;
};

// Computes both sides of the Chern-class identity for the complement of a
// central arrangement, together with the freeness and linear-type
// hypotheses. Hypothesis checking is advisory: both sides are produced
// whenever computable so out-of-hypothesis behavior can be explored.
VerificationReport verify_formula(const Arrangement& A, const GroebnerOptions& opts = {});

struct JobOptions {
    int degree_bound = -1;
    long step_cap = 1000000;
    bool jacobian = false;  // linear-type: take the Jacobian ideal of the payload first
};

enum class JobKind { VerifyArrangement, Freeness, LinearType, CharPoly, ProofChain };

struct JobSpec {
    JobKind kind;
    std::optional<Arrangement> arrangement;
    std::vector<Polynomial> polynomials;
    std::vector<std::string> varnames;
    int n = 0;  // proof-chain rank bound
    JobOptions options;
};

JobSpec parse_job(const nlohmann::json& j);
Arrangement parse_arrangement(const nlohmann::json& j);

// Exit codes: 0 verified/true, 1 verified-false, 2 inconclusive or
// resource limit, 3 input error.
struct JobResult {
    int exit_code = 3;
    nlohmann::json report;
};

JobResult run_job(const JobSpec& spec);

// Reads a JobSpec JSON file, runs it, and writes the report next to
// `out_path` (empty: no file written).
JobResult run_job_file(const std::filesystem::path& job_path,
                       const std::filesystem::path& out_path);

struct BatchSummary {
    int exit_code = 0;
    std::vector<std::pair<std::string, JobResult>> per_file;  // filename-sorted
    std::string table;
};

BatchSummary batch_verify(const std::filesystem::path& dir,
                          const std::filesystem::path& out_dir);

}  // namespace logcsm
