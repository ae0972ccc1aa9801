#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsfan/tableaux.hpp"

namespace lsfan {

using Json = nlohmann::ordered_json;

// A batch job: instance description plus the command to run on it.
struct JobSpec {
    std::string command;
    char type = 'A';
    int rank = 0;
    std::vector<Weight> lambdas;
    Json tau = "w0";         // "w0", "e", {"word": [...]} (1-based), {"one_line": "312"} or a type-A label
    Json iposet = "chain";   // "chain", "powerset" or a list of 1-based subsets
    std::vector<std::vector<int>> degrees;
    std::optional<int> degree_bound;  // adds every degree with |d| <= bound
    bool conjecture = false;
    Json tableau;            // optional tableau for `check`
    std::string format = "json";
    std::string out;
};

JobSpec parse_job(Json const& j);
JobSpec load_job(std::string const& path);

struct CommandResult {
    int exit_code = 0;  // 0 success, 1 verification failure, 2 invalid input
    std::string output;
    std::vector<std::string> messages;  // human-readable lines for stderr
};

// Runs a job; InvalidInput and malformed JSON become exit code 2.
CommandResult run_command(JobSpec const& job);

// Writes through a temporary file and a rename, so readers never see partial output.
void write_atomically(std::string const& path, std::string const& content);

// Pieces shared with the acceptance driver.
struct BuiltInstance {
    std::shared_ptr<WeylGroup const> group;
    std::unique_ptr<Instance> instance;
};
BuiltInstance build_instance(JobSpec const& job);
std::vector<std::vector<int>> degree_grid(JobSpec const& job);
Json coset_json(WeylGroup const& g, Coset const& c);
Json dcp_json(Instance const& inst, Dcp const& dcp);
std::string dcp_dot(Instance const& inst, Dcp const& dcp);
Json underline_w_json(Instance const& inst, UnderlineW const& u);
std::string underline_w_dot(Instance const& inst, UnderlineW const& u);
Json fan_vector_json(FanVector const& v);
Json tableau_json(Instance const* inst, WeylGroup const& g, LSTableau const& t);
LSTableau parse_tableau(WeylGroup const& g, Json const& j);

}  // namespace lsfan
