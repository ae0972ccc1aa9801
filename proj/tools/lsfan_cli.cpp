#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lsfan/commands.hpp"

namespace {

std::vector<std::string> split(std::string const& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

lsfan::Json int_row(std::string const& s)
{
    lsfan::Json row = lsfan::Json::array();
    for (auto const& x : split(s, ',')) row.push_back(std::stoi(x));
    return row;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Defining chain posets, LS-tableaux and LS-fans of Schubert varieties"};
    app.require_subcommand(1);
    std::string job_file, type, lambda, tau, iposet, out, format;
    int rank = 0, degree_bound = -1;
    std::vector<std::string> degrees;
    bool conjecture = false;

    for (auto name : {"dcp", "underline-w", "check", "enumerate", "verify", "conjecture"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("job", job_file, "JSON job file; flags override its fields");
        sub->add_option("--type", type, "Dynkin type letter");
        sub->add_option("--rank", rank, "rank");
        sub->add_option("--lambda", lambda, "weights in omega-coordinates, e.g. 1,0;0,1");
        sub->add_option("--tau", tau, "w0, e, a type-A label such as 312, or word:2,1");
        sub->add_option("--iposet", iposet, "chain, powerset, or subsets such as 1;2;1,2");
        sub->add_option("--degree", degrees, "degree tuple such as 1,1 (repeatable)");
        sub->add_option("--degree-bound", degree_bound, "all degrees of total degree at most this bound");
        sub->add_flag("--conjecture", conjecture, "also run the multidegree comparison (verify)");
        sub->add_option("--out", out, "output file (written atomically); stdout when absent");
        sub->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    }
    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    lsfan::CommandResult result;
    try {
        lsfan::Json j = job_file.empty() ? lsfan::Json::object() : lsfan::Json::parse(std::ifstream(job_file));
        if (!job_file.empty() && !std::ifstream(job_file)) throw lsfan::InvalidInput("cannot read job file '" + job_file + "'");
        j["command"] = app.get_subcommands().front()->get_name();
        if (!type.empty()) j["type"] = type;
        if (rank > 0) j["rank"] = rank;
        if (!lambda.empty()) {
            lsfan::Json ls = lsfan::Json::array();
            for (auto const& w : split(lambda, ';')) ls.push_back(int_row(w));
            j["lambdas"] = ls;
        }
        if (!tau.empty()) {
            if (tau.rfind("word:", 0) == 0) j["tau"] = {{"word", int_row(tau.substr(5))}};
            else j["tau"] = tau;
        }
        if (!iposet.empty()) {
            if (iposet == "chain" || iposet == "powerset") {
                j["iposet"] = iposet;
            } else {
                lsfan::Json sets = lsfan::Json::array();
                for (auto const& s : split(iposet, ';')) sets.push_back(int_row(s));
                j["iposet"] = sets;
            }
        }
        if (!degrees.empty()) {
            lsfan::Json ds = lsfan::Json::array();
            for (auto const& d : degrees) ds.push_back(int_row(d));
            j["degrees"] = ds;
        }
        if (degree_bound >= 0) j["degree_bound"] = degree_bound;
        if (conjecture) j["conjecture"] = true;
        if (!format.empty()) j["format"] = format;
        if (!out.empty()) j["out"] = out;
        j.erase("expected");
        auto job = lsfan::parse_job(j);
        result = lsfan::run_command(job);
        if (!result.output.empty()) {
            if (job.out.empty()) std::cout << result.output;
            else lsfan::write_atomically(job.out, result.output);
        }
    } catch (lsfan::InvalidInput const& e) {
        result = {2, "", {std::string("invalid input: ") + e.what()}};
    } catch (std::exception const& e) {
        result = {2, "", {std::string("invalid input: ") + e.what()}};
    }
    for (auto const& m : result.messages) std::cerr << m << "\n";
    return result.exit_code;
}
