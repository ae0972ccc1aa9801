#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "lsfan/commands.hpp"

using namespace lsfan;

namespace {

JobSpec job_of(Json j) { return parse_job(j); }

Json base_job(std::string command)
{
    return Json{{"command", command}, {"type", "A"}, {"rank", 2}, {"lambdas", {{1, 0}, {0, 1}}}};
}

int run_cli(std::string const& args)
{
    int status = std::system((std::string(LSFAN_CLI) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("single weight poset is the Bruhat interval below tau")
{
    for (std::string tau : {"3412", "2413", "4321", "1324"}) {
        CAPTURE(tau);
        auto job = job_of({{"command", "dcp"}, {"type", "A"}, {"rank", 3}, {"lambdas", {{0, 1, 0}}}, {"tau", tau}});
        auto built = build_instance(job);
        auto const& inst = *built.instance;
        auto const& g = inst.group();
        auto d = build_dcp_inductive(inst);
        std::set<Coset> nodes;
        for (auto const& n : d.nodes) nodes.insert(n.theta);
        auto below = g.below(inst.tau());
        CHECK(nodes == std::set<Coset>(below.begin(), below.end()));
        std::set<std::pair<Coset, Coset>> edges, covers;
        for (auto const& e : d.edges) edges.emplace(d.nodes[e.upper].theta, d.nodes[e.lower].theta);
        for (auto const& c : g.covering_relations(inst.tau().par, inst.tau())) covers.emplace(c.upper, c.lower);
        CHECK(edges == covers);
    }
}

TEST_CASE("job parsing and invalid input")
{
    CHECK(run_command(job_of(base_job("dcp"))).exit_code == 0);
    auto bad_type = base_job("dcp");
    bad_type["type"] = "Q";
    CHECK(run_command(job_of(bad_type)).exit_code == 2);
    auto bad_tau = base_job("dcp");
    bad_tau["tau"] = Json{{"word", {3}}};
    CHECK(run_command(job_of(bad_tau)).exit_code == 2);
    auto bad_sets = base_job("dcp");
    bad_sets["iposet"] = Json{{1}, {2}};
    CHECK(run_command(job_of(bad_sets)).exit_code == 2);
    auto bad_command = base_job("frobnicate");
    CHECK(run_command(job_of(bad_command)).exit_code == 2);
    auto bad_format = base_job("check");
    bad_format["format"] = "dot";
    CHECK(run_command(job_of(bad_format)).exit_code == 2);
    auto extra = base_job("dcp");
    extra["colour"] = "blue";
    CHECK_THROWS_AS(parse_job(extra), InvalidInput);
}

TEST_CASE("verify reports a pass and a vacuous pass")
{
    auto job = base_job("verify");
    job["degree_bound"] = 2;
    auto r = run_command(job_of(job));
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.output)["status"] == "pass");

    auto empty = run_command(job_of(base_job("verify")));
    CHECK(empty.exit_code == 0);
    CHECK(Json::parse(empty.output)["degrees"].empty());
    CHECK(std::any_of(empty.messages.begin(), empty.messages.end(),
                      [](auto const& m) { return m.find("warning") != std::string::npos; }));

    auto conj = base_job("verify");
    conj["conjecture"] = true;
    conj["degrees"] = Json{{1, 1}};
    auto c = run_command(job_of(conj));
    CHECK(c.exit_code == 0);
    CHECK(Json::parse(c.output)["conjecture"]["all_agree"] == true);
}

TEST_CASE("output is deterministic and written atomically")
{
    auto job = base_job("enumerate");
    job["degree_bound"] = 2;
    job["iposet"] = "powerset";
    auto a = run_command(job_of(job)), b = run_command(job_of(job));
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto dir = std::filesystem::temp_directory_path() / "lsfan_cli_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.json").string();
    write_atomically(path, a.output);
    CHECK(slurp(path) == a.output);
    CHECK(!std::filesystem::exists(path + ".tmp"));
    CHECK_THROWS_AS(write_atomically((dir / "missing" / "out.json").string(), "x"), InvalidInput);
}

TEST_CASE("binary exit codes")
{
    auto dir = std::filesystem::temp_directory_path() / "lsfan_cli_test";
    std::filesystem::create_directories(dir);
    CHECK(run_cli("dcp --type A --rank 2 --lambda '0,1;1,0' --tau 312") == 0);
    CHECK(run_cli("dcp --type A --rank 2 --lambda '0,1;1,0' --tau 312 --format dot") == 0);
    CHECK(run_cli("check --type A --rank 3 --lambda '1,0,0;0,1,0;0,0,1' --tau 3412 --iposet '1;2;3;1,2;2,3;1,2,3'") == 0);
    CHECK(run_cli("dcp --type A --rank 2 --lambda '1,0;0,1' --iposet '1;2'") == 2);
    CHECK(run_cli("verify --type A --rank 2 --lambda '1,0;0,-1'") == 2);
    CHECK(run_cli("dcp " + (dir / "no_such_job.json").string()) == 2);
    CHECK(run_cli("nonsense") == 2);

    auto p1 = (dir / "a.json").string(), p2 = (dir / "b.json").string();
    CHECK(run_cli("enumerate --type B --rank 2 --lambda '1,0;0,1' --degree 1,1 --out " + p1) == 0);
    CHECK(run_cli("enumerate --type B --rank 2 --lambda '1,0;0,1' --degree 1,1 --out " + p2) == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!slurp(p1).empty());
}
