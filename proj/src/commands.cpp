#include "lsfan/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lsfan/demazure.hpp"

namespace lsfan {

namespace {

std::set<std::string> const known_keys = {"command", "type",    "rank",       "lambdas", "tau",
                                          "iposet",  "degrees", "degree_bound", "conjecture", "tableau",
                                          "format",  "out",     "description", "expected"};

std::vector<int> int_list(Json const& j, std::string const& what)
{
    if (!j.is_array()) throw InvalidInput(what + " must be a list of integers");
    std::vector<int> out;
    for (auto const& x : j) {
        if (!x.is_number_integer()) throw InvalidInput(what + " must be a list of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::string word_label(WeylGroup const& g, Coset const& c)
{
    if (g.datum().type == 'A') return g.label(c);
    auto const& w = g.reduced_word(c.rep);
    if (w.empty()) return "e";
    std::string s;
    for (int i : w) s += "s" + std::to_string(i + 1);
    return s;
}

Json word_json(WeylGroup const& g, Elem w)
{
    Json out = Json::array();
    for (int i : g.reduced_word(w)) out.push_back(i + 1);
    return out;
}

Coset resolve_coset(WeylGroup const& g, Json const& spec, Parabolic p)
{
    if (spec.is_string()) {
        auto s = spec.get<std::string>();
        if (s == "w0") return g.top_coset(p);
        if (s == "e" || s == "id") return g.identity_coset(p);
        if (g.datum().type != 'A') throw InvalidInput("coset label '" + s + "' needs type A; use {\"word\": [...]}");
        return g.coset_from_label(s, p);
    }
    if (spec.is_object() && spec.contains("word")) {
        auto word = int_list(spec["word"], "word");
        for (int& i : word) {
            if (i < 1 || i > g.rank()) throw InvalidInput("word letter " + std::to_string(i) + " is out of range");
            i -= 1;
        }
        return g.coset(g.from_word(word), p);
    }
    if (spec.is_object() && spec.contains("one_line")) {
        if (g.datum().type != 'A') throw InvalidInput("one-line notation needs type A");
        return g.coset_from_label(spec["one_line"].get<std::string>(), p);
    }
    throw InvalidInput("coset must be \"w0\", \"e\", a type-A label, {\"word\": [...]} or {\"one_line\": \"...\"}");
}

IndexPoset resolve_iposet(Json const& spec, int m)
{
    if (spec.is_string()) {
        auto s = spec.get<std::string>();
        if (s == "chain") return IndexPoset::chain(m);
        if (s == "powerset") return IndexPoset::power_set(m);
        throw InvalidInput("iposet must be \"chain\", \"powerset\" or a list of subsets");
    }
    if (!spec.is_array()) throw InvalidInput("iposet must be \"chain\", \"powerset\" or a list of subsets");
    std::vector<std::uint32_t> masks;
    for (auto const& s : spec) {
        auto idx = int_list(s, "index set");
        for (int i : idx)
            if (i < 1 || i > m) throw InvalidInput("index set entry " + std::to_string(i) + " is outside [m]");
        masks.push_back(mask_from_indices(idx));
    }
    return build_index_poset(masks, m);
}

Json set_json(IndexPoset const& ip, int s)
{
    Json out = Json::array();
    for (int b : bits_of(ip.sets[s])) out.push_back(b + 1);
    return out;
}

Json instance_json(Instance const& inst)
{
    auto const& g = inst.group();
    Json lam = Json::array();
    for (auto const& l : inst.lambdas()) lam.push_back(l.coords);
    Json sets = Json::array();
    for (int s = 0; s < inst.iposet().size(); ++s) sets.push_back(set_json(inst.iposet(), s));
    Json q = Json::array();
    for (int b : bits_of(inst.Q().mask)) q.push_back(b + 1);
    Json out;
    out["type"] = g.datum().name();
    out["lambdas"] = lam;
    out["tau"] = coset_json(g, inst.tau());
    out["iposet"] = sets;
    out["Q"] = q;
    return out;
}

std::string dot_escape(std::string const& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

Json criteria_json(Instance const& inst, StandardnessReport const& rep)
{
    auto const& ip = inst.iposet();
    Json rows = Json::array();
    for (auto const& r : rep.criteria) {
        Json chain = Json::array();
        for (int s : r.chain) chain.push_back(ip.label(s));
        Json row;
        row["I"] = ip.label(r.set);
        row["chain"] = chain;
        row["unique_preimage"] = r.unique_preimage;
        row["min_max_equal"] = r.min_max_equal;
        row["subgroup_inclusion"] = r.subgroup_inclusion;
        row["dynkin_paths"] = r.dynkin_paths;
        rows.push_back(row);
    }
    return rows;
}

Json check_tableau(WeylGroup const& g, Json const& spec, Coset const& tau)
{
    auto t = parse_tableau(g, spec);
    Json out;
    out["columns"] = static_cast<int>(t.columns.size());
    out["standard"] = is_standard(g, t.columns, tau);
    out["weakly_standard"] = is_weakly_standard(g, t.columns, tau);
    auto chain = max_defining_chain(g, t.columns, tau);
    if (chain) {
        Json c = Json::array();
        for (auto const& x : *chain) c.push_back(coset_json(g, x));
        out["max_defining_chain"] = c;
    } else {
        out["max_defining_chain"] = nullptr;
    }
    Json checked = Json::array();
    if (spec.contains("defining_chains")) {
        for (auto const& dc : spec["defining_chains"]) {
            auto cols = int_list(dc.at("columns"), "columns");
            std::vector<LSPath> sub;
            for (int k : cols) {
                if (k < 1 || k > static_cast<int>(t.columns.size())) throw InvalidInput("column index out of range");
                sub.push_back(t.columns[k - 1]);
            }
            Parabolic stab = stabilizer(shape_weight(sub));
            std::vector<Coset> candidate;
            for (auto const& x : dc.at("chain")) candidate.push_back(resolve_coset(g, x, stab));
            Json row;
            row["columns"] = cols;
            row["chain"] = dc.at("chain");
            row["standard"] = is_standard(g, sub, tau);
            row["valid"] = check_defining_chain(g, sub, tau, candidate);
            checked.push_back(row);
        }
    }
    out["defining_chains"] = checked;
    return out;
}

CommandResult cmd_dcp(JobSpec const& job)
{
    auto built = build_instance(job);
    auto const& inst = *built.instance;
    auto dcp = build_dcp_inductive(inst);
    std::int64_t max_bond = 1;
    for (auto const& e : dcp.edges) max_bond = std::max(max_bond, e.bond);
    std::ostringstream summary;
    summary << dcp.nodes.size() << " nodes, " << dcp.edges.size() << " edges, length " << dcp.length << ", ";
    if (max_bond == 1) summary << "all bonds 1";
    else summary << "largest bond " << max_bond;
    CommandResult r;
    r.messages.push_back(summary.str());
    if (job.format == "dot") {
        r.output = dcp_dot(inst, dcp);
    } else {
        Json out;
        out["command"] = "dcp";
        out["instance"] = instance_json(inst);
        out["summary"] = summary.str();
        out["dcp"] = dcp_json(inst, dcp);
        r.output = dump(out);
    }
    return r;
}

CommandResult cmd_underline_w(JobSpec const& job)
{
    auto built = build_instance(job);
    auto const& inst = *built.instance;
    auto u = build_underline_w(inst);
    CommandResult r;
    r.messages.push_back(std::to_string(u.nodes.size()) + " nodes, " + std::to_string(u.hasse.size()) +
                         " covering relations, generating relation " +
                         (u.generating_transitive ? "transitive" : "not transitive"));
    if (job.format == "dot") {
        r.output = underline_w_dot(inst, u);
    } else {
        Json out;
        out["command"] = "underline-w";
        out["instance"] = instance_json(inst);
        out["underline_w"] = underline_w_json(inst, u);
        r.output = dump(out);
    }
    return r;
}

CommandResult cmd_check(JobSpec const& job)
{
    auto built = build_instance(job);
    auto const& inst = *built.instance;
    auto const& g = inst.group();
    auto dcp = build_dcp_inductive(inst);
    auto rep = is_tau_standard(inst, dcp);
    Json out;
    out["command"] = "check";
    out["instance"] = instance_json(inst);
    out["standard"] = rep.standard;
    out["surjective"] = rep.surjective;
    Json coll = Json::array();
    for (auto [a, b] : rep.collisions) {
        auto x = rho(inst, dcp.nodes[a]);
        Json c;
        c["nodes"] = {a, b};
        c["image"] = {{"theta", coset_json(g, x.theta)}, {"I", inst.iposet().label(x.set)}};
        coll.push_back(c);
    }
    out["collisions"] = coll;
    if (inst.tau_is_top()) {
        out["criteria"] = criteria_json(inst, rep);
        out["criteria_agree"] = rep.criteria_agree;
        out["chain_independent"] = rep.chain_independent;
    }
    CommandResult r;
    r.messages.push_back(std::string("index poset is ") + (rep.standard ? "" : "NOT ") + "tau-standard");
    if (!rep.standard && !rep.collisions.empty()) {
        auto [a, b] = rep.collisions.front();
        r.messages.push_back("collision: nodes " + std::to_string(a) + " and " + std::to_string(b) + " have the same image");
    }
    if (!job.tableau.is_null()) {
        Coset tau = resolve_coset(g, job.tau, Parabolic{0});
        out["tableau"] = check_tableau(g, job.tableau, tau);
        r.messages.push_back(std::string("tableau is ") + (out["tableau"]["standard"].get<bool>() ? "" : "NOT ") +
                             "standard, " + (out["tableau"]["weakly_standard"].get<bool>() ? "" : "NOT ") +
                             "weakly standard");
    }
    r.output = dump(out);
    return r;
}

Json shape_json(Instance const& inst, std::vector<int> const& sets)
{
    Json out = Json::array();
    for (int s : sets) out.push_back(inst.iposet().label(s));
    return out;
}

CommandResult cmd_enumerate(JobSpec const& job)
{
    auto built = build_instance(job);
    auto const& inst = *built.instance;
    auto grid = degree_grid(job);
    bool standard = is_tau_standard(inst).standard;
    LSFan fan(inst, build_dcp_inductive(inst));
    Json rows = Json::array();
    for (auto const& d : grid) {
        Json row;
        row["degree"] = d;
        row["shape"] = shape_json(inst, shape_for_degree(inst, d));
        auto elems = fan.enumerate(d);
        Json fv = Json::array();
        for (auto const& v : elems) fv.push_back(fan_vector_json(v));
        row["fan_count"] = elems.size();
        row["fan"] = fv;
        if (standard) {
            Json ts = Json::array();
            for (auto const& t : enumerate_standard(inst, d)) ts.push_back(tableau_json(&inst, inst.group(), t));
            row["tableaux"] = ts;
        }
        rows.push_back(row);
    }
    Json out;
    out["command"] = "enumerate";
    out["instance"] = instance_json(inst);
    out["standard"] = standard;
    out["degrees"] = rows;
    CommandResult r;
    if (!standard) r.messages.push_back("warning: index poset is not tau-standard; tableaux omitted");
    r.output = dump(out);
    return r;
}

Json conjecture_json(ConjectureReport const& rep)
{
    Json rows = Json::array();
    for (auto const& row : rep.rows) {
        Json x;
        x["k"] = row.k;
        x["chain_bond_sum"] = row.chain_sum.get_str();
        x["multidegree"] = to_string(row.multidegree);
        x["agrees"] = row.agrees;
        rows.push_back(x);
    }
    Json out;
    out["dimension"] = rep.dimension;
    out["rows"] = rows;
    out["all_agree"] = rep.all_agree;
    return out;
}

std::string degree_text(std::vector<int> const& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

CommandResult cmd_verify(JobSpec const& job)
{
    auto built = build_instance(job);
    auto const& inst = *built.instance;
    auto const& g = inst.group();
    auto grid = degree_grid(job);
    CommandResult r;
    Json out;
    out["command"] = "verify";
    out["instance"] = instance_json(inst);
    bool standard = is_tau_standard(inst).standard;
    out["standard"] = standard;
    LSFan fan(inst, build_dcp_inductive(inst));
    bool ok = true;
    auto fail = [&](std::string const& what) {
        if (ok) r.messages.push_back("first counterexample: " + what);
        ok = false;
    };
    Json rows = Json::array();
    if (grid.empty()) r.messages.push_back("warning: empty degree grid; nothing to verify");
    if (!standard && !grid.empty())
        r.messages.push_back("warning: index poset is not tau-standard; tableau identities skipped");
    for (auto const& d : grid) {
        Json row;
        row["degree"] = d;
        Weight mu = inst.weight_of_degree(d);
        auto oracle = demazure_character(g, mu, g.project(inst.tau(), stabilizer(mu)));
        auto dim = mass(oracle);
        auto elems = fan.enumerate(d);
        row["oracle_dimension"] = dim;
        row["fan"] = elems.size();
        if (standard) {
            auto ts = enumerate_standard(inst, d);
            row["tableaux"] = ts.size();
            bool counting = static_cast<std::int64_t>(ts.size()) == dim && static_cast<std::int64_t>(elems.size()) == dim;
            Character ch;
            for (auto const& t : ts) {
                Weight w = Weight::zero(g.rank());
                for (auto const& c : t.columns) w += endpoint(g, c);
                ch[w] += 1;
            }
            bool character = ch == oracle;
            bool round_trip = true;
            std::vector<FanVector> images;
            for (auto const& t : ts) {
                auto v = theta_d(fan, t);
                if (!(theta_d_inverse(fan, v) == t) || fan.degree(v) != d) round_trip = false;
                images.push_back(std::move(v));
            }
            std::sort(images.begin(), images.end());
            round_trip = round_trip && images == elems;
            row["counting"] = counting ? "pass" : "fail";
            row["character"] = character ? "pass" : "fail";
            row["theta_bijection"] = round_trip ? "pass" : "fail";
            if (!counting)
                fail("counting identity at degree " + degree_text(d) + ": tableaux " + std::to_string(ts.size()) +
                     ", fan " + std::to_string(elems.size()) + ", oracle " + std::to_string(dim));
            if (!character) fail("character identity at degree " + degree_text(d));
            if (!round_trip) fail("theta bijection at degree " + degree_text(d));
        } else {
            row["counting"] = "skipped";
            row["character"] = "skipped";
            row["theta_bijection"] = "skipped";
        }
        rows.push_back(row);
    }
    out["degrees"] = rows;
    if (job.conjecture) {
        auto rep = multidegree_conjecture_check(fan);
        out["conjecture"] = conjecture_json(rep);
        r.messages.push_back(std::string("multidegree conjecture: ") + (rep.all_agree ? "agrees" : "DISAGREES") +
                             " on all " + std::to_string(rep.rows.size()) + " types");
    }
    out["status"] = ok ? "pass" : "fail";
    r.exit_code = ok ? 0 : 1;
    r.output = dump(out);
    return r;
}

CommandResult cmd_conjecture(JobSpec const& job)
{
    auto built = build_instance(job);
    auto const& inst = *built.instance;
    LSFan fan(inst, build_dcp_inductive(inst));
    auto rep = multidegree_conjecture_check(fan);
    Json out;
    out["command"] = "conjecture";
    out["instance"] = instance_json(inst);
    out["conjecture"] = conjecture_json(rep);
    CommandResult r;
    std::ostringstream table;
    table << "k | chain bond sum | multidegree";
    r.messages.push_back(table.str());
    for (auto const& row : rep.rows)
        r.messages.push_back(degree_text(row.k) + " | " + row.chain_sum.get_str() + " | " + to_string(row.multidegree) +
                             (row.agrees ? "" : "  <- differs"));
    r.output = dump(out);
    return r;
}

}  // namespace

Json coset_json(WeylGroup const& g, Coset const& c)
{
    Json out;
    out["word"] = word_json(g, c.rep);
    out["label"] = word_label(g, c);
    return out;
}

JobSpec parse_job(Json const& j)
{
    if (!j.is_object()) throw InvalidInput("job must be a JSON object");
    for (auto const& [k, _] : j.items())
        if (!known_keys.count(k)) throw InvalidInput("unknown job field '" + k + "'");
    JobSpec job;
    if (j.contains("command")) job.command = j["command"].get<std::string>();
    if (j.contains("type")) {
        auto t = j["type"].get<std::string>();
        if (t.size() != 1) throw InvalidInput("type must be a single letter");
        job.type = t[0];
    }
    if (j.contains("rank")) job.rank = j["rank"].get<int>();
    if (j.contains("lambdas"))
        for (auto const& l : j["lambdas"]) {
            std::vector<std::int64_t> c;
            for (int x : int_list(l, "weight")) c.push_back(x);
            job.lambdas.emplace_back(c);
        }
    if (j.contains("tau")) job.tau = j["tau"];
    if (j.contains("iposet")) job.iposet = j["iposet"];
    if (j.contains("degrees"))
        for (auto const& d : j["degrees"]) job.degrees.push_back(int_list(d, "degree"));
    if (j.contains("degree_bound")) job.degree_bound = j["degree_bound"].get<int>();
    if (j.contains("conjecture")) job.conjecture = j["conjecture"].get<bool>();
    if (j.contains("tableau")) job.tableau = j["tableau"];
    if (j.contains("format")) job.format = j["format"].get<std::string>();
    if (j.contains("out")) job.out = j["out"].get<std::string>();
    return job;
}

JobSpec load_job(std::string const& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read job file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (Json::parse_error const& e) {
        throw InvalidInput("job file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_job(j);
}

BuiltInstance build_instance(JobSpec const& job)
{
    if (job.lambdas.empty()) throw InvalidInput("job needs at least one weight");
    BuiltInstance b;
    b.group = std::make_shared<WeylGroup const>(build_root_datum(job.type, job.rank));
    int m = static_cast<int>(job.lambdas.size());
    IndexPoset ip = resolve_iposet(job.iposet, m);
    Weight total = Weight::zero(job.rank);
    for (auto const& l : job.lambdas) {
        if (l.rank() != job.rank) throw InvalidInput("weight " + to_string(l) + " has the wrong rank");
        total += l;
    }
    Coset tau = resolve_coset(*b.group, job.tau, Parabolic{0});
    b.instance = std::make_unique<Instance>(b.group, job.lambdas, std::move(ip), tau);
    return b;
}

std::vector<std::vector<int>> degree_grid(JobSpec const& job)
{
    int m = static_cast<int>(job.lambdas.size());
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    auto add = [&](std::vector<int> const& d) {
        if (static_cast<int>(d.size()) != m) throw InvalidInput("degree " + degree_text(d) + " has the wrong length");
        for (int x : d)
            if (x < 0) throw InvalidInput("degree " + degree_text(d) + " has a negative entry");
        if (seen.insert(d).second) out.push_back(d);
    };
    for (auto const& d : job.degrees) add(d);
    if (job.degree_bound) {
        if (*job.degree_bound < 0) throw InvalidInput("degree bound must be non-negative");
        std::vector<int> cur(m, 0);
        std::vector<std::vector<int>> all;
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == m) {
                all.push_back(cur);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                cur[i] = x;
                self(self, i + 1, left - x);
            }
            cur[i] = 0;
        };
        rec(rec, 0, *job.degree_bound);
        std::stable_sort(all.begin(), all.end(), [](auto const& a, auto const& b) {
            int sa = 0, sb = 0;
            for (int x : a) sa += x;
            for (int x : b) sb += x;
            return sa < sb;
        });
        for (auto const& d : all) add(d);
    }
    return out;
}

Json dcp_json(Instance const& inst, Dcp const& dcp)
{
    auto const& g = inst.group();
    Json nodes = Json::array();
    for (std::size_t k = 0; k < dcp.nodes.size(); ++k) {
        auto const& n = dcp.nodes[k];
        Json x;
        x["id"] = k;
        x["theta"] = word_json(g, n.theta.rep);
        x["label"] = word_label(g, n.theta);
        x["I"] = set_json(inst.iposet(), n.set);
        x["rank"] = n.rank;
        nodes.push_back(x);
    }
    Json edges = Json::array();
    bool all_one = true;
    for (auto const& e : dcp.edges) {
        Json x;
        x["from"] = e.upper;
        x["to"] = e.lower;
        x["type"] = e.kind == EdgeKind::SameI ? "sameI" : "shrinkI";
        x["bond"] = e.bond;
        all_one = all_one && e.bond == 1;
        edges.push_back(x);
    }
    Json out;
    out["length"] = dcp.length;
    out["all_bonds_one"] = all_one;
    out["nodes"] = nodes;
    out["edges"] = edges;
    return out;
}

std::string dcp_dot(Instance const& inst, Dcp const& dcp)
{
    std::ostringstream os;
    os << "digraph dcp {\n";
    for (std::size_t k = 0; k < dcp.nodes.size(); ++k) {
        auto const& n = dcp.nodes[k];
        os << "  n" << k << " [label=\"" << dot_escape(word_label(inst.group(), n.theta) + " " + inst.iposet().label(n.set))
           << "\"];\n";
    }
    for (auto const& e : dcp.edges) os << "  n" << e.upper << " -> n" << e.lower << " [label=\"" << e.bond << "\"];\n";
    os << "}\n";
    return os.str();
}

Json underline_w_json(Instance const& inst, UnderlineW const& u)
{
    auto const& g = inst.group();
    Json nodes = Json::array();
    for (std::size_t k = 0; k < u.nodes.size(); ++k) {
        Json x;
        x["id"] = k;
        x["theta"] = word_json(g, u.nodes[k].theta.rep);
        x["label"] = word_label(g, u.nodes[k].theta);
        x["I"] = set_json(inst.iposet(), u.nodes[k].set);
        nodes.push_back(x);
    }
    Json edges = Json::array();
    for (auto [a, b] : u.hasse) edges.push_back({{"from", a}, {"to", b}});
    Json out;
    out["generating_transitive"] = u.generating_transitive;
    out["criterion_agrees"] = u.criterion_agrees;
    out["nodes"] = nodes;
    out["edges"] = edges;
    return out;
}

std::string underline_w_dot(Instance const& inst, UnderlineW const& u)
{
    std::ostringstream os;
    os << "digraph underline_w {\n";
    for (std::size_t k = 0; k < u.nodes.size(); ++k)
        os << "  n" << k << " [label=\""
           << dot_escape(word_label(inst.group(), u.nodes[k].theta) + " " + inst.iposet().label(u.nodes[k].set)) << "\"];\n";
    for (auto [a, b] : u.hasse) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

Json fan_vector_json(FanVector const& v)
{
    Json out = Json::array();
    for (auto const& [k, q] : v) out.push_back({{"node", k}, {"value", to_string(q)}});
    return out;
}

Json tableau_json(Instance const* inst, WeylGroup const& g, LSTableau const& t)
{
    Json cols = Json::array();
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
        auto const& p = t.columns[k];
        Json c;
        c["shape"] = p.shape.coords;
        Json cos = Json::array();
        for (auto const& x : p.cosets) cos.push_back(coset_json(g, x));
        c["cosets"] = cos;
        Json cuts = Json::array();
        for (auto const& q : p.cuts) cuts.push_back(to_string(q));
        c["cuts"] = cuts;
        if (inst && k < t.sets.size()) c["I"] = inst->iposet().label(t.sets[k]);
        cols.push_back(c);
    }
    Json out;
    out["columns"] = cols;
    return out;
}

LSTableau parse_tableau(WeylGroup const& g, Json const& j)
{
    if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array())
        throw InvalidInput("tableau must be an object with a list of columns");
    LSTableau t;
    for (auto const& c : j["columns"]) {
        LSPath p;
        std::vector<std::int64_t> shape;
        for (int x : int_list(c.at("shape"), "shape")) shape.push_back(x);
        p.shape = Weight(shape);
        if (p.shape.rank() != g.rank() || !p.shape.dominant() || p.shape.is_zero())
            throw InvalidInput("column shape must be a non-zero dominant weight of rank " + std::to_string(g.rank()));
        Parabolic stab = stabilizer(p.shape);
        for (auto const& x : c.at("cosets")) p.cosets.push_back(resolve_coset(g, x, stab));
        if (c.contains("cuts")) {
            for (auto const& q : c["cuts"]) p.cuts.push_back(parse_rational(q.get<std::string>()));
        } else {
            if (p.cosets.size() != 1) throw InvalidInput("a column with several directions needs cuts");
            p.cuts.push_back(Rational(1));
        }
        if (!validate_ls_path(g, p)) throw InvalidInput("column is not an LS-path");
        t.columns.push_back(std::move(p));
    }
    if (t.columns.empty()) throw InvalidInput("tableau has no columns");
    return t;
}

void write_atomically(std::string const& path, std::string const& content)
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw InvalidInput("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InvalidInput("cannot move output into place at '" + path + "': " + ec.message());
    }
}

CommandResult run_command(JobSpec const& job)
{
    try {
        if (job.format != "json" && job.format != "dot") throw InvalidInput("format must be json or dot");
        if (job.format == "dot" && job.command != "dcp" && job.command != "underline-w")
            throw InvalidInput("dot output is only available for dcp and underline-w");
        if (job.command == "dcp") return cmd_dcp(job);
        if (job.command == "underline-w") return cmd_underline_w(job);
        if (job.command == "check") return cmd_check(job);
        if (job.command == "enumerate") return cmd_enumerate(job);
        if (job.command == "verify") return cmd_verify(job);
        if (job.command == "conjecture") return cmd_conjecture(job);
        throw InvalidInput("unknown command '" + job.command + "'");
    } catch (InvalidInput const& e) {
        return {2, "", {std::string("invalid input: ") + e.what()}};
    } catch (nlohmann::json::exception const& e) {
        return {2, "", {std::string("invalid input: ") + e.what()}};
    } catch (InvariantViolation const& e) {
        return {1, "", {std::string("internal check failed: ") + e.what()}};
    }
}

}  // namespace lsfan
