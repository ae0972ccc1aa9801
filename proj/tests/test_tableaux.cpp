#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "lsfan/demazure.hpp"
#include "lsfan/tableaux.hpp"
#include "test_support.hpp"

using namespace lsfan;
using namespace lsfan::testing;

namespace {

LSPath column(WeylGroup const& g, std::string const& label, int fund)
{
    Weight shape = omega(g.rank(), fund);
    return straight_path(shape, g.coset_from_label(label, stabilizer(shape)));
}

// Every defining chain, by exhaustive search over lifts in W/W_mu.
std::vector<std::vector<Coset>> all_defining_chains(WeylGroup const& g, std::vector<LSPath> const& cols, Coset const& tau)
{
    Parabolic stab = stabilizer(shape_weight(cols));
    Coset top = g.project(tau, stab);
    auto const& quot = g.quotient(stab);
    auto dirs = flattened_directions(cols);
    std::vector<std::vector<Coset>> lifts(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k)
        for (Elem e : quot.elements) {
            Coset c{e, stab};
            if (g.project(c, dirs[k].par) == dirs[k]) lifts[k].push_back(c);
        }
    std::vector<std::vector<Coset>> out;
    std::vector<Coset> cur;
    std::function<void(std::size_t, Coset const&)> rec = [&](std::size_t k, Coset const& bound) {
        if (k == dirs.size()) {
            out.push_back(cur);
            return;
        }
        for (auto const& c : lifts[k]) {
            if (!g.leq(c, bound)) continue;
            cur.push_back(c);
            rec(k + 1, c);
            cur.pop_back();
        }
    };
    rec(0, top);
    return out;
}

// All tableaux of the given shape sequence (columns bounded by the projections of tau).
std::vector<LSTableau> all_tableaux(Instance const& inst, std::vector<int> const& sets)
{
    auto const& g = inst.group();
    std::vector<LSTableau> out;
    LSTableau cur;
    cur.sets = sets;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == sets.size()) {
            out.push_back(cur);
            return;
        }
        for (auto const& p : enumerate_ls_paths(g, inst.lambda_I(sets[k]), g.project(inst.tau(), inst.P_I(sets[k])), 1)) {
            cur.columns.push_back(p);
            rec(k + 1);
            cur.columns.pop_back();
        }
    };
    rec(0);
    return out;
}

// Weakly decreasing sequences of index sets with the given degree, by exhaustive search.
std::vector<std::vector<int>> all_shapes(Instance const& inst, std::vector<int> const& d)
{
    auto const& ip = inst.iposet();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::vector<int> const&)> rec = [&](std::vector<int> const& rest) {
        if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s < ip.size(); ++s) {
            if (!cur.empty() && !ip.contains(cur.back(), s)) continue;
            auto e = inst.e_I(s);
            auto next = rest;
            bool ok = true;
            for (int i = 0; i < inst.m(); ++i) ok = ok && (next[i] -= e[i]) >= 0;
            if (!ok) continue;
            cur.push_back(s);
            rec(next);
            cur.pop_back();
        }
    };
    rec(d);
    return out;
}

Character tableau_character(WeylGroup const& g, std::vector<LSTableau> const& ts)
{
    Character ch;
    for (auto const& t : ts) {
        Weight w = Weight::zero(g.rank());
        for (auto const& c : t.columns) w += endpoint(g, c);
        ch[w] += 1;
    }
    return ch;
}

std::vector<Instance> standard_instances()
{
    auto a2 = group('A', 2), a3 = group('A', 3), b2 = group('B', 2), g2 = group('G', 2), c3 = group('C', 3);
    std::vector<Instance> out;
    auto try_add = [&](Instance inst) {
        if (is_tau_standard(inst).standard) out.push_back(std::move(inst));
    };
    for (auto const& tau : a2->below(a2->top_coset(Parabolic{0}))) {
        Instance probe = fundamental(a2, {1, 2}, IndexPoset::chain(2));
        try_add(Instance(a2, probe.lambdas(), IndexPoset::chain(2), tau));
        try_add(Instance(a2, {omega(2, 2), omega(2, 1)}, IndexPoset::chain(2), tau));
        try_add(Instance(a2, probe.lambdas(), IndexPoset::power_set(2), tau));
    }
    try_add(fundamental(a3, {3, 2, 1}, IndexPoset::chain(3)));
    try_add(fundamental(a3, {3, 2, 1}, IndexPoset::chain(3), "3412"));
    try_add(fundamental(a3, {1, 2, 3}, iposet({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}, 3), "3412"));
    try_add(top_instance(b2, {omega(2, 1), omega(2, 2)}, IndexPoset::chain(2)));
    try_add(top_instance(b2, {omega(2, 2), omega(2, 1)}, IndexPoset::chain(2)));
    try_add(top_instance(b2, {omega(2, 1, 2), omega(2, 2)}, IndexPoset::chain(2)));
    try_add(top_instance(g2, {omega(2, 1), omega(2, 2)}, IndexPoset::chain(2)));
    try_add(top_instance(c3, {omega(3, 1), omega(3, 2)}, IndexPoset::chain(2)));
    try_add(top_instance(a2, {omega(2, 1), omega(2, 1) + omega(2, 2)}, IndexPoset::chain(2)));
    return out;
}

}  // namespace

TEST_CASE("the tableau (13, 124, 3) is weakly standard but not standard")
{
    auto g = group('A', 3);
    std::vector<LSPath> t{column(*g, "13", 2), column(*g, "124", 3), column(*g, "3", 1)};
    Coset w0 = g->top_coset(Parabolic{0});
    Parabolic none{0};
    CHECK(g->label(g->min_lift(g->coset_from_label("3", stabilizer(omega(3, 1))), none)) == "3124");
    CHECK(g->label(g->deodhar_min_lift(g->coset_from_label("3124", none), g->coset_from_label("124", stabilizer(omega(3, 3))))) ==
          "4123");
    CHECK(g->label(g->max_lift(g->coset_from_label("13", stabilizer(omega(3, 2))), none)) == "3142");
    CHECK_FALSE(is_standard(*g, t, w0));
    CHECK(is_weakly_standard(*g, t, w0));

    Parabolic s1{1u};  // stabilizer of omega2 + omega3
    std::vector<Coset> first{g->coset_from_label("1342", s1), g->coset_from_label("1243", s1)};
    CHECK(check_defining_chain(*g, {t[0], t[1]}, w0, first));
    CHECK(max_defining_chain(*g, {t[0], t[1]}, w0) == first);
    // 1243 is not below 1324, so this transposed variant is not a defining chain.
    CHECK_FALSE(check_defining_chain(*g, {t[0], t[1]}, w0, {g->coset_from_label("1324", s1), g->coset_from_label("1243", s1)}));
    Parabolic s2{2u};  // stabilizer of omega3 + omega1
    CHECK(check_defining_chain(*g, {t[1], t[2]}, w0, {g->coset_from_label("4123", s2), g->coset_from_label("3124", s2)}));
    CHECK_FALSE(check_defining_chain(*g, {t[1], t[2]}, w0, {g->coset_from_label("3124", s2), g->coset_from_label("4123", s2)}));
}

TEST_CASE("greedy maximal defining chain agrees with exhaustive search")
{
    struct Case {
        char type;
        int rank;
        std::vector<std::vector<int>> shapes;  // fundamental indices per column; repeated entries add up
    };
    std::vector<Case> cases{
        {'A', 2, {{1}, {2}}}, {'A', 2, {{2}, {1}}}, {'A', 2, {{1, 2}, {1}}}, {'A', 2, {{1}, {2}, {1}}},
        {'B', 2, {{1}, {2}}}, {'B', 2, {{2}, {1}}}, {'B', 2, {{2, 2}, {1}}}, {'A', 3, {{2}, {3}, {1}}},
        {'G', 2, {{1}, {2}}},
    };
    int standard = 0, total = 0;
    for (auto const& c : cases) {
        auto g = group(c.type, c.rank);
        std::vector<std::vector<LSPath>> per_column;
        for (auto const& s : c.shapes) {
            Weight shape = Weight::zero(c.rank);
            for (int k : s) shape += omega(c.rank, k);
            per_column.push_back(enumerate_ls_paths(*g, shape, g->top_coset(stabilizer(shape)), 1));
        }
        std::vector<Coset> taus = g->below(g->top_coset(Parabolic{0}));
        std::vector<LSPath> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == per_column.size()) {
                for (std::size_t ti = 0; ti < taus.size(); ti += c.rank == 3 ? 5 : 1) {
                    auto const& tau = taus[ti];
                    auto greedy = max_defining_chain(*g, cur, tau);
                    auto brute = all_defining_chains(*g, cur, tau);
                    ++total;
                    REQUIRE(greedy.has_value() == !brute.empty());
                    if (!greedy) continue;
                    ++standard;
                    CHECK(check_defining_chain(*g, cur, tau, *greedy));
                    for (auto const& chain : brute)
                        for (std::size_t i = 0; i < chain.size(); ++i) REQUIRE(g->leq(chain[i], (*greedy)[i]));
                }
                return;
            }
            for (auto const& p : per_column[k]) {
                cur.push_back(p);
                rec(k + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    CHECK(standard > 0);
    CHECK(standard < total);
}

TEST_CASE("shape for a degree is the unique weakly decreasing sequence")
{
    auto a3 = group('A', 3), d4 = group('D', 4);
    std::vector<Instance> insts{
        fundamental(a3, {3, 2, 1}, IndexPoset::chain(3)),
        fundamental(a3, {1, 2, 3}, IndexPoset::power_set(3)),
        fundamental(a3, {1, 2, 3}, iposet({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}, 3), "3412"),
        fundamental(a3, {1, 3, 2}, iposet({{1}, {3}, {1, 3}, {1, 2, 3}}, 3)),
        fundamental(d4, {1, 3, 4}, iposet({{1}, {2}, {1, 2}, {1, 2, 3}}, 3)),
    };
    for (auto const& inst : insts)
        for (auto const& d : degrees_up_to(inst.m(), 4)) {
            auto shapes = all_shapes(inst, d);
            REQUIRE(shapes.size() == 1);
            CHECK(shape_for_degree(inst, d) == shapes.front());
        }
    CHECK(shape_for_degree(insts[0], {0, 0, 0}).empty());
    CHECK_THROWS_AS(shape_for_degree(insts[0], {1, -1, 0}), InvalidInput);
    CHECK_THROWS_AS(shape_for_degree(insts[0], {1, 0}), InvalidInput);
}

TEST_CASE("standard tableaux are counted by Demazure modules")
{
    auto a2 = group('A', 2);
    SUBCASE("small cases")
    {
        auto w0 = fundamental(a2, {1, 2}, IndexPoset::chain(2));
        CHECK(enumerate_standard(w0, {1, 1}).size() == 8);
        auto small = fundamental(a2, {1, 2}, IndexPoset::chain(2), "312");
        REQUIRE(is_tau_standard(small).standard);
        CHECK(enumerate_standard(small, {1, 1}).size() ==
              static_cast<std::size_t>(mass(demazure_character(*a2, omega(2, 1) + omega(2, 2), small.tau()))));
        CHECK(enumerate_standard(w0, {0, 0}).size() == 1);
    }
    SUBCASE("all standard fixtures")
    {
        auto insts = standard_instances();
        CHECK(insts.size() >= 12);
        for (auto const& inst : insts) {
            auto const& g = inst.group();
            int bound = g.rank() >= 3 || inst.m() >= 3 ? 2 : 3;
            for (auto const& d : degrees_up_to(inst.m(), bound)) {
                auto ts = enumerate_standard(inst, d);
                Weight mu = inst.weight_of_degree(d);
                auto expected = demazure_character(g, mu, g.project(inst.tau(), stabilizer(mu)));
                REQUIRE(ts.size() == static_cast<std::size_t>(mass(expected)));
                CHECK(tableau_character(g, ts) == expected);
                for (auto const& t : ts) CHECK(tableau_degree(inst, t) == d);
            }
        }
    }
    SUBCASE("non-standard index posets are rejected")
    {
        auto bad = fundamental(group('A', 3), {1, 3, 2}, IndexPoset::chain(3));
        CHECK_THROWS_AS(enumerate_standard(bad, {1, 1, 1}), InvalidInput);
    }
}

TEST_CASE("weakly standard equals standard exactly for standard index posets")
{
    for (auto const& inst : standard_instances()) {
        int bound = inst.m() >= 3 ? 2 : 3;
        for (auto const& d : degrees_up_to(inst.m(), bound)) {
            auto const& g = inst.group();
            Weight mu = inst.weight_of_degree(d);
            if (mu.is_zero()) continue;
            Coset tau = g.project(inst.tau(), stabilizer(mu));
            for (auto const& t : all_tableaux(inst, shape_for_degree(inst, d)))
                REQUIRE(is_weakly_standard(g, t.columns, tau) == is_standard(g, t.columns, tau));
        }
    }
    auto bad = fundamental(group('A', 3), {1, 3, 2}, IndexPoset::chain(3));
    auto const& g = bad.group();
    std::vector<std::vector<LSPath>> witnesses;
    for (auto const& t : all_tableaux(bad, shape_for_degree(bad, {1, 1, 1})))
        if (is_weakly_standard(g, t.columns, bad.tau()) && !is_standard(g, t.columns, bad.tau()))
            witnesses.push_back(t.columns);
    std::vector<LSPath> paper{column(g, "13", 2), column(g, "124", 3), column(g, "3", 1)};
    CHECK(std::find(witnesses.begin(), witnesses.end(), paper) != witnesses.end());
}

TEST_CASE("Young tableau of a tableau with single-direction columns")
{
    auto g = group('A', 3);
    auto col = [&](std::vector<int> word, int fund) {
        Weight shape = omega(3, fund);
        return straight_path(shape, g->coset(g->from_word(word), stabilizer(shape)));
    };
    std::vector<LSPath> t{col({1, 0}, 1), col({2, 1}, 2), col({0, 1}, 2), col({2}, 3)};
    auto y = yt_from_ls(*g, t);
    CHECK(y.columns == std::vector<std::vector<int>>{{1, 2, 4}, {2, 3}, {1, 4}, {3}});
    CHECK(to_string(y) == "1 2 1 3 / 2 3 4 / 4");
    CHECK_FALSE(is_semistandard(y));
    CHECK_FALSE(is_standard(*g, t, g->top_coset(Parabolic{0})));
    CHECK(ls_from_yt(*g, y) == t);

    CHECK_THROWS_AS(yt_from_ls(*group('B', 2), {}), InvalidInput);
    CHECK_THROWS_AS(ls_from_yt(*g, YoungTableau{{{2, 1}}}), InvalidInput);
    CHECK_THROWS_AS(ls_from_yt(*g, YoungTableau{{{1}, {1, 2}}}), InvalidInput);
    CHECK_THROWS_AS(ls_from_yt(*g, YoungTableau{{{1, 2, 3, 4}}}), InvalidInput);
    CHECK_THROWS_AS(yt_from_ls(*g, {straight_path(omega(3, 1, 2), g->coset_from_label("1", stabilizer(omega(3, 1))))}),
                    InvalidInput);
}

TEST_CASE("semistandard Young tableaux are the standard tableaux below w0")
{
    struct Case {
        int rank;
        std::vector<int> d;  // multiplicity of each fundamental weight
    };
    std::vector<Case> cases;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) cases.push_back({2, {a, b}});
    cases.push_back({3, {1, 1, 1}});
    cases.push_back({3, {0, 2, 1}});
    for (auto const& c : cases) {
        auto g = group('A', c.rank);
        int n = c.rank + 1;
        // Column lengths from left to right: weakly decreasing.
        std::vector<int> lengths;
        for (int i = c.rank; i >= 1; --i)
            for (int k = 0; k < c.d[i - 1]; ++k) lengths.push_back(i);
        std::vector<std::vector<std::vector<int>>> choices;
        for (int len : lengths) {
            std::vector<std::vector<int>> subsets;
            for (unsigned mask = 0; mask < (1u << n); ++mask)
                if (std::popcount(mask) == len) {
                    std::vector<int> s;
                    for (int x = 0; x < n; ++x)
                        if ((mask >> x) & 1u) s.push_back(x + 1);
                    subsets.push_back(s);
                }
            choices.push_back(subsets);
        }
        Weight mu = Weight::zero(c.rank);
        for (int i = 0; i < c.rank; ++i) mu[i] = c.d[i];
        Coset w0 = g->top_coset(Parabolic{0});
        std::set<YoungTableau> ssyt;
        YoungTableau y;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == choices.size()) {
                if (y.columns.empty()) {
                    ssyt.insert(y);
                    return;
                }
                bool semi = is_semistandard(y);
                REQUIRE(semi == is_standard(*g, ls_from_yt(*g, y), w0));
                if (semi) ssyt.insert(y);
                return;
            }
            for (auto const& s : choices[k]) {
                y.columns.push_back(s);
                rec(k + 1);
                y.columns.pop_back();
            }
        };
        rec(0);
        CHECK(Integer(static_cast<long>(ssyt.size())) == weyl_dimension(g->datum(), mu));

        // The same set through the typed enumeration with index sets {i, ..., m}.
        std::vector<std::vector<int>> sets;
        for (int i = 1; i <= c.rank; ++i) {
            std::vector<int> s;
            for (int j = i; j <= c.rank; ++j) s.push_back(j);
            sets.push_back(s);
        }
        std::vector<int> fund;
        for (int i = 1; i <= c.rank; ++i) fund.push_back(i);
        auto inst = fundamental(g, fund, iposet(sets, c.rank));
        std::set<YoungTableau> via_typed;
        for (auto const& t : enumerate_standard(inst, c.d)) via_typed.insert(t.columns.empty() ? YoungTableau{} : yt_from_ls(*g, t.columns));
        CHECK(via_typed == ssyt);
    }
}
