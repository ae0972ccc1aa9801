#include "lsfan/lspath.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace lsfan {

bool operator==(LSPath const& a, LSPath const& b)
{
    return a.shape == b.shape && a.cosets == b.cosets && a.cuts == b.cuts;
}

bool operator<(LSPath const& a, LSPath const& b)
{
    if (a.shape != b.shape) return a.shape < b.shape;
    if (a.cosets != b.cosets) return a.cosets < b.cosets;
    return std::lexicographical_compare(a.cuts.begin(), a.cuts.end(), b.cuts.begin(), b.cuts.end());
}

std::int64_t covering_bond(WeylGroup const& g, Weight const& nu, Elem upper, int root)
{
    return std::abs(g.datum().pair_coroot(g.act(upper, nu), root));
}

namespace {

bool integral(Rational const& q) { return q.get_den() == 1; }

}  // namespace

std::optional<std::vector<Coset>> integral_chain(WeylGroup const& g, Weight const& shape, Coset const& upper,
                                                 Coset const& lower, Rational const& cut)
{
    auto const& quo = g.quotient(upper.par);
    int top = quo.find(upper.rep), bottom = quo.find(lower.rep);
    std::vector<int> parent(quo.elements.size(), -1);
    std::deque<int> queue{top};
    parent[top] = top;
    while (!queue.empty() && parent[bottom] < 0) {
        int k = queue.front();
        queue.pop_front();
        for (auto const& e : quo.lower[k]) {
            if (parent[e.lower] >= 0 || !g.leq(lower.rep, quo.elements[e.lower])) continue;
            if (!integral(cut * Integer(covering_bond(g, shape, quo.elements[k], e.root)))) continue;
            parent[e.lower] = k;
            queue.push_back(e.lower);
        }
    }
    if (parent[bottom] < 0) return std::nullopt;
    std::vector<Coset> chain;
    for (int k = bottom;; k = parent[k]) {
        chain.push_back({quo.elements[k], upper.par});
        if (k == top) break;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::optional<PathCertificate> validate_ls_path(WeylGroup const& g, LSPath const& path)
{
    if (!path.shape.dominant()) throw InvalidInput("LS-path shape is not dominant");
    if (path.cosets.empty() || path.cosets.size() != path.cuts.size())
        throw InvalidInput("LS-path needs one cut per direction");
    Parabolic par = stabilizer(path.shape);
    for (auto const& c : path.cosets)
        if (c.par != par || !g.is_min(c.rep, par)) throw InvalidInput("LS-path direction outside W/W_shape");
    for (std::size_t k = 0; k + 1 < path.cosets.size(); ++k)
        if (path.cosets[k] == path.cosets[k + 1] || !g.leq(path.cosets[k + 1], path.cosets[k]))
            throw InvalidInput("LS-path directions are not strictly decreasing");
    Rational prev = 0;
    for (auto const& c : path.cuts) {
        if (c <= prev) throw InvalidInput("LS-path cuts are not strictly increasing");
        prev = c;
    }
    if (path.cuts.back() != 1) throw InvalidInput("LS-path cuts must end at 1");

    PathCertificate cert;
    for (std::size_t k = 0; k + 1 < path.cosets.size(); ++k) {
        auto chain = integral_chain(g, path.shape, path.cosets[k], path.cosets[k + 1], path.cuts[k]);
        if (!chain) return std::nullopt;
        cert.chains.push_back(std::move(*chain));
    }
    return cert;
}

namespace {

struct PathSearch {
    WeylGroup const& g;
    Quotient const& quo;
    Weight nu;
    int d;
    std::int64_t grid;  // common denominator of all admissible cut masses
    std::vector<char> allowed;
    std::map<std::pair<int, Integer>, std::vector<int>> reach_cache;
    std::vector<LSPath> out;
    std::vector<int> dirs;
    std::vector<Rational> masses;

    std::vector<int> const& reach(int from, Integer const& den)
    {
        auto key = std::make_pair(from, den);
        auto it = reach_cache.find(key);
        if (it != reach_cache.end()) return it->second;
        std::vector<char> seen(quo.elements.size(), 0);
        std::vector<int> found, stack{from};
        while (!stack.empty()) {
            int k = stack.back();
            stack.pop_back();
            for (auto const& e : quo.lower[k]) {
                if (seen[e.lower]) continue;
                if (covering_bond(g, nu, quo.elements[k], e.root) % den.get_si() != 0) continue;
                seen[e.lower] = 1;
                found.push_back(e.lower);
                stack.push_back(e.lower);
            }
        }
        std::sort(found.begin(), found.end());
        return reach_cache[key] = std::move(found);
    }

    void emit()
    {
        LSPath p;
        p.shape = static_cast<std::int64_t>(d) * nu;
        for (int k : dirs) p.cosets.push_back({quo.elements[k], quo.par});
        for (auto const& s : masses) p.cuts.push_back(Rational(s / d));
        for (auto& c : p.cuts) c.canonicalize();
        out.push_back(std::move(p));
    }

    void extend(int dir, std::int64_t start)
    {
        for (std::int64_t k = start + 1; k <= grid * d; ++k) {
            Rational s(k, grid);
            s.canonicalize();
            dirs.push_back(dir);
            masses.push_back(s);
            if (k == grid * d) {
                emit();
            } else {
                for (int next : reach(dir, s.get_den())) extend(next, k);
            }
            dirs.pop_back();
            masses.pop_back();
        }
    }
};

}  // namespace

std::vector<LSPath> enumerate_ls_paths(WeylGroup const& g, Weight const& nu, Coset const& tau, int d)
{
    if (!nu.dominant()) throw InvalidInput("LS-path shape is not dominant");
    if (d < 1) throw InvalidInput("LS-path degree must be positive");
    Parabolic par = stabilizer(nu);
    if (!tau.par.subset_of(par)) throw InvalidInput("tau is not a coset of a subgroup of the stabilizer");
    Coset top = g.project(tau, par);
    auto const& quo = g.quotient(par);
    PathSearch search{g, quo, nu, d, 1, {}, {}, {}, {}, {}};
    search.allowed.assign(quo.elements.size(), 0);
    for (std::size_t k = 0; k < quo.elements.size(); ++k) {
        if (!g.leq(quo.elements[k], top.rep)) continue;
        search.allowed[k] = 1;
        for (auto const& e : quo.lower[k])
            search.grid = std::lcm(search.grid, std::max<std::int64_t>(1, covering_bond(g, nu, quo.elements[k], e.root)));
    }
    for (std::size_t k = 0; k < quo.elements.size(); ++k)
        if (search.allowed[k]) search.extend(static_cast<int>(k), 0);
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
}

Weight endpoint(WeylGroup const& g, LSPath const& path)
{
    int n = path.shape.rank();
    std::vector<Rational> acc(n, Rational(0));
    Rational prev = 0;
    for (std::size_t k = 0; k < path.cosets.size(); ++k) {
        Weight w = g.act(path.cosets[k], path.shape);
        Rational len = path.cuts[k] - prev;
        for (int i = 0; i < n; ++i) acc[i] += len * Integer(w[i]);
        prev = path.cuts[k];
    }
    Weight out = Weight::zero(n);
    for (int i = 0; i < n; ++i) {
        acc[i].canonicalize();
        if (acc[i].get_den() != 1) throw InvariantViolation("LS-path endpoint is not integral");
        out[i] = acc[i].get_num().get_si();
    }
    return out;
}

CosetVector theta_single(LSPath const& path, int d)
{
    CosetVector v;
    Rational prev = 0;
    for (std::size_t k = 0; k < path.cosets.size(); ++k) {
        Rational c = (path.cuts[k] - prev) * d;
        c.canonicalize();
        v.emplace_back(path.cosets[k], c);
        prev = path.cuts[k];
    }
    return v;
}

LSPath theta_single_inverse(WeylGroup const& g, CosetVector const& v, Weight const& nu)
{
    CosetVector terms;
    Rational total = 0;
    for (auto const& [c, q] : v) {
        if (q < 0) throw InvalidInput("LS-monoid vectors are non-negative");
        if (q == 0) continue;
        terms.emplace_back(c, q);
        total += q;
    }
    total.canonicalize();
    if (terms.empty() || total.get_den() != 1) throw InvalidInput("vector does not have positive integral degree");
    std::sort(terms.begin(), terms.end(), [&](auto const& a, auto const& b) {
        return g.length(a.first.rep) != g.length(b.first.rep) ? g.length(a.first.rep) > g.length(b.first.rep)
                                                             : a.first.rep < b.first.rep;
    });
    std::int64_t d = total.get_num().get_si();
    LSPath p;
    p.shape = d * nu;
    Rational acc = 0;
    for (auto const& [c, q] : terms) {
        if (c.par != stabilizer(nu)) throw InvalidInput("vector support outside W/W_nu");
        if (!p.cosets.empty() && !g.leq(c, p.cosets.back())) throw InvalidInput("vector support is not a chain");
        acc += q;
        Rational cut = acc / total;
        cut.canonicalize();
        p.cosets.push_back(c);
        p.cuts.push_back(cut);
    }
    if (!validate_ls_path(g, p)) throw InvalidInput("vector is not in the LS-monoid");
    return p;
}

LSPath straight_path(Weight const& shape, Coset const& sigma)
{
    return LSPath{shape, {sigma}, {Rational(1)}};
}

}  // namespace lsfan
