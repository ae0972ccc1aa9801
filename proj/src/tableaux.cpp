#include "lsfan/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace lsfan {

Weight shape_weight(std::vector<LSPath> const& columns)
{
    if (columns.empty()) throw InvalidInput("tableau has no columns");
    Weight mu = Weight::zero(columns.front().shape.rank());
    for (auto const& c : columns) mu += c.shape;
    return mu;
}

std::vector<Coset> flattened_directions(std::vector<LSPath> const& columns)
{
    std::vector<Coset> out;
    for (auto const& c : columns) out.insert(out.end(), c.cosets.begin(), c.cosets.end());
    return out;
}

namespace {

Coset bound_for(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau)
{
    Parabolic stab = stabilizer(shape_weight(columns));
    if (!tau.par.subset_of(stab)) throw InvalidInput("tau lives in a quotient coarser than W/W_mu");
    return g.project(tau, stab);
}

// Greedy step: the largest lift of sigma below bound, if sigma lies below the projection of bound.
std::optional<Coset> lift_below(WeylGroup const& g, Coset const& bound, Coset const& sigma)
{
    if (!g.leq(sigma, g.project(bound, sigma.par))) return std::nullopt;
    return g.deodhar_max_lift(bound, sigma);
}

}  // namespace

std::optional<std::vector<Coset>> max_defining_chain(WeylGroup const& g, std::vector<LSPath> const& columns,
                                                     Coset const& tau)
{
    Coset bound = bound_for(g, columns, tau);
    std::vector<Coset> chain;
    for (auto const& sigma : flattened_directions(columns)) {
        auto next = lift_below(g, bound, sigma);
        if (!next) return std::nullopt;
        bound = *next;
        chain.push_back(bound);
    }
    return chain;
}

bool check_defining_chain(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau,
                          std::vector<Coset> const& chain)
{
    Coset bound = bound_for(g, columns, tau);
    auto directions = flattened_directions(columns);
    if (chain.size() != directions.size()) return false;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (chain[k].par != bound.par) return false;
        if (!g.leq(chain[k], bound)) return false;
        if (g.project(chain[k], directions[k].par) != directions[k]) return false;
        bound = chain[k];
    }
    return true;
}

bool is_standard(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau)
{
    return max_defining_chain(g, columns, tau).has_value();
}

bool is_weakly_standard(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau)
{
    if (columns.size() < 2) return is_standard(g, columns, tau);
    for (std::size_t k = 0; k + 1 < columns.size(); ++k)
        if (!is_standard(g, {columns[k], columns[k + 1]}, tau)) return false;
    return true;
}

std::vector<int> tableau_degree(Instance const& inst, LSTableau const& t)
{
    if (t.sets.size() != t.columns.size()) throw InvalidInput("tableau needs one index set per column");
    auto const& ip = inst.iposet();
    std::vector<int> d(inst.m(), 0);
    for (std::size_t k = 0; k < t.sets.size(); ++k) {
        int s = t.sets[k];
        if (s < 0 || s >= ip.size()) throw InvalidInput("tableau names an unknown index set");
        if (k > 0 && !ip.contains(t.sets[k - 1], s))
            throw InvalidInput("index sets of a tableau must weakly decrease");
        if (t.columns[k].shape != inst.lambda_I(s))
            throw InvalidInput("column " + std::to_string(k + 1) + " does not have shape lambda_" + ip.label(s));
        auto e = inst.e_I(s);
        for (int i = 0; i < inst.m(); ++i) d[i] += e[i];
    }
    return d;
}

std::vector<int> shape_for_degree(Instance const& inst, std::vector<int> const& d)
{
    auto const& ip = inst.iposet();
    if (static_cast<int>(d.size()) != inst.m()) throw InvalidInput("degree has wrong length");
    for (int x : d)
        if (x < 0) throw InvalidInput("degree must be non-negative");
    auto support = [](std::vector<int> const& v) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s |= 1u << i;
        return s;
    };
    std::function<std::optional<std::vector<int>>(int, std::vector<int> const&)> solve =
        [&](int set, std::vector<int> const& rest) -> std::optional<std::vector<int>> {
        std::uint32_t supp = support(rest);
        if (supp == 0) return std::vector<int>{};
        if ((supp & ~ip.sets[set]) != 0) return std::nullopt;
        int c = -1;
        for (int i : bits_of(ip.underline[set]))
            if (c < 0 || rest[i] < c) c = rest[i];
        auto next = rest;
        for (int i : bits_of(ip.underline[set])) next[i] -= c;
        std::vector<int> head(c, set);
        if (support(next) == 0) return head;
        for (int k : ip.lower_covers[set]) {
            if ((support(next) & ~ip.sets[k]) != 0) continue;
            if (auto tail = solve(k, next)) {
                head.insert(head.end(), tail->begin(), tail->end());
                return head;
            }
        }
        return std::nullopt;
    };
    auto out = solve(ip.top(), d);
    if (!out) throw InvalidInput("no weakly decreasing sequence of index sets has this degree");
    return *out;
}

std::vector<LSTableau> enumerate_standard(Instance const& inst, std::vector<int> const& d)
{
    auto const& g = inst.group();
    auto sets = shape_for_degree(inst, d);
    if (!is_tau_standard(inst).standard)
        throw InvalidInput("index poset is not tau-standard; tableaux are not counted by the fan");
    if (sets.empty()) return {LSTableau{}};
    std::map<int, std::vector<LSPath>> candidates;
    for (int s : sets)
        if (!candidates.count(s))
            candidates[s] = enumerate_ls_paths(g, inst.lambda_I(s), g.project(inst.tau(), inst.P_I(s)), 1);
    Parabolic stab = stabilizer(inst.weight_of_degree(d));
    std::vector<LSTableau> out;
    LSTableau cur;
    cur.sets = sets;
    std::function<void(std::size_t, Coset const&)> rec = [&](std::size_t k, Coset const& bound) {
        if (k == sets.size()) {
            out.push_back(cur);
            return;
        }
        for (auto const& path : candidates[sets[k]]) {
            Coset b = bound;
            bool ok = true;
            for (auto const& sigma : path.cosets) {
                auto next = lift_below(g, b, sigma);
                if (!next) {
                    ok = false;
                    break;
                }
                b = *next;
            }
            if (!ok) continue;
            cur.columns.push_back(path);
            rec(k + 1, b);
            cur.columns.pop_back();
        }
    };
    rec(0, g.project(inst.tau(), stab));
    std::sort(out.begin(), out.end());
    return out;
}

FanVector theta_d(LSFan const& fan, LSTableau const& t)
{
    auto const& inst = fan.instance();
    tableau_degree(inst, t);
    FanVector v;
    for (std::size_t k = 0; k < t.columns.size(); ++k)
        for (auto const& [sigma, coeff] : theta_single(t.columns[k], 1))
            v[fan.node_of({sigma, t.sets[k]})] += coeff;
    return v;
}

LSTableau theta_d_inverse(LSFan const& fan, FanVector const& v)
{
    auto const& inst = fan.instance();
    auto const& dcp = fan.dcp();
    LSTableau t;
    for (auto const& part : fan.decompose(v)) {
        int set = dcp.nodes[part.begin()->first].set;
        CosetVector cv;
        for (auto const& [k, q] : part) cv.push_back({rho(inst, dcp.nodes[k]).theta, q});
        t.columns.push_back(theta_single_inverse(inst.group(), cv, inst.lambda_I(set)));
        t.sets.push_back(set);
    }
    return t;
}

namespace {

void require_type_a(WeylGroup const& g)
{
    if (g.datum().type != 'A') throw InvalidInput("Young tableaux are only defined here for type A");
}

// Index i with shape = omega_i, or -1.
int fundamental_index(Weight const& w)
{
    int found = -1;
    for (int i = 0; i < w.rank(); ++i) {
        if (w[i] == 0) continue;
        if (w[i] != 1 || found >= 0) return -1;
        found = i;
    }
    return found;
}

}  // namespace

YoungTableau yt_from_ls(WeylGroup const& g, std::vector<LSPath> const& columns)
{
    require_type_a(g);
    YoungTableau y;
    for (auto it = columns.rbegin(); it != columns.rend(); ++it) {
        int i = fundamental_index(it->shape);
        if (i < 0) throw InvalidInput("Young columns need fundamental shapes, got " + to_string(it->shape));
        if (it->cosets.size() != 1) throw InvalidInput("Young columns need single-direction paths");
        auto perm = g.one_line(it->cosets.front().rep);
        std::vector<int> col(perm.begin(), perm.begin() + i + 1);
        std::sort(col.begin(), col.end());
        y.columns.push_back(col);
    }
    return y;
}

std::vector<LSPath> ls_from_yt(WeylGroup const& g, YoungTableau const& y)
{
    require_type_a(g);
    int n = g.rank() + 1;
    std::vector<LSPath> out;
    for (std::size_t c = 0; c < y.columns.size(); ++c) {
        auto const& col = y.columns[c];
        int len = static_cast<int>(col.size());
        if (len < 1 || len > g.rank()) throw InvalidInput("Young column length must lie in 1.." + std::to_string(g.rank()));
        if (c > 0 && len > static_cast<int>(y.columns[c - 1].size()))
            throw InvalidInput("Young column lengths must weakly decrease from left to right");
        for (int k = 0; k < len; ++k) {
            if (col[k] < 1 || col[k] > n) throw InvalidInput("Young entry out of range 1.." + std::to_string(n));
            if (k > 0 && col[k] <= col[k - 1]) throw InvalidInput("Young columns must strictly increase");
        }
    }
    for (auto it = y.columns.rbegin(); it != y.columns.rend(); ++it) {
        int len = static_cast<int>(it->size());
        std::vector<int> perm = *it;
        for (int x = 1; x <= n; ++x)
            if (std::find(it->begin(), it->end(), x) == it->end()) perm.push_back(x);
        Weight shape = Weight::zero(g.rank());
        shape[len - 1] = 1;
        out.push_back(straight_path(shape, g.coset(g.from_one_line(perm), stabilizer(shape))));
    }
    return out;
}

bool is_semistandard(YoungTableau const& y)
{
    for (std::size_t c = 0; c < y.columns.size(); ++c) {
        auto const& col = y.columns[c];
        for (std::size_t r = 1; r < col.size(); ++r)
            if (col[r] <= col[r - 1]) return false;
        if (c == 0) continue;
        auto const& left = y.columns[c - 1];
        if (col.size() > left.size()) return false;
        for (std::size_t r = 0; r < col.size(); ++r)
            if (col[r] < left[r]) return false;
    }
    return true;
}

std::string to_string(YoungTableau const& y)
{
    std::ostringstream os;
    std::size_t rows = 0;
    for (auto const& c : y.columns) rows = std::max(rows, c.size());
    for (std::size_t r = 0; r < rows; ++r) {
        if (r) os << " / ";
        bool first = true;
        for (auto const& c : y.columns) {
            if (r >= c.size()) continue;
            if (!first) os << ' ';
            first = false;
            os << c[r];
        }
    }
    return os.str();
}

}  // namespace lsfan
