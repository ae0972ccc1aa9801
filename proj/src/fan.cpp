#include "lsfan/fan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "lsfan/demazure.hpp"

namespace lsfan {

std::string to_string(FanVector const& v)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto const& [k, q] : v) {
        if (!first) os << ", ";
        first = false;
        os << k << ": " << to_string(q);
    }
    os << '}';
    return os.str();
}

bool ls_lattice_member(FanVector const& v, std::vector<int> const& chain, std::vector<std::int64_t> const& bonds)
{
    if (bonds.size() + 1 != chain.size()) throw InvalidInput("ls_lattice_member: bond count must be chain length - 1");
    std::set<int> on_chain(chain.begin(), chain.end());
    for (auto const& [k, q] : v)
        if (q != 0 && !on_chain.count(k)) return false;
    Rational cumulative = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        auto it = v.find(chain[i]);
        if (it != v.end()) cumulative += it->second;
        Rational scaled = i + 1 < chain.size() ? Rational(cumulative * static_cast<long>(bonds[i])) : cumulative;
        scaled.canonicalize();
        if (scaled.get_den() != 1) return false;
    }
    return true;
}

LSFan::LSFan(Instance const& inst, Dcp dcp) : inst_(inst), dcp_(std::move(dcp))
{
    chains_ = dcp_.maximal_chains();
    for (std::size_t k = 0; k < dcp_.nodes.size(); ++k)
        rho_index_[rho(inst_, dcp_.nodes[k])].push_back(static_cast<int>(k));
    for (auto const& e : dcp_.edges) edge_bond_[{e.upper, e.lower}] = e.bond;
}

std::vector<std::int64_t> LSFan::chain_bonds(std::vector<int> const& chain) const
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        auto it = edge_bond_.find({chain[i], chain[i + 1]});
        if (it == edge_bond_.end()) throw InvalidInput("chain_bonds: consecutive nodes are not a covering");
        out.push_back(it->second);
    }
    return out;
}

int LSFan::node_of(UnderlineWNode const& x) const
{
    auto it = rho_index_.find(x);
    if (it == rho_index_.end())
        throw InvalidInput("no DCP node over " + inst_.group().label(x.theta) + " in " + inst_.iposet().label(x.set));
    if (it->second.size() != 1)
        throw InvalidInput("rho is not injective over " + inst_.group().label(x.theta) + " in " +
                           inst_.iposet().label(x.set));
    return it->second.front();
}

bool LSFan::reaches(int upper, int lower, Integer const& den) const
{
    if (upper == lower) return true;
    int target_rank = dcp_.nodes[lower].rank;
    std::vector<char> seen(dcp_.nodes.size(), 0);
    std::vector<int> stack{upper};
    seen[upper] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : dcp_.lower_edges[v]) {
            auto const& edge = dcp_.edges[e];
            if (Integer(static_cast<long>(edge.bond)) % den != 0) continue;
            int w = edge.lower;
            if (w == lower) return true;
            if (seen[w] || dcp_.nodes[w].rank <= target_rank) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

bool LSFan::member(FanVector const& v) const
{
    std::vector<int> support;
    for (auto const& [k, q] : v) {
        if (k < 0 || k >= static_cast<int>(dcp_.nodes.size())) throw InvalidInput("fan vector names an unknown node");
        if (q < 0) return false;
        if (q != 0) support.push_back(k);
    }
    // Node ids are ordered by rank, descending, so the support is already listed top down.
    Rational cumulative = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        cumulative += v.at(support[i]);
        if (i + 1 < support.size()) {
            if (dcp_.nodes[support[i]].rank == dcp_.nodes[support[i + 1]].rank) return false;
            if (!reaches(support[i], support[i + 1], cumulative.get_den())) return false;
        }
    }
    return cumulative.get_den() == 1;
}

std::vector<int> LSFan::degree(FanVector const& v) const
{
    std::vector<Rational> acc(inst_.m(), 0);
    for (auto const& [k, q] : v) {
        auto e = inst_.e_I(dcp_.nodes.at(k).set);
        for (int i = 0; i < inst_.m(); ++i) acc[i] += q * e[i];
    }
    std::vector<int> out;
    for (auto& q : acc) {
        q.canonicalize();
        if (q.get_den() != 1) throw InvalidInput("fan vector has non-integral degree");
        out.push_back(static_cast<int>(q.get_num().get_si()));
    }
    return out;
}

Weight LSFan::weight(FanVector const& v) const
{
    auto const& g = inst_.group();
    std::vector<Rational> acc(g.rank(), 0);
    for (auto const& [k, q] : v) {
        auto const& node = dcp_.nodes.at(k);
        Weight w = g.act(node.theta, inst_.lambda_I(node.set));
        for (int i = 0; i < g.rank(); ++i) acc[i] += q * w[i];
    }
    Weight out = Weight::zero(g.rank());
    for (int i = 0; i < g.rank(); ++i) {
        acc[i].canonicalize();
        if (acc[i].get_den() != 1) throw InvariantViolation("weight of a fan element is not integral");
        out[i] = acc[i].get_num().get_si();
    }
    return out;
}

namespace {

// Masses of the index-set blocks of a chain with total degree d; nullopt if not non-negative integers.
std::optional<std::vector<int>> block_masses(Instance const& inst, std::vector<int> const& sets, std::vector<int> const& d)
{
    // sets: distinct index sets along the chain, top ([m]) first.
    auto const& ip = inst.iposet();
    int r = static_cast<int>(sets.size());
    std::vector<int> mass(r, 0);
    for (int k = 0; k < r; ++k) {
        std::uint32_t own = ip.sets[sets[k]];
        if (k + 1 < r) own &= ~ip.sets[sets[k + 1]];
        int x = std::countr_zero(own);
        std::int64_t value = d[x];
        for (int j = 0; j < k; ++j)
            if ((ip.underline[sets[j]] >> x) & 1u) value -= mass[j];
        if (!((ip.underline[sets[k]] >> x) & 1u)) throw InvariantViolation("block_masses: pivot outside underline");
        if (value < 0) return std::nullopt;
        mass[k] = static_cast<int>(value);
    }
    std::vector<int> check(inst.m(), 0);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < inst.m(); ++i)
            if ((ip.underline[sets[k]] >> i) & 1u) check[i] += mass[k];
    if (check != d) return std::nullopt;
    return mass;
}

// All non-decreasing partial sums S_1 <= ... <= S_L = c with S_j * bonds[j] integral (j < L).
void enumerate_block(std::vector<std::int64_t> const& bonds, int c, std::vector<std::vector<Rational>>& out)
{
    int len = static_cast<int>(bonds.size()) + 1;
    std::vector<Rational> cur;
    std::function<void(int, Rational const&)> rec = [&](int j, Rational const& prev) {
        if (j == len - 1) {
            cur.push_back(Rational(c) - prev);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        long b = static_cast<long>(bonds[j]);
        // S_j = t / b with prev <= S_j <= c.
        Rational lo_q = prev * b;
        Integer lo = lo_q.get_num() / lo_q.get_den();
        if (Rational(lo) < lo_q) lo += 1;
        for (Integer t = lo; t <= Integer(c) * b; ++t) {
            Rational s(t, b);
            s.canonicalize();
            cur.push_back(s - prev);
            rec(j + 1, s);
            cur.pop_back();
        }
    };
    rec(0, Rational(0));
}

}  // namespace

std::vector<FanVector> LSFan::enumerate_on_chain(std::vector<int> const& chain, std::vector<int> const& d) const
{
    if (static_cast<int>(d.size()) != inst_.m()) throw InvalidInput("degree has wrong length");
    for (int x : d)
        if (x < 0) throw InvalidInput("degree must be non-negative");
    std::vector<int> sets;
    std::vector<std::vector<int>> blocks;
    for (int v : chain) {
        int s = dcp_.nodes[v].set;
        if (sets.empty() || sets.back() != s) {
            sets.push_back(s);
            blocks.emplace_back();
        }
        blocks.back().push_back(v);
    }
    auto mass = block_masses(inst_, sets, d);
    if (!mass) return {};
    std::vector<std::vector<std::vector<Rational>>> per_block(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        auto bonds = chain_bonds(blocks[k]);
        enumerate_block(bonds, (*mass)[k], per_block[k]);
    }
    std::vector<FanVector> out;
    FanVector cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == blocks.size()) {
            out.push_back(cur);
            return;
        }
        for (auto const& coeffs : per_block[k]) {
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (coeffs[j] != 0) cur[blocks[k][j]] = coeffs[j];
            rec(k + 1);
            for (int v : blocks[k]) cur.erase(v);
        }
    };
    rec(0);
    return out;
}

namespace {

std::vector<FanVector> merge_sorted(std::vector<std::vector<FanVector>>& parts)
{
    std::vector<FanVector> all;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace

std::vector<FanVector> LSFan::enumerate_serial(std::vector<int> const& d) const
{
    std::set<FanVector> seen;
    for (auto const& chain : chains_)
        for (auto& v : enumerate_on_chain(chain, d)) seen.insert(std::move(v));
    return {seen.begin(), seen.end()};
}

std::vector<FanVector> LSFan::enumerate(std::vector<int> const& d) const
{
    if (static_cast<int>(d.size()) != inst_.m()) throw InvalidInput("degree has wrong length");
    for (int x : d)
        if (x < 0) throw InvalidInput("degree must be non-negative");
    // Warm the lazily built quotient caches before going parallel.
    (void)inst_.group().quotient(inst_.Q());
    long n = static_cast<long>(chains_.size());
    std::vector<std::vector<FanVector>> parts(chains_.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) parts[i] = enumerate_on_chain(chains_[i], d);
    return merge_sorted(parts);
}

std::vector<FanVector> LSFan::decompose(FanVector const& v) const
{
    if (!member(v)) throw InvalidInput("decompose: vector is not in the LS-fan");
    std::map<int, std::vector<std::pair<int, Rational>>> by_set;  // set -> nodes (rank descending)
    for (auto const& [k, q] : v)
        if (q != 0) by_set[dcp_.nodes[k].set].push_back({k, q});
    std::vector<FanVector> out;
    // Larger sets come first: a chain visits index sets from [m] downwards.
    std::vector<int> order;
    for (auto const& [s, _] : by_set) order.push_back(s);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto const& ip = inst_.iposet();
        if (ip.contains(a, b) != ip.contains(b, a)) return ip.contains(a, b);
        return a > b;
    });
    for (int s : order) {
        FanVector part;
        Rational filled = 0;
        for (auto const& [k, q] : by_set[s]) {
            Rational left = q;
            while (left > 0) {
                Rational room = Rational(1) - filled;
                Rational take = left < room ? left : room;
                part[k] += take;
                filled += take;
                left -= take;
                if (filled == 1) {
                    out.push_back(std::move(part));
                    part.clear();
                    filled = 0;
                }
            }
        }
        if (filled != 0) throw InvariantViolation("decompose: block mass is not integral");
    }
    return out;
}

std::map<std::vector<int>, Integer> LSFan::chain_bond_sums() const
{
    auto const& ip = inst_.iposet();
    auto slot = [&](int set) { return std::countr_zero(ip.underline[set]); };
    std::size_t n = dcp_.nodes.size();
    std::vector<std::map<std::vector<int>, Integer>> acc(n);
    std::vector<int> start(inst_.m(), -1);
    start[slot(dcp_.nodes[0].set)] += 1;
    acc[0][start] = 1;
    std::map<std::vector<int>, Integer> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (dcp_.lower_edges[v].empty()) {
            for (auto const& [k, c] : acc[v]) out[k] += c;
            continue;
        }
        for (int e : dcp_.lower_edges[v]) {
            auto const& edge = dcp_.edges[e];
            int s = slot(dcp_.nodes[edge.lower].set);
            for (auto const& [k, c] : acc[v]) {
                auto next = k;
                next[s] += 1;
                acc[edge.lower][next] += c * static_cast<long>(edge.bond);
            }
        }
    }
    return out;
}

std::map<std::vector<int>, Integer> LSFan::chain_bond_sums_serial() const
{
    auto const& ip = inst_.iposet();
    std::map<std::vector<int>, Integer> out;
    for (auto const& chain : chains_) {
        std::vector<int> k(inst_.m(), -1);
        for (int v : chain) k[std::countr_zero(ip.underline[dcp_.nodes[v].set])] += 1;
        Integer prod = 1;
        for (auto b : chain_bonds(chain)) prod *= static_cast<long>(b);
        out[k] += prod;
    }
    return out;
}

int schubert_dimension(Instance const& inst) { return inst.group().rank_of(inst.tau()); }

std::int64_t demazure_dimension(Instance const& inst, std::vector<int> const& d)
{
    Weight mu = inst.weight_of_degree(d);
    auto const& g = inst.group();
    if (inst.tau_is_top()) return weyl_dimension(g.datum(), mu).get_si();
    return mass(demazure_character(g, mu, inst.tau()));
}

namespace {

void simplex_points(int m, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    int used = std::accumulate(cur.begin(), cur.end(), 0);
    for (int x = 0; used + x <= bound; ++x) {
        cur.push_back(x);
        simplex_points(m, bound, cur, out);
        cur.pop_back();
    }
}

// Signed Stirling numbers of the first kind s(n, k) for n <= N.
std::vector<std::vector<Integer>> stirling_first(int N)
{
    std::vector<std::vector<Integer>> s(N + 1, std::vector<Integer>(N + 1, 0));
    s[0][0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) s[n][k] = s[n - 1][k - 1] - Integer(n - 1) * s[n - 1][k];
    return s;
}

Integer binom(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

std::map<std::vector<int>, Rational> fit_hilbert_polynomial(Instance const& inst, int grid)
{
    int n = schubert_dimension(inst);
    if (grid < n)
        throw InvalidInput("Hilbert fit needs the simplex grid |d| <= " + std::to_string(n) + ", got " +
                           std::to_string(grid));
    int m = inst.m();
    std::vector<std::vector<int>> points;
    std::vector<int> cur;
    simplex_points(m, grid, cur, points);
    std::map<std::vector<int>, Integer> table;
    for (auto const& p : points) table[p] = demazure_dimension(inst, p);
    // Forward differences axis by axis turn values into Newton coefficients in the binomial basis.
    for (int axis = 0; axis < m; ++axis) {
        std::map<std::vector<int>, Integer> next;
        for (auto const& p : points) {
            Integer acc = 0;
            auto q = p;
            for (int j = 0; j <= p[axis]; ++j) {
                q[axis] = j;
                Integer term = binom(p[axis], j) * table.at(q);
                if ((p[axis] - j) % 2) acc -= term;
                else acc += term;
            }
            next[p] = acc;
        }
        table = std::move(next);
    }
    // prod C(d_i, k_i) = prod sum_e s(k_i, e_i) d_i^{e_i} / k_i!
    auto s = stirling_first(grid);
    std::map<std::vector<int>, Rational> coeffs;
    for (auto const& [k, newton] : table) {
        if (newton == 0) continue;
        Integer denom = 1;
        for (int x : k) denom *= factorial(x);
        std::vector<int> e(m, 0);
        std::function<void(int, Integer)> rec = [&](int i, Integer prod) {
            if (i == m) {
                Rational c(newton * prod, denom);
                c.canonicalize();
                coeffs[e] += c;
                return;
            }
            for (int x = 0; x <= k[i]; ++x) {
                if (s[k[i]][x] == 0) continue;
                e[i] = x;
                rec(i + 1, prod * s[k[i]][x]);
            }
            e[i] = 0;
        };
        rec(0, Integer(1));
    }
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second == 0 ? coeffs.erase(it) : std::next(it);
    return coeffs;
}

ConjectureReport multidegree_conjecture_check(LSFan const& fan, int grid)
{
    auto const& inst = fan.instance();
    auto const& ip = inst.iposet();
    for (int s = 0; s < ip.size(); ++s)
        if (std::popcount(ip.underline[s]) != 1)
            throw InvalidInput("multidegree check needs a totally ordered index poset");
    for (int a = 0; a < ip.size(); ++a)
        for (int b = 0; b < ip.size(); ++b)
            if (!ip.contains(a, b) && !ip.contains(b, a))
                throw InvalidInput("multidegree check needs a totally ordered index poset");
    ConjectureReport report;
    report.dimension = schubert_dimension(inst);
    if (grid < 0) grid = report.dimension;
    auto poly = fit_hilbert_polynomial(inst, grid);
    auto sums = fan.chain_bond_sums();
    std::vector<std::vector<int>> ks;
    std::vector<int> cur;
    simplex_points(inst.m(), report.dimension, cur, ks);
    for (auto const& k : ks) {
        if (std::accumulate(k.begin(), k.end(), 0) != report.dimension) continue;
        ConjectureRow row;
        row.k = k;
        auto it = sums.find(k);
        row.chain_sum = it == sums.end() ? Integer(0) : it->second;
        Rational c = 0;
        if (auto p = poly.find(k); p != poly.end()) c = p->second;
        Integer kfact = 1;
        for (int x : k) kfact *= factorial(x);
        row.multidegree = c * kfact;
        row.multidegree.canonicalize();
        row.agrees = row.multidegree == Rational(row.chain_sum);
        report.all_agree = report.all_agree && row.agrees;
        report.rows.push_back(row);
    }
    for (auto const& [k, c] : sums)
        if (std::accumulate(k.begin(), k.end(), 0) != report.dimension)
            throw InvariantViolation("chain bond tally has a chain of the wrong length");
    return report;
}

}  // namespace lsfan
