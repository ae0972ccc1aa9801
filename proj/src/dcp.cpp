#include "lsfan/dcp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace lsfan {

// ---------------------------------------------------------------- index posets

int IndexPoset::find(std::uint32_t mask) const
{
    for (int i = 0; i < size(); ++i)
        if (sets[i] == mask) return i;
    return -1;
}

std::vector<std::vector<int>> IndexPoset::chains_to_top(int i) const
{
    if (i == top()) return {{i}};
    std::vector<std::vector<int>> out;
    for (int j : upper_covers[i])
        for (auto& c : chains_to_top(j)) {
            c.insert(c.begin(), i);
            out.push_back(std::move(c));
        }
    return out;
}

std::string IndexPoset::label(int i) const
{
    std::string s = "{";
    bool first = true;
    for (int b : bits_of(sets[i])) {
        if (!first) s += ",";
        s += std::to_string(b + 1);
        first = false;
    }
    return s + "}";
}

std::uint32_t mask_from_indices(std::vector<int> const& one_based)
{
    std::uint32_t m = 0;
    for (int i : one_based) {
        if (i < 1 || i > 31) throw InvalidInput("index set entry out of range: " + std::to_string(i));
        m |= 1u << (i - 1);
    }
    return m;
}

IndexPoset build_index_poset(std::vector<std::uint32_t> sets, int m)
{
    if (m < 1 || m > 16) throw InvalidInput("index poset ground set size must lie in 1..16");
    std::uint32_t full = (1u << m) - 1u;
    for (auto s : sets)
        if (s == 0 || (s & ~full)) throw InvalidInput("index poset sets must be non-empty subsets of [m]");
    std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    if (sets.empty() || sets.back() != full) throw InvalidInput("index poset must contain [m]");

    IndexPoset p;
    p.m = m;
    p.sets = std::move(sets);
    int n = p.size();
    p.lower_covers.resize(n);
    p.upper_covers.resize(n);
    auto strict = [&](int a, int b) { return a != b && (p.sets[a] & ~p.sets[b]) == 0; };  // a inside b
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!strict(j, i)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (strict(j, k) && strict(k, i)) cover = false;
            if (cover) {
                p.lower_covers[i].push_back(j);
                p.upper_covers[j].push_back(i);
            }
        }

    // every maximal chain (minimal element up to [m]) must have exactly m elements
    std::vector<int> lo(n, 0), hi(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        if (i == p.top()) continue;
        lo[i] = 1 << 20;
        hi[i] = -1;
        for (int j : p.upper_covers[i]) {
            lo[i] = std::min(lo[i], lo[j] + 1);
            hi[i] = std::max(hi[i], hi[j] + 1);
        }
    }
    for (int i = 0; i < n; ++i)
        if (p.lower_covers[i].empty() && (lo[i] != m - 1 || hi[i] != m - 1))
            throw InvalidInput("index poset is not graded of length m-1 (maximal chain through " + p.label(i) + ")");

    p.underline.resize(n);
    for (int i = 0; i < n; ++i) {
        if (p.lower_covers[i].empty()) {
            p.underline[i] = p.sets[i];
            continue;
        }
        for (int k : p.lower_covers[i]) p.underline[i] |= p.sets[i] & ~p.sets[k];
    }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if ((p.underline[j] & ~p.sets[i]) == 0 && (p.sets[j] & ~p.sets[i]) != 0)
                throw InvalidInput("index poset violates the underline condition for J=" + p.label(j) +
                                   ", I=" + p.label(i));
    return p;
}

IndexPoset IndexPoset::power_set(int m)
{
    std::vector<std::uint32_t> sets;
    for (std::uint32_t s = 1; s < (1u << m); ++s) sets.push_back(s);
    return build_index_poset(sets, m);
}

IndexPoset IndexPoset::chain(int m)
{
    std::vector<std::uint32_t> sets;
    for (int i = 1; i <= m; ++i) sets.push_back((1u << i) - 1u);
    return build_index_poset(sets, m);
}

// ---------------------------------------------------------------- instance

Instance::Instance(std::shared_ptr<WeylGroup const> group, std::vector<Weight> lambdas, IndexPoset iposet, Coset tau)
    : group_(std::move(group)), lambdas_(std::move(lambdas)), iposet_(std::move(iposet))
{
    auto const& g = *group_;
    if (static_cast<int>(lambdas_.size()) != iposet_.m)
        throw InvalidInput("number of weights differs from the index poset ground set");
    for (auto const& l : lambdas_) {
        if (l.rank() != g.rank()) throw InvalidInput("weight " + to_string(l) + " has the wrong rank");
        if (!l.dominant()) throw InvalidInput("weight " + to_string(l) + " is not dominant");
    }
    q_ = stabilizer(total_weight());
    if (tau.par != q_) {
        if (!tau.par.subset_of(q_)) throw InvalidInput("tau is not a coset of the stabilizer of the total weight");
        tau = g.project(tau, q_);
    }
    tau_ = tau;
    Elem top = g.max_rep(tau_.rep, q_);
    for (int i = 0; i < g.rank(); ++i)
        if (g.right_descent(top, i)) q_tau_.mask |= 1u << i;

    int n = iposet_.size();
    auto all = Parabolic::all(g.rank());
    for (int s = 0; s < n; ++s) {
        Weight l = Weight::zero(g.rank());
        for (int i : bits_of(iposet_.underline[s])) l += lambdas_[i];
        lambda_I_.push_back(l);
        p_I_.push_back(stabilizer(l));
        Parabolic qi = all;
        for (int i : bits_of(iposet_.sets[s])) qi = qi & stabilizer(lambdas_[i]);
        q_I_.push_back(qi);
    }
    for (int s = 0; s < n; ++s) {
        Parabolic qu = q_tau_;
        for (int t = 0; t < n; ++t)
            if (iposet_.contains(t, s)) qu = qu & p_I_[t];
        q_upper_.push_back(qu);
    }
}

Weight Instance::total_weight() const
{
    Weight w = Weight::zero(group_->rank());
    for (auto const& l : lambdas_) w += l;
    return w;
}

std::vector<int> Instance::e_I(int set) const
{
    std::vector<int> e(m(), 0);
    for (int i : bits_of(iposet_.underline[set])) e[i] = 1;
    return e;
}

Weight Instance::weight_of_degree(std::vector<int> const& d) const
{
    Weight w = Weight::zero(group_->rank());
    for (int i = 0; i < m(); ++i) w += std::int64_t(d[i]) * lambdas_[i];
    return w;
}

// ---------------------------------------------------------------- W-underline

int UnderlineW::find(Coset const& theta, int set) const
{
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k].theta == theta && nodes[k].set == set) return static_cast<int>(k);
    return -1;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(Bits const& b, int i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, int i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

// Hasse diagram of a reflexive partial order given by bit rows (row a holds every b <= a).
std::vector<std::pair<int, int>> hasse_of(std::vector<Bits> const& below)
{
    int n = static_cast<int>(below.size());
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a) {
        Bits strict = below[a];
        strict[a / 64] &= ~(std::uint64_t(1) << (a % 64));
        Bits covered_twice(strict.size(), 0);
        for (int k = 0; k < n; ++k) {
            if (!test(strict, k)) continue;
            Bits under = below[k];
            under[k / 64] &= ~(std::uint64_t(1) << (k % 64));
            for (std::size_t w = 0; w < strict.size(); ++w) covered_twice[w] |= under[w];
        }
        for (int b = 0; b < n; ++b)
            if (test(strict, b) && !test(covered_twice, b)) out.emplace_back(a, b);
    }
    return out;
}

}  // namespace

UnderlineW build_underline_w(Instance const& inst)
{
    auto const& g = inst.group();
    auto const& ip = inst.iposet();
    UnderlineW u;
    for (int s = ip.top(); s >= 0; --s) {
        Coset bound = g.project(inst.tau(), inst.P_I(s));
        auto cosets = g.below(bound);
        std::reverse(cosets.begin(), cosets.end());
        for (auto const& c : cosets) u.nodes.push_back({c, s});
    }
    int n = static_cast<int>(u.nodes.size());
    std::vector<Coset> lo(n), hi(n);
    for (int a = 0; a < n; ++a) {
        lo[a] = g.min_lift(u.nodes[a].theta, inst.Q());
        hi[a] = g.max_lift(u.nodes[a].theta, inst.Q());
    }
    u.relation.assign(n, std::vector<char>(n, 0));
    u.criterion_agrees = true;
    std::size_t words = (n + 63) / 64;
    std::vector<Bits> closure(n, Bits(words, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int I = u.nodes[a].set, J = u.nodes[b].set;
            if (!ip.contains(I, J)) continue;
            bool rel = g.leq(lo[b].rep, hi[a].rep);
            u.relation[a][b] = rel;
            if (rel) set_bit(closure[a], b);
            auto crit = g.project(g.max_lift(u.nodes[a].theta, inst.Q_I(I)), inst.P_I(J));
            if (g.leq(u.nodes[b].theta, crit) != rel) u.criterion_agrees = false;
        }
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (test(closure[a], k))
                for (std::size_t w = 0; w < words; ++w) closure[a][w] |= closure[k][w];
    u.order.assign(n, std::vector<char>(n, 0));
    u.generating_transitive = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            u.order[a][b] = test(closure[a], b);
            if (u.order[a][b] != u.relation[a][b]) u.generating_transitive = false;
        }
    u.hasse = hasse_of(closure);
    return u;
}

// ---------------------------------------------------------------- DCP

int Dcp::find(Coset const& theta, int set) const
{
    auto it = index_.find({theta.rep, set});
    if (it == index_.end() || nodes[it->second].theta != theta) return -1;
    return it->second;
}

std::vector<int> Dcp::minimal_nodes() const
{
    std::vector<int> out;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (lower_edges[k].empty()) out.push_back(static_cast<int>(k));
    return out;
}

std::vector<std::vector<int>> Dcp::maximal_chains() const
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur{0};
    std::function<void(int)> walk = [&](int v) {
        if (lower_edges[v].empty()) {
            out.push_back(cur);
            return;
        }
        for (int e : lower_edges[v]) {
            cur.push_back(edges[e].lower);
            walk(edges[e].lower);
            cur.pop_back();
        }
    };
    if (!nodes.empty()) walk(0);
    return out;
}

std::size_t Dcp::count_maximal_chains() const
{
    std::vector<std::size_t> count(nodes.size(), 0);
    for (int v = static_cast<int>(nodes.size()) - 1; v >= 0; --v) {
        if (lower_edges[v].empty()) {
            count[v] = 1;
            continue;
        }
        for (int e : lower_edges[v]) count[v] += count[edges[e].lower];
    }
    return nodes.empty() ? 0 : count[0];
}

std::int64_t sameI_bond(Instance const& inst, Coset const& lower, int set, int root)
{
    auto const& g = inst.group();
    return std::abs(g.datum().pair_coroot(g.act(lower, inst.lambda_I(set)), root));
}

Dcp finish_dcp(Instance const& inst, std::vector<DcpNode> nodes, std::vector<DcpEdge> edges)
{
    auto const& g = inst.group();
    std::vector<int> perm(nodes.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        auto const &x = nodes[a], &y = nodes[b];
        if (x.rank != y.rank) return x.rank > y.rank;
        if (x.set != y.set) return x.set > y.set;
        return x.theta.rep < y.theta.rep;
    });
    std::vector<int> where(nodes.size());
    Dcp d;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        where[perm[k]] = static_cast<int>(k);
        d.nodes.push_back(nodes[perm[k]]);
    }
    for (auto& e : edges) {
        e.upper = where[e.upper];
        e.lower = where[e.lower];
    }
    std::sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) {
        return a.upper != b.upper ? a.upper < b.upper : a.lower < b.lower;
    });
    d.edges = std::move(edges);
    d.lower_edges.assign(d.nodes.size(), {});
    d.upper_edges.assign(d.nodes.size(), {});
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
        d.lower_edges[d.edges[k].upper].push_back(static_cast<int>(k));
        d.upper_edges[d.edges[k].lower].push_back(static_cast<int>(k));
    }
    for (std::size_t k = 0; k < d.nodes.size(); ++k) {
        auto const& n = d.nodes[k];
        d.index_[{n.theta.rep, n.set}] = static_cast<int>(k);
        if (n.rank != g.length(n.theta.rep) + std::popcount(inst.iposet().sets[n.set]) - 1)
            throw InvariantViolation("DCP node rank differs from r(theta) + |I| - 1");
    }
    d.length = d.nodes.empty() ? 0 : d.nodes[0].rank;
    return d;
}

namespace {

int node_rank(Instance const& inst, Coset const& theta, int set)
{
    return inst.group().length(theta.rep) + std::popcount(inst.iposet().sets[set]) - 1;
}

}  // namespace

Dcp build_dcp_inductive(Instance const& inst)
{
    auto const& g = inst.group();
    auto const& ip = inst.iposet();
    auto const& quo = g.quotient(inst.Q());
    std::vector<DcpNode> nodes;
    std::vector<DcpEdge> edges;
    std::map<std::pair<Elem, int>, int> ids;
    auto add = [&](Coset const& theta, int set) {
        auto [it, fresh] = ids.emplace(std::make_pair(theta.rep, set), static_cast<int>(nodes.size()));
        if (fresh) nodes.push_back({theta, set, node_rank(inst, theta, set)});
        return std::make_pair(it->second, fresh);
    };
    std::vector<int> level{add(inst.tau(), ip.top()).first};
    while (!level.empty()) {
        std::vector<int> next;
        for (int v : level) {
            DcpNode const node = nodes[v];
            for (int J : ip.lower_covers[node.set]) {
                if (!g.is_min(node.theta.rep, inst.Q_I(J))) continue;
                auto [w, fresh] = add(node.theta, J);
                if (fresh) next.push_back(w);
                edges.push_back({v, w, EdgeKind::ShrinkI, -1, 1});
            }
            Coset top = g.project(node.theta, inst.P_I(node.set));
            for (auto const& e : quo.lower[quo.find(node.theta.rep)]) {
                Coset phi{quo.elements[e.lower], inst.Q()};
                if (!g.is_min(phi.rep, inst.Q_I(node.set)) || g.project(phi, inst.P_I(node.set)) == top) continue;
                auto [w, fresh] = add(phi, node.set);
                if (fresh) next.push_back(w);
                edges.push_back({v, w, EdgeKind::SameI, e.root, sameI_bond(inst, phi, node.set, e.root)});
            }
        }
        level = std::move(next);
    }
    return finish_dcp(inst, std::move(nodes), std::move(edges));
}

Dcp build_dcp_direct_w0(Instance const& inst)
{
    if (!inst.tau_is_top()) throw InvalidInput("direct DCP construction requires tau = w0 W_Q");
    auto const& g = inst.group();
    auto const& ip = inst.iposet();
    std::vector<DcpNode> nodes;
    for (int s = 0; s < ip.size(); ++s) {
        std::vector<Parabolic> uppers;
        for (auto const& chain : ip.chains_to_top(s)) {
            Parabolic qr = Parabolic::all(g.rank());
            for (int t : chain) qr = qr & inst.P_I(t);
            uppers.push_back(qr);
        }
        for (Elem w : g.quotient(inst.Q()).elements) {
            if (!g.is_min(w, inst.Q_I(s))) continue;
            Coset theta{w, inst.Q()};
            bool hit = std::any_of(uppers.begin(), uppers.end(), [&](Parabolic qr) {
                return g.max_lift(g.project(theta, qr), inst.Q()) == theta;
            });
            if (hit) nodes.push_back({theta, s, node_rank(inst, theta, s)});
        }
    }
    // covering relations: a coset covering in W/W_Q that stays strict in W/W_{P_I}, or a covering in the index poset
    std::map<std::pair<Elem, int>, int> ids;
    for (std::size_t k = 0; k < nodes.size(); ++k) ids[{nodes[k].theta.rep, nodes[k].set}] = static_cast<int>(k);
    auto const& quo = g.quotient(inst.Q());
    std::vector<DcpEdge> edges;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        auto const& x = nodes[k];
        int v = static_cast<int>(k);
        for (int J : ip.lower_covers[x.set]) {
            auto it = ids.find({x.theta.rep, J});
            if (it != ids.end()) edges.push_back({v, it->second, EdgeKind::ShrinkI, -1, 1});
        }
        Coset top = g.project(x.theta, inst.P_I(x.set));
        for (auto const& e : quo.lower[quo.find(x.theta.rep)]) {
            auto it = ids.find({quo.elements[e.lower], x.set});
            if (it == ids.end()) continue;
            Coset phi{quo.elements[e.lower], inst.Q()};
            if (g.project(phi, inst.P_I(x.set)) == top) continue;
            edges.push_back({v, it->second, EdgeKind::SameI, e.root, sameI_bond(inst, phi, x.set, e.root)});
        }
    }
    return finish_dcp(inst, std::move(nodes), std::move(edges));
}

bool same_poset(Dcp const& a, Dcp const& b)
{
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
    for (std::size_t k = 0; k < a.nodes.size(); ++k)
        if (a.nodes[k].theta != b.nodes[k].theta || a.nodes[k].set != b.nodes[k].set) return false;
    for (std::size_t k = 0; k < a.edges.size(); ++k) {
        auto const &x = a.edges[k], &y = b.edges[k];
        if (x.upper != y.upper || x.lower != y.lower || x.kind != y.kind || x.root != y.root || x.bond != y.bond)
            return false;
    }
    return true;
}

std::map<int, std::int64_t> bonds(Dcp const& dcp)
{
    std::map<int, std::int64_t> out;
    for (std::size_t k = 0; k < dcp.edges.size(); ++k) out[static_cast<int>(k)] = dcp.edges[k].bond;
    return out;
}

// ---------------------------------------------------------------- rho and standardness

UnderlineWNode rho(Instance const& inst, DcpNode const& node)
{
    return {inst.group().project(node.theta, inst.P_I(node.set)), node.set};
}

int rho_inverse(Instance const& inst, Dcp const& dcp, UnderlineWNode const& x)
{
    int found = -1;
    for (std::size_t k = 0; k < dcp.nodes.size(); ++k) {
        if (dcp.nodes[k].set != x.set || rho(inst, dcp.nodes[k]) != x) continue;
        if (found >= 0)
            throw InvalidInput("rho is not injective: DCP nodes " + std::to_string(found) + " and " +
                               std::to_string(k) + " share an image");
        found = static_cast<int>(k);
    }
    if (found < 0) throw InvalidInput("no DCP node maps to the given element under rho");
    return found;
}

DcpNode rho_inverse_w0(Instance const& inst, UnderlineWNode const& x)
{
    if (!inst.tau_is_top()) throw InvalidInput("closed-form rho inverse requires tau = w0 W_Q");
    auto const& g = inst.group();
    Coset theta{g.min_rep(g.max_rep(x.theta.rep, x.theta.par), inst.Q_I(x.set)), inst.Q()};
    return {theta, x.set, node_rank(inst, theta, x.set)};
}

namespace {

bool dynkin_criterion(RootDatum const& datum, Parabolic qi, Parabolic qr, Parabolic pi)
{
    if ((qi | qr) != pi) return false;
    for (int a : bits_of(qi.mask & ~qr.mask))
        for (int b : bits_of(qr.mask & ~qi.mask)) {
            auto path = datum.dynkin_path(a, b);
            if (std::all_of(path.begin(), path.end(), [&](int v) { return pi.contains(v); })) return false;
        }
    return true;
}

}  // namespace

StandardnessReport is_tau_standard(Instance const& inst, Dcp const& dcp)
{
    auto const& g = inst.group();
    auto const& ip = inst.iposet();
    StandardnessReport r;
    std::map<UnderlineWNode, std::vector<int>> images;
    for (std::size_t k = 0; k < dcp.nodes.size(); ++k) images[rho(inst, dcp.nodes[k])].push_back(static_cast<int>(k));
    for (auto const& [x, ids] : images)
        for (std::size_t k = 1; k < ids.size(); ++k) r.collisions.emplace_back(ids[0], ids[k]);
    r.standard = r.collisions.empty();
    std::size_t wnodes = 0;
    for (int s = 0; s < ip.size(); ++s) wnodes += g.below(g.project(inst.tau(), inst.P_I(s))).size();
    r.surjective = images.size() == wnodes;
    if (!inst.tau_is_top()) return r;

    for (int s = 0; s < ip.size(); ++s) {
        Parabolic pi = inst.P_I(s), qi = inst.Q_I(s);
        Coset id = g.identity_coset(pi);
        auto it = images.find({id, s});
        bool unique = it != images.end() && it->second.size() == 1;
        Coset lhs{g.min_rep(g.max_rep(g.identity(), pi), qi), inst.Q()};
        auto members = g.coset_elements(g.identity(), pi);
        std::vector<CriteriaRow> rows;
        for (auto const& chain : ip.chains_to_top(s)) {
            Parabolic qr = inst.Q_tau();
            for (int t : chain) qr = qr & inst.P_I(t);
            CriteriaRow row{s, chain, unique, false, true, false};
            row.min_max_equal = lhs == g.coset(g.max_rep(g.identity(), qr), inst.Q());
            for (Elem w : members)
                if (g.is_min(w, qi) && !(g.in_parabolic_subgroup(w, qr) && g.is_min(w, inst.Q())))
                    row.subgroup_inclusion = false;
            row.dynkin_paths = dynkin_criterion(g.datum(), qi, qr, pi);
            if (!(row.unique_preimage == row.min_max_equal && row.min_max_equal == row.subgroup_inclusion &&
                  row.subgroup_inclusion == row.dynkin_paths))
                r.criteria_agree = false;
            if (!rows.empty() && (rows[0].min_max_equal != row.min_max_equal ||
                                  rows[0].subgroup_inclusion != row.subgroup_inclusion ||
                                  rows[0].dynkin_paths != row.dynkin_paths))
                r.chain_independent = false;
            rows.push_back(row);
        }
        r.criteria.insert(r.criteria.end(), rows.begin(), rows.end());
    }
    return r;
}

StandardnessReport is_tau_standard(Instance const& inst) { return is_tau_standard(inst, build_dcp_inductive(inst)); }

std::optional<std::vector<int>> totally_ordered_exists(RootDatum const& datum, std::vector<Weight> const& lambdas)
{
    std::vector<int> vertex;
    for (auto const& l : lambdas) {
        auto support = bits_of(stabilizer(l).mask ^ Parabolic::all(datum.rank).mask);
        if (support.size() != 1) throw InvalidInput("weight " + to_string(l) + " is not a multiple of a fundamental weight");
        if (std::find(vertex.begin(), vertex.end(), support[0]) != vertex.end())
            throw InvalidInput("weights must use distinct fundamental weights");
        vertex.push_back(support[0]);
    }
    std::set<int> steiner(vertex.begin(), vertex.end());
    for (int a : vertex)
        for (int b : vertex)
            for (int v : datum.dynkin_path(a, b)) steiner.insert(v);
    int start = -1;
    for (int v : steiner) {
        int deg = 0;
        for (int u : datum.neighbours(v)) deg += steiner.count(u);
        if (deg > 2) return std::nullopt;
        if (deg <= 1 && start < 0) start = v;
    }
    std::vector<int> order;
    int prev = -1, cur = start;
    while (cur >= 0) {
        auto it = std::find(vertex.begin(), vertex.end(), cur);
        if (it != vertex.end()) order.push_back(static_cast<int>(it - vertex.begin()));
        int next = -1;
        for (int u : datum.neighbours(cur))
            if (u != prev && steiner.count(u)) next = u;
        prev = cur;
        cur = next;
    }
    return order;
}

// ---------------------------------------------------------------- defining chains

namespace {

void check_chain(Instance const& inst, std::vector<UnderlineWNode> const& chain)
{
    if (chain.empty()) throw InvalidInput("empty chain");
    for (auto const& x : chain)
        if (x.theta.par != inst.P_I(x.set)) throw InvalidInput("chain element outside its quotient W/W_{P_I}");
}

}  // namespace

DefiningChains defining_chain_extremes(Instance const& inst, std::vector<UnderlineWNode> const& chain)
{
    check_chain(inst, chain);
    auto const& g = inst.group();
    DefiningChains out;
    Coset bound = inst.tau();
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (!g.leq(chain[k].theta, g.project(bound, chain[k].theta.par)))
            throw InvalidInput("no defining chain: element " + std::to_string(k) + " has no lift below the previous one");
        bound = g.deodhar_max_lift(bound, chain[k].theta);
        out.max_chain.push_back(bound);
    }
    std::vector<Coset> mins(chain.size());
    Coset low = g.min_lift(chain.back().theta, inst.Q());
    mins.back() = low;
    for (std::size_t k = chain.size() - 1; k-- > 0;) {
        if (!g.leq(g.project(low, chain[k].theta.par), chain[k].theta))
            throw InvalidInput("no defining chain: element " + std::to_string(k) + " has no lift above the next one");
        low = g.deodhar_min_lift(low, chain[k].theta);
        mins[k] = low;
    }
    if (!g.leq(mins.front(), inst.tau())) throw InvalidInput("no defining chain: minimal lift exceeds tau");
    out.min_chain = std::move(mins);
    return out;
}

std::vector<Coset> normalize_up(Instance const& inst, std::vector<UnderlineWNode> const& chain,
                                std::vector<Coset> const& lifts)
{
    auto const& g = inst.group();
    std::vector<Coset> out;
    Parabolic qk = inst.Q_tau();
    for (std::size_t k = 0; k < chain.size(); ++k) {
        qk = qk & inst.P_I(chain[k].set);
        out.push_back(g.max_lift(g.project(lifts[k], qk), inst.Q()));
    }
    return out;
}

std::vector<Coset> normalize_down(Instance const& inst, std::vector<UnderlineWNode> const& chain,
                                  std::vector<Coset> const& lifts)
{
    auto const& g = inst.group();
    std::vector<Coset> out(chain.size());
    Parabolic qk = Parabolic::all(g.rank());
    for (std::size_t k = chain.size(); k-- > 0;) {
        qk = qk & inst.P_I(chain[k].set);
        out[k] = g.min_lift(g.project(lifts[k], qk), inst.Q());
    }
    return out;
}

bool is_defining_chain(Instance const& inst, std::vector<UnderlineWNode> const& chain, std::vector<Coset> const& lifts)
{
    auto const& g = inst.group();
    if (lifts.size() != chain.size() || lifts.empty()) return false;
    if (!g.leq(lifts[0], inst.tau())) return false;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (g.project(lifts[k], chain[k].theta.par) != chain[k].theta) return false;
        if (k && !g.leq(lifts[k], lifts[k - 1])) return false;
    }
    return true;
}

}  // namespace lsfan
