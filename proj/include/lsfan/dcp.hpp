#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsfan/weyl_group.hpp"

namespace lsfan {

// Index poset: non-empty subsets of [m] (bit i = weight i+1) ordered by inclusion.
struct IndexPoset {
    int m = 0;
    std::vector<std::uint32_t> sets;       // sorted by (size, mask); top = [m] is last
    std::vector<std::uint32_t> underline;  // underline-I per set
    std::vector<std::vector<int>> lower_covers, upper_covers;

    int size() const { return static_cast<int>(sets.size()); }
    int top() const { return size() - 1; }
    int find(std::uint32_t mask) const;
    bool contains(int i, int j) const { return (sets[j] & ~sets[i]) == 0; }  // set j inside set i
    // All covering chains I = I_r < ... < I_m = [m] starting at set i, listed bottom to top.
    std::vector<std::vector<int>> chains_to_top(int i) const;
    std::string label(int i) const;

    static IndexPoset power_set(int m);
    static IndexPoset chain(int m);  // [1] < [2] < ... < [m]
};

IndexPoset build_index_poset(std::vector<std::uint32_t> sets, int m);
std::uint32_t mask_from_indices(std::vector<int> const& one_based);

// Everything derived from (W, lambda, I, tau).
class Instance {
public:
    Instance(std::shared_ptr<WeylGroup const> group, std::vector<Weight> lambdas, IndexPoset iposet, Coset tau);

    WeylGroup const& group() const { return *group_; }
    std::shared_ptr<WeylGroup const> group_ptr() const { return group_; }
    std::vector<Weight> const& lambdas() const { return lambdas_; }
    IndexPoset const& iposet() const { return iposet_; }
    int m() const { return iposet_.m; }
    Coset const& tau() const { return tau_; }
    Parabolic Q() const { return q_; }
    Parabolic Q_tau() const { return q_tau_; }
    bool tau_is_top() const { return tau_ == group_->top_coset(q_); }
    Weight total_weight() const;

    Weight const& lambda_I(int set) const { return lambda_I_[set]; }
    Parabolic P_I(int set) const { return p_I_[set]; }
    Parabolic Q_I(int set) const { return q_I_[set]; }
    Parabolic Q_upper(int set) const { return q_upper_[set]; }  // Q^I
    std::vector<int> e_I(int set) const;
    // Weight d * lambda = sum d_i lambda_i.
    Weight weight_of_degree(std::vector<int> const& d) const;

private:
    std::shared_ptr<WeylGroup const> group_;
    std::vector<Weight> lambdas_;
    IndexPoset iposet_;
    Coset tau_;
    Parabolic q_, q_tau_;
    std::vector<Weight> lambda_I_;
    std::vector<Parabolic> p_I_, q_I_, q_upper_;
};

struct UnderlineWNode {
    Coset theta;  // in W/W_{P_I}
    int set;
    auto operator<=>(UnderlineWNode const&) const = default;
};

struct UnderlineW {
    std::vector<UnderlineWNode> nodes;
    std::vector<std::vector<char>> relation;  // generating relation: relation[a][b] iff a >= b
    std::vector<std::vector<char>> order;     // transitive hull
    bool generating_transitive = false;
    bool criterion_agrees = false;  // relation equals pi_{P_J} max_{Q_I}(theta) >= phi on all pairs
    std::vector<std::pair<int, int>> hasse;  // (upper, lower)
    int find(Coset const& theta, int set) const;
    bool geq(int a, int b) const { return order[a][b]; }
};

UnderlineW build_underline_w(Instance const& inst);

enum class EdgeKind { SameI, ShrinkI };

struct DcpNode {
    Coset theta;  // in W/W_Q
    int set;
    int rank;
};

struct DcpEdge {
    int upper, lower;
    EdgeKind kind;
    int root;  // covering root for SameI edges, -1 otherwise
    std::int64_t bond;
};

struct Dcp {
    std::vector<DcpNode> nodes;  // rank descending; node 0 is (tau, [m])
    std::vector<DcpEdge> edges;  // sorted by (upper, lower)
    std::vector<std::vector<int>> lower_edges, upper_edges;  // edge indices per node
    int length = 0;

    int find(Coset const& theta, int set) const;
    std::vector<int> minimal_nodes() const;
    std::vector<std::vector<int>> maximal_chains() const;  // node ids, top to bottom
    std::size_t count_maximal_chains() const;

private:
    friend Dcp finish_dcp(Instance const&, std::vector<DcpNode>, std::vector<DcpEdge>);
    std::map<std::pair<Elem, int>, int> index_;
};

Dcp build_dcp_inductive(Instance const& inst);
Dcp build_dcp_direct_w0(Instance const& inst);
bool same_poset(Dcp const& a, Dcp const& b);

std::int64_t sameI_bond(Instance const& inst, Coset const& lower, int set, int root);
std::map<int, std::int64_t> bonds(Dcp const& dcp);  // edge index -> bond

UnderlineWNode rho(Instance const& inst, DcpNode const& node);
// Search-based inverse; InvalidInput on a collision or a missing preimage.
int rho_inverse(Instance const& inst, Dcp const& dcp, UnderlineWNode const& x);
// Closed form for tau = w0: (min_Q max_{Q_I}(theta), I).
DcpNode rho_inverse_w0(Instance const& inst, UnderlineWNode const& x);

struct CriteriaRow {
    int set;
    std::vector<int> chain;  // covering chain from the set up to [m]
    bool unique_preimage;    // (i)
    bool min_max_equal;      // (ii)
    bool subgroup_inclusion; // (iii)
    bool dynkin_paths;       // (iv)
};

struct StandardnessReport {
    bool standard = false;  // rho injective
    bool surjective = false;
    std::vector<std::pair<int, int>> collisions;  // DCP node pairs with equal rho image
    std::vector<CriteriaRow> criteria;            // only when tau = w0 W_Q
    bool criteria_agree = true;
    bool chain_independent = true;
};

StandardnessReport is_tau_standard(Instance const& inst, Dcp const& dcp);
StandardnessReport is_tau_standard(Instance const& inst);

// Ordering of the weights along a Dynkin path through all their supports, if one exists.
std::optional<std::vector<int>> totally_ordered_exists(RootDatum const& datum, std::vector<Weight> const& lambdas);

struct DefiningChains {
    std::vector<Coset> max_chain, min_chain;  // in W/W_Q, aligned with the input (top first)
};

// chain: strictly decreasing nodes of W-underline, top first.
DefiningChains defining_chain_extremes(Instance const& inst, std::vector<UnderlineWNode> const& chain);
std::vector<Coset> normalize_up(Instance const& inst, std::vector<UnderlineWNode> const& chain,
                                std::vector<Coset> const& lifts);
std::vector<Coset> normalize_down(Instance const& inst, std::vector<UnderlineWNode> const& chain,
                                  std::vector<Coset> const& lifts);
bool is_defining_chain(Instance const& inst, std::vector<UnderlineWNode> const& chain,
                       std::vector<Coset> const& lifts);

}  // namespace lsfan
