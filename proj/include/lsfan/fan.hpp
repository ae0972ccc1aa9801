#pragma once

#include <map>
#include <vector>

#include "lsfan/dcp.hpp"

namespace lsfan {

// Sparse rational vector over the DCP, keyed by node id (node ids are ordered by rank, descending).
using FanVector = std::map<int, Rational>;

std::string to_string(FanVector const& v);

// Membership in the LS-lattice of a maximal chain (node ids top to bottom) with the given edge bonds
// (bonds[k] belongs to the covering chain[k] > chain[k+1]). Non-negativity is not part of the test.
bool ls_lattice_member(FanVector const& v, std::vector<int> const& chain, std::vector<std::int64_t> const& bonds);

struct ConjectureRow {
    std::vector<int> k;      // number of rank steps spent in each index set of the chain
    Integer chain_sum;       // sum of bond products over maximal chains of this type
    Rational multidegree;    // k! times the leading Hilbert coefficient of d^k
    bool agrees;
};

struct ConjectureReport {
    int dimension = 0;  // dim X_tau
    std::vector<ConjectureRow> rows;
    bool all_agree = true;
};

// The LS-fan of monoids attached to an instance and its defining chain poset.
class LSFan {
public:
    LSFan(Instance const& inst, Dcp dcp);

    Instance const& instance() const { return inst_; }
    Dcp const& dcp() const { return dcp_; }
    std::vector<std::vector<int>> const& chains() const { return chains_; }
    std::vector<std::int64_t> chain_bonds(std::vector<int> const& chain) const;

    // DCP node over (theta, I) in W-underline; InvalidInput when rho is not injective there or misses it.
    int node_of(UnderlineWNode const& x) const;

    bool member(FanVector const& v) const;  // v in LS+
    std::vector<int> degree(FanVector const& v) const;
    Weight weight(FanVector const& v) const;

    // LS+(d): per-chain enumeration merged into a sorted duplicate-free list.
    std::vector<FanVector> enumerate(std::vector<int> const& d) const;         // OpenMP over chains
    std::vector<FanVector> enumerate_serial(std::vector<int> const& d) const;  // reference implementation
    std::vector<FanVector> enumerate_on_chain(std::vector<int> const& chain, std::vector<int> const& d) const;

    // Unique decomposition into degree-one parts, each inside a single index set, ordered top to bottom.
    std::vector<FanVector> decompose(FanVector const& v) const;

    // Sum over maximal chains of bond products, bucketed by the number of nodes per index set minus one.
    std::map<std::vector<int>, Integer> chain_bond_sums() const;
    std::map<std::vector<int>, Integer> chain_bond_sums_serial() const;  // explicit chain walk

private:
    Instance const& inst_;
    Dcp dcp_;
    std::vector<std::vector<int>> chains_;
    std::map<UnderlineWNode, std::vector<int>> rho_index_;
    std::map<std::pair<int, int>, std::int64_t> edge_bond_;

    bool reaches(int upper, int lower, Integer const& den) const;
};

// Exact fit of the Hilbert polynomial d -> dim V(d.lambda)_tau on {d : |d| <= grid}; grid must be >= dim X_tau.
// Returns monomial exponent -> coefficient.
std::map<std::vector<int>, Rational> fit_hilbert_polynomial(Instance const& inst, int grid);
int schubert_dimension(Instance const& inst);
std::int64_t demazure_dimension(Instance const& inst, std::vector<int> const& d);

// Requires a totally ordered index poset. grid defaults to dim X_tau.
ConjectureReport multidegree_conjecture_check(LSFan const& fan, int grid = -1);

}  // namespace lsfan
