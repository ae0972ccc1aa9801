#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lsfan/weyl_group.hpp"

namespace lsfan {

// LS-path of shape `shape`: directions sigma_p > ... > sigma_1 used on the time intervals
// [0, cuts[0]], [cuts[0], cuts[1]], ..., ending at cuts.back() = 1.
struct LSPath {
    Weight shape;
    std::vector<Coset> cosets;
    std::vector<Rational> cuts;

    Coset const& initial_direction() const { return cosets.front(); }
    friend bool operator==(LSPath const& a, LSPath const& b);
    friend bool operator<(LSPath const& a, LSPath const& b);
};

// One saturated chain per consecutive pair of directions, each listed top to bottom.
struct PathCertificate {
    std::vector<std::vector<Coset>> chains;
};

// Structural defects (ordering, cuts, quotient) raise InvalidInput; a missing chain yields nullopt.
std::optional<PathCertificate> validate_ls_path(WeylGroup const& g, LSPath const& path);

// Saturated chain from upper down to lower in W/W_P along which cut * <kappa(shape), beta^vee> is integral.
std::optional<std::vector<Coset>> integral_chain(WeylGroup const& g, Weight const& shape, Coset const& upper,
                                                 Coset const& lower, Rational const& cut);

// |<kappa(nu), beta^vee>| for the covering kappa > s_beta kappa.
std::int64_t covering_bond(WeylGroup const& g, Weight const& nu, Elem upper, int root);

// All LS-paths of shape d*nu with initial direction <= tau, sorted.
std::vector<LSPath> enumerate_ls_paths(WeylGroup const& g, Weight const& nu, Coset const& tau, int d);

Weight endpoint(WeylGroup const& g, LSPath const& path);

// Sparse vector over the cosets of W/W_nu, listed in decreasing order.
using CosetVector = std::vector<std::pair<Coset, Rational>>;

// Coefficient of sigma_j is d times the length of the interval spent in direction sigma_j.
CosetVector theta_single(LSPath const& path, int d);
// Inverse for a vector with positive integral total mass d; the result has shape d*nu.
LSPath theta_single_inverse(WeylGroup const& g, CosetVector const& v, Weight const& nu);

LSPath straight_path(Weight const& shape, Coset const& sigma);

}  // namespace lsfan
