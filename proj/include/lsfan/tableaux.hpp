#pragma once

#include <optional>
#include <vector>

#include "lsfan/fan.hpp"
#include "lsfan/lspath.hpp"

namespace lsfan {

// Sequence of LS-path columns. `sets` names the index set of each column for tableaux of a given type
// and is empty for tableaux of a bare shape.
struct LSTableau {
    std::vector<LSPath> columns;
    std::vector<int> sets;

    friend bool operator==(LSTableau const& a, LSTableau const& b)
    {
        return a.columns == b.columns && a.sets == b.sets;
    }
    friend bool operator<(LSTableau const& a, LSTableau const& b)
    {
        if (a.columns != b.columns) return a.columns < b.columns;
        return a.sets < b.sets;
    }
};

Weight shape_weight(std::vector<LSPath> const& columns);

// Directions of all columns, each column listed from its initial direction down.
std::vector<Coset> flattened_directions(std::vector<LSPath> const& columns);

// Largest defining chain in W/W_mu (mu = total shape) bounded by tau, built by greedy Deodhar lifts.
// tau may live in any quotient W/W_Q with W_Q inside W_mu. nullopt when the tableau is not tau-standard.
std::optional<std::vector<Coset>> max_defining_chain(WeylGroup const& g, std::vector<LSPath> const& columns,
                                                     Coset const& tau);
bool check_defining_chain(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau,
                          std::vector<Coset> const& chain);
bool is_standard(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau);
bool is_weakly_standard(WeylGroup const& g, std::vector<LSPath> const& columns, Coset const& tau);

// Tableaux of type (lambda, I).
std::vector<int> tableau_degree(Instance const& inst, LSTableau const& t);
// The weakly decreasing sequence of index sets (top first) whose indicator vectors sum to d.
std::vector<int> shape_for_degree(Instance const& inst, std::vector<int> const& d);
// All tau-standard tableaux of type (lambda, I) and degree d, sorted. Requires a tau-standard index poset.
std::vector<LSTableau> enumerate_standard(Instance const& inst, std::vector<int> const& d);

FanVector theta_d(LSFan const& fan, LSTableau const& t);
LSTableau theta_d_inverse(LSFan const& fan, FanVector const& v);

// Type A: Young tableau given by its columns from left to right, entries top to bottom.
struct YoungTableau {
    std::vector<std::vector<int>> columns;
    auto operator<=>(YoungTableau const&) const = default;
};

// Columns must be single-direction paths of fundamental shape; the column order is reversed.
YoungTableau yt_from_ls(WeylGroup const& g, std::vector<LSPath> const& columns);
std::vector<LSPath> ls_from_yt(WeylGroup const& g, YoungTableau const& y);
bool is_semistandard(YoungTableau const& y);
std::string to_string(YoungTableau const& y);  // rows joined by " / "

}  // namespace lsfan
