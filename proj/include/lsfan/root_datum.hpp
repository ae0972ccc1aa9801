#pragma once

#include <utility>
#include <vector>

#include "lsfan/core.hpp"

namespace lsfan {

// Root datum of a simple Dynkin type with Bourbaki numbering (indices 0-based internally).
struct RootDatum {
    char type = 'A';
    int rank = 0;
    // cartan[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in fundamental-weight coordinates.
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots;  // simple-root coordinates
    std::vector<std::vector<int>> coroots;         // simple-coroot coordinates, matching order
    std::vector<std::pair<int, int>> adjacency;    // Dynkin edges i < j

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

    Weight simple_root(int i) const;           // alpha_i in omega-coordinates
    Weight root_weight(int beta) const;        // positive root beta in omega-coordinates
    std::int64_t pair_coroot(Weight const& w, int beta) const;  // <w, beta^vee>
    Weight rho() const;
    bool adjacent(int i, int j) const;
    std::vector<int> neighbours(int i) const;
    // Vertices on the unique path between i and j in the (tree-shaped) Dynkin diagram.
    std::vector<int> dynkin_path(int i, int j) const;
};

RootDatum build_root_datum(char type, int rank);

}  // namespace lsfan
