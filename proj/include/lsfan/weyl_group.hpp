#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lsfan/root_datum.hpp"

namespace lsfan {

// Index of an element of a generated Weyl group. Elements are numbered in BFS order (by length).
using Elem = std::uint32_t;

// Left coset w W_P stored through its unique minimal-length representative.
struct Coset {
    Elem rep = 0;
    Parabolic par;
    auto operator<=>(Coset const&) const = default;
};

struct CoverEdge {
    int lower;  // index into Quotient::elements
    int root;   // positive root beta with s_beta * lower = upper
};

// The quotient poset W/W_P materialized as minimal representatives with covering relations.
struct Quotient {
    Parabolic par;
    std::vector<Elem> elements;           // sorted by (length, id)
    std::vector<int> index;               // Elem -> position in elements, or -1
    std::vector<std::vector<CoverEdge>> lower;
    std::vector<std::vector<CoverEdge>> upper;  // CoverEdge::lower holds the upper element here
    int find(Elem w) const { return index[w]; }
};

class WeylGroup {
public:
    static constexpr std::size_t default_size_guard = 1152;

    explicit WeylGroup(RootDatum datum, std::size_t size_guard = default_size_guard);

    RootDatum const& datum() const { return datum_; }
    int rank() const { return datum_.rank; }
    std::size_t size() const { return length_.size(); }
    Elem identity() const { return 0; }
    Elem longest() const { return longest_; }
    int length(Elem w) const { return length_[w]; }

    Elem rmul(Elem w, int i) const { return rmul_[w * rank() + i]; }  // w s_i
    Elem lmul(int i, Elem w) const { return lmul_[w * rank() + i]; }  // s_i w
    Elem mul(Elem a, Elem b) const;
    Elem inverse(Elem w) const { return inverse_[w]; }
    std::vector<int> const& reduced_word(Elem w) const { return word_[w]; }
    Elem from_word(std::vector<int> const& word) const;  // any word, not necessarily reduced
    std::vector<std::vector<int>> matrix(Elem w) const;  // action on omega-coordinates
    Weight act(Elem w, Weight const& v) const;
    std::optional<Elem> find(std::vector<std::vector<int>> const& matrix) const;

    bool right_descent(Elem w, int i) const { return length(rmul(w, i)) < length(w); }
    bool left_descent(Elem w, int i) const { return length(lmul(i, w)) < length(w); }

    bool leq(Elem u, Elem v) const;  // Bruhat order

    Elem reflection(int beta) const { return reflection_[beta]; }
    int reflection_root(Elem t) const;  // positive root of a reflection, or -1

    // Parabolic machinery on W.
    bool is_min(Elem w, Parabolic p) const;
    bool is_max(Elem w, Parabolic p) const;
    Elem min_rep(Elem w, Parabolic p) const;
    Elem max_rep(Elem w, Parabolic p) const;
    std::vector<Elem> coset_elements(Elem w, Parabolic p) const;
    bool in_parabolic_subgroup(Elem w, Parabolic p) const { return min_rep(w, p) == identity(); }

    // Cosets.
    Coset coset(Elem w, Parabolic p) const { return {min_rep(w, p), p}; }
    Coset top_coset(Parabolic p) const { return coset(longest_, p); }
    Coset identity_coset(Parabolic p) const { return {identity(), p}; }
    bool leq(Coset const& a, Coset const& b) const;
    int rank_of(Coset const& c) const { return length(c.rep); }
    Elem max_element(Coset const& c) const { return max_rep(c.rep, c.par); }
    Coset project(Coset const& c, Parabolic larger) const;
    Coset min_lift(Coset const& c, Parabolic smaller) const;
    Coset max_lift(Coset const& c, Parabolic smaller) const;
    // Largest lift of phi (in W/W_{Q'}) to the quotient of theta_bar lying below theta_bar.
    Coset deodhar_max_lift(Coset const& theta_bar, Coset const& phi) const;
    // Smallest lift of theta (in W/W_{Q'}) to the quotient of phi_bar lying above phi_bar.
    Coset deodhar_min_lift(Coset const& phi_bar, Coset const& theta) const;
    Weight act(Coset const& c, Weight const& v) const { return act(c.rep, v); }

    // w = a b with a minimal for Qp and b in W_Qp minimal for Q; w must be Q-minimal.
    std::pair<Elem, Elem> product_decomposition(Elem w, Parabolic q, Parabolic qp) const;
    // For theta > phi in W/W_Q with distinct images in W/W_P: psi covered by theta, psi >= phi, pi_P(psi) != pi_P(theta).
    Coset bruhat_interval_cover(Coset const& theta, Coset const& phi, Parabolic p) const;

    Quotient const& quotient(Parabolic p) const;
    // All covering pairs (upper, lower, beta) of W/W_P below tau.
    struct Covering {
        Coset upper, lower;
        int root;
    };
    std::vector<Covering> covering_relations(Parabolic p, Coset const& tau) const;
    std::vector<Coset> below(Coset const& tau) const;  // all cosets <= tau, by (length, id)

    // Type A helpers: one-line notation of a permutation of {1..rank+1}.
    std::vector<int> one_line(Elem w) const;
    Elem from_one_line(std::vector<int> const& perm) const;
    std::string label(Coset const& c) const;  // one-line style label used in type A figures
    Coset coset_from_label(std::string const& label, Parabolic p) const;

private:
    RootDatum datum_;
    std::vector<int> mats_;  // rank*rank per element
    std::vector<int> length_;
    std::vector<Elem> rmul_, lmul_, inverse_;
    std::vector<std::vector<int>> word_;
    std::vector<Elem> reflection_;
    std::unordered_map<Elem, int> reflection_root_;
    std::vector<std::uint64_t> below_;  // Bruhat lower sets as bitsets
    std::size_t words_per_row_ = 0;
    Elem longest_ = 0;
    std::map<std::vector<int>, Elem> by_key_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::uint32_t, std::unique_ptr<Quotient>> quotients_;

    std::vector<int> key(std::vector<int> const& mat) const;
    void build_bruhat();
    void require_same(Coset const& a, Coset const& b) const;
};

}  // namespace lsfan
