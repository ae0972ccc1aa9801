#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lsfan/dcp.hpp"

namespace lsfan::testing {

inline Weight omega(int rank, int k, std::int64_t c = 1)
{
    Weight w = Weight::zero(rank);
    w[k - 1] = c;
    return w;
}

inline std::shared_ptr<WeylGroup const> group(char t, int n)
{
    return std::make_shared<WeylGroup const>(build_root_datum(t, n));
}

inline IndexPoset iposet(std::vector<std::vector<int>> const& sets, int m)
{
    std::vector<std::uint32_t> masks;
    for (auto const& s : sets) masks.push_back(mask_from_indices(s));
    return build_index_poset(masks, m);
}

// Weights given by fundamental indices (1-based); tau by label, or the top coset when empty.
inline Instance fundamental(std::shared_ptr<WeylGroup const> g, std::vector<int> const& fund, IndexPoset ip,
                            std::string tau = "")
{
    std::vector<Weight> lambdas;
    for (int k : fund) lambdas.push_back(omega(g->rank(), k));
    Weight total = Weight::zero(g->rank());
    for (auto const& l : lambdas) total += l;
    Parabolic q = stabilizer(total);
    Coset t = tau.empty() ? g->top_coset(q) : g->coset_from_label(tau, q);
    return Instance(g, lambdas, std::move(ip), t);
}

inline Instance top_instance(std::shared_ptr<WeylGroup const> g, std::vector<Weight> lambdas, IndexPoset ip)
{
    Weight total = Weight::zero(g->rank());
    for (auto const& l : lambdas) total += l;
    Coset t = g->top_coset(stabilizer(total));
    return Instance(g, std::move(lambdas), std::move(ip), t);
}

// All d in N^m with |d| <= bound.
inline std::vector<std::vector<int>> degrees_up_to(int m, int bound)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[i] = x;
            self(self, i + 1, left - x);
        }
        cur[i] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

}  // namespace lsfan::testing
