#include "lsfan/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lsfan {

namespace {

void link(std::vector<std::vector<int>>& c, int i, int j, int ij = -1, int ji = -1)
{
    c[i][j] = ij;
    c[j][i] = ji;
}

std::vector<std::vector<int>> cartan_matrix(char type, int n)
{
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
        link(c, n - 2, n - 1, -2, -1);  // alpha_n short
        break;
    case 'C':
        for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
        link(c, n - 2, n - 1, -1, -2);  // alpha_n long
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
        link(c, n - 3, n - 1);
        break;
    case 'E':
        link(c, 0, 2);
        link(c, 1, 3);
        for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
        break;
    case 'F':
        link(c, 0, 1);
        link(c, 1, 2, -2, -1);
        link(c, 2, 3);
        break;
    case 'G':
        link(c, 0, 1, -1, -3);  // alpha_1 short
        break;
    }
    return c;
}

bool valid_type(char type, int n)
{
    switch (type) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

}  // namespace

RootDatum build_root_datum(char type, int rank)
{
    if (!valid_type(type, rank))
        throw InvalidInput("invalid Dynkin type " + std::string(1, type) + std::to_string(rank));
    RootDatum d;
    d.type = type;
    d.rank = rank;
    d.cartan = cartan_matrix(type, rank);
    int n = rank;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.cartan[i][j] != 0) d.adjacency.emplace_back(i, j);

    // Close the simple roots (paired with their coroots) under simple reflections, keeping positives.
    std::map<std::vector<int>, std::vector<int>> found;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        found[e] = e;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto root = queue.front();
        queue.pop_front();
        auto co = found[root];
        for (int i = 0; i < n; ++i) {
            int pr = 0;  // <root, alpha_i^vee>
            int pc = 0;  // <alpha_i, coroot>
            for (int j = 0; j < n; ++j) {
                pr += root[j] * d.cartan[j][i];
                pc += co[j] * d.cartan[i][j];
            }
            auto r2 = root;
            auto c2 = co;
            r2[i] -= pr;
            c2[i] -= pc;
            if (std::any_of(r2.begin(), r2.end(), [](int x) { return x < 0; })) continue;
            if (found.emplace(r2, c2).second) queue.push_back(r2);
        }
    }
    std::vector<std::vector<int>> roots;
    for (auto const& [r, c] : found) roots.push_back(r);
    std::stable_sort(roots.begin(), roots.end(), [](auto const& a, auto const& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (auto const& r : roots) {
        d.positive_roots.push_back(r);
        d.coroots.push_back(found[r]);
    }
    return d;
}

Weight RootDatum::simple_root(int i) const
{
    Weight w = Weight::zero(rank);
    for (int j = 0; j < rank; ++j) w[j] = cartan[i][j];
    return w;
}

Weight RootDatum::root_weight(int beta) const
{
    Weight w = Weight::zero(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) w[j] += std::int64_t(positive_roots[beta][i]) * cartan[i][j];
    return w;
}

std::int64_t RootDatum::pair_coroot(Weight const& w, int beta) const
{
    std::int64_t s = 0;
    for (int i = 0; i < rank; ++i) s += w[i] * coroots[beta][i];
    return s;
}

Weight RootDatum::rho() const { return Weight(std::vector<std::int64_t>(rank, 1)); }

bool RootDatum::adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }

std::vector<int> RootDatum::neighbours(int i) const
{
    std::vector<int> out;
    for (int j = 0; j < rank; ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

std::vector<int> RootDatum::dynkin_path(int i, int j) const
{
    std::vector<int> parent(rank, -1);
    std::deque<int> queue{i};
    parent[i] = i;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : neighbours(v))
            if (parent[u] < 0) {
                parent[u] = v;
                queue.push_back(u);
            }
    }
    std::vector<int> path{j};
    while (path.back() != i) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace lsfan
