#include "lsfan/weyl_group.hpp"

#include <algorithm>
#include <deque>

namespace lsfan {

namespace {

std::vector<int> matmul(std::vector<int> const& a, std::vector<int> const& b, int n)
{
    std::vector<int> c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a[i * n + k];
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
        }
    return c;
}

}  // namespace

WeylGroup::WeylGroup(RootDatum datum, std::size_t size_guard) : datum_(std::move(datum))
{
    int n = rank();
    std::vector<std::vector<int>> gens(n, std::vector<int>(n * n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            gens[i][k * n + k] = 1;
            gens[i][k * n + i] -= datum_.cartan[i][k];
        }

    std::vector<int> id(n * n, 0);
    for (int k = 0; k < n; ++k) id[k * n + k] = 1;
    by_key_[key(id)] = 0;
    mats_ = id;
    length_ = {0};
    word_ = {{}};
    for (std::size_t w = 0; w < length_.size(); ++w) {
        std::vector<int> m(mats_.begin() + w * n * n, mats_.begin() + (w + 1) * n * n);
        for (int i = 0; i < n; ++i) {
            auto p = matmul(m, gens[i], n);
            auto k = key(p);
            if (by_key_.count(k)) continue;
            if (length_.size() >= size_guard)
                throw InvalidInput("Weyl group of " + datum_.name() + " exceeds the size guard of " +
                                   std::to_string(size_guard) + " elements");
            by_key_[k] = static_cast<Elem>(length_.size());
            mats_.insert(mats_.end(), p.begin(), p.end());
            length_.push_back(length_[w] + 1);
            auto word = word_[w];
            word.push_back(i);
            word_.push_back(std::move(word));
        }
    }

    std::size_t N = length_.size();
    rmul_.resize(N * n);
    lmul_.resize(N * n);
    for (std::size_t w = 0; w < N; ++w) {
        std::vector<int> m(mats_.begin() + w * n * n, mats_.begin() + (w + 1) * n * n);
        for (int i = 0; i < n; ++i) {
            rmul_[w * n + i] = by_key_.at(key(matmul(m, gens[i], n)));
            lmul_[w * n + i] = by_key_.at(key(matmul(gens[i], m, n)));
        }
    }
    longest_ = static_cast<Elem>(N - 1);
    inverse_.resize(N);
    for (std::size_t w = 0; w < N; ++w) {
        auto word = word_[w];
        std::reverse(word.begin(), word.end());
        inverse_[w] = from_word(word);
    }

    for (int b = 0; b < datum_.num_positive_roots(); ++b) {
        auto beta = datum_.root_weight(b);
        std::vector<int> m(n * n, 0);
        for (int k = 0; k < n; ++k) {
            m[k * n + k] = 1;
            for (int j = 0; j < n; ++j) m[k * n + j] -= static_cast<int>(beta[k]) * datum_.coroots[b][j];
        }
        Elem t = by_key_.at(key(m));
        reflection_.push_back(t);
        reflection_root_[t] = b;
    }
    if (static_cast<int>(length_[longest_]) != datum_.num_positive_roots())
        throw InvariantViolation("longest element length differs from number of positive roots");
    build_bruhat();
}

std::vector<int> WeylGroup::key(std::vector<int> const& mat) const
{
    int n = rank();
    std::vector<int> k(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k[i] += mat[i * n + j];
    return k;
}

void WeylGroup::build_bruhat()
{
    std::size_t N = size();
    words_per_row_ = (N + 63) / 64;
    below_.assign(N * words_per_row_, 0);
    auto set = [&](Elem row, Elem x) { below_[row * words_per_row_ + x / 64] |= std::uint64_t(1) << (x % 64); };
    set(0, 0);
    for (Elem v = 1; v < N; ++v) {
        int s = 0;
        while (!left_descent(v, s)) ++s;
        Elem u = lmul(s, v);
        for (Elem x = 0; x < N; ++x)
            if (leq(x, u)) {
                set(v, x);
                set(v, lmul(s, x));
            }
    }
}

bool WeylGroup::leq(Elem u, Elem v) const
{
    return (below_[v * words_per_row_ + u / 64] >> (u % 64)) & 1u;
}

Elem WeylGroup::mul(Elem a, Elem b) const
{
    for (int i : word_[b]) a = rmul(a, i);
    return a;
}

Elem WeylGroup::from_word(std::vector<int> const& word) const
{
    Elem w = identity();
    for (int i : word) {
        if (i < 0 || i >= rank()) throw InvalidInput("simple reflection index out of range");
        w = rmul(w, i);
    }
    return w;
}

std::vector<std::vector<int>> WeylGroup::matrix(Elem w) const
{
    int n = rank();
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = mats_[w * n * n + i * n + j];
    return m;
}

Weight WeylGroup::act(Elem w, Weight const& v) const
{
    int n = rank();
    Weight out = Weight::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += std::int64_t(mats_[w * n * n + i * n + j]) * v[j];
    return out;
}

std::optional<Elem> WeylGroup::find(std::vector<std::vector<int>> const& matrix) const
{
    int n = rank();
    std::vector<int> flat;
    for (auto const& row : matrix) flat.insert(flat.end(), row.begin(), row.end());
    if (static_cast<int>(flat.size()) != n * n) return std::nullopt;
    auto it = by_key_.find(key(flat));
    if (it == by_key_.end()) return std::nullopt;
    if (!std::equal(flat.begin(), flat.end(), mats_.begin() + it->second * n * n)) return std::nullopt;
    return it->second;
}

int WeylGroup::reflection_root(Elem t) const
{
    auto it = reflection_root_.find(t);
    return it == reflection_root_.end() ? -1 : it->second;
}

bool WeylGroup::is_min(Elem w, Parabolic p) const
{
    for (int i = 0; i < rank(); ++i)
        if (p.contains(i) && right_descent(w, i)) return false;
    return true;
}

bool WeylGroup::is_max(Elem w, Parabolic p) const
{
    for (int i = 0; i < rank(); ++i)
        if (p.contains(i) && !right_descent(w, i)) return false;
    return true;
}

Elem WeylGroup::min_rep(Elem w, Parabolic p) const
{
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rank(); ++i)
            if (p.contains(i) && right_descent(w, i)) {
                w = rmul(w, i);
                moved = true;
            }
    }
    return w;
}

Elem WeylGroup::max_rep(Elem w, Parabolic p) const
{
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rank(); ++i)
            if (p.contains(i) && !right_descent(w, i)) {
                w = rmul(w, i);
                moved = true;
            }
    }
    return w;
}

std::vector<Elem> WeylGroup::coset_elements(Elem w, Parabolic p) const
{
    std::vector<Elem> out{w};
    std::vector<char> seen(size(), 0);
    seen[w] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i < rank(); ++i)
            if (p.contains(i)) {
                Elem x = rmul(out[k], i);
                if (!seen[x]) {
                    seen[x] = 1;
                    out.push_back(x);
                }
            }
    return out;
}

void WeylGroup::require_same(Coset const& a, Coset const& b) const
{
    if (a.par != b.par) throw InvalidInput("cosets belong to different quotients");
}

bool WeylGroup::leq(Coset const& a, Coset const& b) const
{
    require_same(a, b);
    return leq(a.rep, b.rep);
}

Coset WeylGroup::project(Coset const& c, Parabolic larger) const
{
    if (!c.par.subset_of(larger)) throw InvalidInput("projection target parabolic does not contain the source");
    return coset(c.rep, larger);
}

Coset WeylGroup::min_lift(Coset const& c, Parabolic smaller) const
{
    if (!smaller.subset_of(c.par)) throw InvalidInput("lift target parabolic is not contained in the source");
    return {c.rep, smaller};
}

Coset WeylGroup::max_lift(Coset const& c, Parabolic smaller) const
{
    if (!smaller.subset_of(c.par)) throw InvalidInput("lift target parabolic is not contained in the source");
    return coset(max_rep(c.rep, c.par), smaller);
}

Coset WeylGroup::deodhar_max_lift(Coset const& theta_bar, Coset const& phi) const
{
    if (!theta_bar.par.subset_of(phi.par)) throw InvalidInput("Deodhar lift: parabolics not nested");
    if (!leq(phi.rep, min_rep(theta_bar.rep, phi.par)))
        throw InvalidInput("Deodhar max lift: coset is not below the projection of the bound");
    Elem bound = max_rep(theta_bar.rep, theta_bar.par);
    std::optional<Elem> best;
    for (Elem x : coset_elements(phi.rep, phi.par))
        if (leq(x, bound) && (!best || length(x) > length(*best))) best = x;
    return coset(*best, theta_bar.par);
}

Coset WeylGroup::deodhar_min_lift(Coset const& phi_bar, Coset const& theta) const
{
    if (!phi_bar.par.subset_of(theta.par)) throw InvalidInput("Deodhar lift: parabolics not nested");
    if (!leq(min_rep(phi_bar.rep, theta.par), theta.rep))
        throw InvalidInput("Deodhar min lift: coset is not above the projection of the bound");
    std::optional<Elem> best;
    for (Elem x : coset_elements(theta.rep, theta.par))
        if (leq(phi_bar.rep, x) && (!best || length(x) < length(*best))) best = x;
    return coset(*best, phi_bar.par);
}

std::pair<Elem, Elem> WeylGroup::product_decomposition(Elem w, Parabolic q, Parabolic qp) const
{
    if (!q.subset_of(qp)) throw InvalidInput("product decomposition requires Q inside Q'");
    if (!is_min(w, q)) throw InvalidInput("product decomposition: element is not Q-minimal");
    Elem a = min_rep(w, qp);
    Elem b = mul(inverse(a), w);
    if (length(a) + length(b) != length(w) || !is_min(b, q) || !in_parabolic_subgroup(b, qp))
        throw InvariantViolation("product decomposition is not length additive");
    return {a, b};
}

Coset WeylGroup::bruhat_interval_cover(Coset const& theta, Coset const& phi, Parabolic p) const
{
    require_same(theta, phi);
    if (!(leq(phi, theta) && phi != theta)) throw InvalidInput("interval cover: theta must exceed phi");
    Coset ptheta = project(theta, p);
    if (project(phi, p) == ptheta) throw InvalidInput("interval cover: projections coincide");
    auto const& quo = quotient(theta.par);
    for (auto const& e : quo.lower[quo.find(theta.rep)]) {
        Coset psi{quo.elements[e.lower], theta.par};
        if (leq(phi, psi) && project(psi, p) != ptheta) return psi;
    }
    throw InvariantViolation("interval cover: no covering element found");
}

Quotient const& WeylGroup::quotient(Parabolic p) const
{
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& slot = quotients_[p.mask];
    if (slot) return *slot;
    auto q = std::make_unique<Quotient>();
    q->par = p;
    q->index.assign(size(), -1);
    for (Elem w = 0; w < size(); ++w)
        if (is_min(w, p)) {
            q->index[w] = static_cast<int>(q->elements.size());
            q->elements.push_back(w);
        }
    q->lower.resize(q->elements.size());
    q->upper.resize(q->elements.size());
    for (std::size_t k = 0; k < q->elements.size(); ++k) {
        Elem theta = q->elements[k];
        for (int b = 0; b < datum_.num_positive_roots(); ++b) {
            Elem u = mul(reflection_[b], theta);
            if (length(u) + 1 != length(theta) || !is_min(u, p)) continue;
            int lo = q->index[u];
            q->lower[k].push_back({lo, b});
            q->upper[lo].push_back({static_cast<int>(k), b});
        }
    }
    slot = std::move(q);
    return *slot;
}

std::vector<WeylGroup::Covering> WeylGroup::covering_relations(Parabolic p, Coset const& tau) const
{
    if (tau.par != p) throw InvalidInput("covering relations: tau lives in a different quotient");
    auto const& quo = quotient(p);
    std::vector<Covering> out;
    for (std::size_t k = 0; k < quo.elements.size(); ++k) {
        Elem theta = quo.elements[k];
        if (!leq(theta, tau.rep)) continue;
        for (auto const& e : quo.lower[k]) out.push_back({{theta, p}, {quo.elements[e.lower], p}, e.root});
    }
    return out;
}

std::vector<Coset> WeylGroup::below(Coset const& tau) const
{
    std::vector<Coset> out;
    for (Elem w : quotient(tau.par).elements)
        if (leq(w, tau.rep)) out.push_back({w, tau.par});
    return out;
}

std::vector<int> WeylGroup::one_line(Elem w) const
{
    if (datum_.type != 'A') throw InvalidInput("one-line notation requires type A");
    std::vector<int> perm(rank() + 1);
    for (int i = 0; i <= rank(); ++i) perm[i] = i + 1;
    for (int i : word_[w]) std::swap(perm[i], perm[i + 1]);
    return perm;
}

Elem WeylGroup::from_one_line(std::vector<int> const& perm) const
{
    if (datum_.type != 'A') throw InvalidInput("one-line notation requires type A");
    int n = rank() + 1;
    auto p = perm;
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(sorted.size()) != n || sorted[i] != i + 1)
            throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    std::vector<int> word;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i + 1 < n; ++i)
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                word.push_back(i);
                moved = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return from_word(word);
}

namespace {

std::string join_entries(std::vector<int> const& v, bool compact)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!compact && i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string WeylGroup::label(Coset const& c) const
{
    auto perm = one_line(c.rep);
    bool compact = rank() + 1 <= 9;
    if (c.par == Parabolic::all(rank())) return "e";
    if (c.par.size() == rank() - 1) {
        int k = 0;
        while (c.par.contains(k)) ++k;
        std::vector<int> prefix(perm.begin(), perm.begin() + k + 1);
        std::sort(prefix.begin(), prefix.end());
        return join_entries(prefix, compact);
    }
    return join_entries(perm, compact);
}

Coset WeylGroup::coset_from_label(std::string const& label, Parabolic p) const
{
    int n = rank() + 1;
    if (p == Parabolic::all(rank())) return identity_coset(p);
    std::vector<int> entries;
    if (label.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= label.size()) {
            auto next = label.find(',', pos);
            if (next == std::string::npos) next = label.size();
            entries.push_back(std::stoi(label.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char ch : label) {
            if (ch < '1' || ch > '9') throw InvalidInput("malformed coset label '" + label + "'");
            entries.push_back(ch - '0');
        }
    }
    if (static_cast<int>(entries.size()) < n) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (std::find(entries.begin(), entries.end(), v) == entries.end()) rest.push_back(v);
        std::sort(entries.begin(), entries.end());
        entries.insert(entries.end(), rest.begin(), rest.end());
    }
    return coset(from_one_line(entries), p);
}

}  // namespace lsfan
