#include "lsfan/demazure.hpp"

#include <algorithm>

namespace lsfan {

namespace {

void add(Character& ch, Weight const& w, std::int64_t c)
{
    auto it = ch.find(w);
    if (it == ch.end()) {
        ch.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) ch.erase(it);
}

}  // namespace

Character demazure_operator(RootDatum const& datum, int i, Character const& ch)
{
    Weight alpha = datum.simple_root(i);
    Character out;
    for (auto const& [nu, c] : ch) {
        std::int64_t m = nu[i];
        if (m >= 0) {
            Weight w = nu;
            for (std::int64_t k = 0; k <= m; ++k, w -= alpha) add(out, w, c);
        } else if (m <= -2) {
            Weight w = nu + alpha;
            for (std::int64_t k = 1; k <= -m - 1; ++k, w += alpha) add(out, w, -c);
        }
    }
    return out;
}

Character demazure_character_word(RootDatum const& datum, Weight const& mu, std::vector<int> const& word)
{
    if (!mu.dominant()) throw InvalidInput("Demazure character needs a dominant weight, got " + to_string(mu));
    Character ch{{mu, 1}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) ch = demazure_operator(datum, *it, ch);
    return ch;
}

Character demazure_character(WeylGroup const& g, Weight const& mu, Coset const& tau)
{
    if (!mu.dominant()) throw InvalidInput("Demazure character needs a dominant weight, got " + to_string(mu));
    if (!tau.par.subset_of(stabilizer(mu))) throw InvalidInput("Demazure character: tau is not a coset of the stabilizer");
    return demazure_character_word(g.datum(), mu, g.reduced_word(tau.rep));
}

Integer weyl_dimension(RootDatum const& datum, Weight const& mu)
{
    if (!mu.dominant()) throw InvalidInput("Weyl dimension needs a dominant weight, got " + to_string(mu));
    Rational q = 1;
    Weight shifted = mu + datum.rho();
    for (int b = 0; b < datum.num_positive_roots(); ++b)
        q *= Rational(Integer(datum.pair_coroot(shifted, b)), Integer(datum.pair_coroot(datum.rho(), b)));
    q.canonicalize();
    if (q.get_den() != 1) throw InvariantViolation("Weyl dimension is not an integer");
    return q.get_num();
}

std::int64_t mass(Character const& ch)
{
    std::int64_t s = 0;
    for (auto const& [w, c] : ch) s += c;
    return s;
}

}  // namespace lsfan
