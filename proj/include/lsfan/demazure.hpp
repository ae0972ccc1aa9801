#pragma once

#include <map>

#include "lsfan/weyl_group.hpp"

namespace lsfan {

// Formal character: weight -> multiplicity (zero entries are dropped).
using Character = std::map<Weight, std::int64_t>;

// Demazure operator D_i applied termwise by the string rule.
Character demazure_operator(RootDatum const& datum, int i, Character const& ch);

// char V(mu)_tau along the given word (defaults to the stored reduced word of tau's minimal representative).
Character demazure_character(WeylGroup const& g, Weight const& mu, Coset const& tau);
Character demazure_character_word(RootDatum const& datum, Weight const& mu, std::vector<int> const& word);

Integer weyl_dimension(RootDatum const& datum, Weight const& mu);

std::int64_t mass(Character const& ch);

}  // namespace lsfan
