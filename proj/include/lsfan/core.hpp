#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lsfan {

// Rejected user input (bad type/rank, malformed poset, violated precondition).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal identity failed; indicates a bug rather than bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(Rational const& q);  // always "num/den"
Rational parse_rational(std::string const& s);

// Integral weight in the fundamental-weight basis.
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    std::int64_t operator[](int i) const { return coords[i]; }
    std::int64_t& operator[](int i) { return coords[i]; }
    bool dominant() const;
    bool is_zero() const;

    Weight& operator+=(Weight const& o);
    Weight& operator-=(Weight const& o);
    friend Weight operator+(Weight a, Weight const& b) { return a += b; }
    friend Weight operator-(Weight a, Weight const& b) { return a -= b; }
    friend Weight operator*(std::int64_t k, Weight a)
    {
        for (auto& c : a.coords) c *= k;
        return a;
    }
    auto operator<=>(Weight const&) const = default;
};

std::string to_string(Weight const& w);

// Set of simple-reflection indices (0-based bits) generating a standard parabolic subgroup.
struct Parabolic {
    std::uint32_t mask = 0;

    static Parabolic all(int rank) { return {rank >= 32 ? ~0u : ((1u << rank) - 1u)}; }
    bool contains(int i) const { return (mask >> i) & 1u; }
    bool subset_of(Parabolic o) const { return (mask & ~o.mask) == 0; }
    int size() const { return std::popcount(mask); }
    friend Parabolic operator&(Parabolic a, Parabolic b) { return {a.mask & b.mask}; }
    friend Parabolic operator|(Parabolic a, Parabolic b) { return {a.mask | b.mask}; }
    auto operator<=>(Parabolic const&) const = default;
};

// Stabilizer parabolic of a dominant weight: simple indices where the coordinate vanishes.
Parabolic stabilizer(Weight const& w);

std::vector<int> bits_of(std::uint32_t mask);

}  // namespace lsfan
