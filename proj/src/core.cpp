#include "lsfan/core.hpp"

namespace lsfan {

std::string to_string(Rational const& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string const& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw InvalidInput("malformed rational '" + s + "'");
    q.canonicalize();
    return q;
}

bool Weight::dominant() const
{
    for (auto c : coords)
        if (c < 0) return false;
    return true;
}

bool Weight::is_zero() const
{
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

Weight& Weight::operator+=(Weight const& o)
{
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

Weight& Weight::operator-=(Weight const& o)
{
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

std::string to_string(Weight const& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.coords[i]);
    }
    return s + ")";
}

Parabolic stabilizer(Weight const& w)
{
    Parabolic p;
    for (int i = 0; i < w.rank(); ++i)
        if (w[i] == 0) p.mask |= 1u << i;
    return p;
}

std::vector<int> bits_of(std::uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

}  // namespace lsfan
