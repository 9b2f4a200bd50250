#include "qedtrees/scalar.hpp"

#include <stdexcept>

namespace qedtrees {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty rational");
    if (s.front() == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + std::string(text));
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

} // namespace qedtrees
