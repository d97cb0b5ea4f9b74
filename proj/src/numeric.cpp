#include "fibalg/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "fibalg/error.hpp"

namespace fibalg {

namespace {

bool is_decimal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

std::string to_string(const Integer& x) {
    return x.get_str(10);
}

std::string to_string(const Rational& x) {
    return x.get_str(10);
}

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text))
        throw InvalidInput("not an integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    if (!is_decimal(num_text) || !is_decimal(den_text))
        throw InvalidInput("not a rational: '" + std::string(text) + "'");
    const Integer den = parse_integer(den_text);
    if (den == 0)
        throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num_text), den);
    r.canonicalize();
    return r;
}

} // namespace fibalg
