#ifndef BITILE_RATIONAL_HPP
#define BITILE_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace bitile {

using Rational = boost::rational<std::int64_t>;

// "p/q" with q omitted when 1; used in JSON reports so output stays exact.
std::string to_string(const Rational& r);

// Parses "p", "p/q" or a plain decimal like "0.25" (exact).
Rational parse_rational(const std::string& text);

std::int64_t ceil_of(const Rational& r);
std::int64_t floor_of(const Rational& r);

}  // namespace bitile

#endif
