#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace monocycle {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", integers and plain decimals such as "0.70" (taken exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Smallest integer >= r and largest integer <= r.
std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);

} // namespace monocycle
