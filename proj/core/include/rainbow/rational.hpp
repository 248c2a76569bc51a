#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rainbow {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace rainbow
