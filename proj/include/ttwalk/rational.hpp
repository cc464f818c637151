#pragma once

#include <string>

#include <boost/rational.hpp>

namespace ttwalk {

using Rational = boost::rational<long long>;

// "p/q" with q > 0, e.g. "-3/2", "5/1".
std::string format_rational(const Rational& q);

}  // namespace ttwalk
