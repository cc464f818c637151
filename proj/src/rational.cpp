#include "ttwalk/rational.hpp"

namespace ttwalk {

std::string format_rational(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace ttwalk
