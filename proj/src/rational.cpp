#include "orelab/rational.hpp"

namespace orelab {

BigInt ceil(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

BigInt floor(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

std::string to_string(const Rational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace orelab
