#include "tcore/bigint.hpp"

#include <stdexcept>

namespace tcore {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigInt parse_decimal(const std::string& text) {
  BigInt value;
  if (text.empty() || value.set_str(text, 10) != 0)
    throw std::invalid_argument("not a decimal integer: " + text);
  return value;
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_decimal(text));
  BigInt num = parse_decimal(text.substr(0, slash));
  BigInt den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace tcore
