#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace tcore {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

// r! / (a_0! ... a_{t-1}!) where r = sum of parts.
template <typename Range>
BigInt multinomial(const Range& parts) {
  BigInt result = 1;
  std::int64_t running = 0;
  for (auto a : parts) {
    running += a;
    result *= binomial(running, a);
  }
  return result;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(); }

/// Canonical "num/den" form; the denominator is always printed, so
/// integers come out as "12/1".
std::string to_fraction_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_fraction(const std::string& text);

BigInt parse_decimal(const std::string& text);

}  // namespace tcore
