#include "tcore/polynomial.hpp"

namespace tcore {

CountPolynomial geometric_polynomial(std::size_t n) {
  return CountPolynomial(std::vector<BigInt>(n + 1, BigInt(1)));
}

CountPolynomial truncated_product(std::span<const CountPolynomial> factors,
                                  std::size_t max_degree) {
  std::vector<BigInt> acc{BigInt(1)};
  for (const auto& f : factors) {
    const auto fc = f.coefficients();
    if (fc.empty()) return {};
    const std::size_t top = std::min(max_degree, acc.size() - 1 + fc.size() - 1);
    std::vector<BigInt> next(top + 1, BigInt(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < fc.size() && i + j <= top; ++j) next[i + j] += acc[i] * fc[j];
    }
    acc = std::move(next);
  }
  return CountPolynomial(std::move(acc));
}

}  // namespace tcore
