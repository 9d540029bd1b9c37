#include "tcore/serialize.hpp"

#include <stdexcept>

namespace tcore {

void to_json(Json& j, const Partition& p) { j = Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

void from_json(const Json& j, Partition& p) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  p = Partition(j.get<std::vector<int>>());
}

void to_json(Json& j, const CountPolynomial& p) {
  j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.get_str());
}

void from_json(const Json& j, CountPolynomial& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_decimal(c.get<std::string>()));
  p = CountPolynomial(std::move(coeffs));
}

void to_json(Json& j, const RationalPolynomial& p) {
  j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_fraction_string(c));
}

void from_json(const Json& j, RationalPolynomial& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_fraction(c.get<std::string>()));
  p = RationalPolynomial(std::move(coeffs));
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_string(const std::string& text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bits must contain only 0 and 1");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

void to_json(Json& j, const AbacusWindow& w) { j = Json{{"start", w.start}, {"bits", bits_to_string(w.bits)}}; }

void from_json(const Json& j, AbacusWindow& w) {
  w.start = j.at("start").get<std::int64_t>();
  w.bits = bits_from_string(j.at("bits").get<std::string>());
}

void to_json(Json& j, const CoreDescriptor& c) { j = Json(c.positions); }

void from_json(const Json& j, CoreDescriptor& c) {
  if (!j.is_array()) throw std::invalid_argument("core descriptor must be a JSON array");
  c.positions = j.get<std::vector<std::int64_t>>();
  c.t = static_cast<int>(c.positions.size());
}

void to_json(Json& j, const DiscreteDistribution& d) {
  j = Json::array();
  for (const auto& atom : d.support) j.push_back(Json{{"size", atom.value}, {"p", to_fraction_string(atom.probability)}});
}

void from_json(const Json& j, DiscreteDistribution& d) {
  if (!j.is_array()) throw std::invalid_argument("distribution must be a JSON array");
  d.support.clear();
  for (const auto& atom : j)
    d.support.push_back({atom.at("size").get<std::int64_t>(), parse_fraction(atom.at("p").get<std::string>())});
}

void to_json(Json& j, const GammaParams& g) { j = Json{{"alpha", g.shape}, {"beta", g.rate}}; }

void to_json(Json& j, const GammaFitReport& r) {
  j = Json{{"n", r.n},
           {"sample_mean", r.sample_mean},
           {"sample_variance", r.sample_variance},
           {"standard_error", r.standard_error},
           {"mean_error", r.mean_error},
           {"variance_error", r.variance_error},
           {"ks_distance", r.ks_distance}};
  if (r.covariance) {
    j["covariance"] = Json{{"empirical", r.covariance->empirical},
                           {"finite_exact", r.covariance->finite_exact},
                           {"limit", r.covariance->limit},
                           {"max_dev_finite", r.covariance->max_dev_finite},
                           {"max_dev_limit", r.covariance->max_dev_limit}};
  }
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace tcore
