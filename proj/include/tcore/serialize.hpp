#pragma once

#include <string>

#include <json.hpp>

#include "tcore/abacus.hpp"
#include "tcore/bigint.hpp"
#include "tcore/coredist.hpp"
#include "tcore/montecarlo.hpp"
#include "tcore/partition.hpp"
#include "tcore/polynomial.hpp"

// JSON forms:
//   Partition            [5,4,4,1]
//   CountPolynomial      ["1","0","2"]            index = exponent
//   RationalPolynomial   ["1/2","1/2"]
//   AbacusWindow         {"start":-2,"bits":"0101"}
//   CoreDescriptor       [1,1,-2]
//   DiscreteDistribution [{"size":0,"p":"1/3"}, ...]
// from_json throws nlohmann::json::exception or std::invalid_argument on
// malformed input.

namespace tcore {

using Json = nlohmann::json;

void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);

void to_json(Json& j, const CountPolynomial& p);
void from_json(const Json& j, CountPolynomial& p);

void to_json(Json& j, const RationalPolynomial& p);
void from_json(const Json& j, RationalPolynomial& p);

void to_json(Json& j, const AbacusWindow& w);
void from_json(const Json& j, AbacusWindow& w);

void to_json(Json& j, const CoreDescriptor& c);
/// t is taken from the array length.
void from_json(const Json& j, CoreDescriptor& c);

void to_json(Json& j, const DiscreteDistribution& d);
void from_json(const Json& j, DiscreteDistribution& d);

void to_json(Json& j, const GammaParams& g);
void to_json(Json& j, const GammaFitReport& r);

/// "0101..." from 0/1 bytes and back; throws on other characters.
std::string bits_to_string(const Bits& bits);
Bits bits_from_string(const std::string& text);

/// Compact single-line dump used by the CLI.
std::string dump(const Json& j);

}  // namespace tcore
