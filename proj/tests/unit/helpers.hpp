#pragma once

#include <string>
#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/polytext.hpp"

namespace testing {

inline flatcheck::Polynomial P(const flatcheck::RingPtr& ring, const std::string& text) {
  return flatcheck::parse_polynomial(text, ring);
}

inline flatcheck::Ideal I(const flatcheck::RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<flatcheck::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(flatcheck::parse_polynomial(g, ring));
  return flatcheck::Ideal(ring, std::move(ps));
}

inline flatcheck::RingPtr ring(std::vector<std::string> vars,
                               flatcheck::MonomialOrder order = flatcheck::MonomialOrder::degrevlex()) {
  return flatcheck::PolyRing::make(std::move(vars), std::move(order));
}

}  // namespace testing
