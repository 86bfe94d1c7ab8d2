#pragma once

#include <string>

#include "polynorm/covering.hpp"
#include "polynorm/fan.hpp"

namespace polynorm {

class NotTwoDimensional : public GeometryError {
 public:
  NotTwoDimensional() : GeometryError("figures are only rendered for dim = 2") {}
};

// All renderers emit byte-stable output: fixed integer viewBox derived from
// the drawn geometry, coordinates printed by exact fixed-point expansion, and
// deterministic element order.

/// cP with the translates v + P for v in G((c-1)P) outlined, G-points colored
/// by their origin vertex, and any uncovered residual highlighted.
std::string svg_cover_figure(const Polytope& p, const Rational& c,
                             long budget = enumeration_budget());

/// Q + P with the translates v + P for v in G(Q), same styling.
std::string svg_pair_figure(const Polytope& q, const Polytope& p,
                            long budget = enumeration_budget());

/// The normal fan of P: one sector per vertex cone, generators drawn as rays.
std::string svg_fan_figure(const Polytope& p);

}  // namespace polynorm
