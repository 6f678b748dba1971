#pragma once

#include <cstdint>
#include <vector>

#include "commdeg/degree.hpp"
#include "commdeg/group.hpp"
#include "commdeg/rational.hpp"

namespace commdeg {

using Point = std::uint32_t;

/// Left action of a finite group on the points 0..set_size-1.
class FiniteAction {
 public:
  /// `table[g * set_size + x]` is g.x. Rows must be permutations, the
  /// identity row must fix every point, and g.(h.x) = (gh).x must hold. The
  /// compatibility law is checked exhaustively when |G| * set_size <= 10^6
  /// and on a fixed pseudo-random sample otherwise.
  FiniteAction(GroupTable group, std::size_t set_size, std::vector<Point> table);

  const GroupTable& group() const { return group_; }
  std::size_t set_size() const { return set_size_; }
  Point act(Element g, Point x) const { return table_[std::size_t(g) * set_size_ + x]; }

 private:
  GroupTable group_;
  std::size_t set_size_;
  std::vector<Point> table_;
};

FiniteAction conjugation_action(const GroupTable& g);
FiniteAction trivial_action(const GroupTable& g, std::size_t set_size);
/// Left translation of G on itself.
FiniteAction regular_action(const GroupTable& g);
/// Action of `acting` on the elements of `normal` given by an action table
/// as used for semidirect products.
FiniteAction automorphism_action(const GroupTable& normal, const GroupTable& acting,
                                 const std::vector<std::vector<Element>>& action);
/// Action of G on the left cosets of H, cosets numbered by smallest member.
FiniteAction coset_action(const Subgroup& h);

/// Orbits ordered by smallest point; each orbit sorted.
std::vector<std::vector<Point>> orbits(const FiniteAction& a);
Subgroup isotropy(const FiniteAction& a, Point x);
std::vector<Point> fixed_set(const FiniteAction& a, Element g);

/// P(E) as the integral over points of the isotropy measure.
Rational equalizer_prob_via_points(const FiniteAction& a, const Distribution& mu,
                                   std::span<const Rational> point_weights);
/// P(E) as the integral over the group of the fixed-set measure.
Rational equalizer_prob_via_group(const FiniteAction& a, const Distribution& mu,
                                  std::span<const Rational> point_weights);

std::vector<Rational> uniform_point_weights(std::size_t set_size);

struct FiniteOrbitReport {
  std::vector<Point> points;            // points whose orbit is finite
  std::vector<std::size_t> orbit_size;  // orbit size of each point
};

/// For a finite group every orbit is finite, so all points are returned.
FiniteOrbitReport finite_orbit_set(const FiniteAction& a);

}  // namespace commdeg
