#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "commdeg/group.hpp"
#include "commdeg/group_spec.hpp"
#include "commdeg/rational.hpp"

namespace commdeg {

/// Probability measure on a finite group with exact weights.
class Distribution {
 public:
  /// Requires one non-negative weight per element, summing to exactly 1.
  Distribution(GroupTable group, std::vector<Rational> weights);

  const GroupTable& group() const { return group_; }
  const Rational& weight(Element e) const { return weights_[e]; }
  std::span<const Rational> weights() const { return weights_; }
  /// Measure of a set of elements.
  Rational measure(std::span<const Element> elements) const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.group_ == b.group_ && a.weights_ == b.weights_;
  }

 private:
  GroupTable group_;
  std::vector<Rational> weights_;
};

enum class DegreeMethod { BruteForce, CentralizerSum, Structural, Pushforward };

std::string_view to_string(DegreeMethod m);

struct StructuralTerm {
  Element representative;
  Rational index_term;  // |G / Z(g,G)|^-1
};

struct DegreeReport {
  Rational value;
  DegreeMethod method;
  std::vector<StructuralTerm> breakdown;  // filled by the structural method only
};

struct CountOptions {
  std::size_t order_cap = kDefaultOrderCap;
  unsigned workers = 1;
};

/// Above this order the brute-force pair count runs over conjugacy classes.
inline constexpr std::size_t kClassCountingThreshold = 2000;

Distribution haar(const GroupTable& g);

/// Fraction of ordered commuting pairs, counted exhaustively.
DegreeReport degree_bruteforce(const GroupTable& g, const CountOptions& options = {});
/// sum over g of |Z(g,G)|, divided by |G|^2.
DegreeReport degree_centralizer_sum(const GroupTable& g);
/// Average over cosets of Z(G) of |G/Z(g,G)|^-1, one minimal representative
/// per coset.
DegreeReport degree_structural(const GroupTable& g);

/// Distribution of x^n for Haar-random x.
Distribution pushforward_power(const GroupTable& g, std::uint64_t n);

/// Fraction of pairs (x,y) with [x^m, y^n] = 1, counted exhaustively.
DegreeReport degree_mn(const GroupTable& g, std::uint64_t m, std::uint64_t n, const CountOptions& options = {});
/// The same probability as the product measure of the commuting set under
/// the two pushforward distributions.
DegreeReport degree_mn_pushforward(const GroupTable& g, std::uint64_t m, std::uint64_t n);

/// d(A) * d(B).
Rational degree_of_product(const GroupTable& a, const GroupTable& b);

/// Brute-force check of the closed forms for A x| {1,-1} with A = Z/n and
/// {1,-1} acting by inversion. t is the Haar mass of the 2-torsion of A.
struct InversionSemidirectAudit {
  std::size_t n = 0;
  std::size_t order = 0;
  Rational bruteforce;
  Rational two_torsion_mass;  // t
  Rational linear_form;       // (1 + 3t) / 4
  Rational squared_form;      // ((1 + t) / 2)^2
  bool matches_linear = false;
  bool matches_squared = false;
};

InversionSemidirectAudit audit_inversion_semidirect(std::size_t n);

/// Number of ordered pairs (x,y) with [power_m(x), power_n(y)] = 1.
std::uint64_t count_commuting_power_pairs(const GroupTable& g, std::span<const Element> power_m,
                                          std::span<const Element> power_n, unsigned workers);

}  // namespace commdeg
