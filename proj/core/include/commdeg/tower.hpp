#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "commdeg/degree.hpp"
#include "commdeg/group.hpp"
#include "commdeg/group_spec.hpp"
#include "commdeg/rational.hpp"

namespace commdeg {

/// Finite truncation of an inverse system. Level 0 is the coarsest quotient
/// and bonds[k] maps levels[k+1] onto levels[k].
class Tower {
 public:
  /// Every bond must be a surjective homomorphism between adjacent levels.
  Tower(std::vector<GroupTable> levels, std::vector<Homomorphism> bonds);

  std::size_t depth() const { return levels_.size(); }
  const GroupTable& level(std::size_t k) const { return levels_.at(k); }
  const Homomorphism& bond(std::size_t k) const { return bonds_.at(k); }
  std::span<const GroupTable> levels() const { return levels_; }
  std::span<const Homomorphism> bonds() const { return bonds_; }

 private:
  std::vector<GroupTable> levels_;
  std::vector<Homomorphism> bonds_;
};

inline constexpr unsigned kMaxPresetTowerDepth = 4;

/// Level k (1-based) is the Heisenberg quotient over Z/p^k with central
/// coordinate in Z/p; bonds reduce a and b modulo p^(k-1).
Tower heisenberg_tower(std::uint64_t p, unsigned depth, const BuildOptions& options = {});
/// Level k is (Z/p)^k; bonds forget the last coordinate.
Tower elementary_tower(std::uint64_t p, unsigned depth, const BuildOptions& options = {});
/// Level k is Z/p^k with reduction bonds.
Tower cyclic_tower(std::uint64_t p, unsigned depth, const BuildOptions& options = {});
/// Level k is G^k; bonds forget the last factor.
Tower power_tower(const GroupTable& g, unsigned depth, const BuildOptions& options = {});

struct TowerReport {
  std::vector<Rational> degrees;
  bool is_antitone = true;
  std::optional<Rational> stabilized_value;
  std::vector<std::size_t> level_orders;
};

struct TowerOptions {
  CountOptions count;
  std::size_t stabilization_window = 2;
};

/// degree_mn at every level. A degree that increases along the tower is a
/// construction bug and raises AntitoneViolation.
TowerReport tower_degrees(const Tower& t, std::uint64_t m, std::uint64_t n, const TowerOptions& options = {});

enum class SubgroupSelector { Trivial, Center, Commutator };

using SubgroupChooser = std::function<Subgroup(const GroupTable& level, std::size_t k)>;

SubgroupChooser chooser_for(SubgroupSelector s);

struct StraightnessReport {
  std::vector<Rational> fractions;  // |{g : g^n in H_k}| / |G_k|
  std::vector<std::size_t> indices;  // [G_k : H_k]
  /// The fraction stayed put over the last two levels while the index grew.
  bool non_straight_evidence = false;
  /// The fraction dropped over the last two levels.
  bool vanishing = false;
};

/// Raises IncompatibleSelector unless each bond maps H_{k+1} into H_k.
StraightnessReport straightness_fraction(const Tower& t, std::uint64_t n, const SubgroupChooser& chooser);
StraightnessReport straightness_fraction(const Tower& t, std::uint64_t n, SubgroupSelector selector);

struct ClassGrowth {
  std::vector<std::size_t> class_sizes;
  bool stable = false;  // last two sizes agree
};

/// `path[k]` is an element of level k with bond(path[k+1]) == path[k].
ClassGrowth fc_class_growth(const Tower& t, std::span<const Element> path);

/// d1, d1*d2, d1*d2*d3, ...; each factor must lie in [0, 1].
std::vector<Rational> product_degree_partials(std::span<const Rational> factors);

struct CheckedPartials {
  std::vector<Rational> partials;
  /// Brute-force degrees of G1 and G1 x G2, when computed.
  std::vector<Rational> explicit_degrees;
  bool agrees = true;
};

/// Partials of the factor groups' degrees, with the first two cross-checked
/// by brute force on the explicit direct products.
CheckedPartials product_degree_partials(std::span<const GroupTable> factors, const CountOptions& options = {});

}  // namespace commdeg
