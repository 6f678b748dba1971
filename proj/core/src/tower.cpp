#include "commdeg/tower.hpp"

#include <algorithm>

#include "commdeg/error.hpp"

namespace commdeg {

namespace {

void check_depth(unsigned depth) {
  if (depth == 0 || depth > kMaxPresetTowerDepth)
    throw Error(ErrorCode::InvalidArgument,
                "tower depth must be in 1.." + std::to_string(kMaxPresetTowerDepth));
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

template <class Map>
Homomorphism make_bond(const GroupTable& fine, const GroupTable& coarse, Map map) {
  std::vector<Element> image(fine.order());
  for (Element x = 0; x < fine.order(); ++x) image[x] = map(x);
  return {fine, coarse, std::move(image)};
}

}  // namespace

Tower::Tower(std::vector<GroupTable> levels, std::vector<Homomorphism> bonds)
    : levels_(std::move(levels)), bonds_(std::move(bonds)) {
  if (levels_.empty()) throw Error(ErrorCode::InvalidArgument, "tower needs at least one level");
  if (bonds_.size() + 1 != levels_.size())
    throw Error(ErrorCode::InvalidArgument, "tower needs exactly one bond between adjacent levels");
  for (std::size_t k = 0; k < bonds_.size(); ++k) {
    if (!(bonds_[k].source() == levels_[k + 1]) || !(bonds_[k].target() == levels_[k]))
      throw Error(ErrorCode::NotHomomorphism, "bond " + std::to_string(k) + " does not join adjacent levels");
    if (!bonds_[k].is_surjective())
      throw Error(ErrorCode::NotHomomorphism, "bond " + std::to_string(k) + " is not surjective");
  }
}

Tower heisenberg_tower(std::uint64_t p, unsigned depth, const BuildOptions& options) {
  check_prime(p);
  check_depth(depth);
  std::vector<GroupTable> levels;
  std::vector<Homomorphism> bonds;
  std::uint64_t q = 1;
  for (unsigned k = 1; k <= depth; ++k) {
    levels.push_back(heisenberg_group(p, k, options));
    if (k > 1) {
      const std::uint64_t fine_q = q * p;
      bonds.push_back(make_bond(levels[k - 1], levels[k - 2], [&](Element x) {
        std::uint64_t a = x / (fine_q * p), b = (x / p) % fine_q, z = x % p;
        return Element(((a % q) * q + (b % q)) * p + z);
      }));
    }
    q *= p;
  }
  return {std::move(levels), std::move(bonds)};
}

Tower elementary_tower(std::uint64_t p, unsigned depth, const BuildOptions& options) {
  check_prime(p);
  check_depth(depth);
  std::vector<GroupTable> levels;
  std::vector<Homomorphism> bonds;
  std::uint64_t coarse_order = 1;
  for (unsigned k = 1; k <= depth; ++k) {
    levels.push_back(elementary_abelian(p, k, options));
    if (k > 1) {
      // The last coordinate is the most significant base-p digit.
      bonds.push_back(make_bond(levels[k - 1], levels[k - 2], [&](Element x) { return Element(x % coarse_order); }));
    }
    coarse_order *= p;
  }
  return {std::move(levels), std::move(bonds)};
}

Tower cyclic_tower(std::uint64_t p, unsigned depth, const BuildOptions& options) {
  check_prime(p);
  check_depth(depth);
  std::vector<GroupTable> levels;
  std::vector<Homomorphism> bonds;
  std::uint64_t order = 1;
  for (unsigned k = 1; k <= depth; ++k) {
    const std::uint64_t coarse = order;
    order *= p;
    if (order > options.order_cap)
      throw Error(ErrorCode::OrderCapExceeded, "level order " + std::to_string(order) + " exceeds cap");
    levels.push_back(cyclic_group(order));
    if (k > 1) bonds.push_back(make_bond(levels[k - 1], levels[k - 2], [&](Element x) { return Element(x % coarse); }));
  }
  return {std::move(levels), std::move(bonds)};
}

Tower power_tower(const GroupTable& g, unsigned depth, const BuildOptions& options) {
  check_depth(depth);
  std::vector<GroupTable> levels{g};
  std::vector<Homomorphism> bonds;
  for (unsigned k = 2; k <= depth; ++k) {
    const GroupTable& prev = levels.back();
    if (prev.order() * g.order() > options.order_cap)
      throw Error(ErrorCode::OrderCapExceeded, "level order exceeds cap");
    GroupTable next = direct_product(prev, g);
    const std::size_t factor = g.order();
    bonds.push_back(make_bond(next, prev, [&](Element x) { return Element(x / factor); }));
    levels.push_back(std::move(next));
  }
  return {std::move(levels), std::move(bonds)};
}

TowerReport tower_degrees(const Tower& t, std::uint64_t m, std::uint64_t n, const TowerOptions& options) {
  TowerReport r;
  for (const GroupTable& level : t.levels()) {
    r.level_orders.push_back(level.order());
    r.degrees.push_back(degree_mn(level, m, n, options.count).value);
  }
  for (std::size_t k = 1; k < r.degrees.size(); ++k)
    if (r.degrees[k] > r.degrees[k - 1]) {
      r.is_antitone = false;
      throw Error(ErrorCode::AntitoneViolation, "degree rises from " + r.degrees[k - 1].str() + " to " +
                                                    r.degrees[k].str() + " at level " + std::to_string(k + 1));
    }
  const std::size_t w = std::max<std::size_t>(1, options.stabilization_window);
  if (r.degrees.size() >= w) {
    const Rational& last = r.degrees.back();
    bool same = std::all_of(r.degrees.end() - std::ptrdiff_t(w), r.degrees.end(),
                            [&](const Rational& d) { return d == last; });
    if (same) r.stabilized_value = last;
  }
  return r;
}

SubgroupChooser chooser_for(SubgroupSelector s) {
  switch (s) {
    case SubgroupSelector::Trivial:
      return [](const GroupTable& g, std::size_t) { return Subgroup::trivial(g); };
    case SubgroupSelector::Center:
      return [](const GroupTable& g, std::size_t) { return center(g); };
    case SubgroupSelector::Commutator:
      return [](const GroupTable& g, std::size_t) { return commutator_subgroup(g); };
  }
  throw Error(ErrorCode::InvalidArgument, "unknown selector");
}

StraightnessReport straightness_fraction(const Tower& t, std::uint64_t n, const SubgroupChooser& chooser) {
  std::vector<Subgroup> chosen;
  for (std::size_t k = 0; k < t.depth(); ++k) {
    Subgroup h = chooser(t.level(k), k);
    if (!(h.parent() == t.level(k)))
      throw Error(ErrorCode::IncompatibleSelector, "selector returned a subgroup of another group");
    chosen.push_back(std::move(h));
  }
  for (std::size_t k = 0; k + 1 < t.depth(); ++k)
    for (Element x : chosen[k + 1].members())
      if (!chosen[k].contains(t.bond(k)(x)))
        throw Error(ErrorCode::IncompatibleSelector,
                    "bond " + std::to_string(k) + " does not map H_" + std::to_string(k + 2) + " into H_" +
                        std::to_string(k + 1));

  StraightnessReport r;
  for (std::size_t k = 0; k < t.depth(); ++k) {
    const GroupTable& g = t.level(k);
    std::int64_t hits = 0;
    for (Element u : power_map(g, n)) hits += chosen[k].contains(u);
    r.fractions.emplace_back(BigInt(hits), BigInt(g.order()));
    r.indices.push_back(chosen[k].index());
  }
  if (t.depth() >= 2) {
    const std::size_t a = t.depth() - 2, b = t.depth() - 1;
    r.non_straight_evidence = r.fractions[b] == r.fractions[a] && !r.fractions[b].is_zero() && r.indices[b] > r.indices[a];
    r.vanishing = r.fractions[b] < r.fractions[a];
  }
  return r;
}

StraightnessReport straightness_fraction(const Tower& t, std::uint64_t n, SubgroupSelector selector) {
  return straightness_fraction(t, n, chooser_for(selector));
}

ClassGrowth fc_class_growth(const Tower& t, std::span<const Element> path) {
  if (path.size() != t.depth())
    throw Error(ErrorCode::IncompatiblePath, "path needs one element per level");
  for (std::size_t k = 0; k < path.size(); ++k)
    if (path[k] >= t.level(k).order())
      throw Error(ErrorCode::IncompatiblePath, "path entry " + std::to_string(k) + " out of range");
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (t.bond(k)(path[k + 1]) != path[k])
      throw Error(ErrorCode::IncompatiblePath, "bond " + std::to_string(k) + " does not map the path entry down");
  ClassGrowth g;
  for (std::size_t k = 0; k < path.size(); ++k)
    g.class_sizes.push_back(centralizer(t.level(k), path[k]).index());
  g.stable = g.class_sizes.size() >= 2 && g.class_sizes.back() == g.class_sizes[g.class_sizes.size() - 2];
  return g;
}

std::vector<Rational> product_degree_partials(std::span<const Rational> factors) {
  std::vector<Rational> out;
  Rational acc(1);
  for (const Rational& f : factors) {
    if (f < Rational(0) || f > Rational(1))
      throw Error(ErrorCode::InvalidArgument, "factor " + f.str() + " outside [0,1]");
    acc *= f;
    out.push_back(acc);
  }
  return out;
}

CheckedPartials product_degree_partials(std::span<const GroupTable> factors, const CountOptions& options) {
  CheckedPartials r;
  std::vector<Rational> degrees;
  for (const GroupTable& g : factors) degrees.push_back(degree_centralizer_sum(g).value);
  r.partials = product_degree_partials(degrees);
  if (!factors.empty()) {
    GroupTable running = factors[0];
    r.explicit_degrees.push_back(degree_bruteforce(running, options).value);
    if (factors.size() >= 2) {
      running = direct_product(running, factors[1]);
      r.explicit_degrees.push_back(degree_bruteforce(running, options).value);
    }
  }
  for (std::size_t i = 0; i < r.explicit_degrees.size(); ++i)
    r.agrees = r.agrees && r.explicit_degrees[i] == r.partials[i];
  return r;
}

}  // namespace commdeg
