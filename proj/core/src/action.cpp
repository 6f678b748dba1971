#include "commdeg/action.hpp"

#include <algorithm>
#include <random>

#include "commdeg/error.hpp"

namespace commdeg {

namespace {

constexpr std::size_t kExhaustiveActionLimit = 1'000'000;
constexpr std::size_t kSampledActionChecks = 1'000'000;

void check_point_weights(const FiniteAction& a, std::span<const Rational> nu) {
  if (nu.size() != a.set_size()) throw Error(ErrorCode::WeightMismatch, "need one weight per point");
  Rational total;
  for (const Rational& w : nu) {
    if (w < Rational(0)) throw Error(ErrorCode::WeightMismatch, "negative point weight");
    total += w;
  }
  if (total != Rational(1)) throw Error(ErrorCode::WeightMismatch, "point weights sum to " + total.str());
}

void check_group_measure(const FiniteAction& a, const Distribution& mu) {
  if (!(mu.group() == a.group())) throw Error(ErrorCode::WeightMismatch, "measure lives on a different group");
}

}  // namespace

FiniteAction::FiniteAction(GroupTable group, std::size_t set_size, std::vector<Point> table)
    : group_(std::move(group)), set_size_(set_size), table_(std::move(table)) {
  const std::size_t n = group_.order();
  if (set_size_ == 0) throw Error(ErrorCode::InvalidAction, "point set must be non-empty");
  if (table_.size() != n * set_size_) throw Error(ErrorCode::InvalidAction, "action table has wrong size");
  std::vector<bool> hit(set_size_);
  for (Element g = 0; g < n; ++g) {
    std::fill(hit.begin(), hit.end(), false);
    for (Point x = 0; x < set_size_; ++x) {
      Point y = act(g, x);
      if (y >= set_size_ || hit[y])
        throw Error(ErrorCode::InvalidAction, "row " + std::to_string(g) + " is not a permutation");
      hit[y] = true;
    }
  }
  for (Point x = 0; x < set_size_; ++x)
    if (act(0, x) != x) throw Error(ErrorCode::InvalidAction, "identity does not fix point " + std::to_string(x));

  auto fail = [](Element g, Element h, Point x) {
    throw Error(ErrorCode::InvalidAction, "g.(h.x) != (gh).x at (" + std::to_string(g) + "," + std::to_string(h) +
                                              "," + std::to_string(x) + ")");
  };
  if (n * set_size_ <= kExhaustiveActionLimit) {
    for (Element g = 0; g < n; ++g)
      for (Element h = 0; h < n; ++h) {
        Element gh = group_.mul(g, h);
        for (Point x = 0; x < set_size_; ++x)
          if (act(g, act(h, x)) != act(gh, x)) fail(g, h, x);
      }
  } else {
    std::mt19937_64 rng(0xac71'0a5e'0000'0001ULL);
    std::uniform_int_distribution<Element> pick_g(0, Element(n - 1));
    std::uniform_int_distribution<Point> pick_x(0, Point(set_size_ - 1));
    for (std::size_t i = 0; i < kSampledActionChecks; ++i) {
      Element g = pick_g(rng), h = pick_g(rng);
      Point x = pick_x(rng);
      if (act(g, act(h, x)) != act(group_.mul(g, h), x)) fail(g, h, x);
    }
  }
}

FiniteAction conjugation_action(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Point> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) t[a * n + x] = g.mul(g.mul(a, x), g.inv(a));
  return {g, n, std::move(t)};
}

FiniteAction trivial_action(const GroupTable& g, std::size_t set_size) {
  std::vector<Point> t(g.order() * set_size);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t x = 0; x < set_size; ++x) t[a * set_size + x] = Point(x);
  return {g, set_size, std::move(t)};
}

FiniteAction regular_action(const GroupTable& g) {
  auto flat = g.flat_table();
  return {g, g.order(), std::vector<Point>(flat.begin(), flat.end())};
}

FiniteAction automorphism_action(const GroupTable& normal, const GroupTable& acting,
                                 const std::vector<std::vector<Element>>& action) {
  if (action.size() != acting.order()) throw Error(ErrorCode::InvalidAction, "need one action row per element");
  std::vector<Point> t;
  t.reserve(acting.order() * normal.order());
  for (const auto& row : action) {
    if (row.size() != normal.order()) throw Error(ErrorCode::InvalidAction, "action row has wrong length");
    t.insert(t.end(), row.begin(), row.end());
  }
  return {acting, normal.order(), std::move(t)};
}

FiniteAction coset_action(const Subgroup& h) {
  const GroupTable& g = h.parent();
  const std::size_t n = g.order();
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> coset_of(n, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != kUnset) continue;
    for (Element y : h.members()) coset_of[g.mul(x, y)] = Point(reps.size());
    reps.push_back(x);
  }
  const std::size_t k = reps.size();
  std::vector<Point> t(n * k);
  for (Element a = 0; a < n; ++a)
    for (std::size_t c = 0; c < k; ++c) t[a * k + c] = coset_of[g.mul(a, reps[c])];
  return {g, k, std::move(t)};
}

std::vector<std::vector<Point>> orbits(const FiniteAction& a) {
  std::vector<bool> seen(a.set_size(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < a.set_size(); ++x) {
    if (seen[x]) continue;
    std::vector<Point> orbit;
    for (Element g = 0; g < a.group().order(); ++g) {
      Point y = a.act(g, x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup isotropy(const FiniteAction& a, Point x) {
  if (x >= a.set_size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(x));
  std::vector<Element> members;
  for (Element g = 0; g < a.group().order(); ++g)
    if (a.act(g, x) == x) members.push_back(g);
  return Subgroup::unchecked(a.group(), std::move(members));
}

std::vector<Point> fixed_set(const FiniteAction& a, Element g) {
  if (g >= a.group().order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(g));
  std::vector<Point> pts;
  for (Point x = 0; x < a.set_size(); ++x)
    if (a.act(g, x) == x) pts.push_back(x);
  return pts;
}

Rational equalizer_prob_via_points(const FiniteAction& a, const Distribution& mu,
                                   std::span<const Rational> point_weights) {
  check_group_measure(a, mu);
  check_point_weights(a, point_weights);
  Rational total;
  for (Point x = 0; x < a.set_size(); ++x) {
    if (point_weights[x].is_zero()) continue;
    total += point_weights[x] * mu.measure(isotropy(a, x).members());
  }
  return total;
}

Rational equalizer_prob_via_group(const FiniteAction& a, const Distribution& mu,
                                  std::span<const Rational> point_weights) {
  check_group_measure(a, mu);
  check_point_weights(a, point_weights);
  Rational total;
  for (Element g = 0; g < a.group().order(); ++g) {
    if (mu.weight(g).is_zero()) continue;
    Rational fixed;
    for (Point x : fixed_set(a, g)) fixed += point_weights[x];
    total += mu.weight(g) * fixed;
  }
  return total;
}

std::vector<Rational> uniform_point_weights(std::size_t set_size) {
  return std::vector<Rational>(set_size, Rational(1, std::int64_t(set_size)));
}

FiniteOrbitReport finite_orbit_set(const FiniteAction& a) {
  FiniteOrbitReport r;
  r.orbit_size.assign(a.set_size(), 0);
  for (const auto& orbit : orbits(a))
    for (Point x : orbit) r.orbit_size[x] = orbit.size();
  for (Point x = 0; x < a.set_size(); ++x) r.points.push_back(x);
  return r;
}

}  // namespace commdeg
