#include "commdeg/degree.hpp"

#include <algorithm>
#include <thread>

#include <boost/multiprecision/integer.hpp>

#include "commdeg/error.hpp"

namespace commdeg {

namespace {

void check_cap(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
}

Rational over_square(std::uint64_t count, std::size_t order) {
  BigInt den = BigInt(order) * BigInt(order);
  return {BigInt(count), den};
}

}  // namespace

std::string_view to_string(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::BruteForce: return "bruteforce";
    case DegreeMethod::CentralizerSum: return "centralizer_sum";
    case DegreeMethod::Structural: return "structural";
    case DegreeMethod::Pushforward: return "pushforward";
  }
  return "unknown";
}

Distribution::Distribution(GroupTable group, std::vector<Rational> weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  if (weights_.size() != group_.order())
    throw Error(ErrorCode::WeightMismatch, "need one weight per group element");
  Rational total;
  for (const Rational& w : weights_) {
    if (w < Rational(0)) throw Error(ErrorCode::WeightMismatch, "negative weight");
    total += w;
  }
  if (total != Rational(1)) throw Error(ErrorCode::WeightMismatch, "weights sum to " + total.str());
}

Rational Distribution::measure(std::span<const Element> elements) const {
  Rational s;
  for (Element e : elements) s += weights_.at(e);
  return s;
}

Distribution haar(const GroupTable& g) {
  return {g, std::vector<Rational>(g.order(), Rational(1, g.order()))};
}

std::uint64_t count_commuting_power_pairs(const GroupTable& g, std::span<const Element> power_m,
                                          std::span<const Element> power_n, unsigned workers) {
  const std::size_t n = g.order();
  workers = std::max(1U, std::min<unsigned>(workers, unsigned(n)));
  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
    std::uint64_t c = 0;
    for (std::size_t x = lo; x < hi; ++x) {
      Element u = power_m[x];
      auto row = g.row(u);
      for (std::size_t y = 0; y < n; ++y) {
        Element v = power_n[y];
        c += row[v] == g.mul(v, u);
      }
    }
    partial[w] = c;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

DegreeReport degree_bruteforce(const GroupTable& g, const CountOptions& options) {
  check_cap(g, options.order_cap);
  const std::size_t n = g.order();
  std::uint64_t count = 0;
  if (n > kClassCountingThreshold) {
    // Commuting pairs with x in class C number |C| * |Z(rep C)|.
    for (const auto& cls : conjugacy_classes(g)) count += cls.size() * centralizer_order(g, cls.front());
  } else {
    std::vector<Element> id(n);
    for (Element x = 0; x < n; ++x) id[x] = x;
    count = count_commuting_power_pairs(g, id, id, options.workers);
  }
  return {over_square(count, n), DegreeMethod::BruteForce, {}};
}

DegreeReport degree_centralizer_sum(const GroupTable& g) {
  Rational sum;
  const Rational inv_order(1, g.order());
  for (Element x = 0; x < g.order(); ++x) sum += Rational(std::int64_t(centralizer_order(g, x)), std::int64_t(g.order()));
  return {sum * inv_order, DegreeMethod::CentralizerSum, {}};
}

DegreeReport degree_structural(const GroupTable& g) {
  const Subgroup z = center(g);
  const std::size_t n = g.order();
  std::vector<bool> covered(n, false);
  DegreeReport report{Rational(0), DegreeMethod::Structural, {}};
  Rational sum;
  for (Element x = 0; x < n; ++x) {
    if (covered[x]) continue;
    for (Element c : z.members()) covered[g.mul(x, c)] = true;
    Rational term(std::int64_t(centralizer_order(g, x)), std::int64_t(n));
    sum += term;
    report.breakdown.push_back({x, term});
  }
  report.value = sum / Rational(std::int64_t(z.index()));
  return report;
}

Distribution pushforward_power(const GroupTable& g, std::uint64_t n) {
  std::vector<std::int64_t> hits(g.order(), 0);
  for (Element u : power_map(g, n)) ++hits[u];
  std::vector<Rational> w;
  w.reserve(g.order());
  for (std::int64_t h : hits) w.emplace_back(BigInt(h), BigInt(g.order()));
  return {g, std::move(w)};
}

DegreeReport degree_mn(const GroupTable& g, std::uint64_t m, std::uint64_t n, const CountOptions& options) {
  check_cap(g, options.order_cap);
  auto pm = power_map(g, m);
  auto pn = power_map(g, n);
  return {over_square(count_commuting_power_pairs(g, pm, pn, options.workers), g.order()), DegreeMethod::BruteForce,
          {}};
}

DegreeReport degree_mn_pushforward(const GroupTable& g, std::uint64_t m, std::uint64_t n) {
  const Distribution mu1 = pushforward_power(g, m);
  const Distribution mu2 = pushforward_power(g, n);

  // Scale both measures to integers over a common denominator so the pair sum
  // runs in integer arithmetic; the final division restores the exact value.
  BigInt common = 1;
  for (const Distribution* d : {&mu1, &mu2})
    for (const Rational& w : d->weights()) common = boost::multiprecision::lcm(common, w.den());
  auto scaled = [&](const Distribution& d) {
    std::vector<std::pair<Element, BigInt>> support;
    for (Element e = 0; e < g.order(); ++e)
      if (!d.weight(e).is_zero()) support.emplace_back(e, d.weight(e).num() * (common / d.weight(e).den()));
    return support;
  };
  const auto s1 = scaled(mu1);
  const auto s2 = scaled(mu2);
  BigInt total = 0;
  for (const auto& [u, wu] : s1) {
    BigInt row = 0;
    for (const auto& [v, wv] : s2)
      if (g.mul(u, v) == g.mul(v, u)) row += wv;
    total += wu * row;
  }
  return {Rational(total, common * common), DegreeMethod::Pushforward, {}};
}

Rational degree_of_product(const GroupTable& a, const GroupTable& b) {
  return degree_centralizer_sum(a).value * degree_centralizer_sum(b).value;
}

InversionSemidirectAudit audit_inversion_semidirect(std::size_t n) {
  const GroupTable a = cyclic_group(n);
  const GroupTable g = semidirect_product(a, cyclic_group(2), inversion_action(a));
  InversionSemidirectAudit r;
  r.n = n;
  r.order = g.order();
  r.bruteforce = degree_bruteforce(g).value;
  std::int64_t two_torsion = 0;
  for (Element x = 0; x < a.order(); ++x) two_torsion += a.mul(x, x) == 0;
  r.two_torsion_mass = Rational(two_torsion, std::int64_t(n));
  r.linear_form = (Rational(1) + Rational(3) * r.two_torsion_mass) / Rational(4);
  Rational half = (Rational(1) + r.two_torsion_mass) / Rational(2);
  r.squared_form = half * half;
  r.matches_linear = r.bruteforce == r.linear_form;
  r.matches_squared = r.bruteforce == r.squared_form;
  return r;
}

}  // namespace commdeg
