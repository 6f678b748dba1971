// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "commdeg/action.hpp"
#include "commdeg/degree.hpp"
#include "commdeg/lie.hpp"
#include "commdeg/sampler.hpp"
#include "commdeg/tower.hpp"
#include "support/corpus.hpp"

using namespace commdeg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// Every degree seen by criteria 3 and 4, for the rationality check.
struct SeenDegree {
  Rational value;
  std::size_t order;
};
std::vector<SeenDegree> g_seen;

void criterion_1(Outcome& o) {
  const auto t0 = Clock::now();
  const GroupTable q8 = quaternion_group();
  const Rational a = degree_bruteforce(q8).value, b = degree_centralizer_sum(q8).value,
                 c = degree_structural(q8).value;
  const double s = seconds_since(t0);
  o.require(a == Rational(5, 8) && b == a && c == a, "d(Q8) = 5/8 by all methods");
  o.require(s < 0.1, "runtime < 0.1 s");
  o.detail << "d(Q8) = " << a << ", " << b << ", " << c << " in " << s << " s";
}

void criterion_2(Outcome& o) {
  for (std::int64_t p : {2, 3, 5}) {
    const auto t0 = Clock::now();
    const GroupTable g = heisenberg_group(std::uint64_t(p), 1);
    const Rational d = degree_bruteforce(g).value;
    const bool agree = d == degree_centralizer_sum(g).value && d == degree_structural(g).value;
    const double s = seconds_since(t0);
    o.require(agree && d == Rational(p * p + p - 1, p * p * p), "p=" + std::to_string(p));
    if (p == 5) o.require(s < 5.0, "runtime < 5 s at p=5");
    o.detail << "p=" << p << ": " << d << " (" << s << " s)  ";
  }
}

void criterion_3(Outcome& o) {
  const auto t0 = Clock::now();
  const auto& corpus = testdata::group_corpus();
  const auto& tables = testdata::corpus_tables();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const GroupTable& g = tables[i];
    if (g.order() > 128) continue;
    ++checked;
    const Rational a = degree_bruteforce(g).value, b = degree_centralizer_sum(g).value,
                   c = degree_structural(g).value;
    o.require(a == b && b == c, corpus[i].name);
    g_seen.push_back({a, g.order()});
  }
  const double s = seconds_since(t0);
  o.require(checked >= 30, "at least 30 groups");
  o.require(s < 30.0, "runtime < 30 s");
  o.detail << checked << " groups, three-way equal, " << s << " s";
}

void criterion_4(Outcome& o) {
  const auto t0 = Clock::now();
  const auto& corpus = testdata::group_corpus();
  const auto& tables = testdata::corpus_tables();
  std::size_t cases = 0;
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::uint64_t m = 1; m <= 4; ++m)
      for (std::uint64_t n = 1; n <= 4; ++n) {
        const Rational a = degree_mn(tables[i], m, n, {kDefaultOrderCap, workers}).value;
        const Rational b = degree_mn_pushforward(tables[i], m, n).value;
        o.require(a == b, corpus[i].name + " m=" + std::to_string(m) + " n=" + std::to_string(n));
        g_seen.push_back({a, tables[i].order()});
        g_seen.push_back({b, tables[i].order()});
        ++cases;
      }
  const double s = seconds_since(t0);
  o.require(s < 60.0, "runtime < 60 s");
  o.detail << cases << " (group, m, n) cases equal, " << s << " s";
}

void criterion_5(Outcome& o) {
  std::size_t bad = 0;
  for (const auto& d : g_seen) {
    const bool reduced = boost::multiprecision::gcd(d.value.num(), d.value.den()) == 1;
    const BigInt square = BigInt(d.order) * BigInt(d.order);
    if (!reduced || square % d.value.den() != 0) ++bad;
  }
  o.require(!g_seen.empty(), "degrees were collected");
  o.require(bad == 0, std::to_string(bad) + " degrees violate the witness");
  o.detail << g_seen.size() << " degrees reduced with denominator dividing |G|^2";
}

void criterion_6(Outcome& o) {
  const auto actions = testdata::action_corpus();
  std::size_t conjugation = 0, non_uniform = 0;
  for (const auto& a : actions) {
    const Rational p = equalizer_prob_via_points(a.action, a.mu, a.nu);
    const Rational g = equalizer_prob_via_group(a.action, a.mu, a.nu);
    o.require(p == g, a.name);
    conjugation += a.name.find("conjugation") != std::string::npos;
    non_uniform += a.name.find("ramp") != std::string::npos;
  }
  o.require(actions.size() >= 10, "at least 10 actions");
  o.require(conjugation > 0 && non_uniform > 0, "conjugation and non-uniform measures present");
  o.detail << actions.size() << " actions (" << conjugation << " conjugation, " << non_uniform
           << " with non-uniform measures), both sums equal";
}

void criterion_7(Outcome& o) {
  struct Named {
    std::string name;
    Tower tower;
  };
  std::vector<Named> towers;
  towers.push_back({"heisenberg p=2", heisenberg_tower(2, 2)});
  towers.push_back({"heisenberg p=3", heisenberg_tower(3, 2)});
  towers.push_back({"elementary p=2", elementary_tower(2, 4)});
  towers.push_back({"elementary p=3", elementary_tower(3, 3)});
  towers.push_back({"cyclic p=2", cyclic_tower(2, 4)});
  towers.push_back({"cyclic p=3", cyclic_tower(3, 3)});
  towers.push_back({"Q8 powers", power_tower(quaternion_group(), 2)});
  towers.push_back({"D8 powers", power_tower(dihedral_group(4), 2)});
  towers.push_back({"S3 powers", power_tower(symmetric_group(3), 3)});
  std::size_t reports = 0;
  for (const auto& [name, t] : towers)
    for (std::uint64_t m : {1, 2})
      for (std::uint64_t n : {1, 2}) {
        TowerReport r;
        try {
          r = tower_degrees(t, m, n);
        } catch (const std::exception& e) {
          o.require(false, name + ": " + e.what());
          continue;
        }
        ++reports;
        bool antitone = r.is_antitone;
        for (std::size_t k = 1; k < r.degrees.size(); ++k) antitone = antitone && r.degrees[k] <= r.degrees[k - 1];
        o.require(antitone, name);
      }
  for (std::int64_t p : {2, 3}) {
    const TowerReport r = tower_degrees(heisenberg_tower(std::uint64_t(p), 2), 1, 1);
    for (const auto& d : r.degrees)
      o.require(d == Rational(p * p + p - 1, p * p * p), "heisenberg constant at p=" + std::to_string(p));
    o.detail << "heisenberg p=" << p << ": " << r.degrees[0] << ", " << r.degrees[1] << "; ";
  }
  o.detail << reports << " tower reports non-increasing";
}

void criterion_8(Outcome& o) {
  const StraightnessReport e = straightness_fraction(elementary_tower(2, 4), 2, SubgroupSelector::Trivial);
  bool all_one = true, index_grows = true;
  for (std::size_t k = 0; k < e.fractions.size(); ++k) {
    all_one = all_one && e.fractions[k] == Rational(1);
    if (k) index_grows = index_grows && e.indices[k] > e.indices[k - 1];
  }
  o.require(all_one && index_grows && e.non_straight_evidence, "elementary tower evidence");
  // Levels Z/2, Z/4, Z/8, Z/16; the squaring kernel has order 2 throughout.
  const StraightnessReport c = straightness_fraction(cyclic_tower(2, 4), 2, SubgroupSelector::Trivial);
  const std::vector<Rational> tail(c.fractions.begin() + 1, c.fractions.end());
  o.require(tail == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)}, "cyclic fractions");
  o.require(c.vanishing, "cyclic fractions vanish");
  o.detail << "elementary: fractions 1 with indices";
  for (auto i : e.indices) o.detail << ' ' << i;
  o.detail << "; cyclic Z/4, Z/8, Z/16: " << tail[0] << ", " << tail[1] << ", " << tail[2];
}

void criterion_9(Outcome& o) {
  const auto& tables = testdata::corpus_tables();
  const auto pairs = testdata::product_pairs();
  for (auto [i, j] : pairs) {
    const Rational explicit_degree = degree_bruteforce(direct_product(tables[i], tables[j])).value;
    o.require(explicit_degree == degree_of_product(tables[i], tables[j]),
              std::to_string(i) + "x" + std::to_string(j));
  }
  o.require(pairs.size() >= 20, "at least 20 pairs");
  const std::vector<GroupTable> d8(2, dihedral_group(4));
  const CheckedPartials c = product_degree_partials(d8);
  o.require(c.agrees && c.partials == std::vector<Rational>{Rational(5, 8), Rational(25, 64)}, "partials");
  o.detail << pairs.size() << " pairs; partials " << c.partials[0] << ", " << c.partials[1]
           << " match brute force on orders 8 and 64";
}

void criterion_10(Outcome& o) {
  const auto t0 = Clock::now();
  std::vector<LiePreset> presets{continuous_dihedral_preset(), so3_preset(), su2_preset()};
  for (std::size_t d = 1; d <= 3; ++d) presets.push_back(torus_preset(d));
  std::size_t checks = 0, disagreements = 0;
  for (const auto& p : presets)
    for (const auto& e : p.certificates)
      for (std::uint64_t n = 1; n <= 8; ++n) {
        ++checks;
        if (is_singular(e, n, 1e-9) != singular_via_alpha(e, n, 1e-9)) ++disagreements;
      }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  bool flip_total = true;
  for (const auto& e : continuous_dihedral_preset().certificates)
    if (e.component == 1) flip_total = flip_total && total_singularity(e, 2) == TotalSingularity::Yes;
  o.require(flip_total, "flip component totally singular for n=2");
  o.require(!straightness_verdict(continuous_dihedral_preset(), 2).straight, "dihedral not 2-straight");
  for (std::uint64_t n : {2, 3}) o.require(straightness_verdict(so3_preset(), n).straight, "SO(3) straight");
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::uint64_t n = 1; n <= 6; ++n) o.require(straightness_verdict(torus_preset(d), n).straight, "torus");
  const double s = seconds_since(t0);
  o.require(s < 10.0, "runtime < 10 s");
  o.detail << checks << " eigenvalue/alpha checks agree; verdicts as expected; " << s << " s";
}

void criterion_11(Outcome& o) {
  const auto t0 = Clock::now();
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Estimate e = estimate_degree_mn(dihedral_sampler(), 1, 1, 100000, seed, workers);
    within += std::abs(e.mean - 0.25) <= 3.0 * e.std_error;
  }
  o.require(within >= 99, "dihedral coverage");
  const Estimate so3 = estimate_degree_mn(so3_sampler(), 1, 1, 100000, 1, workers);
  o.require(so3.mean == 0.0 && so3.successes == 0, "SO(3) estimate exactly 0");
  double worst = 0;
  for (const GroupTable& g : {quaternion_group(), symmetric_group(4), heisenberg_group(3, 1), dihedral_group(6)})
    for (std::uint64_t m : {1, 2}) {
      const Estimate e = estimate_finite(g, m, 1, 100000, 7 + m, workers);
      worst = std::max(worst, deviation_sigmas(e));
      o.require(bridge_status(e) != BridgeStatus::Failed, "finite bridge within 6 sigma");
    }
  const double s = seconds_since(t0);
  o.require(s < 60.0, "runtime < 60 s");
  o.detail << within << "/100 seeds within 3 sigma of 1/4; SO(3) mean " << so3.mean << "; worst finite deviation "
           << worst << " sigma; " << s << " s";
}

void criterion_12(Outcome& o) {
  const auto z4 = audit_inversion_semidirect(4);
  const auto z6 = audit_inversion_semidirect(6);
  o.require(z4.bruteforce == Rational(5, 8) && z6.bruteforce == Rational(1, 2), "brute-force values");
  o.require(z4.matches_linear && z6.matches_linear, "(1+3t)/4 matches");
  o.require(!z4.matches_squared && !z6.matches_squared, "((1+t)/2)^2 does not match");
  const Rational t0(0);
  const Rational linear = (Rational(1) + Rational(3) * t0) / Rational(4);
  const Rational squared = ((Rational(1) + t0) / Rational(2)) * ((Rational(1) + t0) / Rational(2));
  o.require(linear == Rational(1, 4) && squared == Rational(1, 4), "t=0 forms agree at 1/4");
  o.require(*exact_degree_mn(dihedral_sampler(), 1, 1) == Rational(1, 4), "circle case equals 1/4");
  o.detail << "discrepancy: Z/4 gives " << z4.bruteforce << " vs ((1+t)/2)^2 = " << z4.squared_form << ", Z/6 gives "
           << z6.bruteforce << " vs " << z6.squared_form << "; (1+3t)/4 matches both; t=0 both give 1/4";
}

void criterion_13(Outcome& o) {
  const auto& corpus = testdata::group_corpus();
  const auto& tables = testdata::corpus_tables();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const Subgroup a = characteristic_abelian_subgroup(tables[i]);
    o.require(a.is_abelian() && a.is_normal(), corpus[i].name);
  }
  o.require(characteristic_abelian_subgroup(quaternion_group()) == center(quaternion_group()), "Q8");
  o.require(characteristic_abelian_subgroup(dihedral_group(4)) == center(dihedral_group(4)), "D8");
  const GroupTable h3 = heisenberg_group(3, 1);
  o.require(characteristic_abelian_subgroup(h3) == center(h3), "Heisenberg mod 3");
  o.detail << tables.size() << " groups abelian and normal; equals Z(G) on Q8, D8, Heisenberg mod 3";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"Q8 degree by three methods", criterion_1},
      {"Heisenberg degrees mod 2, 3, 5", criterion_2},
      {"three-way equality over the corpus", criterion_3},
      {"pushforward identity for m, n in 1..4", criterion_4},
      {"rationality witness", criterion_5},
      {"equalizer sums agree", criterion_6},
      {"tower monotonicity", criterion_7},
      {"non-straightness evidence", criterion_8},
      {"product law and partial products", criterion_9},
      {"Lie singularity criteria", criterion_10},
      {"Monte Carlo battery", criterion_11},
      {"inversion semidirect audit", criterion_12},
      {"characteristic abelian subgroup", criterion_13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << criteria.size() - std::size_t(failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures ? 1 : 0;
}
