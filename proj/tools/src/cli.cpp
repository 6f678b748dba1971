#include "commdeg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "commdeg/action.hpp"
#include "commdeg/degree.hpp"
#include "commdeg/error.hpp"
#include "commdeg/group_spec.hpp"
#include "commdeg/io.hpp"
#include "commdeg/lie.hpp"
#include "commdeg/sampler.hpp"
#include "commdeg/tower.hpp"

namespace commdeg {

namespace {

struct RunConfig {
  std::string group_file;
  std::string preset;
  std::optional<std::int64_t> p, param_n, depth, dim;
  std::uint64_t m = 1;
  std::optional<std::uint64_t> n;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string csv;
  std::size_t order_cap = kDefaultOrderCap;
  double tol = kDefaultLieTolerance;
  unsigned threads = 0;
  std::optional<std::uint64_t> straight_n;
  std::string selector = "trivial";
};

// Output sink: the human table goes to `out` unless CSV is sent to stdout.
class Report {
 public:
  Report(const RunConfig& c, std::ostream& out) {
    if (c.csv == "-") {
      csv_ = &out;
      table_ = &null_;
    } else {
      table_ = &out;
      if (!c.csv.empty()) {
        file_.open(c.csv);
        if (!file_) throw Error(ErrorCode::Parse, "cannot write " + c.csv);
        csv_ = &file_;
      }
    }
    null_.setstate(std::ios::badbit);
  }

  std::ostream& table() { return *table_; }
  bool has_csv() const { return csv_ != nullptr; }
  void csv_row(const std::vector<std::string>& cells) {
    if (!csv_) return;
    for (std::size_t i = 0; i < cells.size(); ++i) *csv_ << (i ? "," : "") << cells[i];
    *csv_ << '\n';
  }

 private:
  std::ostream* table_ = nullptr;
  std::ostream* csv_ = nullptr;
  std::ofstream file_;
  std::ostringstream null_;
};

std::string approx(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(10) << r.to_double();
  return s.str();
}

std::string approx(double d) {
  std::ostringstream s;
  s << std::setprecision(10) << d;
  return s.str();
}

std::string num_str(const Rational& r) { return r.num().str(); }
std::string den_str(const Rational& r) { return r.den().str(); }

BuildOptions build_options(const RunConfig& c) { return BuildOptions{c.order_cap}; }

CountOptions count_options(const RunConfig& c) {
  unsigned w = c.threads ? c.threads : std::max(1U, std::thread::hardware_concurrency());
  return CountOptions{c.order_cap, w};
}

std::map<std::string, std::int64_t> preset_params(const RunConfig& c) {
  std::map<std::string, std::int64_t> params;
  if (c.p) params["p"] = *c.p;
  if (c.param_n) params["n"] = *c.param_n;
  if (c.depth) params["depth"] = *c.depth;
  if (c.dim) params["dim"] = *c.dim;
  return params;
}

void require_one_source(const RunConfig& c) {
  if (c.group_file.empty() == c.preset.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --group FILE or --preset NAME");
}

std::string group_name(const RunConfig& c) {
  if (!c.group_file.empty()) return std::filesystem::path(c.group_file).filename().string();
  std::string name = c.preset;
  auto params = preset_params(c);
  if (!params.empty()) {
    name += "(";
    bool first = true;
    for (const auto& [k, v] : params) {
      name += (first ? "" : ";") + k + "=" + std::to_string(v);
      first = false;
    }
    name += ")";
  }
  return name;
}

GroupTable load_group(const RunConfig& c) {
  require_one_source(c);
  if (!c.group_file.empty()) return build_group(parse_group_spec(read_file(c.group_file)), build_options(c));
  return build_preset(c.preset, preset_params(c), build_options(c));
}

const std::vector<std::string> kDegreeColumns{"group", "order", "method", "num", "den", "approx"};

void degree_row(Report& r, const std::string& group, std::size_t order, std::string_view method, const Rational& v) {
  r.csv_row({group, std::to_string(order), std::string(method), num_str(v), den_str(v), approx(v)});
  r.table() << "  " << std::left << std::setw(16) << method << std::setw(14) << v.str() << approx(v) << '\n';
}

int cmd_degree(const RunConfig& c, std::ostream& out) {
  const GroupTable g = load_group(c);
  const std::string name = group_name(c);
  Report r(c, out);
  r.csv_row(kDegreeColumns);
  r.table() << "group " << name << ", order " << g.order() << '\n';
  const DegreeReport reports[] = {degree_bruteforce(g, count_options(c)), degree_centralizer_sum(g),
                                  degree_structural(g)};
  for (const auto& rep : reports) degree_row(r, name, g.order(), to_string(rep.method), rep.value);
  const bool agree = reports[0].value == reports[1].value && reports[1].value == reports[2].value;
  if (!agree) {
    r.table() << "cross-check FAILED: methods disagree\n";
    return kExitCrossCheck;
  }
  r.table() << "d(G) = " << reports[0].value << " by all three methods\n";
  return kExitOk;
}

std::uint64_t exponent_n(const RunConfig& c) { return c.n.value_or(1); }

void check_exponents(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "m and n must be at least 1");
}

int cmd_degree_mn(const RunConfig& c, std::ostream& out) {
  const std::uint64_t m = c.m, n = exponent_n(c);
  check_exponents(m, n);
  const GroupTable g = load_group(c);
  const std::string name = group_name(c);
  Report r(c, out);
  r.csv_row(kDegreeColumns);
  r.table() << "group " << name << ", order " << g.order() << ", m=" << m << " n=" << n << '\n';
  const DegreeReport a = degree_mn(g, m, n, count_options(c));
  const DegreeReport b = degree_mn_pushforward(g, m, n);
  degree_row(r, name, g.order(), to_string(a.method), a.value);
  degree_row(r, name, g.order(), to_string(b.method), b.value);
  if (a.value != b.value) {
    r.table() << "cross-check FAILED: methods disagree\n";
    return kExitCrossCheck;
  }
  r.table() << "P([x^" << m << ", y^" << n << "] = 1) = " << a.value << '\n';
  return kExitOk;
}

SubgroupSelector parse_selector(const std::string& s) {
  if (s == "trivial") return SubgroupSelector::Trivial;
  if (s == "center") return SubgroupSelector::Center;
  if (s == "commutator") return SubgroupSelector::Commutator;
  throw Error(ErrorCode::InvalidArgument, "unknown selector '" + s + "' (trivial, center, commutator)");
}

Tower load_tower(const RunConfig& c) {
  require_one_source(c);
  if (!c.group_file.empty()) return parse_tower(read_file(c.group_file), build_options(c));
  const unsigned depth = unsigned(c.depth.value_or(2));
  if (depth < 1 || depth > kMaxPresetTowerDepth)
    throw Error(ErrorCode::InvalidArgument, "--depth must be 1.." + std::to_string(kMaxPresetTowerDepth));
  const auto opts = build_options(c);
  const std::uint64_t p = std::uint64_t(c.p.value_or(2));
  if (c.preset == "heisenberg" || c.preset == "heisenberg-mod") return heisenberg_tower(p, depth, opts);
  if (c.preset == "elementary") return elementary_tower(p, depth, opts);
  if (c.preset == "cyclic") return cyclic_tower(p, depth, opts);
  if (c.preset == "q8-power") return power_tower(quaternion_group(), depth, opts);
  if (c.preset == "d4-power") return power_tower(dihedral_group(4), depth, opts);
  throw Error(ErrorCode::UnknownPreset,
              "unknown tower preset '" + c.preset + "' (heisenberg, elementary, cyclic, q8-power, d4-power)");
}

int cmd_tower(const RunConfig& c, std::ostream& out) {
  const std::uint64_t m = c.m, n = exponent_n(c);
  check_exponents(m, n);
  const Tower t = load_tower(c);
  const std::string name = group_name(c);
  Report r(c, out);
  r.csv_row(kDegreeColumns);
  TowerOptions opts;
  opts.count = count_options(c);
  const TowerReport rep = tower_degrees(t, m, n, opts);
  r.table() << "tower " << name << ", " << t.depth() << " levels, m=" << m << " n=" << n << '\n';
  std::string joined;
  for (std::size_t k = 0; k < rep.degrees.size(); ++k) {
    const std::string level = name + " level " + std::to_string(k + 1);
    r.csv_row({level, std::to_string(rep.level_orders[k]), "bruteforce", num_str(rep.degrees[k]),
               den_str(rep.degrees[k]), approx(rep.degrees[k])});
    r.table() << "  level " << k + 1 << "  order " << std::left << std::setw(8) << rep.level_orders[k]
              << std::setw(14) << rep.degrees[k].str() << approx(rep.degrees[k]) << '\n';
    joined += (k ? ", " : "") + rep.degrees[k].str();
  }
  r.table() << "degrees: " << joined << '\n';
  r.table() << "antitone: " << (rep.is_antitone ? "OK" : "VIOLATED") << '\n';
  if (rep.stabilized_value) r.table() << "stabilized at " << *rep.stabilized_value << '\n';

  if (c.straight_n) {
    const StraightnessReport s = straightness_fraction(t, *c.straight_n, parse_selector(c.selector));
    r.table() << "straightness, n=" << *c.straight_n << ", H = " << c.selector << '\n';
    for (std::size_t k = 0; k < s.fractions.size(); ++k)
      r.table() << "  level " << k + 1 << "  fraction " << std::left << std::setw(10) << s.fractions[k].str()
                << "index " << s.indices[k] << '\n';
    if (s.non_straight_evidence)
      r.table() << "fraction constant while the index grows: evidence against " << *c.straight_n << "-straightness\n";
    else if (s.vanishing)
      r.table() << "fraction shrinking with depth\n";
    else
      r.table() << "no trend over the last two levels\n";
  }
  return kExitOk;
}

LiePreset load_lie(const RunConfig& c) {
  require_one_source(c);
  if (!c.group_file.empty()) return parse_lie_preset(read_file(c.group_file));
  return lie_preset(c.preset, std::size_t(c.dim.value_or(1)));
}

int cmd_straight(const RunConfig& c, std::ostream& out) {
  const std::uint64_t n = c.n ? *c.n : c.param_n ? std::uint64_t(*c.param_n) : 2;
  check_exponents(1, n);
  const LiePreset lp = load_lie(c);
  Report r(c, out);
  r.csv_row({"preset", "n", "label", "component", "verdict"});
  const StraightnessVerdict v = straightness_verdict(lp, n, c.tol);
  if (v.straight) {
    r.table() << lp.name << ": n-straight (n=" << n << ")\n";
    r.csv_row({lp.name, std::to_string(n), "", "", "straight"});
  } else {
    // Report the first witness per component.
    std::vector<bool> reported(lp.component_count, false);
    std::vector<std::string> lines;
    for (const Witness& w : v.witnesses) {
      auto it = std::find_if(lp.certificates.begin(), lp.certificates.end(),
                             [&](const LieElement& e) { return e.label == w.label; });
      const std::size_t comp = it == lp.certificates.end() ? 0 : it->component;
      r.csv_row({lp.name, std::to_string(n), w.label, lp.component_name(comp), "totally-singular"});
      if (reported[comp]) continue;
      reported[comp] = true;
      if (lines.empty())
        r.table() << lp.name << ": NOT n-straight (n=" << n << "); witness: " << lp.component_name(comp)
                  << " component\n";
      lines.push_back("  " + w.label + ": " + w.reason);
    }
    for (const auto& l : lines) r.table() << l << '\n';
    r.table() << "  " << v.witnesses.size() << " totally singular certificates\n";
  }
  for (const auto& note : v.notes) r.table() << "  note: " << note << '\n';
  r.table() << "  " << v.caveat << '\n';
  return kExitOk;
}

bool is_continuous_preset(const RunConfig& c) {
  return c.preset == "torus" || c.preset == "continuous-dihedral" || c.preset == "so3" || c.preset == "su2" ||
         (c.preset == "dihedral" && !c.param_n);
}

int cmd_estimate(const RunConfig& c, std::ostream& out) {
  const std::uint64_t m = c.m, n = exponent_n(c);
  check_exponents(m, n);
  require_one_source(c);
  SamplerPreset sp = is_continuous_preset(c) ? sampler_preset(c.preset == "dihedral" ? "continuous-dihedral" : c.preset,
                                                               std::size_t(c.dim.value_or(1)))
                                             : finite_sampler(load_group(c), group_name(c));
  const std::string name = sp.kind == PresetKind::Finite ? sp.name : c.preset;
  const Estimate e = estimate_degree_mn(sp, m, n, c.trials, c.seed, count_options(c).workers);
  Report r(c, out);
  r.csv_row({"preset", "m", "n", "trials", "seed", "mean", "stderr", "exact_num", "exact_den"});
  r.csv_row({name, std::to_string(m), std::to_string(n), std::to_string(e.trials), std::to_string(e.seed),
             approx(e.mean), approx(e.std_error), e.exact ? num_str(*e.exact) : "",
             e.exact ? den_str(*e.exact) : ""});
  r.table() << "estimate " << name << ", m=" << m << " n=" << n << ", " << e.trials << " trials, seed " << e.seed
            << '\n';
  r.table() << "  mean    " << approx(e.mean) << "  (" << e.successes << " commuting pairs)\n";
  r.table() << "  stderr  " << approx(e.std_error) << '\n';
  if (e.exact) {
    r.table() << "  exact   " << *e.exact << "  (" << approx(*e.exact) << ")\n";
    r.table() << "  deviation " << approx(deviation_sigmas(e)) << " sigma\n";
    if (sp.kind == PresetKind::Finite && bridge_status(e) != BridgeStatus::Ok)
      r.table() << "  warning: estimate is " << (bridge_status(e) == BridgeStatus::Flagged ? "flagged" : "off")
                << " against the exact value\n";
  }
  return kExitOk;
}

std::string element_name(const GroupTable& g, Element e) {
  return g.has_labels() ? g.label(e) : std::to_string(e);
}

std::string member_list(const Subgroup& h, std::size_t limit = 16) {
  std::string s = "{";
  std::size_t i = 0;
  for (Element e : h.members()) {
    if (i == limit) {
      s += ", ...";
      break;
    }
    s += (i ? ", " : "") + element_name(h.parent(), e);
    ++i;
  }
  return s + "}";
}

int cmd_info(const RunConfig& c, std::ostream& out) {
  const GroupTable g = load_group(c);
  const std::string name = group_name(c);
  Report r(c, out);
  const Subgroup z = center(g);
  const ConjugacyClasses classes = conjugacy_classes(g);
  const Subgroup d = commutator_subgroup(g);
  const Subgroup a = characteristic_abelian_subgroup(g);
  std::map<std::size_t, std::size_t> class_sizes;
  for (const auto& cl : classes) ++class_sizes[cl.size()];
  std::string sizes;
  for (const auto& [size, count] : class_sizes)
    sizes += (sizes.empty() ? "" : " ") + std::to_string(size) + "x" + std::to_string(count);

  r.csv_row({"group", "order", "abelian", "exponent", "center", "classes", "commutator", "char_abelian"});
  r.csv_row({name, std::to_string(g.order()), g.is_abelian() ? "yes" : "no", std::to_string(exponent(g)),
             std::to_string(z.size()), std::to_string(classes.size()), std::to_string(d.size()),
             std::to_string(a.size())});
  auto& t = r.table();
  t << "group " << name << '\n';
  t << "  order             " << g.order() << '\n';
  t << "  abelian           " << (g.is_abelian() ? "yes" : "no") << '\n';
  t << "  exponent          " << exponent(g) << '\n';
  t << "  center            order " << z.size() << ' ' << member_list(z) << '\n';
  t << "  classes           " << classes.size() << " (size x count: " << sizes << ")\n";
  t << "  commutator G'     order " << d.size() << ' ' << member_list(d) << '\n';
  t << "  A_G = Z(Z(G',G))  order " << a.size() << ' ' << member_list(a) << '\n';
  return kExitOk;
}

int cmd_fubini(const RunConfig& c, std::ostream& out) {
  if (c.group_file.empty()) throw Error(ErrorCode::InvalidArgument, "fubini needs --group ACTION_FILE");
  const ActionDocument doc = parse_action(read_file(c.group_file), build_options(c));
  const Rational via_points = equalizer_prob_via_points(doc.action, doc.group_measure, doc.point_weights);
  const Rational via_group = equalizer_prob_via_group(doc.action, doc.group_measure, doc.point_weights);
  Report r(c, out);
  r.csv_row({"action", "set_size", "method", "num", "den", "approx"});
  const std::string name = group_name(c);
  const std::string k = std::to_string(doc.action.set_size());
  r.csv_row({name, k, "via_points", num_str(via_points), den_str(via_points), approx(via_points)});
  r.csv_row({name, k, "via_group", num_str(via_group), den_str(via_group), approx(via_group)});
  r.table() << "action " << name << ", " << orbits(doc.action).size() << " orbits on " << k << " points\n";
  r.table() << "  via points  " << via_points << '\n';
  r.table() << "  via group   " << via_group << '\n';
  if (via_points != via_group) {
    r.table() << "cross-check FAILED: the two sums differ\n";
    return kExitCrossCheck;
  }
  r.table() << "equalizer probability " << via_points << '\n';
  return kExitOk;
}

int cmd_audit(const RunConfig& c, std::ostream& out) {
  std::vector<std::size_t> ns{1, 2, 3, 4, 5, 6};
  if (c.param_n) ns = {std::size_t(*c.param_n)};
  Report r(c, out);
  r.csv_row({"n", "order", "bruteforce", "t", "linear_form", "squared_form", "matches_linear", "matches_squared"});
  r.table() << "Z/n x| {1,-1}, inversion action; t = mass of the 2-torsion of Z/n\n";
  r.table() << std::left << std::setw(4) << "n" << std::setw(7) << "order" << std::setw(12) << "bruteforce"
            << std::setw(6) << "t" << std::setw(14) << "(1+3t)/4" << "((1+t)/2)^2\n";
  bool all_linear = true;
  for (std::size_t n : ns) {
    const auto a = audit_inversion_semidirect(n);
    all_linear = all_linear && a.matches_linear;
    r.csv_row({std::to_string(n), std::to_string(a.order), a.bruteforce.str(), a.two_torsion_mass.str(),
               a.linear_form.str(), a.squared_form.str(), a.matches_linear ? "yes" : "no",
               a.matches_squared ? "yes" : "no"});
    r.table() << std::left << std::setw(4) << n << std::setw(7) << a.order << std::setw(12) << a.bruteforce.str()
              << std::setw(6) << a.two_torsion_mass.str() << std::setw(14)
              << (a.linear_form.str() + (a.matches_linear ? " =" : " x")) << a.squared_form.str()
              << (a.matches_squared ? " =" : " x") << '\n';
    if (!a.matches_squared)
      r.table() << "  discrepancy at n=" << n << ": brute force " << a.bruteforce << " differs from ((1+t)/2)^2 = "
                << a.squared_form << '\n';
  }
  return all_linear ? kExitOk : kExitCrossCheck;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::AntitoneViolation: return kExitCrossCheck;
    case ErrorCode::NonConvergence:
    case ErrorCode::ModulusViolation: return kExitNumeric;
    default: return kExitInput;
  }
}

// CLI11 cannot tell "--n" from "-n"; the preset parameter is renamed first.
std::vector<std::string> rewrite_preset_n(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (a == "--n")
      out.push_back("--param-n");
    else if (a.rfind("--n=", 0) == 0)
      out.push_back("--param-n=" + a.substr(4));
    else
      out.push_back(a);
  }
  return out;
}

void add_input_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--group", c.group_file, "input JSON file");
  sub->add_option("--preset", c.preset, "preset name");
  sub->add_option("--p", c.p, "prime parameter");
  sub->add_option("--param-n", c.param_n, "size parameter of the preset (also accepted as --n)");
  sub->add_option("--depth", c.depth, "depth parameter");
  sub->add_option("--dim", c.dim, "dimension parameter");
  sub->add_option("--csv", c.csv, "write CSV to FILE ('-' for stdout)");
  sub->add_option("--order-cap", c.order_cap, "largest group order to build")->check(CLI::PositiveNumber);
  sub->add_option("--threads", c.threads, "worker threads (0: all cores)");
}

void add_power_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("-m", c.m, "power applied to x")->check(CLI::PositiveNumber);
  sub->add_option("-n", c.n, "power applied to y")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact commuting probabilities of finite, profinite and compact groups", "commdeg"};
  app.require_subcommand(1);

  auto* degree = app.add_subcommand("degree", "d(G) by brute force, centralizer sum and cosets of the centre");
  add_input_options(degree, c);

  auto* degree_mn_cmd = app.add_subcommand("degree-mn", "P([x^m, y^n] = 1) two ways");
  add_input_options(degree_mn_cmd, c);
  add_power_options(degree_mn_cmd, c);

  auto* tower = app.add_subcommand("tower", "degrees along a tower of finite quotients");
  add_input_options(tower, c);
  add_power_options(tower, c);
  tower->add_option("--straight-n", c.straight_n, "also report the fraction of g with g^n in H")
      ->check(CLI::PositiveNumber);
  tower->add_option("--selector", c.selector, "H at each level: trivial, center or commutator");

  auto* straight = app.add_subcommand("straight", "n-straightness verdict for a compact Lie group");
  add_input_options(straight, c);
  straight->add_option("-n", c.n, "exponent")->check(CLI::PositiveNumber);
  straight->add_option("--tol", c.tol, "eigenvalue tolerance")->check(CLI::PositiveNumber);

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of P([x^m, y^n] = 1)");
  add_input_options(estimate, c);
  add_power_options(estimate, c);
  estimate->add_option("--trials", c.trials, "number of sampled pairs")->check(CLI::Range(100.0, 1e18));
  estimate->add_option("--seed", c.seed, "random seed");

  auto* info = app.add_subcommand("info", "order, centre, classes, G' and A_G");
  add_input_options(info, c);

  auto* fubini = app.add_subcommand("fubini", "equalizer probability of a finite action, summed two ways");
  add_input_options(fubini, c);

  auto* audit = app.add_subcommand("audit", "brute-force audit of Z/n x| {1,-1}");
  add_input_options(audit, c);

  std::vector<std::string> argv = rewrite_preset_n(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (degree->parsed()) return cmd_degree(c, out);
    if (degree_mn_cmd->parsed()) return cmd_degree_mn(c, out);
    if (tower->parsed()) return cmd_tower(c, out);
    if (straight->parsed()) return cmd_straight(c, out);
    if (estimate->parsed()) return cmd_estimate(c, out);
    if (info->parsed()) return cmd_info(c, out);
    if (fubini->parsed()) return cmd_fubini(c, out);
    if (audit->parsed()) return cmd_audit(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace commdeg
