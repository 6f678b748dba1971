#include "commdeg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commdeg/error.hpp"

namespace commdeg {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("field '") + key + "': " + e.what());
  }
}

GroupSpecPtr spec_from(const json& j);

GroupSpec spec_value(const json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "cayley") {
    CayleySpec s{get<std::vector<std::vector<Element>>>(j, "table"), {}};
    if (j.contains("labels")) s.labels = get<std::vector<std::string>>(j, "labels");
    return {s};
  }
  if (kind == "permgen")
    return {PermGenSpec{get<std::size_t>(j, "degree"), get<std::vector<std::vector<std::uint32_t>>>(j, "generators")}};
  if (kind == "matmodgen")
    return {MatModGenSpec{get<std::uint32_t>(j, "mod"), get<std::size_t>(j, "dim"),
                          get<std::vector<std::vector<std::int64_t>>>(j, "generators")}};
  if (kind == "preset") {
    PresetSpec s{get<std::string>(j, "name"), {}};
    if (j.contains("params")) s.params = get<std::map<std::string, std::int64_t>>(j, "params");
    return {s};
  }
  if (kind == "product") return {ProductSpec{spec_from(field(j, "left")), spec_from(field(j, "right"))}};
  if (kind == "semidirect")
    return {SemidirectSpec{spec_from(field(j, "normal")), spec_from(field(j, "acting")),
                           get<std::vector<std::vector<Element>>>(j, "action")}};
  if (kind == "quotient")
    return {QuotientSpec{spec_from(field(j, "group")), get<std::vector<Element>>(j, "normal")}};
  throw Error(ErrorCode::Parse, "unknown group kind '" + kind + "'");
}

GroupSpecPtr spec_from(const json& j) { return std::make_shared<const GroupSpec>(spec_value(j)); }

json spec_to_json(const GroupSpec& spec) {
  struct Visitor {
    json operator()(const CayleySpec& s) const {
      json j{{"kind", "cayley"}, {"table", s.table}};
      if (!s.labels.empty()) j["labels"] = s.labels;
      return j;
    }
    json operator()(const PermGenSpec& s) const {
      return {{"kind", "permgen"}, {"degree", s.degree}, {"generators", s.generators}};
    }
    json operator()(const MatModGenSpec& s) const {
      return {{"kind", "matmodgen"}, {"mod", s.modulus}, {"dim", s.dimension}, {"generators", s.generators}};
    }
    json operator()(const PresetSpec& s) const {
      json j{{"kind", "preset"}, {"name", s.name}};
      if (!s.params.empty()) j["params"] = s.params;
      return j;
    }
    json operator()(const ProductSpec& s) const {
      return {{"kind", "product"}, {"left", spec_to_json(*s.left)}, {"right", spec_to_json(*s.right)}};
    }
    json operator()(const SemidirectSpec& s) const {
      return {{"kind", "semidirect"},
              {"normal", spec_to_json(*s.normal)},
              {"acting", spec_to_json(*s.acting)},
              {"action", s.action}};
    }
    json operator()(const QuotientSpec& s) const {
      return {{"kind", "quotient"}, {"group", spec_to_json(*s.group)}, {"normal", s.normal}};
    }
  };
  return std::visit(Visitor{}, spec.node);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::Parse, "weights must be \"p/q\" strings or integers");
}

std::vector<Rational> rationals_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "weights must be an array");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from(v));
  return out;
}

double real_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw Error(ErrorCode::Parse, "matrix entries must be decimal strings");
  const auto s = j.get<std::string>();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::Parse, "bad matrix entry '" + s + "'");
  return v;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view json_text) { return spec_value(parse_json(json_text)); }

std::string to_json(const GroupSpec& spec, int indent) { return spec_to_json(spec).dump(indent); }

ActionDocument parse_action(std::string_view json_text, const BuildOptions& options) {
  const json j = parse_json(json_text);
  GroupTable g = build_group(spec_value(field(j, "group")), options);
  const std::string kind = j.contains("action") ? get<std::string>(j, "action") : "table";
  std::optional<FiniteAction> action;
  if (kind == "conjugation") {
    action = conjugation_action(g);
  } else if (kind == "regular") {
    action = regular_action(g);
  } else if (kind == "trivial") {
    action = trivial_action(g, get<std::size_t>(j, "setSize"));
  } else if (kind == "table") {
    const auto rows = get<std::vector<std::vector<Point>>>(j, "table");
    const auto k = get<std::size_t>(j, "setSize");
    if (rows.size() != g.order()) throw Error(ErrorCode::InvalidAction, "need one table row per group element");
    std::vector<Point> flat;
    for (const auto& r : rows) {
      if (r.size() != k) throw Error(ErrorCode::InvalidAction, "table row length differs from setSize");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    action.emplace(g, k, std::move(flat));
  } else {
    throw Error(ErrorCode::Parse, "unknown action kind '" + kind + "'");
  }
  Distribution mu = j.contains("groupWeights") ? Distribution(g, rationals_from(j.at("groupWeights"))) : haar(g);
  std::vector<Rational> nu = j.contains("pointWeights") ? rationals_from(j.at("pointWeights"))
                                                        : uniform_point_weights(action->set_size());
  return {std::move(*action), std::move(mu), std::move(nu)};
}

Tower parse_tower(std::string_view json_text, const BuildOptions& options) {
  const json j = parse_json(json_text);
  const json& levels_json = field(j, "levels");
  if (!levels_json.is_array() || levels_json.empty()) throw Error(ErrorCode::Parse, "'levels' must be a non-empty array");
  std::vector<GroupTable> levels;
  for (const auto& l : levels_json) levels.push_back(build_group(spec_value(l), options));
  const auto images = j.contains("bonds") ? get<std::vector<std::vector<Element>>>(j, "bonds")
                                          : std::vector<std::vector<Element>>{};
  if (images.size() + 1 != levels.size()) throw Error(ErrorCode::Parse, "need one bond per adjacent level pair");
  std::vector<Homomorphism> bonds;
  for (std::size_t k = 0; k < images.size(); ++k) bonds.emplace_back(levels[k + 1], levels[k], images[k]);
  return {std::move(levels), std::move(bonds)};
}

LiePreset parse_lie_preset(std::string_view json_text) {
  const json j = parse_json(json_text);
  LiePreset p;
  p.name = j.contains("name") ? get<std::string>(j, "name") : "custom";
  p.dim = get<std::size_t>(j, "dim");
  p.component_count = j.contains("componentCount") ? get<std::size_t>(j, "componentCount") : 1;
  p.coverage_note = "user-supplied certificates";
  if (j.contains("componentNames")) p.component_names = get<std::vector<std::string>>(j, "componentNames");
  for (const auto& c : field(j, "certificates")) {
    LieElement e;
    e.label = c.contains("label") ? get<std::string>(c, "label") : "cert" + std::to_string(p.certificates.size());
    e.component = c.contains("component") ? get<std::size_t>(c, "component") : 0;
    const json& rows = field(c, "adjoint");
    if (!rows.is_array() || rows.size() != p.dim) throw Error(ErrorCode::Parse, e.label + ": adjoint must have dim rows");
    e.adjoint.resize(Eigen::Index(p.dim), Eigen::Index(p.dim));
    for (std::size_t r = 0; r < p.dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != p.dim)
        throw Error(ErrorCode::Parse, e.label + ": adjoint rows must have dim entries");
      for (std::size_t col = 0; col < p.dim; ++col) e.adjoint(Eigen::Index(r), Eigen::Index(col)) = real_from(rows[r][col]);
    }
    const json& order = field(c, "declaredOrder");
    if (order.is_string() && order.get<std::string>() == "unknown") {
      e.declared_order = std::nullopt;
    } else if (order.is_number_unsigned() || order.is_number_integer()) {
      e.declared_order = order.get<std::uint64_t>();
    } else {
      throw Error(ErrorCode::Parse, e.label + ": declaredOrder must be an integer or \"unknown\"");
    }
    p.certificates.push_back(std::move(e));
  }
  validate(p);
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace commdeg
