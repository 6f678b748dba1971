#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commdeg/action.hpp"
#include "commdeg/group_spec.hpp"
#include "commdeg/lie.hpp"
#include "commdeg/tower.hpp"

namespace commdeg {

// Group documents mirror GroupSpec: {"kind": "cayley" | "permgen" |
// "matmodgen" | "preset" | "product" | "semidirect" | "quotient", ...}.
// Permutations are 0-based image arrays, Cayley tables and matrices are
// row-major, matrices carry a "mod" field.
GroupSpec parse_group_spec(std::string_view json_text);
std::string to_json(const GroupSpec& spec, int indent = 2);

/// {"group": <group>, "action": "table" | "conjugation" | "regular" |
/// "trivial", "setSize": k, "table": [[...] per element],
/// "groupWeights": ["p/q", ...], "pointWeights": ["p/q", ...]}.
/// Missing weights mean uniform.
struct ActionDocument {
  FiniteAction action;
  Distribution group_measure;
  std::vector<Rational> point_weights;
};
ActionDocument parse_action(std::string_view json_text, const BuildOptions& options = {});

/// {"levels": [<group>, ...], "bonds": [[image of each element], ...]} with
/// bonds[k] mapping level k+1 onto level k.
Tower parse_tower(std::string_view json_text, const BuildOptions& options = {});

/// {"name": ..., "dim": d, "componentCount": c, "certificates": [{"label":
/// ..., "component": i, "adjoint": [["1", "0"], ...], "declaredOrder": k |
/// "unknown"}]}. Matrix entries are decimal strings.
LiePreset parse_lie_preset(std::string_view json_text);

std::string read_file(const std::filesystem::path& path);

}  // namespace commdeg
