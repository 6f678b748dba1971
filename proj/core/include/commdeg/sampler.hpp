#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commdeg/group.hpp"
#include "commdeg/rational.hpp"

namespace commdeg {

/// Counter-based generator: (seed, stream) fixes the whole output sequence,
/// so trial i can draw from stream i on any worker.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in [0, bound) without modulo bias.
  std::uint64_t below(std::uint64_t bound);
  double gaussian();

 private:
  std::uint64_t state_;
};

struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  double norm() const;
};

enum class PresetKind { Torus, Dihedral, SO3, SU2, Finite, Product };

/// A compact group the sampler can draw Haar-distributed elements from.
struct SamplerPreset {
  PresetKind kind = PresetKind::Torus;
  std::string name;
  std::size_t dim = 1;                 // torus dimension
  std::optional<GroupTable> finite;    // Finite only
  std::vector<SamplerPreset> factors;  // Product only
};

SamplerPreset torus_sampler(std::size_t dim);
SamplerPreset dihedral_sampler();
SamplerPreset so3_sampler();
SamplerPreset su2_sampler();
SamplerPreset finite_sampler(GroupTable g, std::string name);
SamplerPreset product_sampler(std::vector<SamplerPreset> factors);

/// "torus" (dim), "continuous-dihedral", "so3", "su2".
SamplerPreset sampler_preset(const std::string& name, std::size_t dim = 1);

/// Angles are fixed-point fractions of a full turn (value / 2^64), so torus
/// arithmetic mod 1 is exact integer wrap-around.
struct SampledElement {
  PresetKind kind = PresetKind::Torus;
  std::vector<std::uint64_t> angles;  // Torus: one per coordinate; Dihedral: one
  int sign = 1;                       // Dihedral
  Quaternion q;                       // SO3 and SU2 (SO3 reads q up to sign)
  Element index = 0;                  // Finite
  std::vector<SampledElement> components;  // Product

  double turns(std::size_t i = 0) const;
};

/// Element i of the result is drawn from stream i.
std::vector<SampledElement> sample(const SamplerPreset& preset, std::size_t count, std::uint64_t seed);
SampledElement sample_one(const SamplerPreset& preset, StreamRng& rng);

SampledElement power(const SamplerPreset& preset, const SampledElement& x, std::uint64_t m);

/// Exact structural test of [x^m, y^n] = 1 for the preset.
bool commutes(const SamplerPreset& preset, const SampledElement& x, const SampledElement& y, std::uint64_t m,
              std::uint64_t n);

struct Estimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<Rational> exact;
};

/// Closed-form value of the commuting probability, when the preset has one.
std::optional<Rational> exact_degree_mn(const SamplerPreset& preset, std::uint64_t m, std::uint64_t n);

/// Bernoulli estimate over `trials` pairs; trial i draws x then y from stream
/// i. The result does not depend on `workers`.
Estimate estimate_degree_mn(const SamplerPreset& preset, std::uint64_t m, std::uint64_t n, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers = 1);

Estimate estimate_finite(const GroupTable& g, std::uint64_t m, std::uint64_t n, std::uint64_t trials,
                         std::uint64_t seed, unsigned workers = 1);

enum class BridgeStatus { Ok, Flagged, Failed };

/// Ok below 4 sigma, Flagged between 4 and 6, Failed beyond 6. With zero
/// standard error any difference fails.
BridgeStatus bridge_status(const Estimate& e);
/// |mean - exact| / stderr, or 0 when they agree exactly.
double deviation_sigmas(const Estimate& e);

}  // namespace commdeg
