#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace commdeg {

inline constexpr double kDefaultLieTolerance = 1e-9;
inline constexpr std::size_t kMaxLieDimension = 16;

/// An element of a compact Lie group seen through its adjoint matrix.
struct LieElement {
  Eigen::MatrixXd adjoint;
  std::optional<std::uint64_t> declared_order;  // nullopt: unknown
  std::string label;
  std::size_t component = 0;
};

/// Checks squareness, dimension <= 16, invertibility and, for a finite
/// declared order k, that adjoint^k is within 1e-9 of the identity.
void validate(const LieElement& e);

/// Finite certificate list standing in for a compact Lie group.
struct LiePreset {
  std::string name;
  std::size_t dim = 0;
  std::size_t component_count = 1;
  std::vector<LieElement> certificates;
  /// Why the certificates cover every eigenvalue pattern that matters.
  std::string coverage_note;
  std::vector<std::string> component_names;  // optional, one per component

  std::string component_name(std::size_t c) const;
};

void validate(const LiePreset& p);

/// Number of grid angles 2*pi*k/360 per parametrised family.
inline constexpr int kAngleGrid = 360;

/// T^d, d in 1..3. Every adjoint is the identity.
LiePreset torus_preset(std::size_t d);
/// The circle extended by {1,-1} acting by inversion.
LiePreset continuous_dihedral_preset();
LiePreset so3_preset();
LiePreset su2_preset();
/// "torus" (dim 1..3), "continuous-dihedral", "so3", "su2".
LiePreset lie_preset(const std::string& name, std::size_t dim = 1);

std::vector<std::complex<double>> adjoint_eigenvalues(const LieElement& e);

bool is_singular(const LieElement& e, std::uint64_t n, double tol = kDefaultLieTolerance);

enum class TotalSingularity { No, Yes, Indeterminate };

/// Indeterminate when the spectrum qualifies but the element's order is
/// unknown; the adjoint cannot recover it because it kills the centre.
TotalSingularity total_singularity(const LieElement& e, std::uint64_t n, double tol = kDefaultLieTolerance);
bool is_totally_singular(const LieElement& e, std::uint64_t n, double tol = kDefaultLieTolerance);

/// Sum of (Ad g)^m for m = 0..n-1.
Eigen::MatrixXd alpha_matrix(const LieElement& e, std::uint64_t n);
bool singular_via_alpha(const LieElement& e, std::uint64_t n, double tol = kDefaultLieTolerance);

struct Witness {
  std::string label;
  std::uint64_t n;
  std::string reason;
};

struct StraightnessVerdict {
  bool straight = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;  // indeterminate certificates
  std::string caveat;
};

StraightnessVerdict straightness_verdict(const LiePreset& p, std::uint64_t n, double tol = kDefaultLieTolerance);

}  // namespace commdeg
