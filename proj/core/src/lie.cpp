#include "commdeg/lie.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "commdeg/error.hpp"

namespace commdeg {

namespace {

constexpr double kOrderTolerance = 1e-9;
constexpr double kModulusTolerance = 1e-6;
constexpr double kDeterminantFloor = 1e-9;

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& a, std::uint64_t k) {
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

Eigen::MatrixXd rotation(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

std::uint64_t grid_order(int k) { return std::uint64_t(kAngleGrid / std::gcd(k, kAngleGrid)); }

double grid_angle(int k) { return 2.0 * std::numbers::pi * k / kAngleGrid; }

bool is_nontrivial_root(std::complex<double> lambda, std::uint64_t n, double tol) {
  std::complex<double> p = 1.0;
  for (std::uint64_t i = 0; i < n; ++i) p *= lambda;
  return std::abs(p - 1.0) < tol && std::abs(lambda - 1.0) >= tol;
}

}  // namespace

void validate(const LieElement& e) {
  const auto d = e.adjoint.rows();
  if (d == 0 || d != e.adjoint.cols()) throw Error(ErrorCode::InvalidArgument, e.label + ": adjoint must be square");
  if (std::size_t(d) > kMaxLieDimension)
    throw Error(ErrorCode::InvalidArgument, e.label + ": Lie algebra dimension exceeds 16");
  double scale = e.adjoint.cwiseAbs().maxCoeff();
  if (scale == 0.0 || std::abs((e.adjoint / scale).determinant()) <= kDeterminantFloor)
    throw Error(ErrorCode::InvalidArgument, e.label + ": adjoint is not invertible");
  if (e.declared_order) {
    if (*e.declared_order == 0) throw Error(ErrorCode::InvalidArgument, e.label + ": order must be positive");
    Eigen::MatrixXd p = matrix_power(e.adjoint, *e.declared_order);
    double err = (p - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err > kOrderTolerance)
      throw Error(ErrorCode::InvalidArgument,
                  e.label + ": adjoint^" + std::to_string(*e.declared_order) + " is not the identity");
  }
}

void validate(const LiePreset& p) {
  if (p.certificates.empty()) throw Error(ErrorCode::InvalidArgument, p.name + ": no certificates");
  std::vector<bool> seen(p.component_count, false);
  for (const LieElement& e : p.certificates) {
    validate(e);
    if (std::size_t(e.adjoint.rows()) != p.dim)
      throw Error(ErrorCode::InvalidArgument, e.label + ": adjoint dimension differs from the preset");
    if (e.component >= p.component_count)
      throw Error(ErrorCode::InvalidArgument, e.label + ": component index out of range");
    seen[e.component] = true;
  }
  for (std::size_t c = 0; c < seen.size(); ++c)
    if (!seen[c]) throw Error(ErrorCode::InvalidArgument, p.name + ": no certificate for component " + std::to_string(c));
}

std::string LiePreset::component_name(std::size_t c) const {
  if (c < component_names.size()) return component_names[c];
  return "component " + std::to_string(c);
}

LiePreset torus_preset(std::size_t d) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnknownPreset, "torus dimension must be 1..3");
  LiePreset p{"torus", d, 1, {}, "Ad is the identity on an abelian group; every spectrum is {1}.", {}};
  for (int k = 0; k < kAngleGrid; ++k)
    p.certificates.push_back({Eigen::MatrixXd::Identity(Eigen::Index(d), Eigen::Index(d)), grid_order(k),
                              "t=" + std::to_string(k) + "/360", 0});
  return p;
}

LiePreset continuous_dihedral_preset() {
  LiePreset p{"continuous-dihedral", 1, 2, {},
              "Ad is +1 on the identity component and -1 on the flip component, where every element has order 2.", {}};
  p.component_names = {"identity", "flip"};
  Eigen::MatrixXd plus = Eigen::MatrixXd::Constant(1, 1, 1.0);
  Eigen::MatrixXd minus = Eigen::MatrixXd::Constant(1, 1, -1.0);
  for (int k = 0; k < kAngleGrid; ++k)
    p.certificates.push_back({plus, grid_order(k), "(" + std::to_string(k) + "/360,+1)", 0});
  for (int k = 0; k < kAngleGrid; ++k)
    p.certificates.push_back({minus, std::uint64_t{2}, "flip (" + std::to_string(k) + "/360,-1)", 1});
  return p;
}

LiePreset so3_preset() {
  LiePreset p{"so3", 3, 1, {},
              "Every rotation is conjugate to a z-rotation and Ad is the rotation itself, so every spectrum is "
              "{1, e^{it}, e^{-it}}; the eigenvalue 1 always blocks total singularity.", {}};
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d diag(1.0, 1.0, 1.0);
  for (int k = 0; k < kAngleGrid; ++k)
    p.certificates.push_back({rotation(z, grid_angle(k)), grid_order(k), "Rz(" + std::to_string(k) + "/360)", 0});
  for (int k = 0; k < kAngleGrid; ++k)
    p.certificates.push_back({rotation(diag, grid_angle(k)), grid_order(k), "R111(" + std::to_string(k) + "/360)", 0});
  return p;
}

LiePreset su2_preset() {
  LiePreset p{"su2", 3, 1, {},
              "Every unit quaternion is conjugate to cos t + k sin t, whose adjoint is the rotation by 2t; the "
              "eigenvalue 1 always blocks total singularity.", {}};
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  for (int k = 0; k < kAngleGrid; ++k)
    p.certificates.push_back(
        {rotation(z, 2.0 * grid_angle(k)), grid_order(k), "exp(k " + std::to_string(k) + "/360)", 0});
  return p;
}

LiePreset lie_preset(const std::string& name, std::size_t dim) {
  if (name == "torus") return torus_preset(dim);
  if (name == "continuous-dihedral" || name == "dihedral") return continuous_dihedral_preset();
  if (name == "so3") return so3_preset();
  if (name == "su2") return su2_preset();
  throw Error(ErrorCode::UnknownPreset, "unknown Lie preset '" + name + "'");
}

std::vector<std::complex<double>> adjoint_eigenvalues(const LieElement& e) {
  if (e.adjoint.rows() != e.adjoint.cols() || std::size_t(e.adjoint.rows()) > kMaxLieDimension)
    throw Error(ErrorCode::InvalidArgument, e.label + ": adjoint must be square with dimension <= 16");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(e.adjoint, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NonConvergence, e.label + ": eigensolver failed");
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    std::complex<double> l = solver.eigenvalues()[i];
    if (std::abs(std::abs(l) - 1.0) > kModulusTolerance)
      throw Error(ErrorCode::ModulusViolation, e.label + ": eigenvalue modulus " + std::to_string(std::abs(l)));
    out.push_back(l);
  }
  return out;
}

bool is_singular(const LieElement& e, std::uint64_t n, double tol) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  for (auto l : adjoint_eigenvalues(e))
    if (is_nontrivial_root(l, n, tol)) return true;
  return false;
}

TotalSingularity total_singularity(const LieElement& e, std::uint64_t n, double tol) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  for (auto l : adjoint_eigenvalues(e))
    if (!is_nontrivial_root(l, n, tol)) return TotalSingularity::No;
  if (!e.declared_order) return TotalSingularity::Indeterminate;
  return n % *e.declared_order == 0 ? TotalSingularity::Yes : TotalSingularity::No;
}

bool is_totally_singular(const LieElement& e, std::uint64_t n, double tol) {
  return total_singularity(e, n, tol) == TotalSingularity::Yes;
}

Eigen::MatrixXd alpha_matrix(const LieElement& e, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const auto d = e.adjoint.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(d, d);
  for (std::uint64_t m = 0; m < n; ++m) {
    sum += term;
    term = term * e.adjoint;
  }
  return sum;
}

bool singular_via_alpha(const LieElement& e, std::uint64_t n, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(alpha_matrix(e, n));
  double smallest = svd.singularValues().minCoeff();
  return smallest < tol * double(n);
}

StraightnessVerdict straightness_verdict(const LiePreset& p, std::uint64_t n, double tol) {
  StraightnessVerdict v;
  v.caveat = "verdict is relative to the " + std::to_string(p.certificates.size()) + " supplied certificates of '" +
             p.name + "'";
  for (const LieElement& e : p.certificates) {
    switch (total_singularity(e, n, tol)) {
      case TotalSingularity::Yes:
        v.witnesses.push_back({e.label, n, "g^" + std::to_string(n) +
                                               " = 1 and every Ad eigenvalue is a root of unity of order dividing " +
                                               std::to_string(n) + ", other than 1"});
        break;
      case TotalSingularity::Indeterminate:
        v.notes.push_back(e.label + ": spectrum qualifies but the order is unknown (indeterminate)");
        break;
      case TotalSingularity::No:
        break;
    }
  }
  v.straight = v.witnesses.empty();
  return v;
}

}  // namespace commdeg
