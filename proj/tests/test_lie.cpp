#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "commdeg/error.hpp"
#include "commdeg/lie.hpp"

using namespace commdeg;

namespace {

LieElement rotation2(double turns, std::optional<std::uint64_t> order, std::string label = "r") {
  const double t = 2 * std::numbers::pi * turns;
  Eigen::MatrixXd m(2, 2);
  m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return {m, order, std::move(label), 0};
}

LieElement scalar(double v, std::optional<std::uint64_t> order) {
  return {Eigen::MatrixXd::Constant(1, 1, v), order, "scalar", 0};
}

}  // namespace

TEST(LieElement, Validation) {
  EXPECT_NO_THROW(validate(rotation2(0.25, 4)));
  EXPECT_THROW(validate(rotation2(0.25, 3)), Error);
  EXPECT_THROW(validate(scalar(0.0, std::nullopt)), Error);
  EXPECT_THROW(validate(LieElement{Eigen::MatrixXd::Identity(2, 3), 1, "rect", 0}), Error);
  EXPECT_THROW(validate(LieElement{Eigen::MatrixXd::Identity(17, 17), 1, "big", 0}), Error);
  EXPECT_NO_THROW(validate(scalar(-1.0, std::nullopt)));
}

TEST(LieElement, EigenvaluesOnTheUnitCircle) {
  auto ev = adjoint_eigenvalues(rotation2(0.125, 8));
  ASSERT_EQ(ev.size(), 2U);
  for (auto l : ev) EXPECT_NEAR(std::abs(l), 1.0, 1e-12);
  try {
    adjoint_eigenvalues(scalar(2.0, std::nullopt));
    FAIL() << "expected ModulusViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModulusViolation);
  }
}

TEST(Singularity, RootOfUnityCriterion) {
  // Quarter turn: eigenvalues +-i are 4th roots of unity, not square roots.
  EXPECT_TRUE(is_singular(rotation2(0.25, 4), 4));
  EXPECT_FALSE(is_singular(rotation2(0.25, 4), 2));
  EXPECT_TRUE(is_singular(scalar(-1.0, 2), 2));
  EXPECT_FALSE(is_singular(scalar(1.0, 1), 5));
  EXPECT_THROW(is_singular(scalar(1.0, 1), 0), Error);
}

TEST(Singularity, TotalSingularityNeedsOrderDividingN) {
  EXPECT_EQ(total_singularity(scalar(-1.0, 2), 2), TotalSingularity::Yes);
  EXPECT_EQ(total_singularity(scalar(-1.0, 2), 3), TotalSingularity::No);
  EXPECT_EQ(total_singularity(scalar(-1.0, 2), 4), TotalSingularity::Yes);
  // Spectrum {-1} but the element could have order 4 (e.g. in SU(2)).
  EXPECT_EQ(total_singularity(scalar(-1.0, 4), 2), TotalSingularity::No);
  EXPECT_EQ(total_singularity(scalar(-1.0, std::nullopt), 2), TotalSingularity::Indeterminate);
  EXPECT_EQ(total_singularity(rotation2(0.25, 4), 4), TotalSingularity::Yes);
  EXPECT_EQ(total_singularity(rotation2(0.0, 1), 4), TotalSingularity::No);
}

TEST(Singularity, AlphaOperatorAgrees) {
  for (int k = 0; k < 24; ++k) {
    LieElement e = rotation2(k / 24.0, 24 / std::gcd(k, 24));
    for (std::uint64_t n = 1; n <= 8; ++n) EXPECT_EQ(is_singular(e, n), singular_via_alpha(e, n)) << k << " " << n;
  }
  Eigen::MatrixXd a = alpha_matrix(scalar(-1.0, 2), 2);
  EXPECT_NEAR(a(0, 0), 0.0, 1e-15);
}

TEST(Presets, AllValidate) {
  for (const char* name : {"continuous-dihedral", "so3", "su2"}) EXPECT_NO_THROW(validate(lie_preset(name)));
  for (std::size_t d = 1; d <= 3; ++d) EXPECT_NO_THROW(validate(lie_preset("torus", d)));
  EXPECT_THROW(lie_preset("torus", 4), Error);
  EXPECT_THROW(lie_preset("g2"), Error);
}

TEST(Presets, ComponentNames) {
  const LiePreset p = continuous_dihedral_preset();
  EXPECT_EQ(p.component_name(1), "flip");
  EXPECT_EQ(so3_preset().component_name(0), "component 0");
}

TEST(Verdicts, ContinuousDihedralIsNotTwoStraight) {
  const LiePreset p = continuous_dihedral_preset();
  StraightnessVerdict v = straightness_verdict(p, 2);
  EXPECT_FALSE(v.straight);
  ASSERT_FALSE(v.witnesses.empty());
  for (const auto& w : v.witnesses) EXPECT_NE(w.label.find("flip"), std::string::npos);
  EXPECT_TRUE(straightness_verdict(p, 3).straight);
}

TEST(Verdicts, CompactConnectedGroupsAreStraight) {
  for (std::uint64_t n : {2, 3}) EXPECT_TRUE(straightness_verdict(so3_preset(), n).straight);
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::size_t d = 1; d <= 3; ++d) EXPECT_TRUE(straightness_verdict(torus_preset(d), n).straight);
  EXPECT_TRUE(straightness_verdict(su2_preset(), 2).straight);
}

TEST(Verdicts, UnknownOrderIsReportedNotGuessed) {
  LiePreset p{"custom", 1, 1, {scalar(-1.0, std::nullopt)}, "", {}};
  StraightnessVerdict v = straightness_verdict(p, 2);
  EXPECT_TRUE(v.straight);
  EXPECT_EQ(v.notes.size(), 1U);
}
