#include "spectral/dga.hpp"
#include "spectral/json_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace spectral;

namespace {

bool axiom_holds(const DgaReport& r, const std::string& axiom) {
  for (const auto& c : r.checks)
    if (c.axiom == axiom) return c.holds;
  ADD_FAILURE() << "no axiom " << axiom;
  return false;
}

StarDGA twisted() {
  StarDGA t = exterior_example();
  t.star(2, 2) = -1;
  return t;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

TEST(Exterior, Valid) {
  const StarDGA a = exterior_example();
  const DgaReport r = validate_dga(a);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.global_signs, std::vector<Sign>{Sign::Plus});
  EXPECT_EQ(a.degrees, (std::vector<int>{0, 0, 1}));
}

TEST(Exterior, Products) {
  const StarDGA a = exterior_example();
  const GradedElement x = a.basis(1), dx = a.basis(2);
  EXPECT_TRUE(is_zero(a.multiply(x, x)));
  EXPECT_TRUE(is_zero(a.multiply(x, dx)));
  EXPECT_TRUE(is_zero(a.multiply(dx, dx)));
  EXPECT_EQ(a.multiply(a.basis(0), x), x);
  EXPECT_EQ(a.apply_d(x), dx);
  EXPECT_TRUE(is_zero(a.apply_d(dx)));
  EXPECT_EQ(a.degree(dx), 1);
  EXPECT_FALSE(a.degree(x + dx).has_value());
  EXPECT_FALSE(a.degree(a.zero()).has_value());
}

TEST(Exterior, StarIsAntilinear) {
  const StarDGA a = exterior_example();
  const GradedElement y = ExactComplex(0, 1) * a.basis(1);
  EXPECT_EQ(a.apply_star(y), ExactComplex(0, -1) * a.basis(1));
}

TEST(Twisted, NegativeSign) {
  const DgaReport r = validate_dga(twisted());
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.global_signs, std::vector<Sign>{Sign::Minus});
}

TEST(Trivial, BothSigns) {
  const DgaReport r = validate_dga(trivial_algebra());
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.global_signs.size(), 2u);
}

TEST(Faults, DegreeAdditivity) {
  StarDGA a = exterior_example();
  a.c(1, 1, 2) = 1;  // x·x = dx
  const DgaReport r = validate_dga(a);
  EXPECT_FALSE(r.valid());
  EXPECT_FALSE(axiom_holds(r, "degree additivity"));
}

TEST(Faults, DSquared) {
  StarDGA a({"1", "x", "y", "z"}, {0, 0, 1, 2}, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    a.c(0, i, i) = 1;
    a.c(i, 0, i) = 1;
    a.star(i, i) = 1;
  }
  a.diff(2, 1) = 1;
  a.diff(3, 2) = 1;
  EXPECT_FALSE(axiom_holds(validate_dga(a), "d^2 = 0"));
}

TEST(Faults, StarNotInvolutive) {
  StarDGA a = exterior_example();
  a.star(1, 1) = 2;
  EXPECT_FALSE(axiom_holds(validate_dga(a), "star involutive"));
}

TEST(Faults, Leibniz) {
  StarDGA a = exterior_example();
  a.diff(2, 0) = 1;  // d1 = dx breaks d(1·1) = d1·1 + 1·d1
  EXPECT_FALSE(validate_dga(a).valid());
}

TEST(Tensor, ExteriorSquared) {
  const StarDGA e = exterior_example();
  for (auto k : {KozulConvention::First, KozulConvention::Second}) {
    const StarDGA t = dga_tensor(e, e, k);
    ASSERT_EQ(t.size(), 9u);
    const DgaReport r = validate_dga(t);
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.global_signs, std::vector<Sign>{Sign::Plus});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t.degrees[i * 3 + j], e.degrees[i] + e.degrees[j]);
    EXPECT_EQ(t.degree(t.basis(1 * 3 + 2)), 1);  // x ⊗ dx
    EXPECT_EQ(t.unit, 0u);
  }
}

TEST(Tensor, DifferentialSigns) {
  const StarDGA e = exterior_example();
  // the Koszul sign lands on whichever factor d passes over
  const StarDGA first = dga_tensor(e, e, KozulConvention::First);
  const StarDGA second = dga_tensor(e, e, KozulConvention::Second);
  const std::size_t dx_x = 2 * 3 + 1, x_dx = 1 * 3 + 2, dx_dx = 2 * 3 + 2;
  EXPECT_EQ(first.apply_d(first.basis(dx_x)), ExactComplex(-1) * first.basis(dx_dx));
  EXPECT_EQ(second.apply_d(second.basis(dx_x)), second.basis(dx_dx));
  EXPECT_EQ(first.apply_d(first.basis(x_dx)), first.basis(dx_dx));
  EXPECT_EQ(second.apply_d(second.basis(x_dx)), ExactComplex(-1) * second.basis(dx_dx));
}

TEST(Tensor, TwistedSquaredKeepsSign) {
  for (auto k : {KozulConvention::First, KozulConvention::Second})
    EXPECT_EQ(validate_dga(dga_tensor(twisted(), twisted(), k)).global_signs, std::vector<Sign>{Sign::Minus});
}

TEST(Tensor, SignMismatch) {
  for (auto k : {KozulConvention::First, KozulConvention::Second}) {
    EXPECT_THROW(dga_tensor(exterior_example(), twisted(), k), SignMismatch);
    EXPECT_THROW(dga_tensor(twisted(), exterior_example(), k), SignMismatch);
  }
}

TEST(Tensor, RejectsInvalidInput) {
  StarDGA bad = exterior_example();
  bad.c(1, 1, 2) = 1;
  EXPECT_THROW(dga_tensor(bad, exterior_example(), KozulConvention::First), StructuralViolation);
}

TEST(Tensor, UnitAlgebra) {
  const StarDGA e = exterior_example();
  for (auto k : {KozulConvention::First, KozulConvention::Second}) {
    EXPECT_TRUE(isomorphic_via(dga_tensor(e, trivial_algebra(), k), e, identity_map(3)));
    EXPECT_TRUE(isomorphic_via(dga_tensor(trivial_algebra(), e, k), e, identity_map(3)));
  }
}

TEST(Tensor, Reassociation) {
  const StarDGA e = exterior_example();
  EXPECT_EQ(reassociation_map(2, 3, 4), identity_map(24));
  for (auto k : {KozulConvention::First, KozulConvention::Second}) {
    const StarDGA l = dga_tensor(dga_tensor(e, e, k), e, k);
    const StarDGA r = dga_tensor(e, dga_tensor(e, e, k), k);
    EXPECT_TRUE(isomorphic_via(l, r, reassociation_map(3, 3, 3)));
  }
}

TEST(Iso, RejectsNonBijection) {
  const StarDGA e = exterior_example();
  EXPECT_FALSE(isomorphic_via(e, e, {0, 0, 2}));
  EXPECT_FALSE(isomorphic_via(e, e, {0, 2, 1}));  // degrees differ
  EXPECT_FALSE(isomorphic_via(e, twisted(), identity_map(3)));
}

TEST(Json, RoundTrip) {
  const StarDGA t = dga_tensor(twisted(), twisted(), KozulConvention::Second);
  const StarDGA back = dga_from_json(Json::parse(dga_to_json(t).dump()));
  EXPECT_EQ(back.labels, t.labels);
  EXPECT_EQ(back.degrees, t.degrees);
  EXPECT_TRUE(isomorphic_via(t, back, identity_map(t.size())));
}

TEST(Json, SchemaErrors) {
  EXPECT_THROW(dga_from_json(Json::object()), ParseError);
  Json j = dga_to_json(exterior_example());
  j["unit"] = 7;
  EXPECT_THROW(dga_from_json(j), ParseError);
}
