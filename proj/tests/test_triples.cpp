#include "spectral/exemplars.hpp"
#include "spectral/json_io.hpp"
#include "spectral/triple.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace spectral;
using testing_support::C;
using testing_support::S;

namespace {

// H = C², D = σ₁, J = cc, γ = σ₃, A = scalars.
RealSpectralTriple two_point() {
  RealSpectralTriple t;
  t.hilbert_dim = 2;
  t.algebra_gens = {CMatrix::identity(2)};
  t.dirac = pauli(1);
  t.real_structure = AntiUnitary(CMatrix::identity(2));
  t.grading = Grading::nontrivial(pauli(3));
  return t;
}

}  // namespace

TEST(AntiUnitary, CompositionRules) {
  const AntiUnitary j(pauli(2));
  EXPECT_EQ(j.square(), pauli(2) * conj_entrywise(pauli(2)));
  EXPECT_EQ(j.square(), -CMatrix::identity(2));
  EXPECT_EQ(j.after(pauli(2)).linear_part(), pauli(2) * (-pauli(2)));
  EXPECT_EQ(j.before(pauli(3)).linear_part(), pauli(3) * pauli(2));
  EXPECT_EQ(kron(j, AntiUnitary(pauli(1))).linear_part(), kron(pauli(2), pauli(1)));
}

TEST(Grading, Kinds) {
  const Grading g = Grading::nontrivial(pauli(3));
  EXPECT_TRUE(g.is_nontrivial());
  EXPECT_THROW(g.label(), OddTriple);
  const Grading o = Grading::trivial(Sign::Minus);
  EXPECT_EQ(o.parity(), Parity::Odd);
  EXPECT_EQ(o.label(), Sign::Minus);
  EXPECT_THROW(o.matrix(), OddTriple);
  EXPECT_FALSE(Grading::from_matrix(-CMatrix::identity(2), Sign::Plus).is_nontrivial());
  EXPECT_TRUE(Grading::from_matrix(pauli(3), Sign::Plus).is_nontrivial());
}

TEST(ExtractSigns, TwoPointSpace) {
  const ExtractedSigns s = extract_signs(two_point());
  ASSERT_TRUE(s.determinate());
  EXPECT_EQ(s.signs(), S(1, 1, 1));
  EXPECT_EQ(validate(two_point()).cls, C("0_U"));
}

TEST(ExtractSigns, ZeroDiracIsIndeterminate) {
  RealSpectralTriple t = two_point();
  t.dirac = CMatrix(2);
  const ExtractedSigns s = extract_signs(t);
  EXPECT_FALSE(s.determinate());
  EXPECT_THROW(s.signs(), IndeterminateSign);
  const Validation v = validate(t);
  EXPECT_TRUE(v.ambiguous);
  EXPECT_EQ(v.candidates.size(), 2u);
}

TEST(ExtractSigns, NeitherSign) {
  RealSpectralTriple t = two_point();
  t.dirac = pauli(1) + pauli(2);  // cc maps σ₂ to −σ₂, so neither sign holds
  t.grading = Grading::trivial(Sign::Plus);
  try {
    extract_signs(t);
    FAIL() << "expected NotASignRelation";
  } catch (const NotASignRelation& e) {
    EXPECT_EQ(e.relation(), "JD = eps' DJ");
  }
}

TEST(ExtractSigns, StableUnderScaling) {
  for (const auto& c : all_classes()) {
    RealSpectralTriple t = build_exemplar(c);
    const KOSigns before = extract_signs(t).signs();
    t.dirac = t.dirac * ExactComplex(Rational(-5, 3));
    EXPECT_EQ(extract_signs(t).signs(), before) << c;
  }
}

TEST(Structure, CorruptedGrading) {
  RealSpectralTriple t = two_point();
  t.grading = Grading::nontrivial(pauli(1));
  try {
    validate(t);
    FAIL() << "expected StructuralViolation";
  } catch (const StructuralViolation& e) {
    EXPECT_EQ(e.invariant(), "{D, gamma} = 0");
  }
}

TEST(Structure, NamedInvariants) {
  RealSpectralTriple t = two_point();
  t.dirac = pauli(2) * ExactComplex::i();
  EXPECT_THROW(check_structure(t), StructuralViolation);

  t = two_point();
  t.grading = Grading::nontrivial(CMatrix::identity(2));
  try {
    check_structure(t);
    FAIL();
  } catch (const StructuralViolation& e) {
    EXPECT_EQ(e.invariant(), "gamma != +-I");
  }

  t = two_point();
  t.real_structure = AntiUnitary(CMatrix::identity(2) * ExactComplex(2));
  try {
    check_structure(t);
    FAIL();
  } catch (const StructuralViolation& e) {
    EXPECT_EQ(e.invariant(), "J unitary linear part");
  }

  t = two_point();
  t.algebra_gens.push_back(pauli(1));  // does not commute with γ
  try {
    check_structure(t);
    FAIL();
  } catch (const StructuralViolation& e) {
    EXPECT_EQ(e.invariant(), "[pi(a), gamma] = 0");
  }

  t = two_point();
  t.hilbert_dim = 3;
  EXPECT_THROW(check_structure(t), StructuralViolation);
}

TEST(Flip, ExemplarsChangeVariant) {
  EXPECT_EQ(validate(flip_real_structure(build_exemplar(C("2_U")))).cls, C("2_L"));
  EXPECT_EQ(validate(flip_real_structure(build_exemplar(C("4_U")))).cls, C("4_L"));
  for (int n = 0; n < 8; n += 2) {
    const RealSpectralTriple t = build_exemplar({n, Variant::Upper});
    const RealSpectralTriple f = flip_real_structure(t);
    EXPECT_EQ(extract_signs(f).signs(), flip_variant(extract_signs(t).signs()));
    EXPECT_EQ(validate(f).cls, (KOClass{n, Variant::Lower}));
    EXPECT_EQ(flip_real_structure(f).real_structure, t.real_structure);
  }
  EXPECT_THROW(flip_real_structure(build_exemplar(C("3_U"))), OddTriple);
}

TEST(Json, TripleRoundTrip) {
  for (const auto& c : all_classes()) {
    const RealSpectralTriple t = build_exemplar(c);
    const Json j = triple_to_json(t);
    const RealSpectralTriple back = triple_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, t) << c;
    EXPECT_EQ(back.metadata, t.metadata);
    EXPECT_EQ(triple_to_json(back), j);
  }
}

TEST(Json, MatrixEntriesAreExactStrings) {
  const Json j = matrix_to_json(pauli(2) * ExactComplex(Rational(1, 3)));
  EXPECT_EQ(j[0][1], "0-1/3 i");
  EXPECT_EQ(matrix_from_json(j), pauli(2) * ExactComplex(Rational(1, 3)));
}

TEST(Json, SchemaErrors) {
  EXPECT_THROW(triple_from_json(Json::object()), ParseError);
  Json j = triple_to_json(two_point());
  j["grading"]["kind"] = "sideways";
  EXPECT_THROW(triple_from_json(j), ParseError);
  j = triple_to_json(two_point());
  j["dirac"][0][0] = 1.5;
  EXPECT_THROW(triple_from_json(j), ParseError);
  EXPECT_THROW(signs_from_json(Json{{"eps", 2}, {"eps_prime", 1}, {"eps_dprime", 1}}), ParseError);
}
