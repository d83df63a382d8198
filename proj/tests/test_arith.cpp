#include "spectral/exact_complex.hpp"
#include "spectral/matrix.hpp"
#include "spectral/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace spectral;
using testing_support::Gen;

namespace {

const ExactComplex I = ExactComplex::i();

}  // namespace

TEST(ExactComplex, FieldOperations) {
  const ExactComplex a(Rational(1, 2), Rational(-3, 4));
  const ExactComplex b(2, 1);
  EXPECT_EQ(a + b, ExactComplex(Rational(5, 2), Rational(1, 4)));
  EXPECT_EQ(a - b, ExactComplex(Rational(-3, 2), Rational(-7, 4)));
  // (1/2 - 3/4 i)(2 + i) = 1 + 1/2 i - 3/2 i + 3/4 = 7/4 - i
  EXPECT_EQ(a * b, ExactComplex(Rational(7, 4), -1));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(I * I, ExactComplex(-1));
  EXPECT_EQ(a.conj(), ExactComplex(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(b.norm(), Rational(5));
}

TEST(ExactComplex, AddProductMatchesMultiply) {
  Gen g(11);
  for (int k = 0; k < 50; ++k) {
    ExactComplex acc = g.complex();
    const ExactComplex x = g.complex(), y = g.complex();
    const ExactComplex expected = acc + x * y;
    acc.add_product(x, y);
    EXPECT_EQ(acc, expected);
  }
}

TEST(ExactComplex, TextRoundTrip) {
  EXPECT_EQ(ExactComplex(Rational(1, 2), Rational(-3, 4)).to_string(), "1/2-3/4 i");
  EXPECT_EQ(ExactComplex(0).to_string(), "0+0 i");
  EXPECT_EQ(ExactComplex::parse("-7/3"), ExactComplex(Rational(-7, 3)));
  EXPECT_EQ(ExactComplex::parse("2/5 i"), ExactComplex(0, Rational(2, 5)));
  EXPECT_EQ(ExactComplex::parse("-1+1/2 i"), ExactComplex(-1, Rational(1, 2)));
  Gen g(3);
  for (int k = 0; k < 100; ++k) {
    const ExactComplex z = g.complex();
    EXPECT_EQ(ExactComplex::parse(z.to_string()), z);
  }
  EXPECT_THROW(ExactComplex::parse("one"), ParseError);
  EXPECT_THROW(ExactComplex::parse("1/0"), ParseError);
  EXPECT_THROW(ExactComplex::parse(""), ParseError);
}

TEST(Matrix, KronOfIdentities) { EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4)); }

TEST(Matrix, KronBlocks) {
  // kron(σ₁, σ₃) has blocks [[0, σ₃], [σ₃, 0]]
  const CMatrix expected{0, 0, 1, 0,   //
                         0, 0, 0, -1,  //
                         1, 0, 0, 0,   //
                         0, -1, 0, 0};
  EXPECT_EQ(kron(pauli(1), pauli(3)), expected);
}

TEST(Matrix, KronAssociativeAndBilinear) {
  Gen g(5);
  for (int k = 0; k < 20; ++k) {
    const CMatrix a = g.matrix(2), b = g.matrix(2), c = g.matrix(2), d = g.matrix(2);
    const ExactComplex s = g.complex();
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    EXPECT_EQ(kron({a, b, c}), kron(a, kron(b, c)));
    EXPECT_EQ(kron(a + d, b), kron(a, b) + kron(d, b));
    EXPECT_EQ(kron(a * s, b), kron(a, b * s));
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Matrix, Dagger) {
  EXPECT_EQ(dagger(CMatrix::identity(3)), CMatrix::identity(3));
  EXPECT_EQ(dagger(pauli(2)), pauli(2));
  Gen g(7);
  for (int k = 0; k < 20; ++k) {
    const CMatrix a = g.matrix(3), b = g.matrix(2);
    EXPECT_EQ(dagger(dagger(a)), a);
    EXPECT_EQ(dagger(kron(a, b)), kron(dagger(a), dagger(b)));
  }
}

TEST(Matrix, EntrywiseConjugate) {
  EXPECT_EQ(conj_entrywise(pauli(2)), -pauli(2));
  EXPECT_EQ(conj_entrywise(pauli(1)), pauli(1));
  EXPECT_EQ(conj_entrywise(CMatrix::scalar(2, I)), CMatrix::scalar(2, -I));
  Gen g(9);
  for (int k = 0; k < 20; ++k) {
    const CMatrix a = g.matrix(3), b = g.matrix(3);
    EXPECT_EQ(conj_entrywise(a * b), conj_entrywise(a) * conj_entrywise(b));
  }
}

TEST(Matrix, PauliAlgebra) {
  for (int a = 1; a <= 3; ++a) {
    EXPECT_TRUE(is_hermitian_involution(pauli(a)));
    for (int b = a + 1; b <= 3; ++b) EXPECT_TRUE(anticommutator(pauli(a), pauli(b)).is_zero());
  }
  EXPECT_EQ(pauli(1) * pauli(2), pauli(3) * I);
  EXPECT_EQ(power(pauli(2), 0), CMatrix::identity(2));
  EXPECT_EQ(power(pauli(2), 3), pauli(2));
}

TEST(Matrix, Predicates) {
  EXPECT_TRUE(is_unitary(pauli(2) * I));
  EXPECT_FALSE(is_unitary(pauli(1) * ExactComplex(2)));
  EXPECT_FALSE(is_hermitian(pauli(2) * I));
  EXPECT_FALSE(is_hermitian_involution(CMatrix{1, 1, 1, 1}));
  EXPECT_TRUE(CMatrix::identity(4).is_identity());
  EXPECT_EQ(pauli(1).nonzero_count(), 2u);
}

TEST(Matrix, MatchSign) {
  const auto m = match_sign(pauli(1), -pauli(1));
  EXPECT_FALSE(m.plus);
  EXPECT_TRUE(m.minus);
  const auto z = match_sign(CMatrix(2), CMatrix(2));
  EXPECT_TRUE(z.plus && z.minus);
  const auto none = match_sign(pauli(1), pauli(3));
  EXPECT_FALSE(none.plus || none.minus);
}

TEST(Matrix, RatioTo) {
  EXPECT_EQ(*(pauli(2) * I).ratio_to(pauli(2)), I);
  EXPECT_FALSE(pauli(1).ratio_to(pauli(3)).has_value());
  EXPECT_FALSE(pauli(1).ratio_to(CMatrix(2)).has_value());
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW((CMatrix{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(CMatrix(2) * CMatrix(3), std::invalid_argument);
}
