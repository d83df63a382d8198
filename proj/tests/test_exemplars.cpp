#include "spectral/exemplars.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace spectral;
using testing_support::C;
using testing_support::Gen;
using testing_support::S;

TEST(Clifford, BaseCase) {
  const CliffordRep r = clifford_gammas(2);
  ASSERT_EQ(r.gammas.size(), 2u);
  EXPECT_EQ(r.gammas[0], pauli(1));
  EXPECT_EQ(r.gammas[1], pauli(2));
}

TEST(Clifford, ThreeGenerators) {
  // The chirality σ₁σ₂ = iσ₃ normalizes with phase −i... recorded as −σ₃.
  const CliffordRep r = clifford_gammas(3);
  ASSERT_EQ(r.gammas.size(), 3u);
  EXPECT_EQ(r.gammas[2], -pauli(3));
}

TEST(Clifford, RelationsUpToEight) {
  for (int d = 1; d <= 8; ++d) {
    const CliffordRep r = clifford_gammas(d);
    ASSERT_EQ(r.gammas.size(), static_cast<std::size_t>(d));
    EXPECT_EQ(r.side(), std::size_t{1} << (d / 2)) << d;
    const CMatrix two = CMatrix::scalar(r.side(), 2);
    for (int a = 0; a < d; ++a) {
      EXPECT_TRUE(is_hermitian(r.gammas[a]));
      for (int b = 0; b < d; ++b) {
        const CMatrix ac = anticommutator(r.gammas[a], r.gammas[b]);
        EXPECT_EQ(ac, a == b ? two : CMatrix(r.side())) << "d=" << d << " a=" << a << " b=" << b;
      }
    }
  }
  EXPECT_THROW(clifford_gammas(0), std::invalid_argument);
}

TEST(Clifford, ChiralityPhase) {
  for (int d = 2; d <= 8; d += 2) {
    const CliffordRep r = clifford_gammas(d);
    const Chirality ch = chirality(r.gammas, r.side());
    EXPECT_TRUE(is_hermitian_involution(ch.matrix));
    for (const auto& g : r.gammas) EXPECT_TRUE(anticommutator(g, ch.matrix).is_zero());
    const int m = d;
    const bool needs_i = (m * (m - 1) / 2) % 2 == 1;
    EXPECT_EQ(ch.phase, needs_i ? ExactComplex::i() : ExactComplex(1)) << d;
  }
}

TEST(PauliStrings, OrderAndCount) {
  const auto s = pauli_strings(2);
  ASSERT_EQ(s.size(), 16u);
  EXPECT_EQ(s[0], CMatrix::identity(4));
  EXPECT_EQ(s[1], kron(pauli(0), pauli(1)));
  EXPECT_EQ(s[4], kron(pauli(1), pauli(0)));
  EXPECT_EQ(s[15], kron(pauli(3), pauli(3)));
  EXPECT_EQ(pauli_strings(3).size(), 64u);
  EXPECT_EQ(pauli_strings(0).size(), 1u);
}

TEST(Exemplar, GeneratorCounts) {
  const int expected[8] = {0, 7, 6, 5, 4, 3, 2, 1};
  for (int n = 1; n < 8; ++n) EXPECT_EQ(exemplar_generator_count({n, Variant::Upper}), expected[n]);
}

TEST(Exemplar, DimensionZero) {
  const RealSpectralTriple t = build_exemplar(C("0_U"));
  EXPECT_EQ(t.hilbert_dim, 2u);
  EXPECT_EQ(t.dirac, pauli(1));
  EXPECT_EQ(t.grading.matrix(), pauli(3));
  EXPECT_EQ(extract_signs(t).signs(), S(1, 1, 1));
}

TEST(Exemplar, FourUpper) { EXPECT_EQ(extract_signs(build_exemplar(C("4_U"))).signs(), S(-1, 1, 1)); }

TEST(Exemplar, OneUpperIsOdd) {
  const RealSpectralTriple t = build_exemplar(C("1_U"));
  EXPECT_EQ(t.parity(), Parity::Odd);
  const ExtractedSigns s = extract_signs(t);
  EXPECT_EQ(s.eps, Sign::Plus);
  EXPECT_EQ(*s.eps_prime, Sign::Minus);
  EXPECT_EQ(s.eps_dprime, Sign::Minus);
}

TEST(Exemplar, EveryClassValidates) {
  const std::size_t dims[8] = {2, 8, 8, 4, 4, 2, 2, 1};
  for (const auto& c : all_classes()) {
    const RealSpectralTriple t = build_exemplar(c);
    EXPECT_EQ(validate(t).cls, c);
    EXPECT_EQ(t.hilbert_dim, dims[c.dim]) << c;
    EXPECT_EQ(t.metadata.at("class"), c.to_string());
    EXPECT_FALSE(t.dirac.is_zero());
  }
}

TEST(Exemplar, FirstMatchIsDeterministic) {
  for (const auto& c : all_classes()) EXPECT_EQ(build_exemplar(c), build_exemplar(c)) << c;
  EXPECT_EQ(&default_catalog(), &default_catalog());
  EXPECT_EQ(default_catalog().size(), 16u);
}

TEST(Exemplar, CoefficientIndependence) {
  Gen g(21);
  for (const auto& c : all_classes()) {
    if (c.dim == 0) continue;
    const int d = exemplar_generator_count(c);
    for (int trial = 0; trial < 3; ++trial) {
      // distinct positive rationals
      std::vector<Rational> p;
      Rational acc(0);
      for (int a = 0; a < d; ++a) {
        acc += Rational(g.integer(1, 5), g.integer(1, 4));
        p.push_back(acc);
      }
      const RealSpectralTriple t = build_exemplar(c, p);
      EXPECT_EQ(validate(t).cls, c);
      RealSpectralTriple swapped = build_exemplar(c);
      swapped.dirac = t.dirac;
      EXPECT_EQ(validate(swapped).cls, c);
    }
  }
  EXPECT_THROW(build_exemplar(C("3_U"), std::vector<Rational>{1, 2}), std::invalid_argument);
}

TEST(Exemplar, SearchMetadata) {
  const RealSpectralTriple t = build_exemplar(C("6_L"));
  EXPECT_EQ(t.metadata.at("clifford_generators"), "2");
  EXPECT_EQ(t.metadata.at("dirac_coefficients"), "1,2");
  EXPECT_EQ(t.metadata.at("real_structure_pauli").size(), 1u);
  EXPECT_TRUE(t.metadata.count("chirality_phase"));
}

TEST(FlatDirac, EuclideanGammas) {
  const auto g = euclidean_gammas_4d();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      EXPECT_EQ(anticommutator(g[a], g[b]), a == b ? CMatrix::scalar(4, 2) : CMatrix(4));
  EXPECT_EQ(g[0] * g[1] * g[2] * g[3], kron(pauli(3), pauli(0)));
}

TEST(FlatDirac, SignsAtFixedMomentum) {
  EXPECT_EQ(extract_signs(flat_dirac_4d({1, 2, 3, 4})).signs(), S(-1, 1, 1));
  EXPECT_EQ(extract_signs(flat_dirac_4d({1, 0, 0, 0})).signs(), S(-1, 1, 1));
  EXPECT_EQ(validate(flat_dirac_4d({1, 2, 3, 4})).cls, C("4_U"));
}

TEST(FlatDirac, RandomMomenta) {
  Gen g(404);
  for (int k = 0; k < 25; ++k) {
    std::array<Rational, 4> p{g.rational(), g.rational(), g.rational(), g.rational()};
    if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0 && sgn(p[3]) == 0) p[3] = 1;
    EXPECT_EQ(extract_signs(flat_dirac_4d(p)).signs(), S(-1, 1, 1));
  }
}

TEST(FlatDirac, SingleModeSymbolHasTheOtherSign) {
  // Without the partner mode at -p, J reverses the momentum and D flips sign under J.
  EXPECT_EQ(extract_signs(flat_dirac_symbol_4d({1, 2, 3, 4})).signs(), S(-1, -1, 1));
}

TEST(FlatDirac, ZeroMomentum) {
  EXPECT_THROW(flat_dirac_4d({0, 0, 0, 0}), ZeroMomentum);
  EXPECT_THROW(flat_dirac_symbol_4d({0, 0, 0, 0}), ZeroMomentum);
}
