#include "spectral/products.hpp"

#include <string>

namespace spectral {

bool ProductReport::passed() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

namespace {

// Only the grading relation is needed to assemble a product; JD may legitimately
// fail on the inputs of a mixed-variant witness.
Sign eps_dprime_of(const RealSpectralTriple& t) {
  if (!t.grading.is_nontrivial()) return t.grading.label();
  const CMatrix& m = t.real_structure.linear_part();
  const CMatrix& g = t.grading.matrix();
  const auto s = relation_sign(m * conj_entrywise(g), g * m, "J gamma = eps'' gamma J");
  if (!s) throw NotASignRelation("J gamma = eps'' gamma J");
  return *s;
}

// conj(γ)^{(1−ε″)/2}: the linear part that J∘γ contributes.
CMatrix grading_insertion(const RealSpectralTriple& t, Sign other_eps_dprime) {
  if (minus_bit(other_eps_dprime) == 0) return CMatrix::identity(t.hilbert_dim);
  return conj_entrywise(t.grading.matrix());
}

std::vector<CMatrix> product_generators(const RealSpectralTriple& ti, const RealSpectralTriple& tj,
                                        std::size_t tail) {
  std::vector<CMatrix> out;
  out.reserve(ti.algebra_gens.size() * tj.algebra_gens.size());
  for (const auto& a : ti.algebra_gens)
    for (const auto& b : tj.algebra_gens) out.push_back(tail ? kron({a, b, CMatrix::identity(tail)}) : kron(a, b));
  return out;
}

struct FactorInfo {
  KOClass cls;
  KOSigns signs;
};

FactorInfo inspect_factor(const RealSpectralTriple& t, const char* which) {
  const Validation v = validate(t);
  if (v.ambiguous) throw IndeterminateSign(std::string(which) + " factor has D = 0, so eps' is undetermined");
  return {v.cls, v.signs.signs()};
}

void record_structure(ProductReport& r) {
  for (const auto& c : structural_checks(r.result)) r.checks["structure: " + c.invariant] = c.holds;
  check_structure(r.result);
}

Sign odd_upper_label(Sign eps, Sign eps_prime) {
  for (const KOClass& c : all_classes()) {
    if (c.parity() != Parity::Odd || c.variant != Variant::Upper) continue;
    const KOSigns s = signs_of_class(c);
    if (s.eps == eps && s.eps_prime == eps_prime) return s.eps_dprime;
  }
  throw NoClass("no odd class with eps = " + to_string(eps) + ", eps' = " + to_string(eps_prime));
}

}  // namespace

RealSpectralTriple graded_product_operators(const RealSpectralTriple& ti, const RealSpectralTriple& tj,
                                            KozulConvention k) {
  const Sign ei = eps_dprime_of(ti);
  const Sign ej = eps_dprime_of(tj);
  const std::size_t ni = ti.hilbert_dim;
  const std::size_t nj = tj.hilbert_dim;
  const CMatrix ii = CMatrix::identity(ni);
  const CMatrix ij = CMatrix::identity(nj);
  const CMatrix& mi = ti.real_structure.linear_part();
  const CMatrix& mj = tj.real_structure.linear_part();

  RealSpectralTriple t;
  t.metadata = {{"product", "graded"}, {"convention", to_string(k)}};

  if (ti.parity() == Parity::Odd && tj.parity() == Parity::Odd) {
    CMatrix sigma = CMatrix::identity(2);
    if (minus_bit(ei) == 1) sigma = sigma * pauli(1);
    if (minus_bit(ej) == 0) sigma = sigma * (pauli(2) * ExactComplex::i());
    t.hilbert_dim = ni * nj * 2;
    t.algebra_gens = product_generators(ti, tj, 2);
    t.dirac = kron({ti.dirac, ij, pauli(1)}) + kron({ii, tj.dirac, pauli(2)});
    t.real_structure = AntiUnitary(kron({mi, mj, sigma}));
    t.grading = Grading::nontrivial(kron({ii, ij, pauli(3)}));
    return t;
  }

  t.hilbert_dim = ni * nj;
  t.algebra_gens = product_generators(ti, tj, 0);
  if (k == KozulConvention::First) {
    t.dirac = kron(ti.dirac, ij) + kron(ti.grading_or_identity(), tj.dirac);
    const CMatrix left = ti.parity() == Parity::Even ? mi * grading_insertion(ti, ej) : mi;
    t.real_structure = AntiUnitary(kron(left, mj));
  } else {
    t.dirac = kron(ti.dirac, tj.grading_or_identity()) + kron(ii, tj.dirac);
    const CMatrix right = tj.parity() == Parity::Even ? mj * grading_insertion(tj, ei) : mj;
    t.real_structure = AntiUnitary(kron(mi, right));
  }
  if (ti.parity() == Parity::Even && tj.parity() == Parity::Even) {
    t.grading = Grading::nontrivial(kron(ti.grading.matrix(), tj.grading.matrix()));
  } else {
    t.grading = Grading::trivial(ei * ej);
  }
  return t;
}

ProductReport graded_product(const RealSpectralTriple& ti, const RealSpectralTriple& tj, KozulConvention k) {
  const FactorInfo fi = inspect_factor(ti, "first");
  const FactorInfo fj = inspect_factor(tj, "second");
  if (fi.cls.variant != fj.cls.variant) {
    throw VariantMismatch("cannot take the graded product of " + fi.cls.to_string() + " and " +
                          fj.cls.to_string() + ": upper and lower variants do not mix");
  }
  const Parity pi = ti.parity();
  const Parity pj = tj.parity();
  if (pi != pj) {
    const KozulConvention required = pi == Parity::Even ? KozulConvention::First : KozulConvention::Second;
    if (k != required) {
      throw UnsupportedConvention("a " + std::string(pi == Parity::Even ? "even-odd" : "odd-even") +
                                  " product is only defined with the " + to_string(required) + " convention");
    }
  }

  ProductReport r;
  r.left = fi.cls;
  r.right = fj.cls;
  r.convention = k;
  r.predicted = predict(fi.signs, pi, fj.signs, pj).signs;
  r.result = graded_product_operators(ti, tj, k);
  r.result.metadata["left"] = fi.cls.to_string();
  r.result.metadata["right"] = fj.cls.to_string();
  record_structure(r);
  r.extracted = extract_signs(r.result).signs();
  r.cls = classify(r.extracted, r.result.parity());
  r.checks["predicted == extracted"] = r.predicted == r.extracted;
  r.checks["class matches product table"] = predict_class(fi.cls, fj.cls) == r.cls;
  if (r.result.parity() == Parity::Even) {
    r.checks["{D, gamma} = 0"] = anticommutator(r.result.dirac, r.result.grading.matrix()).is_zero();
  }
  return r;
}

ProductReport traditional_product(const RealSpectralTriple& ti, const RealSpectralTriple& tj, DiracChoice choice) {
  if (choice == DiracChoice::D && ti.parity() == Parity::Odd)
    throw OddFirstFactor("choice D needs gamma_i, but the first factor is odd");
  if (choice == DiracChoice::DTilde && tj.parity() == Parity::Odd)
    throw OddSecondFactor("choice Dtilde needs gamma_j, but the second factor is odd");

  const FactorInfo fi = inspect_factor(ti, "first");
  const FactorInfo fj = inspect_factor(tj, "second");
  const CMatrix ii = CMatrix::identity(ti.hilbert_dim);
  const CMatrix ij = CMatrix::identity(tj.hilbert_dim);

  CMatrix first_term;
  CMatrix second_term;
  if (choice == DiracChoice::D) {
    first_term = kron(ti.dirac, ij);
    second_term = kron(ti.grading.matrix(), tj.dirac);
  } else {
    first_term = kron(ti.dirac, tj.grading.matrix());
    second_term = kron(ii, tj.dirac);
  }

  ProductReport r;
  r.left = fi.cls;
  r.right = fj.cls;
  r.convention = choice == DiracChoice::D ? KozulConvention::First : KozulConvention::Second;
  r.dirac_choice = choice;

  RealSpectralTriple& t = r.result;
  t.hilbert_dim = ti.hilbert_dim * tj.hilbert_dim;
  t.algebra_gens = product_generators(ti, tj, 0);
  t.dirac = first_term + second_term;
  t.real_structure = AntiUnitary(kron(ti.real_structure.linear_part(), tj.real_structure.linear_part()));
  const bool even = ti.parity() == Parity::Even && tj.parity() == Parity::Even;
  t.grading = even ? Grading::nontrivial(kron(ti.grading.matrix(), tj.grading.matrix()))
                   : Grading::trivial(Sign::Plus);
  t.metadata = {{"product", "traditional"}, {"dirac_choice", to_string(choice)},
                {"left", fi.cls.to_string()}, {"right", fj.cls.to_string()}};
  record_structure(r);

  const CMatrix& m = t.real_structure.linear_part();
  const auto eps = relation_sign(t.real_structure.square(), CMatrix::identity(t.hilbert_dim), "J^2 = eps I");
  std::optional<Sign> eps_prime;
  try {
    eps_prime = relation_sign(m * conj_entrywise(t.dirac), t.dirac * m, "JD = eps' DJ");
  } catch (const NotASignRelation&) {
    const auto s1 = relation_sign(m * conj_entrywise(first_term), first_term * m, "JD = eps' DJ");
    const auto s2 = relation_sign(m * conj_entrywise(second_term), second_term * m, "JD = eps' DJ");
    throw UndefinedProduct("JD = eps' DJ", s1.value_or(Sign::Plus), s2.value_or(Sign::Plus));
  }
  if (!eps || !eps_prime) throw IndeterminateSign("traditional product has an undetermined sign");

  Sign eps_dprime;
  if (even) {
    const CMatrix& g = t.grading.matrix();
    const auto s = relation_sign(m * conj_entrywise(g), g * m, "J gamma = eps'' gamma J");
    if (!s) throw NotASignRelation("J gamma = eps'' gamma J");
    eps_dprime = *s;
  } else {
    eps_dprime = odd_upper_label(*eps, *eps_prime);
    t.grading = Grading::trivial(eps_dprime);
  }
  r.extracted = {*eps, *eps_prime, eps_dprime};
  r.cls = classify(r.extracted, t.parity());

  try {
    const TraditionalSigns p = traditional_predict(fi.signs, ti.parity(), fj.signs, tj.parity(), choice);
    r.predicted = {p.eps, p.eps_prime, p.eps_dprime.value_or(odd_upper_label(p.eps, p.eps_prime))};
    r.checks["predicted == extracted"] = r.predicted == r.extracted;
  } catch (const UndefinedProduct&) {
    r.predicted = r.extracted;
    r.checks["predicted == extracted"] = false;
  }
  return r;
}

CMatrix product_unitary(const CMatrix& gamma_i, const CMatrix& gamma_j) {
  const CMatrix ii = CMatrix::identity(gamma_i.size());
  const CMatrix ij = CMatrix::identity(gamma_j.size());
  CMatrix u = kron(ii, ij) + kron(gamma_i, ij) + kron(ii, gamma_j) - kron(gamma_i, gamma_j);
  return u * ExactComplex(Rational(1, 2));
}

std::optional<ExactComplex> unit_ratio(const CMatrix& a, const CMatrix& b) {
  auto r = a.ratio_to(b);
  if (!r || r->norm() != 1) return std::nullopt;
  return r;
}

EquivalenceReport check_convention_equivalence(const RealSpectralTriple& ti, const RealSpectralTriple& tj) {
  if (ti.parity() == Parity::Odd) throw OddFirstFactor("convention equivalence needs two even triples");
  if (tj.parity() == Parity::Odd) throw OddSecondFactor("convention equivalence needs two even triples");
  check_structure(ti);
  check_structure(tj);
  const RealSpectralTriple first = graded_product_operators(ti, tj, KozulConvention::First);
  const RealSpectralTriple second = graded_product_operators(ti, tj, KozulConvention::Second);
  const CMatrix u = product_unitary(ti.grading.matrix(), tj.grading.matrix());
  const CMatrix ud = dagger(u);

  EquivalenceReport rep;
  rep.dirac = u * first.dirac * ud == second.dirac;
  const CMatrix mapped = u * first.real_structure.linear_part() * conj_entrywise(ud);
  rep.real_structure_exact = mapped == second.real_structure.linear_part();
  rep.real_structure_phase = unit_ratio(mapped, second.real_structure.linear_part());
  return rep;
}

bool check_dirac_square(const RealSpectralTriple& ti, const RealSpectralTriple& tj, const ProductReport& report) {
  const CMatrix& d = report.result.dirac;
  const CMatrix expected = kron(ti.dirac * ti.dirac, CMatrix::identity(tj.hilbert_dim)) +
                           kron(CMatrix::identity(ti.hilbert_dim), tj.dirac * tj.dirac);
  return d * d == expected;
}

AssociativityReport check_operator_associativity(const RealSpectralTriple& ti, const RealSpectralTriple& tj,
                                                 const RealSpectralTriple& tk, KozulConvention k) {
  if (ti.parity() == Parity::Odd || tj.parity() == Parity::Odd || tk.parity() == Parity::Odd)
    throw OddTriple("operator-level associativity is checked on even triples only");
  const RealSpectralTriple left = graded_product_operators(graded_product_operators(ti, tj, k), tk, k);
  const RealSpectralTriple right = graded_product_operators(ti, graded_product_operators(tj, tk, k), k);
  AssociativityReport rep;
  rep.dirac = left.dirac == right.dirac;
  rep.grading = left.grading == right.grading;
  rep.real_structure_exact = left.real_structure == right.real_structure;
  rep.real_structure_phase = unit_ratio(left.real_structure.linear_part(), right.real_structure.linear_part());
  return rep;
}

}  // namespace spectral
