#include "spectral/triple.hpp"

namespace spectral {

AntiUnitary kron(const AntiUnitary& a, const AntiUnitary& b) {
  return AntiUnitary(kron(a.linear_part(), b.linear_part()));
}

Grading Grading::from_matrix(CMatrix gamma, Sign label) {
  const auto n = gamma.size();
  if (gamma == CMatrix::identity(n) || gamma == -CMatrix::identity(n)) return trivial(label);
  return nontrivial(std::move(gamma));
}

const CMatrix& Grading::matrix() const {
  if (!nontrivial_) throw OddTriple("odd triple has no grading matrix");
  return gamma_;
}

Sign Grading::label() const {
  if (nontrivial_) throw OddTriple("even triple carries no odd eps'' label");
  return label_;
}

CMatrix RealSpectralTriple::grading_or_identity() const {
  return grading.is_nontrivial() ? grading.matrix() : CMatrix::identity(hilbert_dim);
}

std::vector<StructuralCheck> structural_checks(const RealSpectralTriple& t) {
  std::vector<StructuralCheck> out;
  const std::size_t n = t.hilbert_dim;
  auto add = [&out](std::string name, bool holds) { out.push_back({std::move(name), holds}); };

  bool sizes = n > 0 && t.dirac.size() == n && t.real_structure.size() == n;
  for (const auto& a : t.algebra_gens) sizes = sizes && a.size() == n;
  if (t.grading.is_nontrivial()) sizes = sizes && t.grading.matrix().size() == n;
  add("dimensions match hilbert_dim", sizes);
  if (!sizes) return out;

  add("D hermitian", is_hermitian(t.dirac));
  add("J unitary linear part", t.real_structure.is_unitary());
  bool gens_hermitian = true;
  for (const auto& a : t.algebra_gens) gens_hermitian = gens_hermitian && is_hermitian(a);
  add("algebra generators hermitian", gens_hermitian);
  if (t.grading.is_nontrivial()) {
    const CMatrix& g = t.grading.matrix();
    add("gamma hermitian involution", is_hermitian_involution(g));
    add("gamma != +-I", !(g.is_identity() || (-g).is_identity()));
    bool commutes = true;
    for (const auto& a : t.algebra_gens) commutes = commutes && commutator(a, g).is_zero();
    add("[pi(a), gamma] = 0", commutes);
    add("{D, gamma} = 0", anticommutator(t.dirac, g).is_zero());
  }
  return out;
}

void check_structure(const RealSpectralTriple& t) {
  for (const auto& c : structural_checks(t))
    if (!c.holds) throw StructuralViolation(c.invariant);
}

KOSigns ExtractedSigns::signs() const {
  if (!eps_prime) throw IndeterminateSign("eps' is indeterminate (D = 0)");
  return {eps, *eps_prime, eps_dprime};
}

std::optional<Sign> relation_sign(const CMatrix& lhs, const CMatrix& rhs, const std::string& relation) {
  const SignMatch m = match_sign(lhs, rhs);
  if (m.plus && m.minus) return std::nullopt;
  if (m.plus) return Sign::Plus;
  if (m.minus) return Sign::Minus;
  throw NotASignRelation(relation);
}

ExtractedSigns extract_signs(const RealSpectralTriple& t) {
  const CMatrix& m = t.real_structure.linear_part();
  const std::size_t n = t.hilbert_dim;

  const auto eps = relation_sign(t.real_structure.square(), CMatrix::identity(n), "J^2 = eps I");
  if (!eps) throw NotASignRelation("J^2 = eps I");
  const auto eps_prime = relation_sign(m * conj_entrywise(t.dirac), t.dirac * m, "JD = eps' DJ");

  Sign eps_dprime;
  if (t.grading.is_nontrivial()) {
    const CMatrix& g = t.grading.matrix();
    const auto s = relation_sign(m * conj_entrywise(g), g * m, "J gamma = eps'' gamma J");
    if (!s) throw NotASignRelation("J gamma = eps'' gamma J");
    eps_dprime = *s;
  } else {
    eps_dprime = t.grading.label();
  }
  return {*eps, eps_prime, eps_dprime};
}

Validation validate(const RealSpectralTriple& t) {
  check_structure(t);
  Validation v;
  v.signs = extract_signs(t);
  const Parity p = t.parity();
  if (v.signs.eps_prime) {
    v.cls = classify(v.signs.signs(), p);
    v.candidates = {v.cls};
    return v;
  }
  v.ambiguous = true;
  for (Sign ep : {Sign::Plus, Sign::Minus})
    v.candidates.push_back(classify({v.signs.eps, ep, v.signs.eps_dprime}, p));
  v.cls = v.candidates.front();
  return v;
}

RealSpectralTriple flip_real_structure(const RealSpectralTriple& t) {
  if (!t.grading.is_nontrivial()) throw OddTriple("cannot flip the real structure of an odd triple");
  RealSpectralTriple out = t;
  out.real_structure = t.real_structure.before(t.grading.matrix());
  return out;
}

}  // namespace spectral
