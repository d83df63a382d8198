#include "spectral/exemplars.hpp"

#include <stdexcept>
#include <string>

namespace spectral {

namespace {

std::vector<CMatrix> even_gammas(int pairs) {
  if (pairs == 0) return {};
  std::vector<CMatrix> g = {pauli(1), pauli(2)};
  for (int k = 1; k < pairs; ++k) {
    const CMatrix id = CMatrix::identity(g.front().size());
    std::vector<CMatrix> next;
    next.reserve(g.size() + 2);
    for (const auto& x : g) next.push_back(kron(x, pauli(3)));
    next.push_back(kron(id, pauli(1)));
    next.push_back(kron(id, pauli(2)));
    g = std::move(next);
  }
  return g;
}

std::string join(std::span<const Rational> xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x.get_str();
  return out;
}

std::string pauli_label(std::size_t index, int qubits) {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string out(static_cast<std::size_t>(qubits), 'I');
  for (int q = qubits - 1; q >= 0; --q) {
    out[static_cast<std::size_t>(q)] = kNames[index % 4];
    index /= 4;
  }
  return out.empty() ? "1" : out;
}

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  if ((std::size_t{1} << k) != n) throw std::logic_error("dimension is not a power of two");
  return k;
}

bool sign_holds(const CMatrix& lhs, const CMatrix& rhs, Sign s) {
  const SignMatch m = match_sign(lhs, rhs);
  return s == Sign::Plus ? m.plus : m.minus;
}

struct Skeleton {
  CMatrix dirac;
  std::optional<Chirality> gamma;
  int generators = 0;
};

Skeleton skeleton_for(KOClass c, std::span<const Rational> coefficients) {
  Skeleton s;
  if (c.dim == 0) {
    s.dirac = pauli(1);
    s.gamma = Chirality{pauli(3), ExactComplex(1)};
    return s;
  }
  s.generators = exemplar_generator_count(c);
  if (coefficients.size() != static_cast<std::size_t>(s.generators)) {
    throw std::invalid_argument("exemplar " + c.to_string() + " needs " + std::to_string(s.generators) +
                                " Dirac coefficients");
  }
  const CliffordRep rep = clifford_gammas(s.generators);
  s.dirac = CMatrix(rep.side());
  for (std::size_t a = 0; a < rep.gammas.size(); ++a) s.dirac += rep.gammas[a] * ExactComplex(coefficients[a]);
  if (c.parity() == Parity::Even) s.gamma = chirality(rep.gammas, rep.side());
  return s;
}

}  // namespace

CliffordRep clifford_gammas(int d) {
  if (d < 1) throw std::invalid_argument("clifford_gammas: d must be at least 1");
  CliffordRep rep{d, even_gammas(d / 2)};
  if (d % 2 == 1) {
    const std::size_t side = rep.gammas.empty() ? 1 : rep.gammas.front().size();
    rep.gammas.push_back(chirality(rep.gammas, side).matrix);
  }
  return rep;
}

Chirality chirality(std::span<const CMatrix> gammas, std::size_t side) {
  CMatrix product = CMatrix::identity(side);
  for (const auto& g : gammas) product = product * g;
  for (const ExactComplex& phase : {ExactComplex(1), ExactComplex::i()}) {
    CMatrix candidate = product * phase;
    if (is_hermitian_involution(candidate)) return {std::move(candidate), phase};
  }
  throw std::logic_error("chirality: no phase in {1, i} normalizes the gamma product");
}

int exemplar_generator_count(KOClass c) { return (8 - c.dim) % 8; }

std::vector<CMatrix> pauli_strings(int qubits) {
  std::vector<CMatrix> out = {CMatrix::identity(1)};
  for (int q = 0; q < qubits; ++q) {
    std::vector<CMatrix> next;
    next.reserve(out.size() * 4);
    for (const auto& s : out)
      for (int p = 0; p < 4; ++p) next.push_back(kron(s, pauli(p)));
    out = std::move(next);
  }
  return out;
}

RealSpectralTriple build_exemplar(KOClass c, std::span<const Rational> coefficients) {
  const Skeleton sk = skeleton_for(c, coefficients);
  const KOSigns target = signs_of_class(c);
  const std::size_t n = sk.dirac.size();
  const int qubits = log2_exact(n);
  const CMatrix id = CMatrix::identity(n);
  const CMatrix conj_d = conj_entrywise(sk.dirac);
  const std::optional<CMatrix> conj_g =
      sk.gamma ? std::optional<CMatrix>(conj_entrywise(sk.gamma->matrix)) : std::nullopt;

  const auto strings = pauli_strings(qubits);
  std::size_t tried = 0;
  for (std::size_t k = 0; k < strings.size(); ++k) {
    for (const ExactComplex& phase : {ExactComplex(1), ExactComplex::i()}) {
      ++tried;
      const CMatrix m = strings[k] * phase;
      if (!sign_holds(m * conj_entrywise(m), id, target.eps)) continue;
      if (!sign_holds(m * conj_d, sk.dirac * m, target.eps_prime)) continue;
      if (sk.gamma && !sign_holds(m * *conj_g, sk.gamma->matrix * m, target.eps_dprime)) continue;

      RealSpectralTriple t;
      t.hilbert_dim = n;
      t.algebra_gens = {id};
      t.dirac = sk.dirac;
      t.real_structure = AntiUnitary(m);
      t.grading = sk.gamma ? Grading::nontrivial(sk.gamma->matrix) : Grading::trivial(target.eps_dprime);
      t.metadata = {
          {"class", c.to_string()},
          {"construction", c.dim == 0 ? "C2: D = sigma1, gamma = sigma3" : "clifford"},
          {"clifford_generators", std::to_string(sk.generators)},
          {"dirac_coefficients", join(coefficients)},
          {"real_structure_pauli", pauli_label(k, qubits)},
          {"real_structure_phase", phase.is_real() ? "1" : "i"},
          {"search_candidates_tried", std::to_string(tried)},
      };
      if (sk.gamma) t.metadata["chirality_phase"] = sk.gamma->phase.is_real() ? "1" : "i";
      return t;
    }
  }
  throw NoRealStructureFound("no Pauli-string real structure realizes " + c.to_string() + " on C^" +
                             std::to_string(n));
}

RealSpectralTriple build_exemplar(KOClass c) {
  std::vector<Rational> p;
  const int d = c.dim == 0 ? 0 : exemplar_generator_count(c);
  for (int a = 1; a <= d; ++a) p.emplace_back(a);
  RealSpectralTriple t = build_exemplar(c, p);

  // Re-test the chosen J against an unrelated coefficient vector to rule out a
  // coincidental sign relation on the particular D.
  if (d > 0) {
    static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17};
    RealSpectralTriple probe = t;
    CMatrix dirac(t.hilbert_dim);
    const CliffordRep rep = clifford_gammas(d);
    for (int a = 0; a < d; ++a) dirac += rep.gammas[static_cast<std::size_t>(a)] * ExactComplex(Rational(1, kPrimes[a]));
    probe.dirac = std::move(dirac);
    const auto s = extract_signs(probe);
    if (!s.eps_prime || s.signs() != signs_of_class(c)) {
      throw NoRealStructureFound("real structure for " + c.to_string() + " depends on the Dirac coefficients");
    }
  }
  return t;
}

ExemplarCatalog build_catalog() {
  ExemplarCatalog out;
  for (const KOClass& c : all_classes()) out.emplace(c, build_exemplar(c));
  return out;
}

const ExemplarCatalog& default_catalog() {
  static const ExemplarCatalog catalog = build_catalog();
  return catalog;
}

std::array<CMatrix, 4> euclidean_gammas_4d() {
  return {kron(pauli(1), pauli(0)), -kron(pauli(2), pauli(1)), -kron(pauli(2), pauli(2)),
          -kron(pauli(2), pauli(3))};
}

namespace {

CMatrix momentum_symbol(const std::array<CMatrix, 4>& g, const std::array<Rational, 4>& p) {
  CMatrix d(4);
  for (std::size_t a = 0; a < 4; ++a) d += g[a] * ExactComplex(p[a]);
  return d;
}

void require_momentum(const std::array<Rational, 4>& p) {
  for (const auto& x : p)
    if (sgn(x) != 0) return;
  throw ZeroMomentum("flat Dirac check needs a nonzero momentum (eps' is indeterminate at p = 0)");
}

std::string momentum_text(const std::array<Rational, 4>& p) { return join(std::span<const Rational>(p)); }

}  // namespace

RealSpectralTriple flat_dirac_4d(const std::array<Rational, 4>& p) {
  require_momentum(p);
  const auto g = euclidean_gammas_4d();
  const CMatrix gamma5 = g[0] * g[1] * g[2] * g[3];
  RealSpectralTriple t;
  t.hilbert_dim = 8;
  t.algebra_gens = {CMatrix::identity(8)};
  t.dirac = kron(momentum_symbol(g, p), pauli(3));
  t.real_structure = AntiUnitary(kron(g[0] * g[2], pauli(1)));
  t.grading = Grading::nontrivial(kron(gamma5, pauli(0)));
  t.metadata = {{"construction", "flat 4D Dirac on momentum modes (p, -p)"}, {"momentum", momentum_text(p)}};
  return t;
}

RealSpectralTriple flat_dirac_symbol_4d(const std::array<Rational, 4>& p) {
  require_momentum(p);
  const auto g = euclidean_gammas_4d();
  RealSpectralTriple t;
  t.hilbert_dim = 4;
  t.algebra_gens = {CMatrix::identity(4)};
  t.dirac = momentum_symbol(g, p);
  t.real_structure = AntiUnitary(g[0] * g[2]);
  t.grading = Grading::nontrivial(g[0] * g[1] * g[2] * g[3]);
  t.metadata = {{"construction", "flat 4D Dirac symbol, single momentum mode"}, {"momentum", momentum_text(p)}};
  return t;
}

}  // namespace spectral
