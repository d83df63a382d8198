#pragma once

#include "spectral/errors.hpp"
#include "spectral/ko_signs.hpp"
#include "spectral/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spectral {

/// Antiunitary operator M∘cc: a unitary matrix followed by entrywise conjugation.
class AntiUnitary {
 public:
  AntiUnitary() = default;
  explicit AntiUnitary(CMatrix linear_part) : linear_(std::move(linear_part)) {}

  const CMatrix& linear_part() const { return linear_; }
  std::size_t size() const { return linear_.size(); }

  /// J² as a linear map: M·conj(M).
  CMatrix square() const { return linear_ * conj_entrywise(linear_); }
  /// J∘A for linear A: linear part M·conj(A).
  AntiUnitary after(const CMatrix& a) const { return AntiUnitary(linear_ * conj_entrywise(a)); }
  /// A∘J for linear A: linear part A·M.
  AntiUnitary before(const CMatrix& a) const { return AntiUnitary(a * linear_); }

  bool is_unitary() const { return spectral::is_unitary(linear_); }

  friend bool operator==(const AntiUnitary&, const AntiUnitary&) = default;

 private:
  CMatrix linear_;
};

/// (M₁∘cc) ⊗ (M₂∘cc) = (M₁⊗M₂)∘cc.
AntiUnitary kron(const AntiUnitary& a, const AntiUnitary& b);

/// Either a non-trivial grading matrix (even triples) or the ε″ label of an odd triple.
class Grading {
 public:
  static Grading nontrivial(CMatrix gamma) { return Grading(std::move(gamma), Sign::Plus, true); }
  static Grading trivial(Sign eps_dprime_label) { return Grading(CMatrix(), eps_dprime_label, false); }
  /// Treats γ = ±I as odd, carrying `label`.
  static Grading from_matrix(CMatrix gamma, Sign label);

  bool is_nontrivial() const { return nontrivial_; }
  Parity parity() const { return nontrivial_ ? Parity::Even : Parity::Odd; }
  /// Throws OddTriple for a trivial grading.
  const CMatrix& matrix() const;
  /// Throws OddTriple for a non-trivial grading.
  Sign label() const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  Grading(CMatrix g, Sign label, bool nontrivial) : gamma_(std::move(g)), label_(label), nontrivial_(nontrivial) {}

  CMatrix gamma_;
  Sign label_;
  bool nontrivial_;
};

/// Finite real spectral triple {A, H, D, J, γ}.
struct RealSpectralTriple {
  std::size_t hilbert_dim = 0;
  std::vector<CMatrix> algebra_gens;
  CMatrix dirac;
  AntiUnitary real_structure;
  Grading grading = Grading::trivial(Sign::Plus);
  /// Free-form provenance (exemplar construction parameters and similar).
  std::map<std::string, std::string> metadata;

  Parity parity() const { return grading.parity(); }
  /// The grading matrix for even triples, I for odd ones.
  CMatrix grading_or_identity() const;

  bool operator==(const RealSpectralTriple& o) const {
    return hilbert_dim == o.hilbert_dim && algebra_gens == o.algebra_gens && dirac == o.dirac &&
           real_structure == o.real_structure && grading == o.grading;
  }
};

struct StructuralCheck {
  std::string invariant;
  bool holds;
};

/// Every structural invariant with its outcome, in a fixed order.
std::vector<StructuralCheck> structural_checks(const RealSpectralTriple& t);
/// Throws StructuralViolation naming the first failed invariant.
void check_structure(const RealSpectralTriple& t);

/// Signs measured from the operators. eps_prime is empty when D = 0 (both signs hold).
struct ExtractedSigns {
  Sign eps;
  std::optional<Sign> eps_prime;
  Sign eps_dprime;

  bool determinate() const { return eps_prime.has_value(); }
  /// Throws IndeterminateSign if ε′ is undetermined.
  KOSigns signs() const;
};

/// The s ∈ {+1,−1} with lhs = s·rhs. Empty result when both vanish; throws
/// NotASignRelation when neither sign holds.
std::optional<Sign> relation_sign(const CMatrix& lhs, const CMatrix& rhs, const std::string& relation);

/// J² = εI, JD = ε′DJ, Jγ = ε″γJ evaluated on M: M·conj(M), M·conj(D) vs D·M, M·conj(γ) vs γ·M.
ExtractedSigns extract_signs(const RealSpectralTriple& t);

struct Validation {
  KOClass cls;
  /// Every class consistent with the extraction; two entries when ε′ is indeterminate.
  std::vector<KOClass> candidates;
  bool ambiguous = false;
  ExtractedSigns signs;
};

Validation validate(const RealSpectralTriple& t);

/// Replaces the real structure's linear part M by γ·M. Throws OddTriple for odd input.
RealSpectralTriple flip_real_structure(const RealSpectralTriple& t);

}  // namespace spectral
