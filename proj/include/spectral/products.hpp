#pragma once

#include "spectral/ko_signs.hpp"
#include "spectral/kozul.hpp"
#include "spectral/matrix.hpp"
#include "spectral/sign_errors.hpp"
#include "spectral/triple.hpp"

#include <map>
#include <optional>
#include <string>

namespace spectral {

struct ProductReport {
  RealSpectralTriple result;
  KOSigns predicted;
  KOSigns extracted;
  KOClass cls;
  KozulConvention convention = KozulConvention::First;
  /// Set for traditional products only.
  std::optional<DiracChoice> dirac_choice;
  KOClass left;
  KOClass right;
  std::map<std::string, bool> checks;

  bool passed() const;
};

/// Product operators for any pair, without the variant precondition or validation.
/// Exposed so that mixed-variant products can be inspected directly.
RealSpectralTriple graded_product_operators(const RealSpectralTriple& ti, const RealSpectralTriple& tj,
                                            KozulConvention k);

/// Graded product in resolved form. Throws VariantMismatch for mixed variants,
/// UnsupportedConvention when a mixed-parity pair asks for the other convention,
/// IndeterminateSign when a factor has D = 0, StructuralViolation from validation.
ProductReport graded_product(const RealSpectralTriple& ti, const RealSpectralTriple& tj, KozulConvention k);

/// J = J_i⊗J_j with no grading insertions; D = D_i⊗I + γ_i⊗D_j (choice D) or
/// D_i⊗γ_j + I⊗D_j (choice D̃). Throws UndefinedProduct naming the broken relation,
/// OddFirstFactor / OddSecondFactor when the needed grading is missing.
ProductReport traditional_product(const RealSpectralTriple& ti, const RealSpectralTriple& tj, DiracChoice choice);

/// ½(I⊗I + γ_i⊗I + I⊗γ_j − γ_i⊗γ_j). Hermitian and squares to I.
CMatrix product_unitary(const CMatrix& gamma_i, const CMatrix& gamma_j);

struct EquivalenceReport {
  /// U·D·U† = D̃.
  bool dirac = false;
  /// U·M·conj(U†) = M̃ exactly.
  bool real_structure_exact = false;
  /// The unit λ with U·M·conj(U†) = λ·M̃, when one exists.
  std::optional<ExactComplex> real_structure_phase;

  bool holds() const { return dirac && real_structure_phase.has_value(); }
};

/// Both factors even and of the same variant.
EquivalenceReport check_convention_equivalence(const RealSpectralTriple& ti, const RealSpectralTriple& tj);

/// D² = D_i²⊗I + I⊗D_j² on an even–even graded product.
bool check_dirac_square(const RealSpectralTriple& ti, const RealSpectralTriple& tj, const ProductReport& report);

struct AssociativityReport {
  bool dirac = false;
  bool grading = false;
  bool real_structure_exact = false;
  std::optional<ExactComplex> real_structure_phase;

  bool holds() const { return dirac && grading && real_structure_phase.has_value(); }
};

/// (ti×tj)×tk against ti×(tj×tk) operator by operator; all three factors even.
AssociativityReport check_operator_associativity(const RealSpectralTriple& ti, const RealSpectralTriple& tj,
                                                 const RealSpectralTriple& tk, KozulConvention k);

/// The unit scalar λ with a = λ·b, if any.
std::optional<ExactComplex> unit_ratio(const CMatrix& a, const CMatrix& b);

}  // namespace spectral
