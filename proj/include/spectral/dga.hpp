#pragma once

#include "spectral/exact_complex.hpp"
#include "spectral/ko_signs.hpp"
#include "spectral/kozul.hpp"
#include "spectral/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spectral {

/// Element of a finite-basis algebra as its coefficient vector.
using GradedElement = std::vector<ExactComplex>;

/// Star differential graded algebra on a finite basis.
///   mult:  e_i·e_j = Σ_k c(i, j, k) e_k
///   star:  antilinear, column i holds (e_i)*
///   diff:  linear, column i holds d(e_i)
struct StarDGA {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<ExactComplex> mult;  // flattened [i][j][k]
  CMatrix star;
  CMatrix diff;
  std::size_t unit = 0;

  StarDGA() = default;
  /// Zero structure constants, zero star and d on the given basis.
  StarDGA(std::vector<std::string> labels, std::vector<int> degrees, std::size_t unit);

  std::size_t size() const { return labels.size(); }
  ExactComplex& c(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * size() + j) * size() + k]; }
  const ExactComplex& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * size() + j) * size() + k];
  }

  GradedElement basis(std::size_t i) const;
  GradedElement zero() const { return GradedElement(size()); }
  GradedElement multiply(const GradedElement& x, const GradedElement& y) const;
  GradedElement apply_star(const GradedElement& x) const;
  GradedElement apply_d(const GradedElement& x) const;
  /// The single degree of a nonzero homogeneous element; nullopt for 0 or mixed degree.
  std::optional<int> degree(const GradedElement& x) const;
};

GradedElement operator+(GradedElement a, const GradedElement& b);
GradedElement operator-(GradedElement a, const GradedElement& b);
GradedElement operator*(const ExactComplex& s, GradedElement a);
bool is_zero(const GradedElement& x);

struct AxiomCheck {
  std::string axiom;
  bool holds;
  /// First failing basis tuple, empty when the axiom holds.
  std::string witness;
};

struct DgaReport {
  std::vector<AxiomCheck> checks;
  /// Every s ∈ {+1, −1} with d[a*] = s·d[a]* on the whole basis. Two entries when d = 0.
  std::vector<Sign> global_signs;

  bool valid() const;
};

/// Exhaustive check over basis elements, pairs and triples.
DgaReport validate_dga(const StarDGA& a);

/// Graded tensor product on the basis e′_i⊗e″_j (index i·|b| + j):
///   mult  First: (−1)^{|a₁″||a₂′|},  Second: (−1)^{|a₁′||a₂″|}
///   star  (a′⊗a″)* = a′*⊗a″*
///   d     First: da′⊗a″ + (−1)^{|a′|} a′⊗da″,  Second: (−1)^{|a″|} da′⊗a″ + a′⊗da″
/// Throws SignMismatch when the inputs admit no common global sign, StructuralViolation
/// when an input is not a valid *-DGA.
StarDGA dga_tensor(const StarDGA& a, const StarDGA& b, KozulConvention k);

/// {1, x, dx} with degrees {0, 0, 1}, every non-unit product zero, d(x) = dx, star = id.
StarDGA exterior_example();
/// One-element algebra {1}.
StarDGA trivial_algebra();

/// Index map from the basis of (a⊗b)⊗c to that of a⊗(b⊗c).
std::vector<std::size_t> reassociation_map(std::size_t na, std::size_t nb, std::size_t nc);
/// True when map is a degree-preserving bijection carrying every structure constant,
/// star and d entry, and the unit of a onto those of b. Labels are ignored.
bool isomorphic_via(const StarDGA& a, const StarDGA& b, const std::vector<std::size_t>& map);

}  // namespace spectral
