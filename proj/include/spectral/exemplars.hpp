#pragma once

#include "spectral/ko_signs.hpp"
#include "spectral/matrix.hpp"
#include "spectral/triple.hpp"

#include <array>
#include <map>
#include <span>
#include <vector>

namespace spectral {

/// Hermitian generators γᵃ with γᵃγᵇ + γᵇγᵃ = 2δᵃᵇ I.
struct CliffordRep {
  int d = 0;
  std::vector<CMatrix> gammas;

  std::size_t side() const { return gammas.empty() ? 1 : gammas.front().size(); }
};

/// Irreducible representation by the σ-recursion: {σ₁, σ₂} for d = 2, then
/// {γᵃ⊗σ₃} ∪ {I⊗σ₁, I⊗σ₂}; odd d appends the normalized chirality of the d−1 set.
/// Side length 2^⌊d/2⌋. Throws std::invalid_argument for d < 1.
CliffordRep clifford_gammas(int d);

struct Chirality {
  CMatrix matrix;
  /// The phase in {1, i} that made the ordered product a hermitian involution.
  ExactComplex phase;
};
/// Ordered product γ¹⋯γᵐ times the unique phase in {1, i} giving a hermitian involution.
Chirality chirality(std::span<const CMatrix> gammas, std::size_t side);

/// Number of Clifford generators used for the exemplar of a class: (8 − dim) mod 8.
/// A finite D = Σ pₐγᵃ on d generators carries KO-dimension −d, because no momentum
/// reversal is available to J on a single momentum mode.
int exemplar_generator_count(KOClass c);

/// All 4^k Pauli strings on k qubits, leftmost factor most significant, identity first.
std::vector<CMatrix> pauli_strings(int qubits);

/// Minimal triple of class c: D = Σ pₐγᵃ with p = (1, 2, …, d), γ the chirality for even
/// classes, J the first Pauli string × {1, i} satisfying the class's sign relations.
/// Class dimension 0 uses C² with D = σ₁, γ = σ₃. Throws NoRealStructureFound.
RealSpectralTriple build_exemplar(KOClass c);
/// Same construction with explicit Dirac coefficients (one per generator).
RealSpectralTriple build_exemplar(KOClass c, std::span<const Rational> coefficients);

using ExemplarCatalog = std::map<KOClass, RealSpectralTriple>;
ExemplarCatalog build_catalog();
/// Process-wide catalog built once on first use.
const ExemplarCatalog& default_catalog();

/// Hermitian Euclidean gamma basis γ⁰ = σ₁⊗I, γʲ = −σ₂⊗σⱼ (blocks [[0, iσⱼ], [−iσⱼ, 0]]).
std::array<CMatrix, 4> euclidean_gammas_4d();

/// Flat 4D Dirac operator restricted to the momentum pair {e^{ipx}, e^{−ipx}}:
/// H = C⁴⊗C², D = (Σ pₐγᵃ)⊗σ₃, J = γ⁰γ²⊗σ₁∘cc, γ = γ⁰γ¹γ²γ³⊗I.
/// Throws ZeroMomentum when p = 0.
RealSpectralTriple flat_dirac_4d(const std::array<Rational, 4>& p);
/// The single-mode symbol alone: H = C⁴, D = Σ pₐγᵃ, J = γ⁰γ²∘cc.
RealSpectralTriple flat_dirac_symbol_4d(const std::array<Rational, 4>& p);

}  // namespace spectral
