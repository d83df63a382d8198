#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectral {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) { return to_int(a) == to_int(b) ? Sign::Plus : Sign::Minus; }
constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
/// Exponent (1 − s)/2: 0 for +1, 1 for −1.
constexpr unsigned minus_bit(Sign s) { return s == Sign::Minus ? 1u : 0u; }
Sign sign_from_int(int v);
std::string to_string(Sign s);

enum class Parity { Even, Odd };
enum class Variant { Upper, Lower };

std::string to_string(Parity p);
std::string to_string(Variant v);

/// {ε, ε′, ε″}. For odd triples ε″ is the assigned label rather than an operator sign.
struct KOSigns {
  Sign eps = Sign::Plus;
  Sign eps_prime = Sign::Plus;
  Sign eps_dprime = Sign::Plus;

  friend bool operator==(const KOSigns&, const KOSigns&) = default;
};

std::string to_string(const KOSigns& s);
std::ostream& operator<<(std::ostream& os, const KOSigns& s);
/// All 8 sign triples in a fixed order.
std::array<KOSigns, 8> all_sign_triples();

/// KO-dimension mod 8 together with its upper/lower variant, e.g. "2_U".
struct KOClass {
  int dim = 0;
  Variant variant = Variant::Upper;

  Parity parity() const { return dim % 2 == 0 ? Parity::Even : Parity::Odd; }
  std::string to_string() const;
  /// Accepts "n_U", "n_L", or a bare "n" meaning the classic (Table-1 style) class of dimension n.
  static KOClass parse(std::string_view text);

  friend bool operator==(const KOClass&, const KOClass&) = default;
  friend auto operator<=>(const KOClass& a, const KOClass& b) {
    if (a.variant != b.variant) return a.variant <=> b.variant;
    return a.dim <=> b.dim;
  }
};

std::ostream& operator<<(std::ostream& os, const KOClass& c);

/// The 16 classes ordered 0_U..7_U then 0_L..7_L.
const std::array<KOClass, 16>& all_classes();

/// Sign triple of a class from the complete KO-dimension table.
KOSigns signs_of_class(KOClass c);
/// Inverse lookup; total over the 8 triples × 2 parities.
KOClass classify(const KOSigns& s, Parity p);

/// Classic (single-variant) class used by the traditional literature:
/// 0_U, 2_L, 4_U, 6_L for even dimensions and n_U for odd n.
KOClass classic_class(int dim);

/// Upper ↔ lower real structure at fixed dimension: {ε″ε, −ε′, ε″}.
KOSigns flip_variant(const KOSigns& s);

/// Graded even–even product signs. Throws VariantMismatch when ε′ᵢε″ⱼ ≠ ε″ᵢε′ⱼ.
KOSigns predict_even_even(const KOSigns& si, const KOSigns& sj);
/// Even–odd (either order); the odd factor contributes its ε″ label.
KOSigns predict_even_odd(const KOSigns& si, const KOSigns& sj);
/// Odd–odd graded product signs. Throws VariantMismatch when −ε′ᵢε″ⱼ ≠ −ε″ᵢε′ⱼ.
KOSigns predict_odd_odd(const KOSigns& si, const KOSigns& sj);

struct PredictedProduct {
  KOSigns signs;
  Parity parity;
};
/// Parity-appropriate dispatch of the three predictors.
PredictedProduct predict(const KOSigns& si, Parity pi, const KOSigns& sj, Parity pj);
/// Class of the graded product, or nullopt for mixed variants.
std::optional<KOClass> predict_class(KOClass ci, KOClass cj);

enum class DiracChoice { D, DTilde };
std::string to_string(DiracChoice c);

/// Signs of the traditional (ungraded) product. ε″ is absent when the result is odd.
struct TraditionalSigns {
  Sign eps;
  Sign eps_prime;
  std::optional<Sign> eps_dprime;
  Parity parity;
};

/// Traditional product of two even triples: ε′ must equal ε′ᵢ = ε″ᵢε′ⱼ (choice D) or
/// ε′ᵢε″ⱼ = ε′ⱼ (choice D̃). Throws UndefinedProduct when that constraint fails.
KOSigns traditional_predict(const KOSigns& si, const KOSigns& sj, DiracChoice choice);
/// Same rule when one factor may be odd; the odd factor's ε″ is never consulted.
/// Throws OddFirstFactor / OddSecondFactor when the choice needs a missing grading.
TraditionalSigns traditional_predict(const KOSigns& si, Parity pi, const KOSigns& sj, Parity pj,
                                     DiracChoice choice);

/// Three-step derivation of the complete table from the product rule alone.
struct MnemonicDerivation {
  /// Step 1: the 8 even sign triples paired by flip_variant.
  std::vector<std::pair<KOSigns, KOSigns>> flip_pairs;
  /// Step 2: index into flip_pairs of the dimension-0 and dimension-4 pairs.
  std::size_t zero_pair = 0;
  std::size_t four_pair = 0;
  std::size_t self_closed_pair_count = 0;
  std::size_t squares_to_zero_pair_count = 0;
  /// Step 3: labellings consistent with the chain {ε,ε′}(2n_L) = {ε,ε′}(2n+2_U) alone,
  /// before the ε′_U = ε″_U rule picks one.
  std::size_t chain_solution_count = 0;
  /// Final table keyed by all_classes() order.
  std::array<KOSigns, 16> table;
  std::vector<std::string> log;
};
/// Throws InternalInconsistency when a step has zero or several solutions.
MnemonicDerivation derive_table_mnemonic();

/// 16×16 grid in all_classes() order; nullopt marks a mixed-variant (undefined) cell.
using ProductTable = std::array<std::array<std::optional<KOClass>, 16>, 16>;
ProductTable product_table();

}  // namespace spectral
