#include "spectral/ko_signs.hpp"

#include "spectral/errors.hpp"
#include "spectral/sign_errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spectral {

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

// Complete KO-dimension table, all_classes() order: 0_U..7_U, 0_L..7_L.
constexpr std::array<KOSigns, 16> kCompleteTable = {{
    {P, P, P}, {P, M, M}, {P, M, M}, {M, P, P}, {M, P, P}, {M, M, M}, {M, M, M}, {P, P, P},
    {P, M, P}, {P, M, P}, {M, P, M}, {M, P, M}, {M, M, P}, {M, M, P}, {P, P, M}, {P, P, M},
}};

std::size_t class_index(KOClass c) {
  return static_cast<std::size_t>(c.dim) + (c.variant == Variant::Lower ? 8 : 0);
}

// (−1)^{(1−a)(1−b)/4}: −1 exactly when both signs are −1.
Sign both_minus_factor(Sign a, Sign b) { return (a == M && b == M) ? M : P; }
// (−1)^{(1+a)(1+b)/4}: −1 exactly when both signs are +1.
Sign both_plus_factor(Sign a, Sign b) { return (a == P && b == P) ? M : P; }

KOSigns graded_even_rule(const KOSigns& si, const KOSigns& sj) {
  const Sign left = si.eps_prime * sj.eps_dprime;
  const Sign right = si.eps_dprime * sj.eps_prime;
  if (left != right) {
    throw VariantMismatch("variant mismatch: " + to_string(si) + " x " + to_string(sj) + " gives eps' = " +
                          to_string(left) + " from eps'_i eps''_j but " + to_string(right) + " from eps''_i eps'_j");
  }
  return {both_minus_factor(si.eps_dprime, sj.eps_dprime) * si.eps * sj.eps, left, si.eps_dprime * sj.eps_dprime};
}

}  // namespace

Sign sign_from_int(int v) {
  if (v == 1) return P;
  if (v == -1) return M;
  throw ParseError("sign must be +1 or -1, got " + std::to_string(v));
}

std::string to_string(Sign s) { return s == P ? "+1" : "-1"; }
std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
std::string to_string(Variant v) { return v == Variant::Upper ? "U" : "L"; }

std::string to_string(const KOSigns& s) {
  return "{" + to_string(s.eps) + "," + to_string(s.eps_prime) + "," + to_string(s.eps_dprime) + "}";
}

std::ostream& operator<<(std::ostream& os, const KOSigns& s) { return os << to_string(s); }

std::array<KOSigns, 8> all_sign_triples() {
  std::array<KOSigns, 8> out{};
  std::size_t k = 0;
  for (Sign a : {P, M})
    for (Sign b : {P, M})
      for (Sign c : {P, M}) out[k++] = {a, b, c};
  return out;
}

std::string KOClass::to_string() const { return std::to_string(dim) + "_" + spectral::to_string(variant); }

KOClass KOClass::parse(std::string_view text) {
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '7') return classic_class(text[0] - '0');
  if (text.size() == 3 && text[0] >= '0' && text[0] <= '7' && text[1] == '_') {
    const int dim = text[0] - '0';
    if (text[2] == 'U' || text[2] == 'u') return {dim, Variant::Upper};
    if (text[2] == 'L' || text[2] == 'l') return {dim, Variant::Lower};
  }
  throw ParseError("unknown KO class '" + std::string(text) + "' (expected e.g. 2_U, 5_L, or 4)");
}

std::ostream& operator<<(std::ostream& os, const KOClass& c) { return os << c.to_string(); }

const std::array<KOClass, 16>& all_classes() {
  static const std::array<KOClass, 16> classes = [] {
    std::array<KOClass, 16> out{};
    for (int d = 0; d < 8; ++d) {
      out[static_cast<std::size_t>(d)] = {d, Variant::Upper};
      out[static_cast<std::size_t>(d) + 8] = {d, Variant::Lower};
    }
    return out;
  }();
  return classes;
}

KOSigns signs_of_class(KOClass c) {
  if (c.dim < 0 || c.dim > 7) throw std::out_of_range("KO dimension out of range");
  return kCompleteTable[class_index(c)];
}

KOClass classify(const KOSigns& s, Parity p) {
  for (const KOClass& c : all_classes())
    if (c.parity() == p && signs_of_class(c) == s) return c;
  throw NoClass("no KO class with signs " + to_string(s) + " and parity " + to_string(p));
}

KOClass classic_class(int dim) {
  switch (dim) {
    case 0: return {0, Variant::Upper};
    case 2: return {2, Variant::Lower};
    case 4: return {4, Variant::Upper};
    case 6: return {6, Variant::Lower};
    default:
      if (dim < 0 || dim > 7) throw std::out_of_range("KO dimension out of range");
      return {dim, Variant::Upper};
  }
}

KOSigns flip_variant(const KOSigns& s) { return {s.eps_dprime * s.eps, -s.eps_prime, s.eps_dprime}; }

KOSigns predict_even_even(const KOSigns& si, const KOSigns& sj) { return graded_even_rule(si, sj); }

KOSigns predict_even_odd(const KOSigns& si, const KOSigns& sj) { return graded_even_rule(si, sj); }

KOSigns predict_odd_odd(const KOSigns& si, const KOSigns& sj) {
  const Sign left = -(si.eps_prime * sj.eps_dprime);
  const Sign right = -(si.eps_dprime * sj.eps_prime);
  if (left != right) {
    throw VariantMismatch("variant mismatch: " + to_string(si) + " x " + to_string(sj) + " gives eps' = " +
                          to_string(left) + " from -eps'_i eps''_j but " + to_string(right) +
                          " from -eps''_i eps'_j");
  }
  return {both_plus_factor(si.eps_dprime, sj.eps_dprime) * si.eps * sj.eps, left, -(si.eps_dprime * sj.eps_dprime)};
}

PredictedProduct predict(const KOSigns& si, Parity pi, const KOSigns& sj, Parity pj) {
  if (pi == Parity::Even && pj == Parity::Even) return {predict_even_even(si, sj), Parity::Even};
  if (pi == Parity::Odd && pj == Parity::Odd) return {predict_odd_odd(si, sj), Parity::Even};
  return {predict_even_odd(si, sj), Parity::Odd};
}

std::optional<KOClass> predict_class(KOClass ci, KOClass cj) {
  try {
    const auto p = predict(signs_of_class(ci), ci.parity(), signs_of_class(cj), cj.parity());
    return classify(p.signs, p.parity);
  } catch (const VariantMismatch&) {
    return std::nullopt;
  }
}

std::string to_string(DiracChoice c) { return c == DiracChoice::D ? "D" : "Dtilde"; }

TraditionalSigns traditional_predict(const KOSigns& si, Parity pi, const KOSigns& sj, Parity pj,
                                     DiracChoice choice) {
  Sign first_term;
  Sign second_term;
  if (choice == DiracChoice::D) {
    // D = Dᵢ⊗I + γᵢ⊗Dⱼ
    if (pi == Parity::Odd) throw OddFirstFactor("choice D needs a grading on the first factor");
    first_term = si.eps_prime;
    second_term = si.eps_dprime * sj.eps_prime;
  } else {
    // D̃ = Dᵢ⊗γⱼ + I⊗Dⱼ
    if (pj == Parity::Odd) throw OddSecondFactor("choice Dtilde needs a grading on the second factor");
    first_term = si.eps_prime * sj.eps_dprime;
    second_term = sj.eps_prime;
  }
  if (first_term != second_term) throw UndefinedProduct("JD = eps' DJ", first_term, second_term);

  TraditionalSigns out{si.eps * sj.eps, first_term, std::nullopt, Parity::Odd};
  if (pi == Parity::Even && pj == Parity::Even) {
    out.eps_dprime = si.eps_dprime * sj.eps_dprime;
    out.parity = Parity::Even;
  }
  return out;
}

KOSigns traditional_predict(const KOSigns& si, const KOSigns& sj, DiracChoice choice) {
  const auto t = traditional_predict(si, Parity::Even, sj, Parity::Even, choice);
  return {t.eps, t.eps_prime, *t.eps_dprime};
}

MnemonicDerivation derive_table_mnemonic() {
  MnemonicDerivation out;
  auto log = [&out](std::string line) { out.log.push_back(std::move(line)); };

  // Step 1
  std::vector<KOSigns> unpaired;
  for (const KOSigns& s : all_sign_triples()) unpaired.push_back(s);
  while (!unpaired.empty()) {
    const KOSigns s = unpaired.front();
    const KOSigns partner = flip_variant(s);
    if (partner == s) throw InternalInconsistency("flip_variant has a fixed point at " + to_string(s));
    const auto it = std::find(unpaired.begin(), unpaired.end(), partner);
    if (it == unpaired.end()) throw InternalInconsistency("flip partner of " + to_string(s) + " already used");
    unpaired.erase(it);
    unpaired.erase(unpaired.begin());
    out.flip_pairs.emplace_back(s, partner);
  }
  if (out.flip_pairs.size() != 4) throw InternalInconsistency("expected 4 flip pairs");
  log("Step 1: paired the 8 even sign triples under J -> gamma J into " + std::to_string(out.flip_pairs.size()) +
      " pairs");
  for (const auto& [a, b] : out.flip_pairs) log("  " + to_string(a) + " <-> " + to_string(b));

  // Step 2
  auto square = [](const KOSigns& s) { return predict_even_even(s, s); };
  auto in_pair = [&](const KOSigns& s, std::size_t k) {
    return out.flip_pairs[k].first == s || out.flip_pairs[k].second == s;
  };
  std::vector<std::size_t> closed;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& [a, b] = out.flip_pairs[k];
    if (in_pair(square(a), k) && in_pair(square(b), k)) closed.push_back(k);
  }
  out.self_closed_pair_count = closed.size();
  if (closed.size() != 1) {
    throw InternalInconsistency("expected exactly one self-closed pair, found " + std::to_string(closed.size()));
  }
  out.zero_pair = closed.front();
  std::vector<std::size_t> to_zero;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == out.zero_pair) continue;
    const auto& [a, b] = out.flip_pairs[k];
    if (in_pair(square(a), out.zero_pair) && in_pair(square(b), out.zero_pair)) to_zero.push_back(k);
  }
  out.squares_to_zero_pair_count = to_zero.size();
  if (to_zero.size() != 1) {
    throw InternalInconsistency("expected exactly one pair squaring to dimension 0, found " +
                                std::to_string(to_zero.size()));
  }
  out.four_pair = to_zero.front();
  log("Step 2: the only pair closed under the product is " + to_string(out.flip_pairs[out.zero_pair].first) + ", " +
      to_string(out.flip_pairs[out.zero_pair].second) + " -> dimension 0");
  log("        the pair squaring into dimension 0 is " + to_string(out.flip_pairs[out.four_pair].first) + ", " +
      to_string(out.flip_pairs[out.four_pair].second) + " -> dimension 4");

  // Step 3: enumerate which remaining pair is dimension 2 and which member of every
  // pair is upper, keeping labellings that satisfy {ε,ε′}(2n_L) = {ε,ε′}(2n+2_U).
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < 4; ++k)
    if (k != out.zero_pair && k != out.four_pair) rest.push_back(k);

  struct Labelling {
    std::array<KOSigns, 4> upper;  // even dims 0,2,4,6
    std::array<KOSigns, 4> lower;
  };
  std::vector<Labelling> chain_solutions;
  for (int swap = 0; swap < 2; ++swap) {
    const std::array<std::size_t, 4> pair_of_dim = {out.zero_pair, swap ? rest[1] : rest[0], out.four_pair,
                                                    swap ? rest[0] : rest[1]};
    for (unsigned mask = 0; mask < 16; ++mask) {
      Labelling l;
      for (std::size_t d = 0; d < 4; ++d) {
        const auto& [a, b] = out.flip_pairs[pair_of_dim[d]];
        const bool first_is_upper = ((mask >> d) & 1u) == 0;
        l.upper[d] = first_is_upper ? a : b;
        l.lower[d] = first_is_upper ? b : a;
      }
      bool ok = true;
      for (std::size_t d = 0; d < 4; ++d) {
        const KOSigns& low = l.lower[d];
        const KOSigns& up_next = l.upper[(d + 1) % 4];
        ok = ok && low.eps == up_next.eps && low.eps_prime == up_next.eps_prime;
      }
      if (ok) chain_solutions.push_back(l);
    }
  }
  out.chain_solution_count = chain_solutions.size();
  log("Step 3: " + std::to_string(chain_solutions.size()) +
      " labelling(s) satisfy the chain {eps,eps'}(2n_L) = {eps,eps'}(2n+1) = {eps,eps'}(2n+2_U)");

  std::vector<Labelling> resolved;
  for (const auto& l : chain_solutions) {
    bool ok = true;
    for (std::size_t d = 0; d < 4; ++d) {
      ok = ok && l.upper[d].eps_prime == l.upper[d].eps_dprime;
      ok = ok && l.lower[d].eps_prime == -l.lower[d].eps_dprime;
    }
    if (ok) resolved.push_back(l);
  }
  if (resolved.size() != 1) {
    throw InternalInconsistency("expected one labelling with eps'_U = eps''_U, found " +
                                std::to_string(resolved.size()));
  }
  log("        eps'_U = eps''_U selects " + std::to_string(resolved.size()) + " of them");
  const Labelling& l = resolved.front();

  for (std::size_t d = 0; d < 4; ++d) {
    const int even = static_cast<int>(2 * d);
    out.table[class_index({even, Variant::Upper})] = l.upper[d];
    out.table[class_index({even, Variant::Lower})] = l.lower[d];
    // Odd dimension 2d+1 inherits {ε,ε′} from the lower even neighbour; ε″_L from
    // ε″_{n+1,L} = ε″_{n,U}, and ε″_U from the upper rule ε′ = ε″.
    const KOSigns& below = l.lower[d];
    const Sign lower_label = l.upper[d].eps_dprime;
    const Sign upper_label = below.eps_prime;
    if (lower_label != -below.eps_prime) {
      throw InternalInconsistency("odd label for dimension " + std::to_string(even + 1) +
                                  " violates the lower rule eps' = -eps''");
    }
    out.table[class_index({even + 1, Variant::Upper})] = {below.eps, below.eps_prime, upper_label};
    out.table[class_index({even + 1, Variant::Lower})] = {below.eps, below.eps_prime, lower_label};
  }
  for (const KOClass& c : all_classes())
    log("  " + c.to_string() + " = " + to_string(out.table[class_index(c)]));
  return out;
}

ProductTable product_table() {
  ProductTable out{};
  const auto& classes = all_classes();
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) out[r][c] = predict_class(classes[r], classes[c]);
  return out;
}

}  // namespace spectral
