#include "spectral/runs.hpp"

#include "spectral/dga.hpp"
#include "spectral/exemplars.hpp"
#include "spectral/products.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace spectral {

void RunReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  j["counts"] = counts;
  j["passed"] = passed();
  j["exit_status"] = exit_status();
  return j;
}

std::string RunReport::summary() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    if (c.passed) {
      ++ok;
      continue;
    }
    os << "FAIL  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  for (const auto& [name, n] : counts) os << name << ": " << n << '\n';
  os << ok << "/" << checks.size() << " checks passed\n";
  return os.str();
}

void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

namespace {

// Each job fills its own slot; slots are merged in index order afterwards.
struct Slot {
  std::vector<CheckEntry> checks;
  std::map<std::string, std::size_t> counts;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

void merge(RunReport& r, const std::vector<Slot>& slots) {
  for (const auto& s : slots) {
    r.checks.insert(r.checks.end(), s.checks.begin(), s.checks.end());
    for (const auto& [k, v] : s.counts) r.counts[k] += v;
  }
}

KozulConvention natural_convention(Parity pi, Parity pj) {
  return pi == Parity::Odd && pj == Parity::Even ? KozulConvention::Second : KozulConvention::First;
}

std::vector<KozulConvention> conventions_for(Parity pi, Parity pj) {
  if (pi != pj) return {natural_convention(pi, pj)};
  return {KozulConvention::First, KozulConvention::Second};
}

std::string pair_name(KOClass a, KOClass b) { return a.to_string() + " x " + b.to_string(); }

void graded_pair(Slot& s, KOClass ci, KOClass cj) {
  const auto& cat = default_catalog();
  const RealSpectralTriple& ti = cat.at(ci);
  const RealSpectralTriple& tj = cat.at(cj);
  const std::string name = pair_name(ci, cj);

  if (ci.variant != cj.variant) {
    ++s.counts["graded mixed-variant pairs"];
    for (KozulConvention k : {KozulConvention::First, KozulConvention::Second}) {
      bool mismatch = false;
      std::string detail;
      try {
        graded_product(ti, tj, k);
        detail = "product was computed";
      } catch (const VariantMismatch&) {
        mismatch = true;
      } catch (const Error& e) {
        detail = e.what();
      }
      ++s.counts["graded mixed-variant evaluations"];
      if (mismatch) ++s.counts["graded mixed-variant evaluations rejected"];
      s.add("mixed variants rejected (" + to_string(k) + "): " + name, mismatch, detail);
    }
    return;
  }

  ++s.counts["graded same-variant pairs"];
  const auto expected = predict_class(ci, cj);
  const bool even_even = ci.parity() == Parity::Even && cj.parity() == Parity::Even;
  std::vector<KOSigns> extracted;
  bool ok = true;
  std::string detail;
  for (KozulConvention k : conventions_for(ci.parity(), cj.parity())) {
    try {
      const ProductReport r = graded_product(ti, tj, k);
      extracted.push_back(r.extracted);
      ++s.counts["graded same-variant evaluations"];
      const bool good = r.passed() && expected && r.cls == *expected;
      if (!good) detail += to_string(k) + ": got " + r.cls.to_string() + " " + to_string(r.extracted) + "; ";
      ok = ok && good;
      if (even_even && k == KozulConvention::First) {
        const bool sq = check_dirac_square(ti, tj, r);
        ++s.counts["dirac square pairs"];
        s.add("D^2 additive: " + name, sq);
      }
    } catch (const Error& e) {
      ok = false;
      detail += to_string(k) + ": " + e.what() + "; ";
    }
  }
  if (ok) ++s.counts["graded same-variant pairs defined"];
  s.add("graded product: " + name + " -> " + (expected ? expected->to_string() : "?"), ok, detail);
  if (extracted.size() == 2) s.add("convention independent signs: " + name, extracted[0] == extracted[1]);

  if (even_even) {
    const EquivalenceReport eq = check_convention_equivalence(ti, tj);
    ++s.counts["convention equivalence pairs"];
    if (eq.real_structure_exact) ++s.counts["convention equivalence pairs with J mapped exactly"];
    std::string phase = eq.real_structure_phase ? eq.real_structure_phase->to_string() : "none";
    s.add("U maps {D, J} to {D~, J~}: " + name, eq.holds(), "dirac=" + std::string(eq.dirac ? "yes" : "no") +
                                                                  ", J phase=" + phase);
  }
}

std::string traditional_outcome_predicted(KOClass ci, KOClass cj, DiracChoice choice) {
  try {
    const TraditionalSigns t =
        traditional_predict(signs_of_class(ci), ci.parity(), signs_of_class(cj), cj.parity(), choice);
    std::string out = "defined {" + to_string(t.eps) + "," + to_string(t.eps_prime);
    if (t.eps_dprime) out += "," + to_string(*t.eps_dprime);
    return out + "}";
  } catch (const UndefinedProduct&) {
    return "undefined";
  } catch (const OddFirstFactor&) {
    return "odd first factor";
  } catch (const OddSecondFactor&) {
    return "odd second factor";
  }
}

std::string traditional_outcome_operators(KOClass ci, KOClass cj, DiracChoice choice) {
  const auto& cat = default_catalog();
  try {
    const ProductReport r = traditional_product(cat.at(ci), cat.at(cj), choice);
    std::string out = "defined {" + to_string(r.extracted.eps) + "," + to_string(r.extracted.eps_prime);
    if (r.result.parity() == Parity::Even) out += "," + to_string(r.extracted.eps_dprime);
    return out + "}";
  } catch (const UndefinedProduct&) {
    return "undefined";
  } catch (const OddFirstFactor&) {
    return "odd first factor";
  } catch (const OddSecondFactor&) {
    return "odd second factor";
  }
}

void traditional_pair(Slot& s, int ni, int nj, DiracChoice choice) {
  const KOClass ci = classic_class(ni);
  const KOClass cj = classic_class(nj);
  const std::string predicted = traditional_outcome_predicted(ci, cj, choice);
  const std::string actual = traditional_outcome_operators(ci, cj, choice);
  ++s.counts["traditional cases"];
  ++s.counts["traditional " + (actual.rfind("defined", 0) == 0 ? std::string("defined") : actual)];
  s.add("traditional " + to_string(choice) + ": " + std::to_string(ni) + " x " + std::to_string(nj), predicted == actual,
        "predicted " + predicted + ", operators " + actual);
}

std::vector<KOClass> classes_of(Variant v, std::optional<Parity> p) {
  std::vector<KOClass> out;
  for (const auto& c : all_classes())
    if (c.variant == v && (!p || c.parity() == *p)) out.push_back(c);
  return out;
}

void class_associativity(RunReport& r) {
  std::size_t total = 0, good = 0;
  for (Variant v : {Variant::Upper, Variant::Lower}) {
    const auto cs = classes_of(v, std::nullopt);
    for (const auto& a : cs)
      for (const auto& b : cs)
        for (const auto& c : cs) {
          ++total;
          const auto ab = predict_class(a, b);
          const auto bc = predict_class(b, c);
          if (ab && bc && predict_class(*ab, c) == predict_class(a, *bc)) ++good;
        }
  }
  r.counts["class-level associativity triples"] = total;
  r.add("class-level associativity on all same-variant triples", good == total,
        std::to_string(good) + "/" + std::to_string(total));
}

struct Triple3 {
  KOClass a, b, c;
};

std::vector<Triple3> sample_triples(std::mt19937& rng, std::size_t count, bool even_only, std::size_t max_dim) {
  std::vector<Triple3> out;
  const auto& cat = default_catalog();
  std::uniform_int_distribution<int> coin(0, 1);
  while (out.size() < count) {
    const Variant v = coin(rng) ? Variant::Upper : Variant::Lower;
    const auto cs = classes_of(v, even_only ? std::optional<Parity>(Parity::Even) : std::nullopt);
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    Triple3 t{cs[pick(rng)], cs[pick(rng)], cs[pick(rng)]};
    std::size_t dim = cat.at(t.a).hilbert_dim * cat.at(t.b).hilbert_dim * cat.at(t.c).hilbert_dim;
    const int odd = (t.a.parity() == Parity::Odd) + (t.b.parity() == Parity::Odd) + (t.c.parity() == Parity::Odd);
    if (odd >= 2) dim *= 2;
    if (dim <= max_dim) out.push_back(t);
  }
  return out;
}

std::string triple_name(const Triple3& t) {
  return t.a.to_string() + " x " + t.b.to_string() + " x " + t.c.to_string();
}

void operator_associativity(Slot& s, const Triple3& t, KozulConvention k) {
  const auto& cat = default_catalog();
  const AssociativityReport a = check_operator_associativity(cat.at(t.a), cat.at(t.b), cat.at(t.c), k);
  ++s.counts["operator associativity triples"];
  if (a.real_structure_exact) ++s.counts["operator associativity triples with J equal exactly"];
  s.add("operator associativity (" + to_string(k) + "): " + triple_name(t), a.holds(),
        std::string("D ") + (a.dirac ? "equal" : "differ") + ", gamma " + (a.grading ? "equal" : "differ") +
            ", J ratio " + (a.real_structure_phase ? a.real_structure_phase->to_string() : "none"));
}

ProductReport chain(const RealSpectralTriple& x, const RealSpectralTriple& y) {
  return graded_product(x, y, natural_convention(x.parity(), y.parity()));
}

void mixed_associativity(Slot& s, const Triple3& t) {
  const auto& cat = default_catalog();
  ++s.counts["operator class associativity triples"];
  try {
    const KOClass left = chain(chain(cat.at(t.a), cat.at(t.b)).result, cat.at(t.c)).cls;
    const KOClass right = chain(cat.at(t.a), chain(cat.at(t.b), cat.at(t.c)).result).cls;
    s.add("class associativity of operator products: " + triple_name(t), left == right,
          left.to_string() + " vs " + right.to_string());
  } catch (const Error& e) {
    s.add("class associativity of operator products: " + triple_name(t), false, e.what());
  }
}

}  // namespace

RunReport run_sweep(const SweepOptions& opts) {
  RunReport r;
  r.command = "sweep";

  {
    std::vector<Slot> slots(256);
    for_each_index(256, opts.parallel, [&](std::size_t n) {
      graded_pair(slots[n], all_classes()[n / 16], all_classes()[n % 16]);
    });
    merge(r, slots);
  }
  {
    std::vector<Slot> slots(128);
    for_each_index(128, opts.parallel, [&](std::size_t n) {
      const int ni = static_cast<int>(n / 16);
      const int nj = static_cast<int>((n / 2) % 8);
      traditional_pair(slots[n], ni, nj, n % 2 == 0 ? DiracChoice::D : DiracChoice::DTilde);
    });
    merge(r, slots);
  }

  class_associativity(r);

  std::mt19937 rng(opts.seed);
  const auto even = sample_triples(rng, opts.associativity_samples, true, 512);
  const auto mixed = sample_triples(rng, opts.associativity_samples, false, 256);
  {
    std::vector<Slot> slots(even.size() * 2 + mixed.size());
    for_each_index(slots.size(), opts.parallel, [&](std::size_t n) {
      if (n < even.size() * 2) {
        operator_associativity(slots[n], even[n / 2], n % 2 == 0 ? KozulConvention::First : KozulConvention::Second);
      } else {
        mixed_associativity(slots[n], mixed[n - even.size() * 2]);
      }
    });
    merge(r, slots);
  }
  return r;
}

RunReport run_dga_check() {
  RunReport r;
  r.command = "dga-check";

  auto record = [&r](const std::string& name, const StarDGA& a, std::optional<Sign> sign) {
    const DgaReport v = validate_dga(a);
    std::string detail;
    for (const auto& c : v.checks)
      if (!c.holds) detail += c.axiom + " at " + c.witness + "; ";
    bool ok = v.valid();
    if (sign) ok = ok && v.global_signs == std::vector<Sign>{*sign};
    std::string signs;
    for (Sign s : v.global_signs) signs += (signs.empty() ? "" : ",") + to_string(s);
    r.add(name + " (basis " + std::to_string(a.size()) + ", s = {" + signs + "})", ok, detail);
    ++r.counts["algebras validated"];
  };

  const StarDGA ext = exterior_example();
  StarDGA twisted = ext;
  twisted.star(2, 2) = -1;
  record("exterior *-DGA", ext, Sign::Plus);
  record("exterior *-DGA with negated star on dx", twisted, Sign::Minus);

  for (KozulConvention k : {KozulConvention::First, KozulConvention::Second}) {
    const std::string tag = " [" + to_string(k) + "]";
    const StarDGA sq = dga_tensor(ext, ext, k);
    record("exterior x exterior" + tag, sq, Sign::Plus);
    bool degrees = sq.size() == 9;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) degrees = degrees && sq.degrees[i * 3 + j] == ext.degrees[i] + ext.degrees[j];
    r.add("product degrees add" + tag, degrees);
    record("twisted x twisted" + tag, dga_tensor(twisted, twisted, k), Sign::Minus);

    const StarDGA left = dga_tensor(sq, ext, k);
    const StarDGA right = dga_tensor(ext, dga_tensor(ext, ext, k), k);
    record("(exterior x exterior) x exterior" + tag, left, Sign::Plus);
    record("exterior x (exterior x exterior)" + tag, right, Sign::Plus);
    r.add("reassociation isomorphism" + tag, isomorphic_via(left, right, reassociation_map(3, 3, 3)));

    std::vector<std::size_t> id(ext.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    r.add("exterior x unit algebra isomorphic to exterior" + tag,
          isomorphic_via(dga_tensor(ext, trivial_algebra(), k), ext, id));
    r.add("unit algebra x exterior isomorphic to exterior" + tag,
          isomorphic_via(dga_tensor(trivial_algebra(), ext, k), ext, id));

    bool rejected = false;
    try {
      dga_tensor(ext, twisted, k);
    } catch (const SignMismatch&) {
      rejected = true;
    }
    r.add("s = +1 with s = -1 rejected" + tag, rejected);
  }
  return r;
}

}  // namespace spectral
