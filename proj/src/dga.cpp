#include "spectral/dga.hpp"

#include "spectral/errors.hpp"

#include <algorithm>

namespace spectral {

StarDGA::StarDGA(std::vector<std::string> l, std::vector<int> d, std::size_t u)
    : labels(std::move(l)), degrees(std::move(d)), unit(u) {
  if (labels.size() != degrees.size()) throw std::invalid_argument("StarDGA: labels and degrees differ in length");
  const std::size_t n = labels.size();
  mult.assign(n * n * n, ExactComplex());
  star = CMatrix(n);
  diff = CMatrix(n);
}

GradedElement StarDGA::basis(std::size_t i) const {
  GradedElement e(size());
  e[i] = 1;
  return e;
}

GradedElement StarDGA::multiply(const GradedElement& x, const GradedElement& y) const {
  const std::size_t n = size();
  GradedElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const ExactComplex xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) out[k].add_product(xy, c(i, j, k));
    }
  }
  return out;
}

GradedElement StarDGA::apply_star(const GradedElement& x) const {
  const std::size_t n = size();
  GradedElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const ExactComplex xc = x[i].conj();
    for (std::size_t k = 0; k < n; ++k)
      if (!star(k, i).is_zero()) out[k].add_product(xc, star(k, i));
  }
  return out;
}

GradedElement StarDGA::apply_d(const GradedElement& x) const {
  const std::size_t n = size();
  GradedElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (!diff(k, i).is_zero()) out[k].add_product(x[i], diff(k, i));
  }
  return out;
}

std::optional<int> StarDGA::degree(const GradedElement& x) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i].is_zero()) continue;
    if (deg && *deg != degrees[i]) return std::nullopt;
    deg = degrees[i];
  }
  return deg;
}

GradedElement operator+(GradedElement a, const GradedElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

GradedElement operator-(GradedElement a, const GradedElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

GradedElement operator*(const ExactComplex& s, GradedElement a) {
  for (auto& x : a) x *= s;
  return a;
}

bool is_zero(const GradedElement& x) {
  return std::all_of(x.begin(), x.end(), [](const ExactComplex& z) { return z.is_zero(); });
}

bool DgaReport::valid() const {
  return !global_signs.empty() && std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.holds; });
}

namespace {

ExactComplex parity_sign(int exponent) { return exponent % 2 == 0 ? ExactComplex(1) : ExactComplex(-1); }

class Recorder {
 public:
  explicit Recorder(const StarDGA& a) : a_(a) {}

  void fail(const std::string& axiom, std::string witness) {
    auto& c = find(axiom);
    if (c.holds) {
      c.holds = false;
      c.witness = std::move(witness);
    }
  }
  void declare(const std::string& axiom) { find(axiom); }
  std::string name(std::size_t i) const { return a_.labels[i]; }
  std::string name(std::size_t i, std::size_t j) const { return "(" + a_.labels[i] + ", " + a_.labels[j] + ")"; }

  std::vector<AxiomCheck> take() { return std::move(checks_); }

 private:
  AxiomCheck& find(const std::string& axiom) {
    for (auto& c : checks_)
      if (c.axiom == axiom) return c;
    checks_.push_back({axiom, true, ""});
    return checks_.back();
  }

  const StarDGA& a_;
  std::vector<AxiomCheck> checks_;
};

}  // namespace

DgaReport validate_dga(const StarDGA& a) {
  const std::size_t n = a.size();
  Recorder rec(a);
  static const char* kAxioms[] = {"basis well formed",
                                  "unit",
                                  "degree additivity",
                                  "associativity",
                                  "star preserves degree",
                                  "star involutive",
                                  "star graded antimultiplicative",
                                  "d raises degree by one",
                                  "d^2 = 0",
                                  "graded Leibniz rule",
                                  "d star compatibility"};
  for (const char* ax : kAxioms) rec.declare(ax);

  const bool shaped = n > 0 && a.degrees.size() == n && a.mult.size() == n * n * n && a.star.size() == n &&
                      a.diff.size() == n && a.unit < n && a.degrees[a.unit] == 0;
  if (!shaped) {
    rec.fail("basis well formed", "structure sizes or unit do not match the basis");
    return {rec.take(), {}};
  }

  std::vector<GradedElement> e, es, de;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis(i));
    es.push_back(a.apply_star(e[i]));
    de.push_back(a.apply_d(e[i]));
  }

  bool plus = true, minus = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.multiply(e[a.unit], e[i]) != e[i] || a.multiply(e[i], e[a.unit]) != e[i]) rec.fail("unit", rec.name(i));
    if (!is_zero(es[i]) && a.degree(es[i]) != a.degrees[i]) rec.fail("star preserves degree", rec.name(i));
    if (a.apply_star(es[i]) != e[i]) rec.fail("star involutive", rec.name(i));
    if (!is_zero(de[i]) && a.degree(de[i]) != a.degrees[i] + 1) rec.fail("d raises degree by one", rec.name(i));
    if (!is_zero(a.apply_d(de[i]))) rec.fail("d^2 = 0", rec.name(i));

    const GradedElement lhs = a.apply_d(es[i]);
    const GradedElement rhs = a.apply_star(de[i]);
    if (lhs != rhs) plus = false;
    if (lhs != ExactComplex(-1) * rhs) minus = false;
  }
  if (!plus && !minus) rec.fail("d star compatibility", "no global sign s with d[a*] = s d[a]*");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int di = a.degrees[i];
      const int dj = a.degrees[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero() && a.degrees[k] != di + dj) rec.fail("degree additivity", rec.name(i, j));

      const GradedElement prod = a.multiply(e[i], e[j]);
      // (ab)* = (−1)^{|a||b|} b* a*
      if (a.apply_star(prod) != parity_sign(di * dj) * a.multiply(es[j], es[i]))
        rec.fail("star graded antimultiplicative", rec.name(i, j));
      // d(ab) = d(a) b + (−1)^{|a|} a d(b)
      if (a.apply_d(prod) != a.multiply(de[i], e[j]) + parity_sign(di) * a.multiply(e[i], de[j]))
        rec.fail("graded Leibniz rule", rec.name(i, j));

      if (is_zero(prod)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (a.multiply(prod, e[k]) != a.multiply(e[i], a.multiply(e[j], e[k])))
          rec.fail("associativity", "(" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")");
      }
    }
  }
  // Products that vanish on the left still need (ab)c = a(bc) = 0 on the right.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(a.multiply(e[i], e[j]))) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(a.multiply(e[i], a.multiply(e[j], e[k]))))
          rec.fail("associativity", "(" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")");
    }

  DgaReport r{rec.take(), {}};
  if (plus) r.global_signs.push_back(Sign::Plus);
  if (minus) r.global_signs.push_back(Sign::Minus);
  return r;
}

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  auto wrap = [](const std::string& s) { return s.find("⊗") == std::string::npos ? s : "(" + s + ")"; };
  return wrap(a) + "⊗" + wrap(b);
}

void require_valid(const StarDGA& a, const char* which) {
  const DgaReport r = validate_dga(a);
  for (const auto& c : r.checks)
    if (!c.holds) throw StructuralViolation(std::string(which) + " *-DGA: " + c.axiom);
  if (r.global_signs.empty()) throw StructuralViolation(std::string(which) + " *-DGA: d star compatibility");
}

std::vector<Sign> sign_set(const StarDGA& a) { return validate_dga(a).global_signs; }

}  // namespace

StarDGA dga_tensor(const StarDGA& a, const StarDGA& b, KozulConvention k) {
  require_valid(a, "first");
  require_valid(b, "second");
  const auto sa = sign_set(a);
  const auto sb = sign_set(b);
  const bool common = std::any_of(sa.begin(), sa.end(), [&](Sign s) {
    return std::find(sb.begin(), sb.end(), s) != sb.end();
  });
  if (!common) throw SignMismatch("tensor factors have incompatible d star signs");

  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back(pair_label(a.labels[i], b.labels[j]));
      degrees.push_back(a.degrees[i] + b.degrees[j]);
    }
  StarDGA t(std::move(labels), std::move(degrees), a.unit * nb + b.unit);
  auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };

  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const int exponent = k == KozulConvention::First ? b.degrees[j1] * a.degrees[i2]
                                                           : a.degrees[i1] * b.degrees[j2];
          const ExactComplex s = parity_sign(exponent);
          for (std::size_t i3 = 0; i3 < na; ++i3) {
            if (a.c(i1, i2, i3).is_zero()) continue;
            for (std::size_t j3 = 0; j3 < nb; ++j3) {
              if (b.c(j1, j2, j3).is_zero()) continue;
              t.c(idx(i1, j1), idx(i2, j2), idx(i3, j3)) = s * a.c(i1, i2, i3) * b.c(j1, j2, j3);
            }
          }
        }

  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t col = idx(i, j);
      const ExactComplex sd_a = k == KozulConvention::First ? ExactComplex(1) : parity_sign(b.degrees[j]);
      const ExactComplex sd_b = k == KozulConvention::First ? parity_sign(a.degrees[i]) : ExactComplex(1);
      for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < nb; ++q) {
          t.star(idx(p, q), col) = a.star(p, i) * b.star(q, j);
          ExactComplex dv;
          if (q == j) dv += sd_a * a.diff(p, i);
          if (p == i) dv += sd_b * b.diff(q, j);
          t.diff(idx(p, q), col) = dv;
        }
    }
  return t;
}

StarDGA exterior_example() {
  StarDGA a({"1", "x", "dx"}, {0, 0, 1}, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    a.c(0, i, i) = 1;
    a.c(i, 0, i) = 1;
    a.star(i, i) = 1;
  }
  a.diff(2, 1) = 1;
  return a;
}

StarDGA trivial_algebra() {
  StarDGA a({"1"}, {0}, 0);
  a.c(0, 0, 0) = 1;
  a.star(0, 0) = 1;
  return a;
}

std::vector<std::size_t> reassociation_map(std::size_t na, std::size_t nb, std::size_t nc) {
  std::vector<std::size_t> map(na * nb * nc);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nc; ++k) map[(i * nb + j) * nc + k] = i * (nb * nc) + (j * nc + k);
  return map;
}

bool isomorphic_via(const StarDGA& a, const StarDGA& b, const std::vector<std::size_t>& map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (map[i] >= n || hit[map[i]]) return false;
    hit[map[i]] = true;
    if (a.degrees[i] != b.degrees[map[i]]) return false;
  }
  if (map[a.unit] != b.unit) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.star(i, j) != b.star(map[i], map[j]) || a.diff(i, j) != b.diff(map[i], map[j])) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != b.c(map[i], map[j], map[k])) return false;
    }
  return true;
}

}  // namespace spectral
