#include "spectral/matrix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace spectral {

CMatrix::CMatrix(std::size_t n) : n_(n), data_(n * n) {}

CMatrix::CMatrix(std::initializer_list<ExactComplex> entries) : data_(entries) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(data_.size()))));
  if (n * n != data_.size()) throw std::invalid_argument("CMatrix: entry count is not a square");
  n_ = n;
}

CMatrix::CMatrix(std::size_t n, std::vector<ExactComplex> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) throw std::invalid_argument("CMatrix: entry count does not match n*n");
}

CMatrix CMatrix::identity(std::size_t n) { return scalar(n, 1); }

CMatrix CMatrix::scalar(std::size_t n, const ExactComplex& value) {
  CMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = value;
  return m;
}

bool CMatrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

bool CMatrix::is_identity() const { return *this == identity(n_); }

std::size_t CMatrix::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& z : data_)
    if (!z.is_zero()) ++count;
  return count;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(const ExactComplex& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix CMatrix::operator-() const {
  CMatrix out(*this);
  for (auto& z : out.data_) z = -z;
  return out;
}

// Operators in this library are sparse (sums of a few Pauli strings), so both
// factors are scanned for zeros before any rational arithmetic happens.
CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: size mismatch in *");
  const std::size_t n = a.n_;
  CMatrix out(n);
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < n; ++k) {
    cols.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (!b(k, j).is_zero()) cols.push_back(j);
    if (cols.empty()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const ExactComplex& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : cols) out(i, j).add_product(aik, b(k, j));
    }
  }
  return out;
}

std::optional<ExactComplex> CMatrix::ratio_to(const CMatrix& other) const {
  if (other.n_ != n_) return std::nullopt;
  std::optional<ExactComplex> ratio;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const auto& x = data_[k];
    const auto& y = other.data_[k];
    if (y.is_zero()) {
      if (!x.is_zero()) return std::nullopt;
      continue;
    }
    if (!ratio) {
      ratio = x / y;
    } else if (x != *ratio * y) {
      return std::nullopt;
    }
  }
  return ratio;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  CMatrix out(na * nb);
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < na; ++q) {
      const ExactComplex& apq = a(p, q);
      if (apq.is_zero()) continue;
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c) {
          const ExactComplex& brc = b(r, c);
          if (brc.is_zero()) continue;
          out(p * nb + r, q * nb + c) = apq * brc;
        }
    }
  return out;
}

CMatrix kron(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CMatrix dagger(const CMatrix& a) {
  const std::size_t n = a.size();
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(c, r) = a(r, c).conj();
  return out;
}

CMatrix transpose(const CMatrix& a) {
  const std::size_t n = a.size();
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(c, r) = a(r, c);
  return out;
}

CMatrix conj_entrywise(const CMatrix& a) {
  const std::size_t n = a.size();
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = a(r, c).conj();
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

CMatrix power(const CMatrix& a, unsigned k) {
  CMatrix out = CMatrix::identity(a.size());
  for (unsigned e = 0; e < k; ++e) out = out * a;
  return out;
}

bool is_hermitian(const CMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (a(r, c) != a(c, r).conj()) return false;
  return true;
}

bool is_unitary(const CMatrix& a) { return (a * dagger(a)).is_identity(); }

bool is_hermitian_involution(const CMatrix& a) { return is_hermitian(a) && (a * a).is_identity(); }

SignMatch match_sign(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.size() != rhs.size()) return {};
  SignMatch m{true, true};
  const auto l = lhs.entries();
  const auto r = rhs.entries();
  for (std::size_t k = 0; k < l.size() && (m.plus || m.minus); ++k) {
    if (l[k].is_zero() && r[k].is_zero()) continue;
    if (m.plus && l[k] != r[k]) m.plus = false;
    if (m.minus && l[k] != -r[k]) m.minus = false;
  }
  return m;
}

const CMatrix& pauli(int index) {
  static const std::array<CMatrix, 4> matrices = {
      CMatrix{1, 0, 0, 1},
      CMatrix{0, 1, 1, 0},
      CMatrix{0, ExactComplex(0, -1), ExactComplex(0, 1), 0},
      CMatrix{1, 0, 0, -1},
  };
  return matrices.at(static_cast<std::size_t>(index));
}

std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
  const std::size_t n = m.size();
  os << "[";
  for (std::size_t r = 0; r < n; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < n; ++c) os << (c ? ", " : "") << m(r, c);
  }
  return os << "]";
}

}  // namespace spectral
