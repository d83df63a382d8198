#pragma once

#include "spectral/exact_complex.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace spectral {

/// Dense square matrix over the Gaussian rationals. Equality is exact.
class CMatrix {
 public:
  CMatrix() = default;
  /// n×n zero matrix.
  explicit CMatrix(std::size_t n);
  /// Row-major entries; the count must be a perfect square.
  CMatrix(std::initializer_list<ExactComplex> entries);
  CMatrix(std::size_t n, std::vector<ExactComplex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t n) { return CMatrix(n); }
  static CMatrix scalar(std::size_t n, const ExactComplex& value);

  std::size_t size() const { return n_; }

  const ExactComplex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  ExactComplex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  std::span<const ExactComplex> entries() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzero_count() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(const ExactComplex& s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, const ExactComplex& s) { return a *= s; }
  friend CMatrix operator*(const ExactComplex& s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  CMatrix operator-() const;

  friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  /// The scalar λ with *this == λ·other, if one exists. Fails when other is zero.
  std::optional<ExactComplex> ratio_to(const CMatrix& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<ExactComplex> data_;
};

/// Kronecker product; block (p,q) of the result is a(p,q)·b.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(std::initializer_list<CMatrix> factors);
CMatrix dagger(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
CMatrix conj_entrywise(const CMatrix& a);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);
/// a^k for k ≥ 0.
CMatrix power(const CMatrix& a, unsigned k);

bool is_hermitian(const CMatrix& a);
bool is_unitary(const CMatrix& a);
/// Hermitian with square I.
bool is_hermitian_involution(const CMatrix& a);

/// Which signs s ∈ {+1,−1} satisfy lhs == s·rhs. Both hold iff both sides vanish.
struct SignMatch {
  bool plus = false;
  bool minus = false;
};
SignMatch match_sign(const CMatrix& lhs, const CMatrix& rhs);

/// Pauli matrices: index 0 is I₂, then σ₁, σ₂, σ₃.
const CMatrix& pauli(int index);

std::ostream& operator<<(std::ostream& os, const CMatrix& m);

}  // namespace spectral
