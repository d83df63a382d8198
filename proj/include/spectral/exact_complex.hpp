#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace spectral {

using Rational = mpq_class;

/// Gaussian-rational scalar: re + im·i with exact rational parts.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  ExactComplex(long re) : re_(re), im_(0) {}
  ExactComplex(int re) : re_(re), im_(0) {}

  static ExactComplex i() { return {0, 1}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }
  /// |z|² as a rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  /// Adds a·b into this value without building a temporary product.
  void add_product(const ExactComplex& a, const ExactComplex& b);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  ExactComplex operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form "a/b+c/d i" (imaginary part always present).
  std::string to_string() const;
  /// Accepts the canonical form, a bare rational, or a bare "c/d i".
  static ExactComplex parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace spectral
