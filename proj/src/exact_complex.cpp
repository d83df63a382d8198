#include "spectral/exact_complex.hpp"

#include "spectral/errors.hpp"

#include <cctype>
#include <string>

namespace spectral {

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw std::domain_error("ExactComplex: division by zero");
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

void ExactComplex::add_product(const ExactComplex& a, const ExactComplex& b) {
  const bool ar = a.is_real();
  const bool br = b.is_real();
  if (ar && br) {
    re_ += a.re_ * b.re_;
  } else if (ar) {
    re_ += a.re_ * b.re_;
    im_ += a.re_ * b.im_;
  } else if (br) {
    re_ += a.re_ * b.re_;
    im_ += a.im_ * b.re_;
  } else {
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }
}

std::string ExactComplex::to_string() const {
  std::string out = re_.get_str();
  if (sgn(im_) < 0) {
    out += "-";
    out += Rational(-im_).get_str();
  } else {
    out += "+";
    out += im_.get_str();
  }
  out += " i";
  return out;
}

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty rational in '" + std::string(whole) + "'");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw ParseError("bad rational '" + std::string(text) + "' in '" + std::string(whole) + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("bad rational '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ExactComplex ExactComplex::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i') return {parse_rational(text, whole), 0};

  text.remove_suffix(1);
  text = trim(text);
  // Split at the sign that separates the real and imaginary parts (not a leading sign).
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0, parse_rational(trim(text), whole)};
  Rational re = parse_rational(trim(text.substr(0, split)), whole);
  Rational im = parse_rational(trim(text.substr(split)), whole);
  return {std::move(re), std::move(im)};
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.to_string(); }

}  // namespace spectral
