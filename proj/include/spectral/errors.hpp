#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A named structural invariant of a triple failed (hermiticity, {D,γ} = 0, ...).
class StructuralViolation : public Error {
 public:
  explicit StructuralViolation(std::string invariant)
      : Error("structural violation: " + invariant), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// A real-structure relation holds with neither sign.
class NotASignRelation : public Error {
 public:
  explicit NotASignRelation(std::string relation)
      : Error("relation " + relation + " holds with neither sign"), relation_(std::move(relation)) {}
  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

/// Upper and lower triples were mixed; the product has no KO-dimension.
class VariantMismatch : public Error {
 public:
  using Error::Error;
};

class NoClass : public Error {
 public:
  using Error::Error;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a non-trivial grading received an odd triple.
class OddTriple : public Error {
 public:
  using Error::Error;
};

class OddFirstFactor : public OddTriple {
 public:
  using OddTriple::OddTriple;
};

class OddSecondFactor : public OddTriple {
 public:
  using OddTriple::OddTriple;
};

class UnsupportedConvention : public Error {
 public:
  using Error::Error;
};

/// The sign ε′ of an input could not be determined (D = 0).
class IndeterminateSign : public Error {
 public:
  using Error::Error;
};

class NoRealStructureFound : public Error {
 public:
  using Error::Error;
};

class ZeroMomentum : public Error {
 public:
  using Error::Error;
};

/// Two *-DGAs with incompatible d/star signs.
class SignMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace spectral
