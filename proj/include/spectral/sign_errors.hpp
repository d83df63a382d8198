#pragma once

#include "spectral/errors.hpp"
#include "spectral/ko_signs.hpp"

#include <optional>
#include <string>

namespace spectral {

/// The traditional product violates a real-structure relation. Carries the relation
/// and the two signs its pieces demanded.
class UndefinedProduct : public Error {
 public:
  UndefinedProduct(std::string relation, Sign first_term, Sign second_term)
      : Error("undefined product: " + relation + " requires " + to_string(first_term) + " from the first term but " +
              to_string(second_term) + " from the second"),
        relation_(std::move(relation)),
        first_(first_term),
        second_(second_term) {}

  const std::string& relation() const { return relation_; }
  Sign first_term_sign() const { return first_; }
  Sign second_term_sign() const { return second_; }

 private:
  std::string relation_;
  Sign first_;
  Sign second_;
};

}  // namespace spectral
