#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpcoh {

// A structure or module axiom failed on a concrete basis tuple. `axiom` is a
// stable identifier (e.g. "not_associative", "sigma_equivariance"); `witness`
// holds the basis indices exhibiting the failure.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(std::string axiom, std::vector<long> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<long>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<long> witness_;
};

// Malformed input file or string. `context` carries file/position info.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string context, std::string what);

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

// A requested computation would exceed the configured column budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(long dimension, long budget);

  long dimension() const noexcept { return dimension_; }
  long budget() const noexcept { return budget_; }

 private:
  long dimension_;
  long budget_;
};

// An internal consistency check failed: a differential square is nonzero, a
// claimed subspace is not one, a lift through an exact sequence failed, or an
// exactness slot is broken. These indicate a bug or corrupted data, never an
// expected user-facing condition. `kind` is one of:
//   "not_a_subspace", "total_square_nonzero", "exactness_failure",
//   "lift_failed", "mismatched_dims", "connecting_ill_defined".
class InvariantError : public std::runtime_error {
 public:
  InvariantError(std::string kind, std::string detail);

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class UnknownExampleError : public std::runtime_error {
 public:
  explicit UnknownExampleError(const std::string& name);
};

}  // namespace lpcoh
