#include "lpcoh/errors.hpp"

#include <sstream>

namespace lpcoh {

namespace {

std::string axiom_message(const std::string& axiom, const std::vector<long>& witness) {
  std::ostringstream out;
  out << "axiom " << axiom << " fails";
  if (!witness.empty()) {
    out << " at basis tuple (";
    for (size_t i = 0; i < witness.size(); ++i) {
      if (i) out << ", ";
      out << witness[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

AxiomError::AxiomError(std::string axiom, std::vector<long> witness)
    : std::runtime_error(axiom_message(axiom, witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::string context, std::string what)
    : std::runtime_error(context.empty() ? what : context + ": " + what),
      context_(std::move(context)) {}

BudgetError::BudgetError(long dimension, long budget)
    : std::runtime_error("component dimension " + std::to_string(dimension) +
                         " exceeds budget " + std::to_string(budget)),
      dimension_(dimension),
      budget_(budget) {}

InvariantError::InvariantError(std::string kind, std::string detail)
    : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

UnknownExampleError::UnknownExampleError(const std::string& name)
    : std::runtime_error("unknown example \"" + name + "\"") {}

}  // namespace lpcoh
