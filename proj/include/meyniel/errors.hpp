#pragma once

#include <stdexcept>

namespace meyniel {

/// An argument lies outside an operation's domain (bad vertex label,
/// invalid family parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The hypotheses of a lemma or theorem do not hold for the given input.
/// This is a caller error.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Hypotheses held but the promised conclusion could not be found: a
/// would-be counterexample, never swallowed.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meyniel
