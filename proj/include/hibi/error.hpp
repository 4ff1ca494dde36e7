#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

enum class ErrorKind {
  duplicate_label,
  unknown_label,
  cycle,
  empty_poset,
  not_comparable,
  not_a_lattice,
  not_distributive,
  not_homomorphism,
  not_surjective,
  domain_mismatch,
  not_member,
  precondition,
  no_unique_minimum,
  invalid_gamma,
  invalid_index,
  zero_polynomial,
  overflow,
  malformed_input,
};

const char* to_string(ErrorKind kind) noexcept;

/// Raised for every contract violation on user-supplied data. `kind` is
/// stable and is what the tests and the CLI exit-code mapping look at.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A cross-check between two independent routes disagreed. Signals a bug,
/// not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hibi
