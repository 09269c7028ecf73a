#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandle {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is structurally wrong: index out of range, ragged table, etc.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. permutation_rep of 1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text that does not conform to one of the accepted grammars.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  /// Zero-based character offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class Axiom {
  // groups
  GroupIdentity,
  GroupInverse,
  GroupAssociativity,
  // quandles
  Idempotence,
  RightInvertibility,
  SelfDistributivity,
  // maps
  Homomorphism,
  Automorphism,
  Subgroup,
  Centralizer,
};

const char* axiom_name(Axiom axiom) noexcept;

/// A structure failed one of its defining laws; `witness()` lists the
/// elements exhibiting the failure in the order the law quantifies them.
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::vector<std::size_t> witness,
                 const std::string& detail);

  Axiom axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Axiom axiom_;
  std::vector<std::size_t> witness_;
};

}  // namespace quandle
