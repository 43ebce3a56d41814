#pragma once

// Algebra definition files:
//
//   p = 101
//   vars = x, y
//   relations = x*y, x^3 - y^3
//   cap = 10            (graded only, optional)
//   local = true        (optional)
//   trunc = 3           (local only)
//
// Blank lines and text after '#' are ignored.

#include "shortres/quotient.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace shortres {

struct AlgebraFileError : std::runtime_error {
  AlgebraFileError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line, column;  // 1-based
};

struct AlgebraDefinition {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<Poly> relations;
  std::optional<unsigned> cap;
  bool local = false;
  std::optional<unsigned> trunc;

  PrimeField field() const { return PrimeField(p); }
  /// One canonical line per key, relations in printed form.
  std::string canonical() const;
};

AlgebraDefinition parse_algebra(std::string_view text);
/// Throws std::runtime_error when the file cannot be read.
AlgebraDefinition load_algebra(const std::string& path);

/// Graded algebras default to cap 10, local ones to trunc 3.
using BuiltAlgebra = std::variant<GradedAlgebra, LocalAlgebra>;
BuiltAlgebra build_algebra(const AlgebraDefinition& def);

/// FNV-1a of the canonical text, as 16 hex digits.
std::string text_hash(std::string_view text);
std::string algebra_hash(const GradedAlgebra& R);
std::string algebra_hash(const LocalAlgebra& R);

}  // namespace shortres
