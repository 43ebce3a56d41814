#pragma once

// Monomials and polynomials in k[x_1..x_e], the text format, and
// multiplication maps between graded pieces.

#include "shortres/exactla.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shortres {

/// Exponent vector. Ordered graded-lexicographically with x_1 > x_2 > ...
struct Monomial {
  std::vector<std::uint8_t> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<std::uint8_t> e) : exp(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return exp.size(); }
  unsigned degree() const;
  Monomial operator*(const Monomial& o) const;
  /// this divides o
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& o) const;  // o / this

  bool operator==(const Monomial&) const = default;
};

/// grlex: true when a comes strictly after b in ascending order
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// All degree-d monomials in e variables, largest first.
std::vector<Monomial> monomial_basis(std::size_t e, unsigned d);

/// Position lookup for monomials of one or several degrees.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(const std::vector<Monomial>& monos);

  std::size_t size() const { return table_.size(); }
  /// npos when absent
  std::size_t find(const Monomial& m) const;
  std::size_t at(const Monomial& m) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static std::uint64_t key(const Monomial& m);

 private:
  std::unordered_map<std::uint64_t, std::size_t> table_;
};

class Poly {
 public:
  using Terms = std::map<Monomial, std::uint32_t, GrlexGreater>;

  Poly(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {}
  static Poly constant(PrimeField field, std::size_t nvars, std::uint32_t c);
  static Poly variable(PrimeField field, std::size_t nvars, std::size_t k);
  static Poly term(PrimeField field, const Monomial& m, std::uint32_t c);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::uint32_t coeff(const Monomial& m) const;
  void add_term(const Monomial& m, std::uint32_t c);

  bool is_homogeneous() const;
  /// Largest total degree; -1 for zero.
  int degree() const;
  /// Smallest total degree; -1 for zero.
  int low_degree() const;
  Poly homogeneous_part(unsigned d) const;
  /// Drops terms of degree > d.
  Poly truncated(unsigned d) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(std::uint32_t c) const;
  Poly pow(unsigned n) const;
  /// Product with every term of degree > cap dropped.
  Poly mul_trunc(const Poly& o, unsigned cap) const;

  /// x_k -> images[k]
  Poly substitute(const std::vector<Poly>& images) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  void check_compatible(const Poly& o) const;

  PrimeField field_;
  std::size_t nvars_;
  Terms terms_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at column " + std::to_string(pos + 1)), position(pos) {}
  std::size_t position;  // 0-based offset into the parsed text
};

/// Grammar: sums of products of integers, variables, and parenthesized
/// expressions, with ^ taking a nonnegative integer exponent.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, const PrimeField& field);

/// Canonical form, terms largest first, coefficients in (-p/2, p/2].
std::string to_string(const Poly& f, const std::vector<std::string>& vars);

/// Default names: x,y,z,w for e <= 4, else x1..xe.
std::vector<std::string> default_var_names(std::size_t e);

/// Coordinates of the degree-d part of f against monomial_basis(e, d).
Vec coordinates(const Poly& f, unsigned d, const std::vector<Monomial>& basis, const MonomialIndex& index);

/// Homogeneous polynomial from coordinates.
Poly from_coordinates(const PrimeField& field, std::size_t nvars, std::span<const std::uint32_t> v,
                      const std::vector<Monomial>& basis);

/// Matrix of S_d -> S_{d+deg f}, g -> f g. Needs f homogeneous and
/// d + deg f <= cap.
Matrix mult_map(const Poly& f, unsigned d, unsigned cap);

}  // namespace shortres
