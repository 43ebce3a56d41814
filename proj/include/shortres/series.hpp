#pragma once

// Integer polynomials and truncated power series for Hilbert and Poincare
// bookkeeping. Coefficients are arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shortres {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(std::size_t degree, BigInt coeff = 1);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly pow(unsigned n) const;

  /// p(t) -> p(-t)
  IntPoly eval_neg_t() const;
  IntPoly shift(std::size_t k) const;
  BigInt eval(const BigInt& t) const;

  /// Exact division by (1 + t); nullopt when it does not divide.
  std::optional<IntPoly> divide_by_one_plus_t() const;

  std::string to_string() const;
  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Power series known through t^(order-1).
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::vector<BigInt> coeffs, std::size_t order);
  static TruncSeries from_poly(const IntPoly& p, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries eval_neg_t() const;
  /// Multiplication by t^k; the result is known through t^(order-1).
  TruncSeries shift(std::size_t k) const;
  TruncSeries truncate(std::size_t order) const;

  /// Throws std::domain_error unless the constant term is +1 or -1.
  TruncSeries invert() const;

  std::string to_string() const;
  bool operator==(const TruncSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients n0..last of s vanish. The verdict is evidence about a finite
/// window only. Throws std::out_of_range when last >= s.order().
bool window_polynomiality(const TruncSeries& s, std::size_t n0, std::size_t last);

/// Index of the first nonzero coefficient in [n0, last], if any.
std::optional<std::size_t> first_nonzero_in_window(const TruncSeries& s, std::size_t n0, std::size_t last);

std::vector<long long> to_int64(const std::vector<BigInt>& v);

}  // namespace shortres
