#pragma once

// Dense linear algebra over small prime fields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace shortres {

using Vec = std::vector<std::uint32_t>;

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix of residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec col_vec(std::size_t c) const;
  void set_col(std::size_t c, std::span<const std::uint32_t> v);

  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row echelon form; pivots chosen leftmost column first, first
/// nonzero row within that column.
RrefResult rref(const PrimeField& field, Matrix m);

std::size_t rank(const PrimeField& field, const Matrix& m);

/// Rows form a basis of the right null space {v : m v = 0}.
Matrix kernel_basis(const PrimeField& field, const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const PrimeField& field, const Matrix& m, std::span<const std::uint32_t> b);

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b);
Vec apply(const PrimeField& field, const Matrix& m, std::span<const std::uint32_t> x);

bool is_zero(std::span<const std::uint32_t> v);
void axpy(const PrimeField& field, std::uint32_t alpha, std::span<const std::uint32_t> x,
          std::span<std::uint32_t> y);  // y += alpha x
Vec scaled(const PrimeField& field, std::uint32_t alpha, std::span<const std::uint32_t> x);
Vec added(const PrimeField& field, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);

/// A subspace of F_p^n kept as a reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const PrimeField& field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span(const PrimeField& field, const Matrix& rows);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix as_matrix() const { return Matrix::from_rows(basis_, ambient_); }

  /// Remainder of v after clearing the pivot coordinates.
  Vec reduce(const PrimeField& field, Vec v) const;
  bool contains(const PrimeField& field, std::span<const std::uint32_t> v) const;
  bool contains(const PrimeField& field, const Subspace& other) const;
  /// Returns true when v enlarged the space.
  bool insert(const PrimeField& field, Vec v);

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const PrimeField& field, const Subspace& a, const Subspace& b);
Subspace intersect(const PrimeField& field, const Subspace& a, const Subspace& b);

}  // namespace shortres
