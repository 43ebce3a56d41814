#include "shortres/exactla.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

namespace shortres {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus must be a prime below 2^31, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return reduce(t);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, std::span<const std::uint32_t> v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

// Elimination works on 64-bit accumulators and reduces lazily: a row is
// brought back below p only when one of its entries is inspected or when
// further updates could overflow.
RrefResult rref(const PrimeField& field, Matrix m) {
  const std::uint64_t p = field.p();
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult out;
  if (rows == 0 || cols == 0) {
    out.reduced = std::move(m);
    return out;
  }
  std::vector<std::uint64_t> buf(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) buf[r * cols + c] = m.at(r, c);
  const std::uint64_t step = (p - 1) * (p - 1);
  const std::uint64_t limit = step == 0 ? std::numeric_limits<std::uint64_t>::max()
                                        : (std::numeric_limits<std::uint64_t>::max() - p) / step;
  std::vector<std::uint64_t> pending(rows, 0);
  std::vector<std::uint32_t> piv(cols);

  auto row_ptr = [&](std::size_t r) { return buf.data() + r * cols; };
  auto reduce_row = [&](std::size_t r, std::size_t from) {
    auto* x = row_ptr(r);
    for (std::size_t c = from; c < cols; ++c) x[c] %= p;
    pending[r] = 0;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      auto& x = row_ptr(r)[c];
      x %= p;
      if (x != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != rank) {
      std::swap_ranges(row_ptr(found) + c, row_ptr(found) + cols, row_ptr(rank) + c);
      std::swap(pending[found], pending[rank]);
    }
    reduce_row(rank, c);
    auto* pr = row_ptr(rank);
    const std::uint64_t scale = field.inv(static_cast<std::uint32_t>(pr[c]));
    for (std::size_t k = c; k < cols; ++k) {
      pr[k] = pr[k] * scale % p;
      piv[k] = static_cast<std::uint32_t>(pr[k]);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto* x = row_ptr(r);
      const std::uint64_t f = x[c] % p;
      if (f == 0) {
        x[c] = 0;
        continue;
      }
      if (pending[r] + 1 >= limit) reduce_row(r, c);
      const std::uint64_t g = p - f;
      for (std::size_t k = c; k < cols; ++k) x[k] += g * piv[k];
      ++pending[r];
      x[c] = 0;
    }
    out.pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::uint32_t>(buf[r * cols + c] % p);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const PrimeField& field, const Matrix& m) {
  if (m.rows() > m.cols()) return rref(field, m.transpose()).pivots.size();
  return rref(field, m).pivots.size();
}

Matrix kernel_basis(const PrimeField& field, const Matrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) return Matrix::identity(cols);
  auto [red, pivots] = rref(field, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix ker(cols - pivots.size(), cols);
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ker.at(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) ker.at(k, pivots[i]) = field.neg(red.at(i, f));
    ++k;
  }
  return ker;
}

std::optional<Vec> solve(const PrimeField& field, const Matrix& m, std::span<const std::uint32_t> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto [red, pivots] = rref(field, std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, m.cols());
  return x;
}

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  const std::uint64_t p = field.p();
  Matrix c(a.rows(), b.cols());
  const std::uint64_t step = (p - 1) * (p - 1);
  const std::uint64_t limit = step == 0 ? ~0ull : (~0ull - p) / step;
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t n = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t f = a.at(i, k);
      if (f == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += f * brow[j];
      if (++n + 1 >= limit) {
        for (auto& x : acc) x %= p;
        n = 0;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = static_cast<std::uint32_t>(acc[j] % p);
  }
  return c;
}

Vec apply(const PrimeField& field, const Matrix& m, std::span<const std::uint32_t> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("apply: shape mismatch");
  Vec y(m.rows(), 0);
  const std::uint64_t p = field.p();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc = (acc + static_cast<std::uint64_t>(row[c]) * x[c]) % p;
    y[r] = static_cast<std::uint32_t>(acc);
  }
  return y;
}

bool is_zero(std::span<const std::uint32_t> v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

void axpy(const PrimeField& field, std::uint32_t alpha, std::span<const std::uint32_t> x,
          std::span<std::uint32_t> y) {
  if (alpha == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = field.add(y[i], field.mul(alpha, x[i]));
}

Vec scaled(const PrimeField& field, std::uint32_t alpha, std::span<const std::uint32_t> x) {
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = field.mul(alpha, x[i]);
  return y;
}

Vec added(const PrimeField& field, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = field.add(x[i], y[i]);
  return z;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const PrimeField& field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(field, Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::span(const PrimeField& field, const Matrix& rows) {
  Subspace s(rows.cols());
  auto [red, pivots] = rref(field, rows);
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(red.row_vec(i));
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient, 0);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const PrimeField& field, Vec v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto f = v[pivots_[i]];
    if (f) axpy(field, field.neg(f), basis_[i], v);
  }
  return v;
}

bool Subspace::contains(const PrimeField& field, std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace membership: length mismatch");
  return is_zero(reduce(field, Vec(v.begin(), v.end())));
}

bool Subspace::contains(const PrimeField& field, const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(field, v); });
}

bool Subspace::insert(const PrimeField& field, Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("subspace insert: length mismatch");
  v = reduce(field, std::move(v));
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead == v.end()) return false;
  const std::size_t c = static_cast<std::size_t>(lead - v.begin());
  v = scaled(field, field.inv(*lead), v);
  for (auto& b : basis_)
    if (b[c]) axpy(field, field.neg(b[c]), v, b);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

Subspace sum(const PrimeField& field, const Subspace& a, const Subspace& b) {
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(field, a.ambient(), all);
}

Subspace intersect(const PrimeField& field, const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Columns are the basis vectors of a then b; a kernel vector (s, t) gives
  // the common element sum s_i a_i.
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.set_col(i, a.basis()[i]);
  for (std::size_t j = 0; j < b.dim(); ++j) m.set_col(a.dim() + j, b.basis()[j]);
  Matrix ker = kernel_basis(field, m);
  std::vector<Vec> common;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(field, ker.at(r, i), a.basis()[i], v);
    common.push_back(std::move(v));
  }
  return Subspace::span(field, n, common);
}

}  // namespace shortres
