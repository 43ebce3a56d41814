#include "shortres/series.hpp"

#include <algorithm>
#include <sstream>

namespace shortres {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (auto c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(std::size_t degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + o[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned n) const {
  IntPoly r{1};
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

IntPoly IntPoly::eval_neg_t() const {
  std::vector<BigInt> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shift(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(c));
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::optional<IntPoly> IntPoly::divide_by_one_plus_t() const {
  if (is_zero()) return IntPoly{};
  // Synthetic division by t - (-1), working down from the top coefficient.
  const std::size_t n = coeffs_.size();
  std::vector<BigInt> q(n - 1, 0);
  // q_{n-2} = c_{n-1}; q_{k-1} = c_k - q_k
  BigInt prev = 0;
  for (std::size_t k = n - 1; k >= 1; --k) {
    q[k - 1] = coeffs_[k] - prev;
    prev = q[k - 1];
  }
  if (coeffs_[0] - prev != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << (mag != 1 ? "*t" : "t");
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

TruncSeries::TruncSeries(std::vector<BigInt> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order, 0);
}

TruncSeries TruncSeries::from_poly(const IntPoly& p, std::size_t order) {
  std::vector<BigInt> c(order, 0);
  for (std::size_t i = 0; i < order; ++i) c[i] = p[i];
  return TruncSeries(std::move(c), order);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return TruncSeries(std::move(c), n);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = coeffs_[i] - o.coeffs_[i];
  return TruncSeries(std::move(c), n);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  std::vector<BigInt> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return TruncSeries(std::move(c), n);
}

TruncSeries TruncSeries::eval_neg_t() const {
  std::vector<BigInt> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return TruncSeries(std::move(c), c.size());
}

TruncSeries TruncSeries::shift(std::size_t k) const {
  const std::size_t n = order();
  std::vector<BigInt> c(n, 0);
  for (std::size_t i = 0; i + k < n; ++i) c[i + k] = coeffs_[i];
  return TruncSeries(std::move(c), n);
}

TruncSeries TruncSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  return TruncSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order), order);
}

TruncSeries TruncSeries::invert() const {
  if (coeffs_.empty() || (coeffs_[0] != 1 && coeffs_[0] != -1))
    throw std::domain_error("series inversion needs constant term +1 or -1");
  const std::size_t n = order();
  const BigInt& c0 = coeffs_[0];
  std::vector<BigInt> inv(n, 0);
  inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (std::size_t k = 1; k < n; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * inv[k - j];
    inv[k] = -acc * c0;
  }
  return TruncSeries(std::move(inv), n);
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  os << IntPoly(coeffs_).to_string() << " + O(t^" << order() << ")";
  return os.str();
}

std::optional<std::size_t> first_nonzero_in_window(const TruncSeries& s, std::size_t n0, std::size_t last) {
  if (n0 > last) return std::nullopt;
  if (last >= s.order()) throw std::out_of_range("window exceeds the known order of the series");
  for (std::size_t i = n0; i <= last; ++i)
    if (s[i] != 0) return i;
  return std::nullopt;
}

bool window_polynomiality(const TruncSeries& s, std::size_t n0, std::size_t last) {
  return !first_nonzero_in_window(s, n0, last).has_value();
}

std::vector<long long> to_int64(const std::vector<BigInt>& v) {
  std::vector<long long> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

}  // namespace shortres
