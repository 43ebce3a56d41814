#pragma once

// Seeded generators and slow reference implementations used as oracles.
// Nothing here calls into the library's linear algebra.

#include "shortres/exactla.hpp"
#include "shortres/polyspace.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace testing_support {

using shortres::Matrix;
using shortres::Vec;

inline std::mt19937_64 stream(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ull + 17); }

inline std::uint32_t draw(std::mt19937_64& rng, std::uint32_t p) { return static_cast<std::uint32_t>(rng() % p); }

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p,
                            double density = 1.0) {
  Matrix m(r, c);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (u(rng) < density) m.at(i, j) = draw(rng, p);
  return m;
}

inline std::int64_t pw(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Plain Gaussian elimination with Fermat inverses.
inline std::size_t naive_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    std::int64_t inv = pw(a[rank][c], p - 2, p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      std::int64_t f = a[r][c] % p;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<std::int64_t>> to_rows(const Matrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

inline std::size_t naive_rank(const Matrix& m, std::int64_t p) { return naive_rank(to_rows(m), p); }

/// Exponent-vector polynomials, independent of shortres::Poly.
using RawPoly = std::map<std::vector<int>, std::int64_t>;

inline std::vector<std::vector<int>> all_monomials(int e, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(e, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == e - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (e > 0) rec(rec, 0, d);
  return out;
}

inline RawPoly raw(const shortres::Poly& f) {
  RawPoly r;
  for (const auto& [m, c] : f.terms()) r[std::vector<int>(m.exp.begin(), m.exp.end())] = c;
  return r;
}

inline int deg(const std::vector<int>& m) {
  int d = 0;
  for (int x : m) d += x;
  return d;
}

/// dim of (I + m^i)/I inside k[x]/m^(N+1) for i = 0..N+1, with I spanned by
/// u*g for all monomials u.
inline std::vector<std::size_t> naive_filtration(const std::vector<RawPoly>& rels, int e, int N, std::int64_t p) {
  std::vector<std::vector<int>> monos;
  for (int d = 0; d <= N; ++d)
    for (auto& m : all_monomials(e, d)) monos.push_back(m);
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
  std::vector<std::vector<std::int64_t>> ideal;
  for (const auto& g : rels)
    for (const auto& u : monos) {
      std::vector<std::int64_t> row(monos.size(), 0);
      for (const auto& [m, c] : g) {
        std::vector<int> um(e);
        for (int k = 0; k < e; ++k) um[k] = u[k] + m[k];
        if (deg(um) <= N) row[pos[um]] = (row[pos[um]] + c) % p;
      }
      ideal.push_back(row);
    }
  const std::size_t base = naive_rank(ideal, p);
  std::vector<std::size_t> out;
  for (int i = 0; i <= N + 1; ++i) {
    auto rows = ideal;
    for (const auto& m : monos)
      if (deg(m) >= i) {
        std::vector<std::int64_t> row(monos.size(), 0);
        row[pos[m]] = 1;
        rows.push_back(row);
      }
    out.push_back(naive_rank(rows, p) - base);
  }
  return out;
}

/// Hilbert function of a graded quotient by homogeneous relations, degrees 0..D.
inline std::vector<std::size_t> naive_hilbert(const std::vector<RawPoly>& rels, int e, int D, std::int64_t p) {
  std::vector<std::size_t> h;
  for (int d = 0; d <= D; ++d) {
    auto monos = all_monomials(e, d);
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& g : rels) {
      int gd = deg(g.begin()->first);
      if (gd > d) continue;
      for (const auto& u : all_monomials(e, d - gd)) {
        std::vector<std::int64_t> row(monos.size(), 0);
        for (const auto& [m, c] : g) {
          std::vector<int> um(e);
          for (int k = 0; k < e; ++k) um[k] = u[k] + m[k];
          row[pos[um]] = (row[pos[um]] + c) % p;
        }
        rows.push_back(row);
      }
    }
    h.push_back(monos.size() - naive_rank(rows, p));
  }
  return h;
}

/// Every vector of F_p^n, in odometer order.
template <class F>
void for_each_vector(std::size_t n, std::uint32_t p, F&& f) {
  Vec v(n, 0);
  while (true) {
    f(static_cast<const Vec&>(v));
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

// Coefficients of t^i u^j in (1 + t u)^e / prod_r (1 - t^2 u^(d_r)): the
// Betti numbers of k over a complete intersection with relation degrees d_r.
inline std::map<std::pair<unsigned, unsigned>, long> ci_betti(unsigned e, const std::vector<unsigned>& degs, unsigned N,
                                                      unsigned J) {
  std::map<std::pair<unsigned, unsigned>, long> s;
  s[{0, 0}] = 1;
  auto mul = [&](unsigned ti, unsigned uj, long c, bool geometric) {
    std::map<std::pair<unsigned, unsigned>, long> out;
    for (const auto& [ij, v] : s)
      for (unsigned m = 0;; ++m) {
        unsigned i = ij.first + m * ti, j = ij.second + m * uj;
        if (i > N || j > J || (!geometric && m > 1)) break;
        long w = v;
        for (unsigned q = 0; q < m; ++q) w *= c;
        out[{i, j}] += w;
      }
    s = out;
  };
  for (unsigned k = 0; k < e; ++k) mul(1, 1, 1, false);
  for (unsigned d : degs) mul(2, d, 1, true);
  return s;
}

}  // namespace testing_support
