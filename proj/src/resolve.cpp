#include "shortres/resolve.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace shortres {

namespace {

// dim R_d, zero past the top of an artinian ring.
std::size_t rdim(const GradedAlgebra& R, unsigned d) { return R.dim(d); }

// Direct sum of shifted copies of R, one per generator degree.
struct FreeLayout {
  const GradedAlgebra* R;
  std::vector<unsigned> degs;

  std::vector<std::size_t> offsets(unsigned j) const {
    std::vector<std::size_t> off(degs.size() + 1, 0);
    for (std::size_t g = 0; g < degs.size(); ++g)
      off[g + 1] = off[g] + (degs[g] <= j ? rdim(*R, j - degs[g]) : 0);
    return off;
  }
  std::size_t size(unsigned j) const { return offsets(j).back(); }

  // x_k from degree j to j+1, given both offset tables.
  Vec apply_var(std::size_t k, unsigned j, const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                std::span<const std::uint32_t> v) const {
    const auto& field = R->field();
    Vec out(to.back(), 0);
    for (std::size_t g = 0; g < degs.size(); ++g) {
      if (degs[g] > j) continue;
      const unsigned d = j - degs[g];
      const std::size_t n = from[g + 1] - from[g], m = to[g + 1] - to[g];
      if (n == 0 || m == 0) continue;
      const Matrix& A = R->mulvar(k, d);
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t x = v[from[g] + c];
        if (!x) continue;
        for (std::size_t r = 0; r < m; ++r)
          if (A.at(r, c)) out[to[g] + r] = field.add(out[to[g] + r], field.mul(A.at(r, c), x));
      }
    }
    return out;
  }
};

Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Matrix monomial_action(const GradedModule& M, const PrimeField& field, const Monomial& mono, unsigned j) {
  Matrix acc = Matrix::identity(M.dim(j));
  unsigned d = j;
  for (std::size_t k = 0; k < mono.nvars(); ++k)
    for (unsigned t = 0; t < mono.exp[k]; ++t) acc = multiply(field, M.action(k, d++), acc);
  return acc;
}

}  // namespace

GradedModule::GradedModule(std::size_t nvars, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> actions,
                           std::optional<int> top)
    : dims_(std::move(dims)), actions_(std::move(actions)), top_(top) {
  if (dims_.empty()) throw std::invalid_argument("a module needs at least degree 0");
  if (actions_.size() != nvars) throw std::invalid_argument("one action per variable is required");
  for (const auto& a : actions_) {
    if (a.size() != dims_.size() - 1) throw std::invalid_argument("actions must cover degrees below the cap");
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j].rows() != dims_[j + 1] || a[j].cols() != dims_[j])
        throw std::invalid_argument("action of the wrong shape in degree " + std::to_string(j));
  }
}

std::size_t GradedModule::dim(unsigned j) const {
  if (j < dims_.size()) return dims_[j];
  if (top_ && *top_ < static_cast<int>(j)) return 0;
  throw std::out_of_range("module degree " + std::to_string(j) + " is beyond the cap");
}

void GradedModule::validate(const GradedAlgebra& R) const {
  const auto& field = R.field();
  if (R.nvars() != nvars()) throw std::logic_error("module and ring have different variables");
  for (unsigned j = 0; j + 2 <= cap(); ++j)
    for (std::size_t k = 0; k < nvars(); ++k)
      for (std::size_t l = k + 1; l < nvars(); ++l)
        if (multiply(field, action(k, j + 1), action(l, j)) != multiply(field, action(l, j + 1), action(k, j)))
          throw std::logic_error("actions of variables " + std::to_string(k) + " and " + std::to_string(l) +
                                 " do not commute in degree " + std::to_string(j));
  for (const auto& g : R.relations()) {
    const unsigned delta = static_cast<unsigned>(g.degree());
    for (unsigned j = 0; j + delta <= cap(); ++j) {
      Matrix acc(dim(j + delta), dim(j));
      for (const auto& [mono, c] : g.terms()) {
        Matrix t = monomial_action(*this, field, mono, j);
        for (std::size_t r = 0; r < acc.rows(); ++r)
          for (std::size_t s = 0; s < acc.cols(); ++s) acc.at(r, s) = field.add(acc.at(r, s), field.mul(c, t.at(r, s)));
      }
      if (!acc.is_zero()) throw std::logic_error("a ring relation acts nontrivially in degree " + std::to_string(j));
    }
  }
}

GradedModule present_module(const GradedAlgebra& R, const std::vector<unsigned>& gen_degrees,
                            const std::vector<std::vector<Poly>>& relations, unsigned cap) {
  const auto& field = R.field();
  const std::size_t e = R.nvars();
  if (!R.is_artinian() && cap > R.cap()) throw std::out_of_range("module cap exceeds the ring cap");
  if (!std::is_sorted(gen_degrees.begin(), gen_degrees.end()))
    throw std::invalid_argument("generator degrees must be nondecreasing");
  FreeLayout F{&R, gen_degrees};

  std::vector<std::vector<Vec>> rel_images(cap + 1);
  for (const auto& col : relations) {
    if (col.size() != gen_degrees.size()) throw std::invalid_argument("relation column has the wrong length");
    std::optional<unsigned> delta;
    for (std::size_t g = 0; g < col.size(); ++g) {
      if (col[g].is_zero()) continue;
      if (!col[g].is_homogeneous()) throw std::invalid_argument("relation entries must be homogeneous");
      unsigned d = static_cast<unsigned>(col[g].degree()) + gen_degrees[g];
      if (delta && *delta != d) throw std::invalid_argument("relation column is not homogeneous");
      delta = d;
    }
    if (!delta || *delta > cap) continue;
    auto off = F.offsets(*delta);
    Vec v(off.back(), 0);
    for (std::size_t g = 0; g < col.size(); ++g) {
      if (col[g].is_zero() || off[g + 1] == off[g]) continue;
      Vec part = R.reduce(col[g], *delta - gen_degrees[g]);
      std::copy(part.begin(), part.end(), v.begin() + static_cast<std::ptrdiff_t>(off[g]));
    }
    rel_images[*delta].push_back(std::move(v));
  }

  std::vector<Subspace> U;
  std::vector<std::vector<std::size_t>> offs;
  for (unsigned j = 0; j <= cap; ++j) {
    offs.push_back(F.offsets(j));
    std::vector<Vec> gens = rel_images[j];
    if (j > 0)
      for (const auto& b : U[j - 1].basis())
        for (std::size_t k = 0; k < e; ++k) gens.push_back(F.apply_var(k, j - 1, offs[j - 1], offs[j], b));
    U.push_back(Subspace::span(field, offs[j].back(), gens));
  }

  // M_j has the non-pivot coordinates of F_j as its basis.
  std::vector<std::vector<std::size_t>> free_cols(cap + 1);
  std::vector<std::size_t> dims;
  for (unsigned j = 0; j <= cap; ++j) {
    std::vector<bool> piv(offs[j].back(), false);
    for (auto c : U[j].pivots()) piv[c] = true;
    for (std::size_t c = 0; c < piv.size(); ++c)
      if (!piv[c]) free_cols[j].push_back(c);
    dims.push_back(free_cols[j].size());
  }
  std::vector<std::vector<Matrix>> actions(e);
  for (std::size_t k = 0; k < e; ++k)
    for (unsigned j = 0; j < cap; ++j) {
      Matrix A(dims[j + 1], dims[j]);
      for (std::size_t c = 0; c < dims[j]; ++c) {
        Vec unit(offs[j].back(), 0);
        unit[free_cols[j][c]] = 1;
        Vec img = U[j + 1].reduce(field, F.apply_var(k, j, offs[j], offs[j + 1], unit));
        for (std::size_t r = 0; r < dims[j + 1]; ++r) A.at(r, c) = img[free_cols[j + 1][r]];
      }
      actions[k].push_back(std::move(A));
    }

  std::optional<int> top;
  if (gen_degrees.empty()) {
    top = -1;
  } else {
    for (unsigned j = gen_degrees.back(); j <= cap; ++j)
      if (dims[j] == 0) {
        int t = -1;
        for (unsigned d = 0; d < j; ++d)
          if (dims[d]) t = static_cast<int>(d);
        top = t;
        break;
      }
  }
  return GradedModule(e, std::move(dims), std::move(actions), top);
}

GradedModule cyclic_module(const GradedAlgebra& R, const std::vector<Poly>& ideal, unsigned cap) {
  std::vector<std::vector<Poly>> rels;
  for (const auto& f : ideal) rels.push_back({f});
  return present_module(R, {0}, rels, cap);
}

GradedModule residue_field(const GradedAlgebra& R, unsigned cap) {
  std::vector<std::size_t> dims(cap + 1, 0);
  dims[0] = 1;
  std::vector<std::vector<Matrix>> actions(R.nvars());
  for (auto& a : actions)
    for (unsigned j = 0; j < cap; ++j) a.emplace_back(dims[j + 1], dims[j]);
  return GradedModule(R.nvars(), std::move(dims), std::move(actions), 0);
}

GradedModule restrict_module(const GradedModule& M, const GradedQuotient& q) {
  const auto& field = q.algebra.field();
  if (M.nvars() != q.algebra.nvars()) throw std::invalid_argument("module does not live over the quotient");
  std::vector<std::vector<Matrix>> actions;
  for (const auto& img : q.push_images) {
    std::vector<Matrix> per_degree;
    for (unsigned j = 0; j < M.cap(); ++j) {
      Matrix A(M.dim(j + 1), M.dim(j));
      for (const auto& [mono, c] : img.terms()) {
        if (mono.degree() != 1) throw std::invalid_argument("push images must be linear");
        std::size_t k = std::find(mono.exp.begin(), mono.exp.end(), 1) - mono.exp.begin();
        const Matrix& B = M.action(k, j);
        for (std::size_t r = 0; r < A.rows(); ++r)
          for (std::size_t s = 0; s < A.cols(); ++s) A.at(r, s) = field.add(A.at(r, s), field.mul(c, B.at(r, s)));
      }
      per_degree.push_back(std::move(A));
    }
    actions.push_back(std::move(per_degree));
  }
  return GradedModule(q.push_images.size(), M.dims(), std::move(actions), M.top());
}

std::size_t BettiTable::operator()(unsigned i, unsigned j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(unsigned i, unsigned j, std::size_t b) {
  if (b == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = b;
}

std::size_t BettiTable::total(unsigned i) const {
  std::size_t s = 0;
  for (const auto& [ij, b] : entries_)
    if (ij.first == i) s += b;
  return s;
}

bool BettiTable::all_complete() const {
  return std::all_of(complete_.begin(), complete_.end(), [](bool c) { return c; });
}

std::optional<std::pair<unsigned, unsigned>> BettiTable::off_diagonal() const {
  for (const auto& [ij, b] : entries_)
    if (ij.first != ij.second) return ij;
  return std::nullopt;
}

std::string BettiTable::to_json() const {
  nlohmann::json j;
  j["caps"] = {N_, J_};
  j["entries"] = nlohmann::json::array();
  for (const auto& [ij, b] : entries_) j["entries"].push_back({ij.first, ij.second, b});
  j["complete"] = nlohmann::json::array();
  for (bool c : complete_) j["complete"].push_back(c);
  return j.dump();
}

namespace {

struct Level {
  FreeLayout layout;
  std::vector<Vec> images;  // image of each generator in the previous level
};

}  // namespace

BettiTable minimal_resolution(const GradedAlgebra& R, const GradedModule& M, const ResolutionOptions& opt) {
  const auto& field = R.field();
  const std::size_t e = R.nvars();
  const unsigned N = opt.N, J = opt.J;
  if (M.nvars() != e) throw std::invalid_argument("module and ring have different variables");
  if (!R.is_artinian() && R.cap() < J) throw std::out_of_range("ring cap is below the degree cap");
  if (M.cap() < J && !(M.top() && *M.top() <= static_cast<int>(M.cap())))
    throw std::out_of_range("module cap is below the degree cap");

  std::vector<MonomialIndex> std_index;
  for (unsigned d = 0; d <= J; ++d) std_index.emplace_back(rdim(R, d) ? R.basis(d) : std::vector<Monomial>{});

  std::vector<Level> levels(N + 1, Level{FreeLayout{&R, {}}, {}});
  std::vector<std::vector<Vec>> prevD(N + 1);
  std::vector<std::vector<std::size_t>> prev_off(N + 1);
  BettiTable table(N, J);

  // Target of D_i in degree j and the action of x_k on it.
  auto target_dim = [&](unsigned i, unsigned j) -> std::size_t {
    return i == 0 ? M.dim(j) : levels[i - 1].layout.size(j);
  };

  for (unsigned j = 0; j <= J; ++j) {
    std::vector<Vec> kernel;  // K_(i-1, j)
    for (std::size_t c = 0; c < M.dim(j); ++c) {
      Vec u(M.dim(j), 0);
      u[c] = 1;
      kernel.push_back(std::move(u));
    }
    std::vector<std::size_t> tgt_prev, tgt_cur;  // offsets of level i-1 in degrees j-1, j
    for (unsigned i = 0; i <= N; ++i) {
      Level& L = levels[i];
      const std::size_t rows = target_dim(i, j);
      if (i > 0) {
        tgt_cur = levels[i - 1].layout.offsets(j);
        tgt_prev = j > 0 ? levels[i - 1].layout.offsets(j - 1) : std::vector<std::size_t>{};
      }
      auto act = [&](std::size_t k, std::span<const std::uint32_t> v) -> Vec {
        if (i == 0) return apply(field, M.action(k, j - 1), v);
        return levels[i - 1].layout.apply_var(k, j - 1, tgt_prev, tgt_cur, v);
      };

      std::vector<Vec> D;
      for (std::size_t g = 0; g < L.layout.degs.size(); ++g) {
        const unsigned dg = L.layout.degs[g];
        const unsigned d = j - dg;  // old generators only, so d >= 1
        if (rdim(R, d) == 0) continue;
        for (const auto& mono : R.basis(d)) {
          std::size_t k = 0;
          while (mono.exp[k] == 0) ++k;
          Monomial lower = Monomial::variable(e, k).quotient(mono);
          std::size_t r = std_index[d - 1].at(lower);
          D.push_back(act(k, prevD[i][prev_off[i][g] + r]));
        }
      }

      std::size_t fresh = kernel.size();
      if (!D.empty() && fresh) {
        std::size_t rk = rank(field, from_columns(D, rows));
        fresh -= rk;
        if (fresh) {
          Subspace C = Subspace::span(field, from_columns(D, rows).transpose());
          std::size_t found = 0;
          std::vector<Vec> chosen;
          for (auto& v : kernel) {
            if (found == fresh) break;
            if (C.insert(field, v)) {
              chosen.push_back(v);
              ++found;
            }
          }
          kernel = std::move(chosen);
        }
      }
      if (!fresh) kernel.clear();
      for (auto& v : kernel) {
        L.layout.degs.push_back(j);
        L.images.push_back(v);
        D.push_back(std::move(v));
      }
      table.set(i, j, fresh);

      if (i > 0) {
        // Minimality: no column reaches a generator of the previous level
        // that lives in degree j.
        for (std::size_t g = 0; g < levels[i - 1].layout.degs.size(); ++g)
          if (levels[i - 1].layout.degs[g] == j)
            for (const auto& col : D)
              if (col[tgt_cur[g]]) throw std::logic_error("resolution is not minimal");
      }
      if (opt.check_complex && i > 0 && !D.empty()) {
        // prevD[i-1] was already replaced by D_(i-1, j).
        Matrix prev = from_columns(prevD[i - 1], target_dim(i - 1, j));
        for (const auto& col : D)
          if (!is_zero(apply(field, prev, col))) throw std::logic_error("consecutive differentials do not compose to zero");
      }

      kernel.clear();
      if (i < N && !D.empty()) {
        Matrix K = kernel_basis(field, from_columns(D, rows));
        for (std::size_t r = 0; r < K.rows(); ++r) kernel.push_back(K.row_vec(r));
      }
      prevD[i] = std::move(D);
      prev_off[i] = L.layout.offsets(j);
    }
  }

  const auto mtop = M.top();
  std::optional<unsigned> T = R.top();
  for (unsigned i = 0; i <= N; ++i) {
    bool c = false;
    if (mtop) {
      if (i == 0) c = *mtop <= static_cast<int>(J);
      if (opt.koszul_ring && static_cast<long>(i) + *mtop <= static_cast<long>(J)) c = true;
      if (i > 0 && T && table.complete(i - 1)) {
        const auto& degs = levels[i - 1].layout.degs;
        c = c || degs.empty() || degs.back() + *T <= J;
      }
    }
    table.set_complete(i, c);
  }
  return table;
}

std::string KoszulVerdict::describe() const {
  switch (kind) {
    case Kind::off_diagonal:
      return "off-diagonal beta_(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
             std::to_string(table(i, j));
    case Kind::clean:
      return "linear through homological degree " + std::to_string(N);
    case Kind::incomplete:
      break;
  }
  return "linear within the caps, rows not certified through " + std::to_string(N);
}

KoszulVerdict is_koszul_to(const GradedAlgebra& R, unsigned N, unsigned J) {
  KoszulVerdict v{KoszulVerdict::Kind::clean, 0, 0, N, {}};
  ResolutionOptions opt;
  opt.N = N;
  opt.J = J;
  v.table = minimal_resolution(R, residue_field(R, J), opt);
  if (auto off = v.table.off_diagonal()) {
    v.kind = KoszulVerdict::Kind::off_diagonal;
    v.i = off->first;
    v.j = off->second;
  } else if (!v.table.all_complete()) {
    v.kind = KoszulVerdict::Kind::incomplete;
  }
  return v;
}

TruncSeries poincare_truncation(const BettiTable& B) {
  std::vector<BigInt> c;
  for (unsigned i = 0; i <= B.N(); ++i) {
    if (!B.complete(i)) throw std::runtime_error("Betti row " + std::to_string(i) + " is not complete");
    c.emplace_back(B.total(i));
  }
  return TruncSeries(std::move(c), B.N() + 1);
}

ComplexWindow build_periodic_complex(const LocalAlgebra& R, std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b, unsigned L) {
  const auto& field = R.field();
  Matrix A = R.mult_matrix(a), B = R.mult_matrix(b);
  if (!multiply(field, A, B).is_zero() || !multiply(field, B, A).is_zero())
    throw std::invalid_argument("consecutive maps do not compose to zero");
  ComplexWindow C;
  C.dims.assign(L + 2, R.length());
  for (unsigned i = 0; i <= L; ++i) C.maps.push_back(i % 2 == 0 ? A : B);
  return C;
}

bool homology_vanishes(const PrimeField& field, const ComplexWindow& C, unsigned first, unsigned last) {
  if (first == 0 || last >= C.maps.size()) throw std::out_of_range("homology position outside the window");
  for (unsigned p = first; p <= last; ++p) {
    std::size_t ker = C.dims[p] - rank(field, C.maps[p - 1]);
    if (ker != rank(field, C.maps[p])) return false;
  }
  return true;
}

}  // namespace shortres
