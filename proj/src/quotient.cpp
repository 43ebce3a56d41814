#include "shortres/quotient.hpp"

#include <algorithm>

namespace shortres {

namespace {

void check_relation_ring(const Poly& g, std::size_t nvars, const PrimeField& field) {
  if (g.nvars() != nvars || !(g.field() == field))
    throw std::invalid_argument("relation does not live in the declared polynomial ring");
}

}  // namespace

GradedAlgebra GradedAlgebra::build(const PrimeField& field, std::vector<std::string> names,
                                   std::vector<Poly> relations, unsigned cap, bool allow_linear) {
  GradedAlgebra R;
  R.field_ = field;
  R.names_ = std::move(names);
  R.cap_ = cap;
  const std::size_t e = R.names_.size();
  for (auto& g : relations) {
    check_relation_ring(g, e, field);
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("relation is not homogeneous");
    if (g.degree() == 0) throw std::invalid_argument("relation is a unit");
    if (g.degree() == 1 && !allow_linear)
      throw std::invalid_argument("degree-1 relation: the presentation is not minimal");
    if (static_cast<unsigned>(g.degree()) > cap)
      throw std::invalid_argument("cap " + std::to_string(cap) + " is below relation degree " +
                                  std::to_string(g.degree()));
    R.relations_.push_back(std::move(g));
  }

  R.basis_.resize(cap + 1);
  R.proj_.resize(cap + 1);
  R.ideal_dims_.assign(cap + 1, 0);
  R.generated_dims_.assign(cap + 1, 0);
  Subspace prev;  // I_{d-1}
  std::vector<Monomial> prev_monos;
  for (unsigned d = 0; d <= cap; ++d) {
    auto monos = monomial_basis(e, d);
    MonomialIndex index(monos);
    std::vector<Vec> rows;
    for (const auto& v : prev.basis())
      for (std::size_t k = 0; k < e; ++k) {
        Vec w(monos.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i]) w[index.at(prev_monos[i] * Monomial::variable(e, k))] = v[i];
        rows.push_back(std::move(w));
      }
    R.generated_dims_[d] = Subspace::span(field, monos.size(), rows).dim();
    for (const auto& g : R.relations_)
      if (static_cast<unsigned>(g.degree()) == d) rows.push_back(coordinates(g, d, monos, index));
    Subspace I = Subspace::span(field, monos.size(), rows);
    R.ideal_dims_[d] = I.dim();

    std::vector<bool> is_pivot(monos.size(), false);
    for (auto c : I.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> std_pos(monos.size(), 0);
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!is_pivot[c]) {
        std_pos[c] = R.basis_[d].size();
        R.basis_[d].push_back(monos[c]);
      }
    Matrix proj(R.basis_[d].size(), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!is_pivot[c]) proj.at(std_pos[c], c) = 1;
    for (std::size_t r = 0; r < I.dim(); ++r)
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (!is_pivot[c] && I.basis()[r][c]) proj.at(std_pos[c], I.pivots()[r]) = field.neg(I.basis()[r][c]);
    R.proj_[d] = std::move(proj);
    if (!R.top_ && R.basis_[d].empty() && d > 0) R.top_ = d - 1;

    prev = std::move(I);
    prev_monos = std::move(monos);
  }

  R.mulvar_.assign(e, std::vector<Matrix>(cap));
  for (unsigned d = 0; d < cap; ++d) {
    auto next = monomial_basis(e, d + 1);
    MonomialIndex index(next);
    for (std::size_t k = 0; k < e; ++k) {
      Matrix m(R.basis_[d + 1].size(), R.basis_[d].size());
      for (std::size_t j = 0; j < R.basis_[d].size(); ++j)
        m.set_col(j, R.proj_[d + 1].col_vec(index.at(R.basis_[d][j] * Monomial::variable(e, k))));
      R.mulvar_[k][d] = std::move(m);
    }
  }

  if (R.top_) {
    auto L = LocalAlgebra::build(field, R.names_, R.relations_, *R.top_);
    if (L.length() != 0) {
      // Homogeneous ideals keep their standard monomials in the truncation.
      std::size_t pos = 0;
      for (unsigned d = 0; d <= *R.top_; ++d)
        for (const auto& m : R.basis_[d])
          if (!(L.basis().at(pos++) == m)) throw std::logic_error("graded and local bases disagree");
    }
    R.local_ = std::make_shared<const LocalAlgebra>(std::move(L));
  }
  return R;
}

GradedAlgebra build_graded(const PrimeField& field, std::vector<std::string> names, std::vector<Poly> relations,
                           unsigned cap) {
  if (names.empty()) throw std::invalid_argument("at least one variable is required");
  return GradedAlgebra::build(field, std::move(names), std::move(relations), cap, false);
}

std::size_t GradedAlgebra::dim(unsigned d) const {
  if (d > cap_) {
    if (top_) return 0;
    throw std::out_of_range("degree " + std::to_string(d) + " is beyond the cap");
  }
  return basis_[d].size();
}

const std::vector<Monomial>& GradedAlgebra::basis(unsigned d) const {
  if (d > cap_) throw std::out_of_range("degree beyond the cap");
  return basis_[d];
}

const Matrix& GradedAlgebra::projection(unsigned d) const {
  if (d > cap_) throw std::out_of_range("degree beyond the cap");
  return proj_[d];
}

const Matrix& GradedAlgebra::mulvar(std::size_t k, unsigned d) const {
  if (d >= cap_) throw std::out_of_range("multiplication map leaves the cap");
  return mulvar_.at(k)[d];
}

std::vector<std::size_t> GradedAlgebra::hilbert_function() const {
  std::vector<std::size_t> h;
  for (const auto& b : basis_) h.push_back(b.size());
  return h;
}

HilbertSeries GradedAlgebra::hilbert() const {
  std::vector<BigInt> c;
  for (const auto& b : basis_) c.emplace_back(b.size());
  return {IntPoly(std::move(c)), top_.has_value()};
}

Vec GradedAlgebra::reduce(const Poly& f, unsigned d) const {
  auto monos = monomial_basis(nvars(), d);
  return apply(field_, projection(d), coordinates(f, d, monos, MonomialIndex(monos)));
}

Poly GradedAlgebra::lift(std::span<const std::uint32_t> v, unsigned d) const {
  return from_coordinates(field_, nvars(), v, basis(d));
}

std::size_t GradedAlgebra::ideal_dim(unsigned d) const {
  if (d > cap_) throw std::out_of_range("degree beyond the cap");
  return ideal_dims_[d];
}

bool GradedAlgebra::is_quadratic() const {
  for (unsigned d = 0; d <= cap_; ++d) {
    if (d <= 1 && ideal_dims_[d] != 0) return false;
    if (d >= 3 && ideal_dims_[d] != generated_dims_[d]) return false;
  }
  return true;
}

const LocalAlgebra& GradedAlgebra::local() const {
  if (!local_) throw std::logic_error("the algebra is not artinian within its cap");
  return *local_;
}

// ---------------------------------------------------------------------------

LocalAlgebra LocalAlgebra::build(const PrimeField& field, std::vector<std::string> names, std::vector<Poly> relations,
                                 unsigned trunc) {
  LocalAlgebra L;
  L.field_ = field;
  L.names_ = std::move(names);
  L.trunc_ = trunc;
  const std::size_t e = L.names_.size();
  for (auto& g : relations) {
    check_relation_ring(g, e, field);
    if (g.is_zero()) continue;
    if (g.coeff(Monomial(e)) != 0) throw std::invalid_argument("relation has a nonzero constant term");
    L.relations_.push_back(std::move(g));
  }

  // Columns of the truncated ring run from degree trunc down to 0 so that
  // row reduction eliminates high-degree monomials first.
  std::vector<Monomial> cols;
  for (unsigned d = trunc + 1; d-- > 0;) {
    auto b = monomial_basis(e, d);
    cols.insert(cols.end(), b.begin(), b.end());
  }
  const std::size_t n = cols.size();
  MonomialIndex col_index(cols);

  std::vector<Vec> rows;
  for (const auto& g : L.relations_) {
    const unsigned low = static_cast<unsigned>(g.low_degree());
    for (const auto& u : cols) {
      if (u.degree() + low > trunc) continue;
      Vec v(n, 0);
      for (const auto& [m, c] : g.terms()) {
        auto um = u * m;
        if (um.degree() <= trunc) v[col_index.at(um)] = field.add(v[col_index.at(um)], c);
      }
      rows.push_back(std::move(v));
    }
  }
  Subspace I = Subspace::span(field, n, rows);
  std::vector<bool> is_pivot(n, false);
  for (auto c : I.pivots()) is_pivot[c] = true;

  std::vector<std::size_t> std_cols;
  for (std::size_t c = n; c-- > 0;)
    if (!is_pivot[c]) std_cols.push_back(c);
  // std_cols now runs degree ascending; within a degree reverse the order
  // back to grlex descending.
  std::stable_sort(std_cols.begin(), std_cols.end(), [&](std::size_t a, std::size_t b) {
    unsigned da = cols[a].degree(), db = cols[b].degree();
    if (da != db) return da < db;
    return a < b;
  });
  for (auto c : std_cols) L.basis_.push_back(cols[c]);
  const std::size_t lambda = std_cols.size();
  std::vector<std::size_t> std_pos(n, 0);
  for (std::size_t i = 0; i < lambda; ++i) std_pos[std_cols[i]] = i;

  L.all_index_ = col_index;
  L.nf_.assign(n, Vec(lambda, 0));
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) L.nf_[c][std_pos[c]] = 1;
  for (std::size_t r = 0; r < I.dim(); ++r) {
    auto& target = L.nf_[I.pivots()[r]];
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c] && I.basis()[r][c]) target[std_pos[c]] = field.neg(I.basis()[r][c]);
  }

  L.table_.assign(lambda, std::vector<Vec>(lambda));
  for (std::size_t i = 0; i < lambda; ++i)
    for (std::size_t j = 0; j < lambda; ++j) {
      auto m = L.basis_[i] * L.basis_[j];
      L.table_[i][j] = m.degree() <= trunc ? L.nf_[col_index.at(m)] : Vec(lambda, 0);
    }

  L.powers_.assign(trunc + 2, Subspace(lambda));
  for (unsigned i = trunc + 1; i-- > 0;) {
    Subspace s = L.powers_[i + 1];
    for (std::size_t c = 0; c < n; ++c)
      if (cols[c].degree() == i) s.insert(field, L.nf_[c]);
    L.powers_[i] = std::move(s);
  }
  return L;
}

Vec LocalAlgebra::element(const Poly& f) const {
  if (f.nvars() != nvars()) throw std::invalid_argument("polynomial has the wrong number of variables");
  Vec v(length(), 0);
  for (const auto& [m, c] : f.terms())
    if (m.degree() <= trunc_) axpy(field_, c, nf_[all_index_.at(m)], v);
  return v;
}

Poly LocalAlgebra::to_poly(std::span<const std::uint32_t> v) const {
  Poly f(field_, nvars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) f.add_term(basis_[i], v[i]);
  return f;
}

Vec LocalAlgebra::one() const {
  Vec v = zero();
  if (!v.empty()) v[0] = 1;
  return v;
}

Vec LocalAlgebra::variable(std::size_t k) const { return element(Poly::variable(field_, nvars(), k)); }

Vec LocalAlgebra::multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
  Vec out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) axpy(field_, field_.mul(a[i], b[j]), table_[i][j], out);
  }
  return out;
}

Matrix LocalAlgebra::mult_matrix(std::span<const std::uint32_t> a) const {
  const std::size_t n = length();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (a[i]) axpy(field_, a[i], table_[i][j], col);
    m.set_col(j, col);
  }
  return m;
}

const Subspace& LocalAlgebra::power(unsigned i) const {
  return powers_[std::min<std::size_t>(i, powers_.size() - 1)];
}

std::vector<std::size_t> LocalAlgebra::hilbert_function() const {
  std::vector<std::size_t> h;
  for (unsigned i = 0; i <= trunc_; ++i) h.push_back(power(i).dim() - power(i + 1).dim());
  return h;
}

IntPoly LocalAlgebra::hilbert() const {
  std::vector<BigInt> c;
  for (auto x : hilbert_function()) c.emplace_back(x);
  return IntPoly(std::move(c));
}

unsigned LocalAlgebra::valuation(std::span<const std::uint32_t> a) const {
  if (is_zero(a)) throw std::invalid_argument("the zero element has no valuation");
  unsigned v = 0;
  while (power(v + 1).contains(field_, a)) ++v;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

void check_closed(const LocalAlgebra& R, const Subspace& s) {
  for (std::size_t k = 0; k < R.nvars(); ++k) {
    auto x = R.variable(k);
    for (const auto& v : s.basis())
      if (!s.contains(R.field(), R.multiply(x, v))) throw std::logic_error("subspace is not an ideal");
  }
}

}  // namespace

Ideal ideal_of(const LocalAlgebra& R, const std::vector<Vec>& generators) {
  std::vector<Vec> span;
  for (const auto& g : generators) {
    Matrix m = R.mult_matrix(g);
    for (std::size_t j = 0; j < m.cols(); ++j) span.push_back(m.col_vec(j));
  }
  Ideal I{Subspace::span(R.field(), R.length(), span)};
  check_closed(R, I.space);
  return I;
}

Ideal principal(const LocalAlgebra& R, std::span<const std::uint32_t> a) {
  return ideal_of(R, {Vec(a.begin(), a.end())});
}

Ideal annihilator(const LocalAlgebra& R, std::span<const std::uint32_t> a) {
  Matrix k = kernel_basis(R.field(), R.mult_matrix(a));
  return Ideal{Subspace::span(R.field(), k)};
}

Ideal maximal_power(const LocalAlgebra& R, unsigned i) { return Ideal{R.power(i)}; }

Ideal product(const LocalAlgebra& R, const Ideal& I, const Ideal& J) {
  std::vector<Vec> span;
  for (const auto& u : I.space.basis())
    for (const auto& v : J.space.basis()) span.push_back(R.multiply(u, v));
  return Ideal{Subspace::span(R.field(), R.length(), span)};
}

Ideal times_m(const LocalAlgebra& R, const Ideal& I) { return product(R, maximal_power(R, 1), I); }

std::size_t mu(const LocalAlgebra& R, const Ideal& I) { return I.lambda() - times_m(R, I).lambda(); }

bool contains(const LocalAlgebra& R, const Ideal& I, std::span<const std::uint32_t> v) {
  return I.space.contains(R.field(), v);
}

Ideal socle(const LocalAlgebra& R) {
  Subspace s = Subspace::whole(R.length());
  for (std::size_t k = 0; k < R.nvars(); ++k)
    s = intersect(R.field(), s, annihilator(R, R.variable(k)).space);
  return Ideal{s};
}

bool is_gorenstein(const LocalAlgebra& R) { return socle(R).lambda() == 1; }

bool is_balanced(const IntPoly& h) { return h.eval(-1) == 0; }

// ---------------------------------------------------------------------------

GradedQuotient quotient_by(const GradedAlgebra& R, const Poly& a) {
  const auto& field = R.field();
  const std::size_t e = R.nvars();
  std::vector<Poly> identity;
  for (std::size_t k = 0; k < e; ++k) identity.push_back(Poly::variable(field, e, k));
  if (a.is_zero()) return {R, identity, identity};
  if (!a.is_homogeneous()) throw std::invalid_argument("quotient_by needs a homogeneous element");
  if (a.degree() == 0) throw std::invalid_argument("quotient by a unit");
  if (a.degree() >= 2) {
    auto rels = R.relations();
    rels.push_back(a);
    return {GradedAlgebra::build(field, R.names(), rels, R.cap(), false), identity, identity};
  }

  // Solve a = 0 for the last variable that occurs in it.
  std::size_t j = e;
  for (std::size_t k = e; k-- > 0;)
    if (a.coeff(Monomial::variable(e, k))) {
      j = k;
      break;
    }
  const std::size_t ne = e - 1;
  auto new_index = [&](std::size_t k) { return k < j ? k : k - 1; };
  std::vector<std::string> names;
  for (std::size_t k = 0; k < e; ++k)
    if (k != j) names.push_back(R.names()[k]);
  std::vector<Poly> push(e, Poly(field, ne)), lift;
  const std::uint32_t scale = field.neg(field.inv(a.coeff(Monomial::variable(e, j))));
  for (std::size_t k = 0; k < e; ++k) {
    if (k == j) continue;
    push[k] = Poly::variable(field, ne, new_index(k));
    const auto c = a.coeff(Monomial::variable(e, k));
    if (c) push[j] = push[j] + Poly::variable(field, ne, new_index(k)).scaled(field.mul(scale, c));
    lift.push_back(Poly::variable(field, e, k));
  }
  std::vector<Poly> rels;
  for (const auto& g : R.relations()) rels.push_back(g.substitute(push));
  return {GradedAlgebra::build(field, std::move(names), std::move(rels), R.cap(), false), std::move(push),
          std::move(lift)};
}

LocalAlgebra quotient_by(const LocalAlgebra& R, std::span<const std::uint32_t> a) {
  if (R.is_unit(a)) throw std::invalid_argument("quotient by a unit");
  auto rels = R.relations();
  rels.push_back(R.to_poly(a));
  return LocalAlgebra::build(R.field(), R.names(), std::move(rels), R.trunc());
}

GradedAlgebra associated_graded(const LocalAlgebra& R) {
  const auto& field = R.field();
  const std::size_t e = R.nvars();
  const unsigned N = R.trunc();
  std::vector<Poly> rels;
  for (unsigned d = 1; d <= N + 1; ++d) {
    auto monos = monomial_basis(e, d);
    const Subspace& next = R.power(d + 1);
    // Columns: images of degree-d monomials in m^d/m^(d+1), compared through
    // their remainders against m^(d+1).
    Matrix m(R.length(), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c)
      m.set_col(c, next.reduce(field, R.element(Poly::term(field, monos[c], 1))));
    Matrix ker = kernel_basis(field, m);
    for (std::size_t r = 0; r < ker.rows(); ++r) rels.push_back(from_coordinates(field, e, ker.row(r), monos));
  }
  GradedAlgebra gr = GradedAlgebra::build(field, R.names(), std::move(rels), N + 1, true);

  auto h = R.hilbert_function();
  auto hg = gr.hilbert_function();
  for (unsigned d = 0; d <= N; ++d)
    if (hg[d] != h[d]) throw std::logic_error("associated graded ring has the wrong Hilbert function");
  if (hg[N + 1] != 0) throw std::logic_error("associated graded ring is not truncated");

  // Products of standard monomials in gr must match the induced products.
  for (unsigned d = 0; d < N; ++d) {
    const Subspace& next2 = R.power(d + 2);
    for (const auto& mono : gr.basis(d))
      for (std::size_t k = 0; k < e; ++k) {
        auto prod = mono * Monomial::variable(e, k);
        Vec via_gr = gr.reduce(Poly::term(field, prod, 1), d + 1);
        Vec lhs = next2.reduce(field, R.element(gr.lift(via_gr, d + 1)));
        Vec rhs = next2.reduce(field, R.element(Poly::term(field, prod, 1)));
        if (lhs != rhs) throw std::logic_error("associated graded multiplication is not well defined");
      }
  }
  return gr;
}

InitialForm initial_form(const LocalAlgebra& R, const GradedAlgebra& gr, std::span<const std::uint32_t> r) {
  const auto& field = R.field();
  const unsigned v = R.valuation(r);
  const Subspace& next = R.power(v + 1);
  const auto& monos = gr.basis(v);
  Matrix m(R.length(), monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c)
    m.set_col(c, next.reduce(field, R.element(Poly::term(field, monos[c], 1))));
  auto x = solve(field, m, next.reduce(field, Vec(r.begin(), r.end())));
  if (!x) throw std::logic_error("initial form outside the span of gr basis monomials");
  return {v, gr.lift(*x, v)};
}

}  // namespace shortres
