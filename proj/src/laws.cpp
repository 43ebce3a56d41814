#include "shortres/laws.hpp"

#include "shortres/algebra_file.hpp"

namespace shortres {

namespace {

using nlohmann::json;

json series_json(const TruncSeries& s) { return to_int64(s.coeffs()); }
json table_json(const BettiTable& B) { return json::parse(B.to_json()); }

TruncSeries one_minus_t_pow(std::size_t k, unsigned n, std::size_t order) {
  // (1 - t^k)^n
  IntPoly base = IntPoly{1} - IntPoly::monomial(k);
  return TruncSeries::from_poly(base.pow(n), order);
}

TruncSeries one_plus_t_pow(unsigned n, std::size_t order) {
  return TruncSeries::from_poly(IntPoly{1, 1}.pow(n), order);
}

VerificationReport start(const std::string& law, const GradedAlgebra& R, Caps caps) {
  VerificationReport r;
  r.law = law;
  r.inputs["algebra"] = algebra_hash(R);
  r.inputs["caps"] = {caps.N, caps.J};
  return r;
}

bool linear_form(const Poly& f) { return !f.is_zero() && f.is_homogeneous() && f.degree() == 1; }

// Common gate for statements about a pair (a, b) of linear forms.
bool gate_pair(VerificationReport& r, const GradedAlgebra& R, const Poly& a, const Poly& b) {
  r.inputs["a"] = to_string(a, R.names());
  r.inputs["b"] = to_string(b, R.names());
  if (!linear_form(a) || !linear_form(b)) {
    r.withhold("a and b must be linear forms, outside m^2");
    return false;
  }
  if (!R.is_artinian()) {
    r.withhold("ring is not artinian within its cap");
    return false;
  }
  const auto& L = R.local();
  if (!is_exact_pair(L, L.element(a), L.element(b))) {
    r.withhold("not an exact pair of zero divisors");
    return false;
  }
  return true;
}

std::optional<unsigned> incomplete_row(const BettiTable& B) {
  for (unsigned i = 0; i <= B.N(); ++i)
    if (!B.complete(i)) return i;
  return std::nullopt;
}

bool gate_complete(VerificationReport& r, const BettiTable& B, const char* what) {
  if (auto i = incomplete_row(B)) {
    r.withhold(std::string("Betti row ") + std::to_string(*i) + " of " + what + " is incomplete; raise the degree cap");
    return false;
  }
  return true;
}

// Compares two series coefficientwise and refutes at the first difference.
bool same_series(VerificationReport& r, const TruncSeries& lhs, const TruncSeries& rhs, const std::string& what) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  for (std::size_t i = 0; i < n; ++i)
    if (lhs[i] != rhs[i]) {
      r.refute(what + " differs at t^" + std::to_string(i) + ": " + lhs[i].str() + " vs " + rhs[i].str());
      return false;
    }
  return true;
}

std::optional<unsigned> min_generator_degree(const BettiTable& B) {
  for (const auto& [key, b] : B.entries())
    if (key.first == 0 && b) return key.second;
  return std::nullopt;
}

unsigned max_generator_degree(const BettiTable& B) {
  unsigned m = 0;
  for (const auto& [key, b] : B.entries())
    if (key.first == 0 && b) m = std::max(m, key.second);
  return m;
}

// Every entry sits on j = i + d0.
bool is_linear(const BettiTable& B) {
  auto d0 = min_generator_degree(B);
  if (!d0) return true;
  for (const auto& [key, b] : B.entries())
    if (b && key.second != key.first + *d0) return false;
  return true;
}

struct Tables {
  BettiTable over_R, over_quotient;
};

Tables both_tables(const GradedAlgebra& R, const GradedQuotient& q, const GradedModule& M, Caps caps) {
  ResolutionOptions opt;
  opt.N = caps.N;
  opt.J = caps.J;
  return {minimal_resolution(R, restrict_module(M, q), opt), minimal_resolution(q.algebra, M, opt)};
}

bool trivial_module(const GradedModule& M) { return M.top() && *M.top() < 0; }

std::optional<ExactPairCertificate> search_pair(VerificationReport& r, const GradedAlgebra& R,
                                                const SearchOptions& search) {
  auto s = find_exact_pair(R.local(), search);
  r.inputs["seed"] = search.seed;
  if (!s.certificate) {
    r.withhold(s.report);
    return std::nullopt;
  }
  const auto& L = R.local();
  r.payload["pair"] = {{"a", L.show(s.certificate->a)}, {"b", L.show(s.certificate->b)},
                       {"phase", s.certificate->phase}, {"trial", s.certificate->trial}};
  return s.certificate;
}

Vec linear_coeffs(const Poly& f, std::size_t e) {
  Vec v(e);
  for (std::size_t k = 0; k < e; ++k) v[k] = f.coeff(Monomial::variable(e, k));
  return v;
}

Poly from_linear_coeffs(const PrimeField& F, std::span<const std::uint32_t> v, std::size_t nvars) {
  Poly f(F, nvars);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) f = f + Poly::variable(F, nvars, k).scaled(v[k]);
  return f;
}

std::size_t span_rank(const PrimeField& F, const std::vector<Vec>& rows, std::size_t n) {
  return Subspace::span(F, n, rows).dim();
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::verified_to_caps: return "verified_to_caps";
    case Outcome::refuted: return "refuted";
    case Outcome::inapplicable: return "inapplicable";
  }
  return "?";
}

void VerificationReport::refute(std::string w) {
  outcome = Outcome::refuted;
  witness = std::move(w);
}

void VerificationReport::withhold(std::string why) {
  outcome = Outcome::inapplicable;
  reason = std::move(why);
}

nlohmann::json VerificationReport::to_json() const {
  json j;
  j["law"] = law;
  j["inputs"] = inputs;
  j["outcome"] = to_string(outcome);
  if (outcome == Outcome::refuted) j["witness"] = witness;
  if (outcome == Outcome::inapplicable) j["reason"] = reason;
  j["notes"] = notes;
  j["payload"] = payload;
  return j;
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{"periodic",      "poincare-product", "graded-poincare-product",
                                              "initial-forms", "golod",            "koszul-socle-bound",
                                              "gorenstein-poincare", "complete-intersection"};
  return names;
}

VerificationReport verify_periodic_resolution(const GradedAlgebra& R, const Poly& a, const Poly& b, Caps caps) {
  auto r = start("periodic", R, caps);
  if (!gate_pair(r, R, a, b)) return r;
  const auto& L = R.local();
  auto C = build_periodic_complex(L, L.element(a), L.element(b), caps.N);
  for (unsigned i = 1; i <= caps.N; ++i)
    if (!homology_vanishes(L.field(), C, i, i)) {
      r.refute("F(a,b) has homology at position " + std::to_string(i));
      return r;
    }

  ResolutionOptions opt;
  opt.N = caps.N;
  opt.J = caps.J;
  auto B = minimal_resolution(R, cyclic_module(R, {a}, caps.J), opt);
  r.payload["betti"] = table_json(B);
  if (!gate_complete(r, B, "R/aR")) return r;
  for (unsigned i = 0; i <= caps.N; ++i) {
    for (unsigned j = 0; j <= caps.J; ++j)
      if (B(i, j) != (j == i ? 1u : 0u)) {
        r.refute("beta_(" + std::to_string(i) + "," + std::to_string(j) + ")(R/aR) = " + std::to_string(B(i, j)));
        return r;
      }
  }
  return r;
}

VerificationReport verify_poincare_product(const GradedAlgebra& R, const Poly& a, const Poly& b,
                                           const GradedQuotient& q, const GradedModule& M, Caps caps) {
  auto r = start("poincare-product", R, caps);
  if (!gate_pair(r, R, a, b)) return r;
  if (trivial_module(M)) {
    r.withhold("the zero module");
    return r;
  }
  auto t = both_tables(R, q, M, caps);
  r.payload["over_R"] = table_json(t.over_R);
  r.payload["over_quotient"] = table_json(t.over_quotient);
  if (!gate_complete(r, t.over_R, "M over R") || !gate_complete(r, t.over_quotient, "M over R/aR")) return r;
  std::size_t partial = 0;
  for (unsigned n = 0; n <= caps.N; ++n) {
    partial += t.over_quotient.total(n);
    if (t.over_R.total(n) != partial) {
      r.refute("beta_" + std::to_string(n) + " over R is " + std::to_string(t.over_R.total(n)) +
               ", partial sum over R/aR is " + std::to_string(partial));
      return r;
    }
  }
  r.payload["P_R"] = series_json(poincare_truncation(t.over_R));
  r.payload["P_quotient"] = series_json(poincare_truncation(t.over_quotient));
  return r;
}

VerificationReport verify_graded_poincare_product(const GradedAlgebra& R, const Poly& a, const Poly& b,
                                                  const GradedQuotient& q, const GradedModule& M, Caps caps) {
  auto r = start("graded-poincare-product", R, caps);
  if (!gate_pair(r, R, a, b)) return r;
  if (trivial_module(M)) {
    r.withhold("the zero module");
    return r;
  }
  auto t = both_tables(R, q, M, caps);
  r.payload["over_R"] = table_json(t.over_R);
  r.payload["over_quotient"] = table_json(t.over_quotient);
  if (!gate_complete(r, t.over_R, "M over R") || !gate_complete(r, t.over_quotient, "M over R/aR")) return r;
  for (unsigned n = 0; n <= caps.N; ++n)
    for (unsigned j = 0; j <= caps.J; ++j) {
      std::size_t rhs = 0;
      for (unsigned i = 0; i <= n; ++i)
        if (j + i >= n) rhs += t.over_quotient(i, j + i - n);
      if (t.over_R(n, j) != rhs) {
        r.refute("beta_(" + std::to_string(n) + "," + std::to_string(j) + ") over R is " +
                 std::to_string(t.over_R(n, j)) + ", convolution gives " + std::to_string(rhs));
        return r;
      }
    }
  // s = 1 specialization
  std::size_t partial = 0;
  for (unsigned n = 0; n <= caps.N; ++n) {
    partial += t.over_quotient.total(n);
    if (t.over_R.total(n) != partial) {
      r.refute("s = 1 specialization fails at n = " + std::to_string(n));
      return r;
    }
  }
  const bool lin_R = is_linear(t.over_R), lin_q = is_linear(t.over_quotient);
  r.payload["linear_over_R"] = lin_R;
  r.payload["linear_over_quotient"] = lin_q;
  if (lin_R != lin_q) r.refute("linear over R is " + std::string(lin_R ? "true" : "false") + " but over R/aR is " +
                               (lin_q ? "true" : "false"));
  return r;
}

VerificationReport verify_initial_forms(const LocalAlgebra& L, std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b) {
  VerificationReport r;
  r.law = "initial-forms";
  r.inputs["algebra"] = algebra_hash(L);
  if (is_zero(a) || is_zero(b) || L.is_unit(a) || L.is_unit(b)) {
    r.withhold("a and b must be nonzero nonunits");
    return r;
  }
  r.inputs["a"] = L.show(a);
  r.inputs["b"] = L.show(b);
  if (L.power(4).dim() != 0) {
    r.withhold("m^4 is not zero");
    return r;
  }
  if (!is_balanced(L.hilbert())) {
    r.withhold("Hilbert series is not balanced");
    return r;
  }
  if (in_m2(L, a) || in_m2(L, b)) {
    r.withhold("a or b lies in m^2");
    return r;
  }
  if (!is_exact_pair(L, a, b)) {
    r.withhold("not an exact pair of zero divisors");
    return r;
  }

  GradedAlgebra gr = associated_graded(L);
  auto ia = initial_form(L, gr, a), ib = initial_form(L, gr, b);
  r.payload["a*"] = to_string(ia.form, gr.names());
  r.payload["b*"] = to_string(ib.form, gr.names());
  const auto& G = gr.local();
  if (!is_exact_pair(G, G.element(ia.form), G.element(ib.form))) {
    r.refute("initial forms are not an exact pair in gr");
    return r;
  }

  const auto& F = L.field();
  Ideal aR = principal(L, a);
  json dims = json::array();
  for (unsigned i = 1; i <= 4; ++i) {
    const std::size_t meet = intersect(F, L.power(i), aR.space).dim();
    const std::size_t am = product(L, aR, maximal_power(L, i - 1)).lambda();
    dims.push_back({i, meet, am});
    if (meet != am) {
      r.payload["intersections"] = dims;
      r.refute("m^" + std::to_string(i) + " meets aR in dimension " + std::to_string(meet) + ", a m^" +
               std::to_string(i - 1) + " has " + std::to_string(am));
      return r;
    }
  }
  r.payload["intersections"] = dims;

  IntPoly h_gr = quotient_by(gr, ia.form).algebra.hilbert().series;
  IntPoly h_bar = quotient_by(L, a).hilbert();
  auto h_div = L.hilbert().divide_by_one_plus_t();
  r.payload["H_gr_quotient"] = h_gr.to_string();
  r.payload["H_quotient"] = h_bar.to_string();
  if (!h_div || h_gr != h_bar || h_bar != *h_div)
    r.refute("Hilbert series disagree: " + h_gr.to_string() + ", " + h_bar.to_string() + ", H/(1+t) = " +
             (h_div ? h_div->to_string() : "not divisible"));
  return r;
}

CiCover construct_ci_cover(const GradedAlgebra& R, const Poly& a, const Poly& b, const Poly& c, unsigned cap) {
  const auto& F = R.field();
  const std::size_t e = R.nvars();
  if (!linear_form(a) || !linear_form(b) || !linear_form(c)) throw std::invalid_argument("a, b, c must be linear forms");
  if (R.embedding_dim() != e) throw std::invalid_argument("presentation has linear relations");
  if (!R.is_artinian() || *R.top() > 3) throw std::invalid_argument("needs m^4 = 0");
  if (!is_balanced(R.hilbert().series)) throw std::invalid_argument("Hilbert series is not balanced");
  const auto& L = R.local();
  auto cert = certify_pair(L, L.element(a), L.element(b));
  if (!cert) throw std::invalid_argument("a, b is not an exact pair");
  if (!is_conca_generator(L, *cert, L.element(c))) throw std::invalid_argument("c is not a Conca generator modulo aR");

  CiCover cv;
  Vec va = linear_coeffs(a, e), vb = linear_coeffs(b, e), vc = linear_coeffs(c, e);
  Poly cc = c;
  std::vector<Vec> chosen{va};
  if (span_rank(F, {va, vb}, e) == 1) {
    cv.case_no = 1;
    chosen.push_back(vc);
  } else if (span_rank(F, {va, vb, vc}, e) == 3) {
    cv.case_no = 2;
    chosen.push_back(vc);
    chosen.push_back(vb);
  } else {
    cv.case_no = 3;
    cc = b;
    chosen.push_back(vb);
  }
  for (std::size_t k = 0; k < e && chosen.size() < e; ++k) {
    Vec unit(e, 0);
    unit[k] = 1;
    auto trial = chosen;
    trial.push_back(unit);
    if (span_rank(F, trial, e) == trial.size()) chosen = trial;
  }

  // c^2 = a d with d linear
  Matrix A(R.dim(2), e);
  for (std::size_t k = 0; k < e; ++k) A.set_col(k, R.reduce(a * Poly::variable(F, e, k), 2));
  auto dsol = solve(F, A, R.reduce(cc * cc, 2));
  if (!dsol) throw std::runtime_error("c^2 has no linear solution d of c^2 = a d");
  if (cv.case_no == 3 && span_rank(F, {vb, *dsol}, e) <= 1) {
    cv.case_no = 1;
    cv.redirected = true;
  }

  for (std::size_t i = 0; i < e; ++i) {
    cv.names.push_back("x" + std::to_string(i + 1));
    cv.images.push_back(from_linear_coeffs(F, chosen[i], e));
  }
  // old variable X_j in the new coordinates: column j of the inverse
  Matrix T(e, e);
  for (std::size_t i = 0; i < e; ++i) T.set_col(i, chosen[i]);
  std::vector<Poly> back;
  for (std::size_t j = 0; j < e; ++j) {
    Vec unit(e, 0);
    unit[j] = 1;
    back.push_back(from_linear_coeffs(F, *solve(F, T, unit), e));
  }

  auto x = [&](std::size_t i) { return Poly::variable(F, e, i); };
  cv.y = from_linear_coeffs(F, *dsol, e).substitute(back);
  cv.u = x(0);
  cv.v = cv.case_no == 1 ? x(0) : cv.case_no == 2 ? x(2) : x(1);
  cv.w = x(1) * x(1) - cv.y * x(0);
  for (const auto& g : R.relations()) cv.kernel.push_back(g.substitute(back));

  for (const Poly& f : {cv.u * cv.v, cv.w})
    if (!is_zero(R.reduce(f.substitute(cv.images), 2)))
      throw std::runtime_error(std::string(cv.redirected ? "after redirecting to the first case, " : "") +
                               to_string(f, cv.names) + " does not map to zero in R");

  cv.Q = build_graded(F, cv.names, {cv.u * cv.v, cv.w}, cap);
  cv.hilbert_Q = cv.Q.hilbert_function();
  TruncSeries expected = one_plus_t_pow(2, cap + 1) * one_minus_t_pow(1, e - 2, cap + 1).invert();
  for (unsigned d = 0; d <= cap; ++d)
    if (BigInt(cv.hilbert_Q[d]) != expected[d])
      throw std::runtime_error("uv, w is not a regular sequence: H(Q) differs at degree " + std::to_string(d));
  return cv;
}

VerificationReport verify_golod(const GradedAlgebra& R, const CiCover& cover, Caps caps) {
  auto r = start("golod", R, caps);
  r.inputs["case"] = cover.case_no;
  r.inputs["u"] = to_string(cover.u, cover.names);
  r.inputs["v"] = to_string(cover.v, cover.names);
  r.inputs["w"] = to_string(cover.w, cover.names);
  const unsigned e = static_cast<unsigned>(R.nvars());
  const std::size_t order = caps.N + 1;
  if (cover.Q.cap() < caps.J) {
    r.withhold("cover was built below the degree cap");
    return r;
  }

  ResolutionOptions opt, kopt;
  opt.N = kopt.N = caps.N;
  opt.J = kopt.J = caps.J;
  kopt.koszul_ring = true;  // quadratic complete intersections are Koszul

  auto Bk = minimal_resolution(R, residue_field(R, caps.J), opt);
  auto BQR = minimal_resolution(cover.Q, cyclic_module(cover.Q, cover.kernel, caps.J), kopt);
  auto BQk = minimal_resolution(cover.Q, residue_field(cover.Q, caps.J), kopt);
  auto qbar = quotient_by(cover.Q, cover.u);
  std::vector<Poly> pushed;
  for (const auto& g : cover.kernel) pushed.push_back(qbar.push(g));
  auto BQbR = minimal_resolution(qbar.algebra, cyclic_module(qbar.algebra, pushed, caps.J), kopt);
  auto BQbk = minimal_resolution(qbar.algebra, residue_field(qbar.algebra, caps.J), kopt);
  if (!gate_complete(r, Bk, "k over R") || !gate_complete(r, BQR, "R over Q") || !gate_complete(r, BQk, "k over Q") ||
      !gate_complete(r, BQbR, "R/aR over Q/uQ") || !gate_complete(r, BQbk, "k over Q/uQ"))
    return r;

  auto PkR = poincare_truncation(Bk), PRQ = poincare_truncation(BQR), PkQ = poincare_truncation(BQk);
  auto PRbQb = poincare_truncation(BQbR), PkQb = poincare_truncation(BQbk);
  r.payload["P_k_R"] = series_json(PkR);
  r.payload["P_R_Q"] = series_json(PRQ);
  r.payload["P_k_Q"] = series_json(PkQ);

  auto tate = one_plus_t_pow(e, order) * one_minus_t_pow(2, 2, order).invert();
  if (!same_series(r, PkQ, tate, "P^Q_k against (1+t)^e (1-t^2)^-2")) return r;
  auto tate_bar = one_plus_t_pow(e - 1, order) * one_minus_t_pow(2, 1, order).invert();
  if (!same_series(r, PkQb, tate_bar, "P^(Q/uQ)_k against (1+t)^(e-1) (1-t^2)^-1")) return r;
  if (!same_series(r, PRbQb, PRQ, "P^(Q/uQ)_(R/aR) against P^Q_R")) return r;

  auto one = TruncSeries::from_poly(IntPoly{1}, order);
  auto denom = one - (PRQ - one).shift(1);
  same_series(r, PkR, PkQ * denom.invert(), "P^R_k against the Golod bound");
  return r;
}

VerificationReport verify_koszul_socle_bound(const GradedAlgebra& R, Caps caps, const SearchOptions& search) {
  auto r = start("koszul-socle-bound", R, caps);
  const long long e = static_cast<long long>(R.embedding_dim());
  auto H = R.hilbert();
  if (!H.exact || H.series != IntPoly{1, e, e, 1}) {
    r.withhold("Hilbert series is not 1 + et + et^2 + t^3");
    return r;
  }
  if (!search_pair(r, R, search)) return r;
  const auto& L = R.local();
  const std::size_t s = socle(L).lambda();
  const bool predicted = static_cast<std::size_t>(e) >= s + 2;
  const bool quadratic = R.is_quadratic();
  r.payload["e"] = e;
  r.payload["s"] = s;
  r.payload["quadratic"] = quadratic;

  auto v = is_koszul_to(R, caps.N, caps.J);
  r.payload["koszul"] = v.describe();
  if (v.kind == KoszulVerdict::Kind::incomplete) {
    r.withhold("resolution of k is incomplete within the degree cap");
    return r;
  }
  const bool clean = v.kind == KoszulVerdict::Kind::clean;
  if (quadratic && e >= 3 && !clean) {
    r.refute("quadratic ring with an exact zero divisor has beta_(" + std::to_string(v.i) + "," +
             std::to_string(v.j) + ")(k) != 0");
    return r;
  }
  if (predicted && !clean) {
    r.refute("e >= s + 2 but beta_(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")(k) != 0");
  } else if (predicted) {
    r.notes.push_back("Koszul side is evidence through homological degree " + std::to_string(caps.N));
    auto Pk = poincare_truncation(v.table);
    auto prod = TruncSeries::from_poly(R.hilbert().series.eval_neg_t(), Pk.order()) * Pk;
    same_series(r, prod, TruncSeries::from_poly(IntPoly{1}, Pk.order()), "H(-t) P_k");
  } else if (!clean) {
    r.notes.push_back("e < s + 2 and Koszulness fails at (" + std::to_string(v.i) + "," + std::to_string(v.j) + ")");
  } else {
    r.withhold("e < s + 2 but no off-diagonal entry through the caps");
  }
  return r;
}

VerificationReport verify_gorenstein_poincare(const GradedAlgebra& R, const std::vector<GradedModule>& modules,
                                              Caps caps, const SearchOptions& search) {
  auto r = start("gorenstein-poincare", R, caps);
  const long long e = static_cast<long long>(R.embedding_dim());
  if (!R.is_artinian() || *R.top() > 3) {
    r.withhold("needs m^4 = 0");
    return r;
  }
  if (!is_gorenstein(R.local())) {
    r.withhold("ring is not Gorenstein");
    return r;
  }
  if (e < 3) {
    r.withhold("embedding dimension below 3");
    return r;
  }
  if (!search_pair(r, R, search)) return r;

  const IntPoly H = R.hilbert().series;
  r.payload["H"] = H.to_string();
  if (H != IntPoly{1, e, e, 1}) {
    r.refute("Hilbert series is " + H.to_string());
    return r;
  }
  ResolutionOptions opt;
  opt.N = caps.N;
  opt.J = caps.J;
  const std::size_t order = caps.N + 1;
  const auto Hneg = TruncSeries::from_poly(H.eval_neg_t(), order);

  auto Bk = minimal_resolution(R, residue_field(R, caps.J), opt);
  if (!gate_complete(r, Bk, "k")) return r;
  auto Pk = poincare_truncation(Bk);
  r.payload["P_k"] = series_json(Pk);
  if (!same_series(r, Hneg * Pk, TruncSeries::from_poly(IntPoly{1}, order), "H(-t) P_k")) return r;

  json mods = json::array();
  for (std::size_t m = 0; m < modules.size(); ++m) {
    auto B = minimal_resolution(R, modules[m], opt);
    if (!gate_complete(r, B, ("module " + std::to_string(m)).c_str())) return r;
    auto prod = Hneg * poincare_truncation(B);
    const std::size_t n0 = 4 + max_generator_degree(B);
    mods.push_back({{"window", {n0, caps.N}}, {"product", series_json(prod)}});
    if (n0 <= caps.N)
      if (auto i = first_nonzero_in_window(prod, n0, caps.N)) {
        r.payload["modules"] = mods;
        r.refute("module " + std::to_string(m) + ": H(-t) P_M has t^" + std::to_string(*i) + " coefficient " +
                 prod[*i].str());
        return r;
      }
  }
  r.payload["modules"] = mods;
  r.notes.push_back("polynomiality is checked on the window only");
  return r;
}

VerificationReport verify_complete_intersection(const GradedAlgebra& R, Caps caps) {
  auto r = start("complete-intersection", R, caps);
  const unsigned e = static_cast<unsigned>(R.nvars());
  const std::size_t order = caps.N + 1;
  IntPoly expected{1};
  for (const auto& f : R.relations()) {
    if (f.degree() < 1) {
      r.withhold("relations must be nonconstant");
      return r;
    }
    expected = expected * (IntPoly{1} - IntPoly::monomial(f.degree()));
  }
  auto H = R.hilbert();
  bool certified = R.relations().size() == e && H.exact;
  if (certified) {
    // H * (1-t)^e must equal prod (1 - t^d_i)
    IntPoly lhs = H.series * (IntPoly{1, -1}).pow(e);
    certified = lhs == expected;
  }
  if (!certified) {
    r.withhold("relations are not a certified regular sequence");
    return r;
  }
  const BigInt lambda = H.series.eval(1);
  const BigInt bound = BigInt(1) << e;
  const bool minimal = lambda == bound;
  const bool shape = H.series == IntPoly{1, 1}.pow(e);
  r.payload["lambda"] = lambda.str();
  r.payload["H"] = H.series.to_string();
  if (lambda < bound) {
    r.refute("lambda(R) = " + lambda.str() + " < 2^e");
    return r;
  }

  auto v = is_koszul_to(R, caps.N, caps.J);
  r.payload["koszul"] = v.describe();
  if (!v.table.all_complete()) {
    r.withhold("resolution of k is incomplete within the degree cap");
    return r;
  }
  const bool clean = v.kind == KoszulVerdict::Kind::clean;
  r.payload["minimal_multiplicity"] = minimal;
  r.payload["koszul_evidence"] = clean;
  r.payload["H_is_power"] = shape;

  auto Pk = poincare_truncation(v.table);
  r.payload["P_k"] = series_json(Pk);
  if (!same_series(r, Pk, one_minus_t_pow(1, e, order).invert(), "P_k against (1-t)^-e")) return r;
  auto ci = one_minus_t_pow(2, e, order) * Pk;
  if (auto i = first_nonzero_in_window(ci, e + 1, caps.N)) {
    r.refute("(1-t^2)^e P_k has t^" + std::to_string(*i) + " coefficient " + ci[*i].str());
    return r;
  }
  if (minimal) {
    auto mm = one_minus_t_pow(1, e, order) * Pk;
    if (auto i = first_nonzero_in_window(mm, 1, caps.N)) {
      r.refute("(1-t)^e P_k has t^" + std::to_string(*i) + " coefficient " + mm[*i].str());
      return r;
    }
  }
  if (minimal != shape || minimal != clean) {
    r.refute(std::string("minimal multiplicity ") + (minimal ? "true" : "false") + ", Koszul through caps " +
             (clean ? "true" : "false") + ", H = (1+t)^e " + (shape ? "true" : "false"));
    return r;
  }
  if (clean) r.notes.push_back("Koszul side is evidence through homological degree " + std::to_string(caps.N));
  return r;
}

}  // namespace shortres
