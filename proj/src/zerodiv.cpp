#include "shortres/zerodiv.hpp"

#include "shortres/random.hpp"

#include <json.hpp>

namespace shortres {

namespace {

void require_nonzero_nonunit(const LocalAlgebra& R, std::span<const std::uint32_t> v, const char* name) {
  if (is_zero(v)) throw std::invalid_argument(std::string(name) + " is zero");
  if (R.is_unit(v)) throw std::invalid_argument(std::string(name) + " is a unit");
}

bool same(const LocalAlgebra& R, const Ideal& I, const Ideal& J) {
  return I.lambda() == J.lambda() && I.space.contains(R.field(), J.space);
}

Ideal sum_ideal(const LocalAlgebra& R, const Ideal& I, const Ideal& J) { return Ideal{sum(R.field(), I.space, J.space)}; }

std::size_t projective_count(std::uint32_t p, std::size_t e) {
  long double n = 1;
  for (std::size_t k = 0; k < e; ++k) n *= p;
  n = (n - 1) / (p - 1);
  return n > 1e12L ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(n);
}

// Calls f on each linear form whose first nonzero coefficient is 1; stops
// when f returns true.
template <class F>
bool sweep_linear_forms(const LocalAlgebra& R, F&& f) {
  const std::size_t e = R.nvars();
  const std::uint32_t p = R.field().p();
  for (std::size_t lead = 0; lead < e; ++lead) {
    std::vector<std::uint32_t> c(e, 0);
    c[lead] = 1;
    while (true) {
      if (f(linear_form(R, c))) return true;
      std::size_t k = e;
      while (k-- > lead + 1) {
        if (++c[k] < p) break;
        c[k] = 0;
      }
      if (k == lead) break;
    }
  }
  return false;
}

Vec random_linear_form(const LocalAlgebra& R, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(R.nvars());
  do {
    for (auto& x : c) x = draw_residue(rng, R.field().p());
  } while (is_zero(c));
  return linear_form(R, c);
}

// Coordinates, random forms, every point of random lines, then the full
// sweep when small. attempt(v, phase) returns true to stop.
template <class F>
void search_linear(const LocalAlgebra& R, const SearchOptions& opt, std::uint64_t stream, F&& attempt) {
  for (std::size_t k = 0; k < R.nvars(); ++k)
    if (attempt(R.variable(k), "coordinate")) return;
  auto rng = derive_stream(opt.seed, stream);
  for (std::size_t t = 0; t < opt.budget; ++t)
    if (attempt(random_linear_form(R, rng), "random")) return;
  const auto& field = R.field();
  for (std::size_t t = 0; t < opt.lines; ++t) {
    Vec u = random_linear_form(R, rng), w = random_linear_form(R, rng);
    if (attempt(w, "line")) return;
    for (std::uint32_t s = 0; s < field.p(); ++s) {
      Vec v = u;
      axpy(field, s, w, v);
      if (attempt(v, "line")) return;
    }
  }
  if (projective_count(field.p(), R.nvars()) <= opt.exhaustive_limit)
    sweep_linear_forms(R, [&](const Vec& v) { return attempt(v, "exhaustive"); });
}

Vec random_in(const LocalAlgebra& R, const Ideal& I, std::mt19937_64& rng) {
  Vec v(R.length(), 0);
  for (const auto& b : I.space.basis()) axpy(R.field(), draw_residue(rng, R.field().p()), b, v);
  return v;
}

}  // namespace

bool in_m2(const LocalAlgebra& R, std::span<const std::uint32_t> v) { return R.power(2).contains(R.field(), v); }

Vec linear_form(const LocalAlgebra& R, std::span<const std::uint32_t> coeffs) {
  Vec v = R.zero();
  for (std::size_t k = 0; k < R.nvars(); ++k)
    if (coeffs[k]) axpy(R.field(), coeffs[k], R.variable(k), v);
  return v;
}

bool is_exact_pair(const LocalAlgebra& R, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  require_nonzero_nonunit(R, a, "a");
  require_nonzero_nonunit(R, b, "b");
  return same(R, annihilator(R, a), principal(R, b)) && same(R, annihilator(R, b), principal(R, a));
}

std::optional<ExactPairCertificate> certify_pair(const LocalAlgebra& R, std::span<const std::uint32_t> a,
                                                 std::span<const std::uint32_t> b) {
  if (!is_exact_pair(R, a, b)) return std::nullopt;
  ExactPairCertificate c;
  c.a.assign(a.begin(), a.end());
  c.b.assign(b.begin(), b.end());
  c.ann_a = annihilator(R, a);
  c.ann_b = annihilator(R, b);
  c.aR = principal(R, a);
  c.bR = principal(R, b);
  return c;
}

std::optional<Vec> complementary_divisor(const LocalAlgebra& R, std::span<const std::uint32_t> a) {
  if (is_zero(a) || R.is_unit(a)) return std::nullopt;
  Ideal I = annihilator(R, a);
  if (I.lambda() == 0 || mu(R, I) != 1) return std::nullopt;
  Ideal mI = times_m(R, I);
  for (const auto& v : I.space.basis())
    if (!contains(R, mI, v)) return v;
  throw std::logic_error("principal ideal without a generator among its basis");
}

bool criterion_balanced(const LocalAlgebra& R, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (R.power(4).dim() != 0) throw PreconditionError("m4", "m^4 is not zero");
  if (!is_balanced(R.hilbert())) throw PreconditionError("balanced", "Hilbert series is not balanced");
  auto outside = [&](std::span<const std::uint32_t> v, const char* name) {
    if (is_zero(v) || R.is_unit(v) || in_m2(R, v))
      throw PreconditionError(name, std::string(name) + " is not in m \\ m^2");
  };
  outside(a, "a");
  outside(b, "b");
  if (!is_zero(R.multiply(a, b))) return false;
  Ideal m2 = maximal_power(R, 2), m3 = maximal_power(R, 3);
  if (!same(R, product(R, principal(R, a), m2), m3) || !same(R, product(R, principal(R, b), m2), m3)) return false;
  const std::size_t e = R.embedding_dim();
  return mu(R, times_m(R, principal(R, a))) + 1 == e && mu(R, times_m(R, principal(R, b))) + 1 == e;
}

GorensteinVerdict criterion_gorenstein(const LocalAlgebra& R, std::span<const std::uint32_t> a, std::uint64_t seed,
                                       std::size_t extra) {
  if (!is_gorenstein(R)) throw PreconditionError("gorenstein", "ring is not Gorenstein");
  if (R.power(4).dim() != 0) throw PreconditionError("m4", "m^4 is not zero");
  const std::size_t e = R.embedding_dim();
  if (e < 3) throw PreconditionError("e", "embedding dimension below 3");
  require_nonzero_nonunit(R, a, "a");

  GorensteinVerdict v;
  Ideal ann = annihilator(R, a);
  v.principal_annihilator = mu(R, ann) == 1;

  std::vector<Vec> candidates = ann.space.basis();
  auto rng = derive_stream(seed, 0);
  for (std::size_t t = 0; t < extra; ++t) candidates.push_back(random_in(R, ann, rng));

  for (const auto& b : candidates) {
    if (is_zero(b) || R.is_unit(b)) continue;
    if (is_exact_pair(R, a, b)) {
      v.exact_zero_divisor = true;
      break;
    }
  }
  if (!in_m2(R, a) && mu(R, times_m(R, principal(R, a))) + 1 == e) {
    for (const auto& b : candidates) {
      if (is_zero(b) || R.is_unit(b) || in_m2(R, b) || !is_zero(R.multiply(a, b))) continue;
      if (mu(R, times_m(R, principal(R, b))) + 1 == e) {
        v.pair = b;
        break;
      }
    }
  }
  v.hilbert_shape = R.hilbert() == IntPoly{1, static_cast<long long>(e), static_cast<long long>(e), 1};
  return v;
}

PairSearch find_exact_pair(const LocalAlgebra& R, const SearchOptions& opt) {
  PairSearch out;
  auto attempt = [&](const Vec& a, const char* phase) {
    ++out.trials;
    if (is_zero(a)) return false;
    auto b = complementary_divisor(R, a);
    if (!b) return false;
    auto cert = certify_pair(R, a, *b);
    if (!cert) throw std::logic_error("complementary divisor failed certification");
    cert->seed = opt.seed;
    cert->trial = out.trials;
    cert->phase = phase;
    out.certificate = std::move(cert);
    return true;
  };
  search_linear(R, opt, 1, attempt);
  if (!out.certificate)
    out.report = projective_count(R.field().p(), R.nvars()) <= opt.exhaustive_limit
                     ? "no exact zero divisor among all linear forms"
                     : "no exact zero divisor within " + std::to_string(out.trials) + " trials";
  return out;
}

std::string certificate_json(const LocalAlgebra& R, const ExactPairCertificate& c) {
  auto polys = [&](const Ideal& I) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : I.space.basis()) arr.push_back(R.show(v));
    return arr;
  };
  nlohmann::json j;
  j["a"] = R.show(c.a);
  j["b"] = R.show(c.b);
  j["ann_a"] = polys(c.ann_a);
  j["ann_b"] = polys(c.ann_b);
  j["aR"] = polys(c.aR);
  j["bR"] = polys(c.bR);
  j["checks"] = {{"ann_a=bR", same(R, c.ann_a, c.bR)}, {"ann_b=aR", same(R, c.ann_b, c.aR)}};
  j["seed"] = c.seed;
  j["trial"] = c.trial;
  j["phase"] = c.phase;
  return j.dump();
}

bool is_conca_generator(const LocalAlgebra& R, const ExactPairCertificate& cert, std::span<const std::uint32_t> c) {
  if (R.is_unit(c)) throw std::invalid_argument("c must lie in m");
  Ideal aR = principal(R, cert.a), am = times_m(R, aR), m2 = maximal_power(R, 2);
  Ideal cm = times_m(R, principal(R, c));
  Vec c2 = R.multiply(c, c);
  const bool c_out = !contains(R, aR, c);

  const bool basic = same(R, sum_ideal(R, m2, aR), sum_ideal(R, cm, aR)) && c_out && contains(R, aR, c2);
  const bool strong = sum_ideal(R, cm, am).space.contains(R.field(), m2.space) && c_out && contains(R, am, c2);
  if (basic != strong) throw std::logic_error("Conca generator conditions disagree");
  return basic;
}

ConcaSearch find_conca(const LocalAlgebra& R, const ExactPairCertificate& cert, const SearchOptions& opt) {
  ConcaSearch out;
  auto attempt = [&](const Vec& c, const char* phase) {
    ++out.trials;
    if (is_zero(c) || !is_conca_generator(R, cert, c)) return false;
    out.c = c;
    out.phase = phase;
    return true;
  };
  search_linear(R, opt, 2, attempt);
  return out;
}

OutsideM2Report check_pair_outside_m2(const LocalAlgebra& R, const ExactPairCertificate& cert) {
  OutsideM2Report r;
  r.a_outside_m2 = !in_m2(R, cert.a);
  r.b_outside_m2 = !in_m2(R, cert.b);
  const std::size_t e = R.embedding_dim();
  if (R.power(4).dim() != 0 || e < 3) {
    r.note = "inapplicable: needs m^4 = 0 and e >= 3";
    return r;
  }
  const std::size_t s = R.power(3).dim();  // mu(m^3) = lambda(m^3) when m^4 = 0
  r.part2_applies = s + 2 <= e;
  r.part1_applies = is_balanced(R.hilbert()) && r.a_outside_m2;
  if (r.part2_applies) r.holds = r.holds && r.a_outside_m2 && r.b_outside_m2;
  if (r.part1_applies) r.holds = r.holds && r.b_outside_m2;
  if (!r.part1_applies && !r.part2_applies) r.note = "inapplicable: mu(m^3) + 2 > e and part (1) gate closed";
  return r;
}

}  // namespace shortres
