#include "doctest.h"
#include "support.hpp"

#include "shortres/algebra_file.hpp"
#include "shortres/invsys.hpp"
#include "shortres/laws.hpp"

using namespace shortres;
using namespace testing_support;

namespace {

GradedAlgebra graded(std::uint32_t p, std::vector<std::string> names, const std::vector<std::string>& rels,
                     unsigned cap = 10) {
  PrimeField F(p);
  std::vector<Poly> polys;
  for (const auto& r : rels) polys.push_back(parse_poly(r, names, F));
  return build_graded(F, names, polys, cap);
}

const std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"};

GradedAlgebra cusp() { return graded(101, xy, {"x*y", "x^3 - y^3"}); }

GradedAlgebra generic3(std::uint64_t seed) {
  PrimeField F(101);
  auto R = apolar_algebra(random_cubic(F, 3, seed), xyz, 10);
  REQUIRE(R.hilbert().series == IntPoly{1, 3, 3, 1});
  return R;
}

struct Pair {
  Poly a, b;
};

Pair searched_pair(const GradedAlgebra& R, std::uint64_t seed = 0) {
  SearchOptions opt;
  opt.seed = seed;
  auto s = find_exact_pair(R.local(), opt);
  REQUIRE(s.certificate);
  return {R.local().to_poly(s.certificate->a), R.local().to_poly(s.certificate->b)};
}

// beta_i(k) over k[y]/(y^3): one generator per row, in degree 3i/2 or
// 3(i-1)/2 + 1.
unsigned truncated_line_degree(unsigned i) { return i % 2 ? 3 * (i - 1) / 2 + 1 : 3 * i / 2; }

std::vector<long long> coeffs(const nlohmann::json& arr) { return arr.get<std::vector<long long>>(); }

// Power series coefficients of (1+t)^a (1-t^2)^-b through t^n, by
// convolving binomials.
std::vector<long long> tate(unsigned a, unsigned b, unsigned n) {
  std::vector<long long> num(n + 1, 0), out(n + 1, 0);
  for (unsigned i = 0; i <= a && i <= n; ++i) {
    long long c = 1;
    for (unsigned k = 0; k < i; ++k) c = c * (a - k) / (k + 1);
    num[i] = c;
  }
  // (1-t^2)^-b = sum C(m+b-1, b-1) t^(2m)
  for (unsigned m = 0; 2 * m <= n; ++m) {
    long long c = 1;
    for (unsigned k = 1; k < b; ++k) c = c * (m + k) / k;
    if (b == 0) c = m == 0;
    for (unsigned i = 0; i + 2 * m <= n; ++i) out[i + 2 * m] += c * num[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("laws") {

TEST_CASE("tate helper") {
  CHECK(tate(3, 2, 6) == std::vector<long long>{1, 3, 5, 7, 9, 11, 13});  // (1+t)^3/(1-t^2)^2 = (1+t)/(1-t)^2
  CHECK(tate(2, 1, 4) == std::vector<long long>{1, 2, 2, 2, 2});
}

TEST_CASE("periodic resolution of R/aR") {
  auto R = cusp();
  auto x = R.poly("x"), y = R.poly("y");
  auto r = verify_periodic_resolution(R, x, y);
  CHECK(r.verified());
  CHECK(r.payload["betti"]["entries"].size() == 7);

  auto S = graded(101, xy, {"x^2", "y^2"});
  CHECK(verify_periodic_resolution(S, S.poly("x"), S.poly("x")).verified());

  // not a pair, or not linear
  CHECK(verify_periodic_resolution(R, x, x).outcome == Outcome::inapplicable);
  CHECK(verify_periodic_resolution(R, R.poly("x^2"), y).outcome == Outcome::inapplicable);
}

TEST_CASE("Poincare series over R and R/aR, on the cusp") {
  auto R = cusp();
  auto x = R.poly("x"), y = R.poly("y");
  auto q = quotient_by(R, x);

  auto k = verify_poincare_product(R, x, y, q, residue_field(q.algebra, 10));
  REQUIRE(k.verified());
  // k over k[y]/(y^3) has beta_i = 1; over R it is n + 1, and the direct
  // resolution of k over R agrees.
  CHECK(coeffs(k.payload["P_quotient"]) == std::vector<long long>(7, 1));
  CHECK(coeffs(k.payload["P_R"]) == std::vector<long long>{1, 2, 3, 4, 5, 6, 7});
  auto direct = minimal_resolution(R, residue_field(R, 10));
  for (unsigned n = 0; n <= 6; ++n) CHECK(direct.total(n) == n + 1);

  // R/xR is free over itself
  auto free = verify_poincare_product(R, x, y, q, cyclic_module(q.algebra, {}, 10));
  REQUIRE(free.verified());
  CHECK(coeffs(free.payload["P_R"]) == std::vector<long long>(7, 1));

  GradedModule zero(1, std::vector<std::size_t>(11, 0), {std::vector<Matrix>(10)}, -1);
  CHECK(verify_poincare_product(R, x, y, q, zero).outcome == Outcome::inapplicable);
}

TEST_CASE("bigraded Poincare series on the cusp") {
  auto R = cusp();
  auto x = R.poly("x"), y = R.poly("y");
  auto q = quotient_by(R, x);
  auto r = verify_graded_poincare_product(R, x, y, q, residue_field(q.algebra, 10));
  REQUIRE(r.verified());
  CHECK_FALSE(r.payload["linear_over_R"].get<bool>());
  CHECK_FALSE(r.payload["linear_over_quotient"].get<bool>());

  // beta^R_(n,j)(k) from the closed form for the complete intersection
  // (xy, x^3 - y^3), against the convolution of the k[y]/(y^3) table
  auto oracle = ci_betti(2, {2, 3}, 6, 10);
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned j = 0; j <= 10; ++j) {
      long conv = 0;
      for (unsigned i = 0; i <= n; ++i)
        if (j + i >= n && truncated_line_degree(i) == j + i - n) ++conv;
      CHECK(oracle[{n, j}] == conv);
    }

  // linear over both: R/aR itself, over a Koszul ring
  auto S = graded(101, xy, {"x^2", "y^2"});
  auto qs = quotient_by(S, S.poly("x"));
  auto lin = verify_graded_poincare_product(S, S.poly("x"), S.poly("x"), qs, residue_field(qs.algebra, 10));
  REQUIRE(lin.verified());
  CHECK(lin.payload["linear_over_R"].get<bool>());
  CHECK(lin.payload["linear_over_quotient"].get<bool>());
}

TEST_CASE("ungraded and bigraded forms agree on random samples") {
  auto rng = stream(71);
  for (std::uint64_t s = 0; s < 4; ++s) {
    auto R = generic3(3 * s + 1);
    auto [a, b] = searched_pair(R, s);
    auto q = quotient_by(R, a);
    const auto& names = q.algebra.names();
    Poly f(R.field(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i; j < names.size(); ++j)
        f = f + Poly::variable(R.field(), names.size(), i) * Poly::variable(R.field(), names.size(), j) *
                    Poly::constant(R.field(), names.size(), draw(rng, 101));
    if (f.is_zero()) continue;
    for (const auto& M : {residue_field(q.algebra, 10), cyclic_module(q.algebra, {}, 10),
                          cyclic_module(q.algebra, {f}, 10)}) {
      auto u = verify_poincare_product(R, a, b, q, M);
      auto g = verify_graded_poincare_product(R, a, b, q, M);
      CHECK(u.verified());
      CHECK(g.verified());
      CHECK(u.payload["over_R"] == g.payload["over_R"]);
    }
  }
}

TEST_CASE("initial forms of a pair in an inhomogeneous ring") {
  PrimeField F(101);
  auto L = LocalAlgebra::build(F, xy, {parse_poly("x*y + y^3", xy, F), parse_poly("x^3 - y^3", xy, F)}, 3);
  auto s = find_exact_pair(L);
  REQUIRE(s.certificate);
  auto r = verify_initial_forms(L, s.certificate->a, s.certificate->b);
  REQUIRE(r.verified());
  CHECK(r.payload["intersections"].size() == 4);
  CHECK(r.payload["H_quotient"] == IntPoly{1, 1, 1}.to_string());

  // homogeneous: gr L is L
  auto C = cusp().local();
  CHECK(verify_initial_forms(C, C.element("x"), C.element("y")).verified());

  // a in m^2
  CHECK(verify_initial_forms(C, C.element("x^2"), C.element("y")).outcome == Outcome::inapplicable);
}

TEST_CASE("complete intersection covers and the Golod formula") {
  SUBCASE("second case on a generic sample") {
    auto R = generic3(1);
    const auto& L = R.local();
    SearchOptions opt;
    opt.seed = 1;
    auto s = find_exact_pair(L, opt);
    REQUIRE(s.certificate);
    auto c = find_conca(L, *s.certificate, opt);
    REQUIRE(c.c);
    auto cover = construct_ci_cover(R, L.to_poly(s.certificate->a), L.to_poly(s.certificate->b), L.to_poly(*c.c));
    CHECK(cover.case_no == 2);
    CHECK(cover.hilbert_Q == std::vector<std::size_t>{1, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4});
    auto g = verify_golod(R, cover);
    REQUIRE(g.verified());
    CHECK(coeffs(g.payload["P_k_Q"]) == tate(3, 2, 6));
    CHECK(coeffs(g.payload["P_k_R"]) == std::vector<long long>{1, 3, 6, 10, 15, 21, 28});
  }
  SUBCASE("third case: b is itself a Conca generator") {
    auto R = generic3(11);
    const auto& L = R.local();
    SearchOptions opt;
    opt.seed = 11;
    auto s = find_exact_pair(L, opt);
    REQUIRE(s.certificate);
    REQUIRE(is_conca_generator(L, *s.certificate, s.certificate->b));
    Poly b = L.to_poly(s.certificate->b);
    auto cover = construct_ci_cover(R, L.to_poly(s.certificate->a), b, b);
    CHECK(cover.case_no == 3);
    CHECK_FALSE(cover.redirected);
    CHECK(verify_golod(R, cover).verified());
  }
  SUBCASE("first case: a pair (x, x)") {
    auto R = graded(101, xyz, {"x^2", "y^2", "z^2"});
    auto cover = construct_ci_cover(R, R.poly("x"), R.poly("x"), R.poly("y"));
    CHECK(cover.case_no == 1);
    CHECK(to_string(cover.u * cover.v, cover.names) == "x1^2");
    CHECK(to_string(cover.w, cover.names) == "x2^2");
    auto g = verify_golod(R, cover);
    REQUIRE(g.verified());
    CHECK(coeffs(g.payload["P_R_Q"]) == std::vector<long long>{1, 1, 0, 0, 0, 0, 0});
  }
  SUBCASE("bad inputs") {
    auto R = graded(101, xyz, {"x^2", "y^2", "z^2"});
    CHECK_THROWS_AS(construct_ci_cover(R, R.poly("x"), R.poly("y"), R.poly("z")), std::invalid_argument);
    CHECK_THROWS_AS(construct_ci_cover(R, R.poly("x"), R.poly("x"), R.poly("x")), std::invalid_argument);
  }
}

TEST_CASE("Koszulness against the socle bound") {
  auto G = generic3(2);
  auto g = verify_koszul_socle_bound(G);
  REQUIRE(g.verified());
  CHECK(g.payload["s"] == 1);
  CHECK(g.payload["e"] == 3);
  CHECK(g.notes.size() == 1);

  // s = 2 with the exact zero divisor z: Koszulness must fail
  auto T = graded(101, xyz, {"x^2", "x*y", "y^3", "z^2"});
  auto t = verify_koszul_socle_bound(T);
  REQUIRE(t.verified());
  CHECK(t.payload["s"] == 2);
  CHECK(t.payload["koszul"].get<std::string>().find("off-diagonal") != std::string::npos);

  // quadratic with an exact zero divisor
  auto Q = graded(101, xyz, {"x^2", "y^2", "z^2"});
  auto q = verify_koszul_socle_bound(Q);
  CHECK(q.verified());
  CHECK(q.payload["quadratic"].get<bool>());

  // e = 2, s = 1: not Koszul, as predicted
  CHECK(verify_koszul_socle_bound(cusp()).verified());

  CHECK(verify_koszul_socle_bound(graded(101, xy, {"x^2", "y^3"})).verified());  // e = 2 again
  CHECK(verify_koszul_socle_bound(graded(101, xy, {"x^2", "y^2"})).outcome == Outcome::inapplicable);
}

TEST_CASE("Gorenstein rings with an exact zero divisor") {
  auto R = generic3(3);
  auto rng = stream(72);
  std::vector<GradedModule> mods{residue_field(R, 10), cyclic_module(R, {}, 10)};
  for (int t = 0; t < 3; ++t) {
    Poly f(R.field(), 3);
    for (const auto& m : monomial_basis(3, 2)) f.add_term(m, draw(rng, 101));
    mods.push_back(cyclic_module(R, {f}, 10));
  }
  auto r = verify_gorenstein_poincare(R, mods);
  REQUIRE(r.verified());
  CHECK(coeffs(r.payload["P_k"]) == std::vector<long long>{1, 3, 6, 10, 15, 21, 28});
  // P_R = 1, so the product is H(-t) itself
  CHECK(coeffs(r.payload["modules"][1]["product"]) == std::vector<long long>{1, -3, 3, -1, 0, 0, 0});
  CHECK(r.payload["modules"][0]["window"] == nlohmann::json({4, 6}));

  CHECK(verify_gorenstein_poincare(graded(101, xyz, {"x^2", "x*y", "y^3", "z^2"}), {}).outcome ==
        Outcome::inapplicable);
  CHECK(verify_gorenstein_poincare(cusp(), {}).outcome == Outcome::inapplicable);  // e = 2
}

TEST_CASE("artinian complete intersections") {
  auto A = graded(101, xy, {"x^2", "y^2"});
  auto a = verify_complete_intersection(A);
  REQUIRE(a.verified());
  CHECK(a.payload["lambda"] == "4");
  CHECK(a.payload["minimal_multiplicity"].get<bool>());
  CHECK(a.payload["koszul_evidence"].get<bool>());
  CHECK(coeffs(a.payload["P_k"]) == std::vector<long long>{1, 2, 3, 4, 5, 6, 7});

  auto B = graded(101, xy, {"x^2", "y^3"});
  auto b = verify_complete_intersection(B);
  REQUIRE(b.verified());
  CHECK(b.payload["lambda"] == "6");
  CHECK_FALSE(b.payload["H_is_power"].get<bool>());
  CHECK_FALSE(b.payload["koszul_evidence"].get<bool>());
  CHECK(b.payload["koszul"].get<std::string>().find("(2,3)") != std::string::npos);

  // not a complete intersection
  CHECK(verify_complete_intersection(graded(101, xy, {"x^2", "x*y", "y^2"})).outcome == Outcome::inapplicable);
}

TEST_CASE("reports are deterministic and serialize") {
  auto R = generic3(5);
  SearchOptions opt;
  opt.seed = 9;
  auto r1 = verify_koszul_socle_bound(R, {}, opt), r2 = verify_koszul_socle_bound(R, {}, opt);
  CHECK(r1.to_json().dump() == r2.to_json().dump());
  auto j = r1.to_json();
  CHECK(j["law"] == "koszul-socle-bound");
  CHECK(j["outcome"] == "verified_to_caps");
  CHECK(j["inputs"]["caps"] == nlohmann::json({6, 10}));
  CHECK(j["inputs"]["algebra"].get<std::string>().size() == 16);
  CHECK_FALSE(j.contains("witness"));

  VerificationReport bad;
  bad.refute("t^3");
  CHECK(bad.to_json()["witness"] == "t^3");
}

TEST_CASE("algebra files") {
  auto d = parse_algebra("# cusp\np = 101\nvars = x, y\nrelations = x*y, x^3 - y^3\n");
  CHECK(d.p == 101);
  CHECK(d.vars == xy);
  CHECK(d.relations.size() == 2);
  CHECK_FALSE(d.local);
  auto R = std::get<GradedAlgebra>(build_algebra(d));
  CHECK(R.hilbert().series == IntPoly{1, 2, 2, 1});
  CHECK(algebra_hash(R) == algebra_hash(cusp()));

  auto l = parse_algebra("p=101\nvars=x,y\nrelations=x*y+y^3, x^3-y^3\nlocal = true\ntrunc = 3");
  auto L = std::get<LocalAlgebra>(build_algebra(l));
  CHECK(L.hilbert() == IntPoly{1, 2, 2, 1});

  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_algebra(text);
    } catch (const AlgebraFileError& e) {
      return {e.line, e.column};
    }
    return {0, 0};
  };
  CHECK(error_at("p = 101\nvars = x, y\nrelations = x*y, x^^3\n") == std::pair<std::size_t, std::size_t>{3, 20});
  CHECK(error_at("p = 100\nvars = x\n") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(error_at("p = 7\nvars = x, 2y\n") == std::pair<std::size_t, std::size_t>{2, 11});
  CHECK(error_at("p = 7\nvars = x\ncolour = red\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_at("p = 7\nvars x\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("p = 7\n").first != 0);
  CHECK(error_at("p = 7\nvars = x\ncap = 5\nlocal = true\n") == std::pair<std::size_t, std::size_t>{3, 1});
}

}  // TEST_SUITE
