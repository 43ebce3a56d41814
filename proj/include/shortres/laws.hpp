#pragma once

// Executable checks of the structural statements about exact zero divisors,
// each evaluated on concrete inputs within degree caps.

#include "shortres/resolve.hpp"
#include "shortres/zerodiv.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace shortres {

enum class Outcome { verified_to_caps, refuted, inapplicable };
std::string to_string(Outcome o);

struct VerificationReport {
  std::string law;
  nlohmann::json inputs = nlohmann::json::object();
  Outcome outcome = Outcome::verified_to_caps;
  std::string witness;  // refuted: indices or coefficient position
  std::string reason;   // inapplicable
  std::vector<std::string> notes;
  nlohmann::json payload = nlohmann::json::object();

  bool verified() const { return outcome == Outcome::verified_to_caps; }
  bool refuted() const { return outcome == Outcome::refuted; }
  void refute(std::string w);
  void withhold(std::string why);
  nlohmann::json to_json() const;
};

struct Caps {
  unsigned N = 6;
  unsigned J = 10;
};

/// F(a, b) is exact at 1..N and R/aR has beta_(i,i) = 1 and no other
/// Betti numbers through N.
VerificationReport verify_periodic_resolution(const GradedAlgebra& R, const Poly& a, const Poly& b, Caps caps = {});

/// beta^R_n(M) = sum_{i <= n} beta^{R/aR}_i(M) for n <= N, M a module over
/// q.algebra where q = quotient_by(R, a).
VerificationReport verify_poincare_product(const GradedAlgebra& R, const Poly& a, const Poly& b,
                                           const GradedQuotient& q, const GradedModule& M, Caps caps = {});

/// The bigraded form beta^R_(n,j)(M) = sum_i beta^(R/aR)_(i, j-n+i)(M) for
/// j <= J, plus: M has a linear resolution over R iff it has one over R/aR.
VerificationReport verify_graded_poincare_product(const GradedAlgebra& R, const Poly& a, const Poly& b,
                                                  const GradedQuotient& q, const GradedModule& M, Caps caps = {});

/// For m^4 = 0, balanced H and a pair outside m^2: the initial forms are an
/// exact pair of gr L, m^i meets aR in a m^(i-1), and
/// H(gr L / a* gr L) = H(L/aL) = H(L)/(1+t).
VerificationReport verify_initial_forms(const LocalAlgebra& L, std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b);

/// Q = P/(uv, w) covering R, in coordinates x1..xe with x1 -> a, x2 -> c.
struct CiCover {
  int case_no = 0;          // 1: a, b proportional; 2: a, b, c independent; 3: c replaced by b
  bool redirected = false;  // d in bR sent case 3 to case 1
  std::vector<std::string> names;
  std::vector<Poly> images;  // x_i -> linear form of R
  Poly u{PrimeField(2), 0}, v = u, w = u;
  Poly y = u;  // maps to d with c^2 = a d
  std::vector<Poly> kernel;  // R = P/kernel
  GradedAlgebra Q;
  std::vector<std::size_t> hilbert_Q;  // through the cap, equal to (1+t)^2/(1-t)^(e-2)
};

/// a, b, c linear; (a, b) an exact pair and c a Conca generator modulo aR.
/// Throws std::runtime_error when d has no linear solution or uv, w fails
/// the Hilbert-function regularity test through cap.
CiCover construct_ci_cover(const GradedAlgebra& R, const Poly& a, const Poly& b, const Poly& c, unsigned cap = 10);

/// P^R_k = P^Q_k / (1 - t(P^Q_R - 1)) through t^N, with P^Q_k from the
/// resolution and from (1+t)^e (1-t^2)^-2, and P^(Q/uQ)_(R/aR) = P^Q_R.
VerificationReport verify_golod(const GradedAlgebra& R, const CiCover& cover, Caps caps = {});

/// H = 1 + et + et^2 + t^3 with an exact zero divisor: Koszul iff
/// e >= s + 2, s the socle rank. Koszul is evidence through N only.
VerificationReport verify_koszul_socle_bound(const GradedAlgebra& R, Caps caps = {}, const SearchOptions& search = {});

/// Gorenstein, m^4 = 0, e >= 3 with an exact zero divisor: the Hilbert
/// shape, H(-t) P_k = 1, and H(-t) P_M vanishing on [4 + maxgen(M), N].
VerificationReport verify_gorenstein_poincare(const GradedAlgebra& R, const std::vector<GradedModule>& modules,
                                              Caps caps = {}, const SearchOptions& search = {});

/// R = S/(f_1..f_e) artinian: lambda >= 2^e, P_k = (1-t)^-e,
/// (1-t^2)^e P_k polynomial, and minimal multiplicity <=> Koszul <=>
/// H = (1+t)^e, with (1-t)^e P_k polynomial under minimal multiplicity.
VerificationReport verify_complete_intersection(const GradedAlgebra& R, Caps caps = {});

/// Law names accepted by the command line.
const std::vector<std::string>& law_names();

}  // namespace shortres
