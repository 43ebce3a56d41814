#pragma once

// Exact zero divisors, exact pairs and Conca generators in finite local
// algebras, with seeded searches.

#include "shortres/quotient.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace shortres {

/// A hypothesis of a criterion does not hold; `clause` names which one.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string clause, const std::string& msg)
      : std::invalid_argument(msg), clause(std::move(clause)) {}
  std::string clause;
};

struct ExactPairCertificate {
  Vec a, b;
  Ideal ann_a, ann_b, aR, bR;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string phase = "given";
};

/// (0:a) = bR and (0:b) = aR. Throws on zero or unit inputs.
bool is_exact_pair(const LocalAlgebra& R, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Certificate for (a, b) when it is an exact pair.
std::optional<ExactPairCertificate> certify_pair(const LocalAlgebra& R, std::span<const std::uint32_t> a,
                                                 std::span<const std::uint32_t> b);

/// A complementary divisor of a when (0:a) is principal: a basis vector of
/// (0:a) outside m(0:a).
std::optional<Vec> complementary_divisor(const LocalAlgebra& R, std::span<const std::uint32_t> a);

bool in_m2(const LocalAlgebra& R, std::span<const std::uint32_t> v);
/// The linear forms sum c_k x_k.
Vec linear_form(const LocalAlgebra& R, std::span<const std::uint32_t> coeffs);

/// ab = 0, a m^2 = m^3 = b m^2 and mu(am) = mu(m) - 1 = mu(bm). Requires
/// m^4 = 0, a balanced Hilbert series and a, b in m \ m^2; each failure
/// raises PreconditionError with its own clause.
bool criterion_balanced(const LocalAlgebra& R, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

struct GorensteinVerdict {
  bool principal_annihilator = false;
  bool exact_zero_divisor = false;
  std::optional<Vec> pair;  // b found through ab = 0 and mu(am) = e - 1 = mu(bm)
  bool hilbert_shape = false;  // H = 1 + et + et^2 + t^3
  bool consistent() const { return principal_annihilator == exact_zero_divisor && exact_zero_divisor == pair.has_value(); }
};

/// The three equivalent conditions for a Gorenstein R with m^4 = 0 and
/// mu(m) >= 3, each computed on its own. b candidates come from a basis of
/// (0:a) followed by `extra` seeded random elements of it.
GorensteinVerdict criterion_gorenstein(const LocalAlgebra& R, std::span<const std::uint32_t> a,
                                       std::uint64_t seed = 0, std::size_t extra = 16);

struct SearchOptions {
  std::size_t budget = 64;
  /// Random lines whose p + 1 points are all tried.
  std::size_t lines = 16;
  std::uint64_t seed = 0;
  /// Sweep every linear form up to scalars when there are at most this many.
  std::size_t exhaustive_limit = 20000;
};

struct PairSearch {
  std::optional<ExactPairCertificate> certificate;
  std::size_t trials = 0;
  std::string report;
};

/// Coordinates first, then seeded random linear forms, then all points of
/// seeded random lines, then the exhaustive sweep when it is small enough.
PairSearch find_exact_pair(const LocalAlgebra& R, const SearchOptions& opt = {});

std::string certificate_json(const LocalAlgebra& R, const ExactPairCertificate& c);

/// m^2 + aR = cm + aR, c not in aR and c^2 in aR; cross-checked against
/// m^2 in cm + am, c not in aR and c^2 in am. Throws std::logic_error if
/// the two forms disagree.
bool is_conca_generator(const LocalAlgebra& R, const ExactPairCertificate& cert, std::span<const std::uint32_t> c);

struct ConcaSearch {
  std::optional<Vec> c;
  std::size_t trials = 0;
  std::string phase;
};

ConcaSearch find_conca(const LocalAlgebra& R, const ExactPairCertificate& cert, const SearchOptions& opt = {});

struct OutsideM2Report {
  bool part1_applies = false;  // balanced, a outside m^2
  bool part2_applies = false;  // mu(m^3) + 2 <= e
  bool a_outside_m2 = false;
  bool b_outside_m2 = false;
  bool holds = true;
  std::string note;
};

/// Both members of an exact pair avoid m^2 when m^4 = 0 and either
/// mu(m^3) + 2 <= e, or H is balanced and a avoids m^2.
OutsideM2Report check_pair_outside_m2(const LocalAlgebra& R, const ExactPairCertificate& cert);

}  // namespace shortres
