#pragma once

// Quotients of k[x_1..x_e]: degree-capped graded algebras S/I and local
// algebras presented inside the truncation k[x]/m^(N+1), plus ideal
// arithmetic on their elements.

#include "shortres/exactla.hpp"
#include "shortres/polyspace.hpp"
#include "shortres/series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shortres {

class LocalAlgebra;

struct HilbertSeries {
  IntPoly series;
  bool exact = true;  // false: truncated at the cap, a lower bound only
};

/// R = S/I with components R_d for d <= cap.
class GradedAlgebra {
 public:
  /// Relations must be homogeneous; degree-1 relations only when allow_linear.
  static GradedAlgebra build(const PrimeField& field, std::vector<std::string> names, std::vector<Poly> relations,
                             unsigned cap, bool allow_linear);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  unsigned cap() const { return cap_; }
  const std::vector<Poly>& relations() const { return relations_; }

  std::size_t dim(unsigned d) const;
  /// Standard monomials of degree d.
  const std::vector<Monomial>& basis(unsigned d) const;
  /// dim R_d x dim S_d
  const Matrix& projection(unsigned d) const;
  /// Multiplication by x_k as a map R_d -> R_{d+1}; d < cap.
  const Matrix& mulvar(std::size_t k, unsigned d) const;

  /// Largest nonzero degree when R_d vanishes somewhere within the cap.
  std::optional<unsigned> top() const { return top_; }
  bool is_artinian() const { return top_.has_value(); }
  std::size_t embedding_dim() const { return dim(1); }

  std::vector<std::size_t> hilbert_function() const;
  HilbertSeries hilbert() const;

  /// Coordinates in R_d of the degree-d part of f.
  Vec reduce(const Poly& f, unsigned d) const;
  /// Polynomial with the given R_d coordinates on standard monomials.
  Poly lift(std::span<const std::uint32_t> v, unsigned d) const;

  /// Dimension of I_d and of S_1 I_{d-1}.
  std::size_t ideal_dim(unsigned d) const;
  /// I is generated in degree 2 through the cap.
  bool is_quadratic() const;

  /// The same ring as a LocalAlgebra truncated at its top degree; the flat
  /// basis is the concatenation of basis(0), basis(1), ...
  const LocalAlgebra& local() const;

  Poly poly(std::string_view text) const { return parse_poly(text, names_, field_); }

 private:
  PrimeField field_{2};
  std::vector<std::string> names_;
  std::vector<Poly> relations_;
  unsigned cap_ = 0;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<Matrix> proj_;
  std::vector<std::vector<Matrix>> mulvar_;  // [k][d]
  std::vector<std::size_t> ideal_dims_;
  std::vector<std::size_t> generated_dims_;
  std::optional<unsigned> top_;
  std::shared_ptr<const LocalAlgebra> local_;
};

/// Standard presentation: homogeneous relations of degree >= 2, cap at least
/// the largest relation degree.
GradedAlgebra build_graded(const PrimeField& field, std::vector<std::string> names, std::vector<Poly> relations,
                           unsigned cap);

/// R = (k[x]/m^(N+1)) / I.
class LocalAlgebra {
 public:
  static LocalAlgebra build(const PrimeField& field, std::vector<std::string> names, std::vector<Poly> relations,
                            unsigned trunc);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  unsigned trunc() const { return trunc_; }
  const std::vector<Poly>& relations() const { return relations_; }

  /// lambda(R)
  std::size_t length() const { return basis_.size(); }
  /// Surviving monomials, degree ascending; basis()[0] is 1.
  const std::vector<Monomial>& basis() const { return basis_; }

  Vec element(const Poly& f) const;
  Vec element(std::string_view text) const { return element(parse_poly(text, names_, field_)); }
  Poly to_poly(std::span<const std::uint32_t> v) const;
  std::string show(std::span<const std::uint32_t> v) const { return to_string(to_poly(v), names_); }

  Vec zero() const { return Vec(length(), 0); }
  Vec one() const;
  Vec variable(std::size_t k) const;
  Vec multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const;
  /// Column j is a * basis()[j].
  Matrix mult_matrix(std::span<const std::uint32_t> a) const;
  bool is_unit(std::span<const std::uint32_t> a) const { return a[0] != 0; }

  /// m^i as a subspace; zero for i > trunc.
  const Subspace& power(unsigned i) const;
  /// dim m^i/m^(i+1) for i = 0..trunc.
  std::vector<std::size_t> hilbert_function() const;
  IntPoly hilbert() const;
  std::size_t embedding_dim() const { return hilbert_function().at(1); }
  /// max{i : a in m^i}; throws on zero.
  unsigned valuation(std::span<const std::uint32_t> a) const;

 private:
  PrimeField field_{2};
  std::vector<std::string> names_;
  std::vector<Poly> relations_;
  unsigned trunc_ = 0;
  std::vector<Monomial> basis_;
  MonomialIndex all_index_;        // monomials of degree <= trunc
  std::vector<Vec> nf_;            // normal form of each monomial, by all_index_
  std::vector<std::vector<Vec>> table_;  // basis products
  std::vector<Subspace> powers_;
};

struct Ideal {
  Subspace space;
  std::size_t lambda() const { return space.dim(); }
  bool operator==(const Ideal&) const = default;
};

Ideal ideal_of(const LocalAlgebra& R, const std::vector<Vec>& generators);
Ideal principal(const LocalAlgebra& R, std::span<const std::uint32_t> a);
Ideal annihilator(const LocalAlgebra& R, std::span<const std::uint32_t> a);
Ideal maximal_power(const LocalAlgebra& R, unsigned i);
Ideal product(const LocalAlgebra& R, const Ideal& I, const Ideal& J);
/// m I
Ideal times_m(const LocalAlgebra& R, const Ideal& I);
/// dim I/mI
std::size_t mu(const LocalAlgebra& R, const Ideal& I);
bool contains(const LocalAlgebra& R, const Ideal& I, std::span<const std::uint32_t> v);
Ideal socle(const LocalAlgebra& R);
bool is_gorenstein(const LocalAlgebra& R);
/// H(-1) = 0
bool is_balanced(const IntPoly& h);

struct GradedQuotient {
  GradedAlgebra algebra;
  std::vector<Poly> push_images;  // old variables in the new ring
  std::vector<Poly> lift_images;  // new variables in the old ring
  Poly push(const Poly& f) const { return f.substitute(push_images); }
  Poly lift(const Poly& f) const { return f.substitute(lift_images); }
};

/// R/aR for homogeneous a. A linear a eliminates one variable, so the result
/// has e - 1 generators. Throws on units.
GradedQuotient quotient_by(const GradedAlgebra& R, const Poly& a);
LocalAlgebra quotient_by(const LocalAlgebra& R, std::span<const std::uint32_t> a);

/// gr R as a graded algebra on the same variables, capped at trunc + 1.
GradedAlgebra associated_graded(const LocalAlgebra& R);

struct InitialForm {
  unsigned degree;
  Poly form;  // homogeneous, read in gr R
};
InitialForm initial_form(const LocalAlgebra& R, const GradedAlgebra& gr, std::span<const std::uint32_t> r);

}  // namespace shortres
