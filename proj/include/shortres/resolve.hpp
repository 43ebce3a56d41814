#pragma once

// Graded modules, minimal free resolutions, Betti tables, and small
// complexes of free modules.

#include "shortres/quotient.hpp"
#include "shortres/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shortres {

/// Components M_0..M_cap with the action of each variable.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(std::size_t nvars, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> actions,
               std::optional<int> top);

  std::size_t nvars() const { return actions_.size(); }
  unsigned cap() const { return static_cast<unsigned>(dims_.size()) - 1; }
  std::size_t dim(unsigned j) const;
  /// M_j -> M_(j+1), j < cap
  const Matrix& action(std::size_t k, unsigned j) const { return actions_.at(k).at(j); }
  /// Largest nonzero degree when known (-1 for the zero module).
  std::optional<int> top() const { return top_; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// Throws std::logic_error unless the actions commute and every relation
  /// of R acts as zero.
  void validate(const GradedAlgebra& R) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> actions_;  // [k][j]
  std::optional<int> top_;
};

/// Cokernel of the map from free modules given by relation columns. Column c
/// lists one polynomial per generator; all its nonzero entries must have
/// degree deg(entry) + gen_degree equal to a common value.
GradedModule present_module(const GradedAlgebra& R, const std::vector<unsigned>& gen_degrees,
                            const std::vector<std::vector<Poly>>& relations, unsigned cap);

/// R/(f_1, ..., f_r)
GradedModule cyclic_module(const GradedAlgebra& R, const std::vector<Poly>& ideal, unsigned cap);

GradedModule residue_field(const GradedAlgebra& R, unsigned cap);

/// A module over q.algebra seen over the ring q was formed from.
GradedModule restrict_module(const GradedModule& M, const GradedQuotient& q);

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(unsigned N, unsigned J) : N_(N), J_(J), complete_(N + 1, false) {}

  unsigned N() const { return N_; }
  unsigned J() const { return J_; }
  std::size_t operator()(unsigned i, unsigned j) const;
  void set(unsigned i, unsigned j, std::size_t b);
  std::size_t total(unsigned i) const;
  bool complete(unsigned i) const { return complete_.at(i); }
  void set_complete(unsigned i, bool c) { complete_.at(i) = c; }
  bool all_complete() const;
  const std::map<std::pair<unsigned, unsigned>, std::size_t>& entries() const { return entries_; }
  /// First nonzero entry with j != i, in (i, j) order.
  std::optional<std::pair<unsigned, unsigned>> off_diagonal() const;

  std::string to_json() const;

 private:
  unsigned N_ = 0, J_ = 0;
  std::map<std::pair<unsigned, unsigned>, std::size_t> entries_;
  std::vector<bool> complete_;
};

struct ResolutionOptions {
  unsigned N = 6;
  unsigned J = 10;
  /// R is known to be Koszul; with M of finite length this bounds
  /// regularity and lets rows be certified complete over non-artinian R.
  bool koszul_ring = false;
  /// Multiply consecutive differentials and require zero.
  bool check_complex = false;
};

/// Minimal graded free resolution of M over R, degree by degree up to J and
/// homological degree N. Every beta_(i,j) with j <= J is exact; complete(i)
/// records that row i has no generators beyond J.
BettiTable minimal_resolution(const GradedAlgebra& R, const GradedModule& M, const ResolutionOptions& opt = {});

struct KoszulVerdict {
  enum class Kind { off_diagonal, clean, incomplete };
  Kind kind;
  unsigned i = 0, j = 0;  // witness for off_diagonal
  unsigned N = 0;
  BettiTable table;
  std::string describe() const;
};

/// Linearity of the resolution of k through homological degree N. An
/// off-diagonal entry refutes Koszulness; clean is evidence only.
KoszulVerdict is_koszul_to(const GradedAlgebra& R, unsigned N, unsigned J);

/// sum_j beta_(i,j) t^i for i <= N; refuses incomplete tables.
TruncSeries poincare_truncation(const BettiTable& B);

/// Finite complex of free modules over a finite algebra as k-linear maps.
/// maps[i] goes from position i+1 to position i.
struct ComplexWindow {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
};

/// ... -> R --b--> R --a--> R with L+1 maps, a at even positions.
ComplexWindow build_periodic_complex(const LocalAlgebra& R, std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b, unsigned L);

/// Homology vanishes at positions first..last (each needs maps on both sides).
bool homology_vanishes(const PrimeField& field, const ComplexWindow& C, unsigned first, unsigned last);

}  // namespace shortres
