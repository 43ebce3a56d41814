#include "shortres/invsys.hpp"

#include "shortres/random.hpp"

namespace shortres {

Poly contract(const Monomial& m, const Poly& F) {
  Poly r(F.field(), F.nvars());
  for (const auto& [mono, c] : F.terms())
    if (m.divides(mono)) r.add_term(m.quotient(mono), c);
  return r;
}

Poly contract(const Poly& g, const Poly& F) {
  Poly r(F.field(), F.nvars());
  for (const auto& [m, c] : g.terms()) r = r + contract(m, F).scaled(c);
  return r;
}

Matrix catalecticant(const Poly& F, unsigned d) {
  if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("catalecticant needs a nonzero form");
  const unsigned D = static_cast<unsigned>(F.degree());
  if (d > D) throw std::out_of_range("catalecticant degree exceeds the form degree");
  auto src = monomial_basis(F.nvars(), d);
  auto dst = monomial_basis(F.nvars(), D - d);
  MonomialIndex index(dst);
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) m.set_col(j, coordinates(contract(src[j], F), D - d, dst, index));
  return m;
}

std::vector<Poly> apolar_generators(const Poly& F) {
  if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("apolar algebra needs a nonzero form");
  const PrimeField& field = F.field();
  const std::size_t e = F.nvars();
  const unsigned D = static_cast<unsigned>(F.degree());
  std::vector<Poly> gens;
  Subspace prev;  // Ann(F)_(d-1)
  std::vector<Monomial> prev_monos;
  for (unsigned d = 1; d <= D + 1; ++d) {
    auto monos = monomial_basis(e, d);
    MonomialIndex index(monos);
    Subspace ann(monos.size());
    for (const auto& v : prev.basis())
      for (std::size_t k = 0; k < e; ++k) {
        Vec w(monos.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i]) w[index.at(prev_monos[i] * Monomial::variable(e, k))] = v[i];
        ann.insert(field, std::move(w));
      }
    Matrix ker = d <= D ? kernel_basis(field, catalecticant(F, d)) : Matrix::identity(monos.size());
    for (std::size_t r = 0; r < ker.rows(); ++r)
      if (ann.insert(field, ker.row_vec(r))) gens.push_back(from_coordinates(field, e, ker.row(r), monos));
    prev = std::move(ann);
    prev_monos = std::move(monos);
  }
  return gens;
}

GradedAlgebra apolar_algebra(const Poly& F, const std::vector<std::string>& names, unsigned cap) {
  const unsigned D = F.is_zero() ? 0 : static_cast<unsigned>(F.degree());
  if (cap < D + 1) throw std::invalid_argument("cap must exceed the form degree");
  return GradedAlgebra::build(F.field(), names, apolar_generators(F), cap, true);
}

Poly random_cubic(const PrimeField& field, std::size_t e, std::mt19937_64& rng) {
  auto monos = monomial_basis(e, 3);
  while (true) {
    Poly f(field, e);
    for (const auto& m : monos) f.add_term(m, draw_residue(rng, field.p()));
    if (!f.is_zero()) return f;
  }
}

Poly random_cubic(const PrimeField& field, std::size_t e, std::uint64_t seed) {
  auto rng = derive_stream(seed, 0);
  return random_cubic(field, e, rng);
}

}  // namespace shortres
