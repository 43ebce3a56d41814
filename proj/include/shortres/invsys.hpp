#pragma once

// Macaulay inverse systems under the divided-power contraction action.

#include "shortres/quotient.hpp"

#include <random>

namespace shortres {

/// x^a o y^b = y^(b-a) when a <= b componentwise, else 0; extended bilinearly.
Poly contract(const Monomial& m, const Poly& F);
Poly contract(const Poly& g, const Poly& F);

/// Columns indexed by monomial_basis(e, d), rows by monomial_basis(e, deg F - d).
Matrix catalecticant(const Poly& F, unsigned d);

/// Minimal generators of Ann(F), degree by degree: ker cat_d modulo
/// S_1 Ann(F)_(d-1), and all of S_(D+1) modulo S_1 Ann(F)_D.
std::vector<Poly> apolar_generators(const Poly& F);

/// S/Ann(F). Degenerate forms give linear generators, which are kept.
GradedAlgebra apolar_algebra(const Poly& F, const std::vector<std::string>& names, unsigned cap);

/// Nonzero cubic with coefficients drawn from rng.
Poly random_cubic(const PrimeField& field, std::size_t e, std::mt19937_64& rng);
Poly random_cubic(const PrimeField& field, std::size_t e, std::uint64_t seed);

}  // namespace shortres
