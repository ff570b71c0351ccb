#pragma once

#include <vector>

#include "adet/polynomial.hpp"
#include "adet/registry.hpp"

namespace adet {

struct Ideal {
  VariableRegistry registry;
  std::vector<Polynomial> generators;  // nonzero

  Ideal() = default;
  Ideal(VariableRegistry reg, std::vector<Polynomial> gens);
};

// Unique reduced Groebner basis: monic elements with fully reduced tails and
// pairwise non-divisible leading monomials, sorted ascending by leading
// monomial.
struct ReducedGB {
  MonomialOrder order;
  std::vector<Polynomial> basis;

  bool is_unit_ideal() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
  }
};

struct ZeroDimReport {
  bool finite = false;
  size_t dimension = 0;                      // valid iff finite
  std::vector<Monomial> standard_monomials;  // valid iff finite
};

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const MonomialOrder& o);

// Buchberger with the Gebauer-Moeller pair criteria and normal selection
// (smallest lcm first). Intermediate polynomials are kept integer-primitive.
ReducedGB reduced_groebner_basis(const Ideal& ideal, const MonomialOrder& o);

// true iff the variety over an algebraically closed field is nonempty,
// i.e. the reduced basis is not {1}
bool is_proper(const Ideal& ideal);

// Generators of the elimination ideal obtained by dropping the given
// variables, via a block order with the dropped variables in front. The
// result is the reduced basis of the intersection, over the same registry
// (dropped variables simply do not occur).
std::vector<Polynomial> eliminate(const Ideal& ideal,
                                  const std::vector<size_t>& drop_vars);

// Finite-dimensionality of the quotient ring: finite iff every variable has
// a pure power among the leading monomials. When finite, the standard
// monomials are enumerated; dimension is their count.
ZeroDimReport zero_dim_report(const Ideal& ideal, const MonomialOrder& o);

// I : (prod of vars)^infinity via one auxiliary inverse variable and
// elimination.
Ideal saturate_by_product(const Ideal& ideal, const std::vector<size_t>& vars);

}  // namespace adet
