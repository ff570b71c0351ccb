#pragma once

#include <optional>
#include <vector>

#include "adet/int.hpp"
#include "adet/polynomial.hpp"
#include "adet/rat.hpp"
#include "adet/registry.hpp"

namespace adet {

// Point configuration A = {a_1..a_d} in Z^k with (a_i)_k = 1, pairwise
// distinct, spanning R^k. The projected points a'_i drop the last
// coordinate; P is their convex hull in R^(k-1).
struct PointConfiguration {
  std::vector<std::vector<long long>> points;  // the a_i
  size_t d = 0;  // number of points
  size_t k = 0;  // ambient dimension
  size_t n = 0;  // d - k

  std::vector<long long> projected(size_t i) const {
    return {points[i].begin(), points[i].end() - 1};
  }
};

PointConfiguration validate(const std::vector<std::vector<long long>>& points);

struct SupportFunctional {
  std::vector<Int> lambda;  // primitive integer normal in R^(k-1)
  Int c;                    // <lambda, a'_i> = c on the face, < c off it
};

struct Face {
  std::vector<size_t> indices;  // 0-based, sorted; all i with a'_i on the face
  size_t dim = 0;               // affine dimension
  std::optional<SupportFunctional> functional;  // absent for F = P

  bool is_full() const { return !functional.has_value(); }
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (cardinality, lexicographic indices);
                            // includes P, excludes the empty face

  const Face& full_face() const { return faces.back(); }
  std::optional<size_t> find(const std::vector<size_t>& indices) const;
};

// Exhaustive exact enumeration of the nonempty faces of P: candidate
// supporting hyperplanes through affinely independent point subsets plus
// coordinate extremes, contact sets closed under intersection, P appended.
FaceLattice face_lattice(const PointConfiguration& a);

// f^F = sum over i in F of alpha_i x^{a_i}, over the registry x_1..x_k.
// Exponents are shifted coordinatewise into the nonnegative orthant when the
// configuration has negative entries (a unit-monomial factor on the torus).
Polynomial face_polynomial(const PointConfiguration& a, const Face& f,
                           const std::vector<Rat>& alpha);

VariableRegistry x_registry(const PointConfiguration& a);

}  // namespace adet
