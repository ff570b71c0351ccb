#pragma once

#include <optional>
#include <vector>

#include "adet/configuration.hpp"
#include "adet/groebner.hpp"
#include "adet/toric.hpp"

namespace adet {

// Default bound on the number of variables of a symbolic face-discriminant
// computation; overridable via the ADET_VAR_LIMIT environment variable or
// the explicit parameter.
constexpr size_t kDefaultSymbolicVarLimit = 10;
size_t symbolic_var_limit_from_env();

struct MembershipVerdict {
  bool in_vA = false;
  std::vector<Face> witness_faces;  // faces F with alpha_F in nabla_F
};

struct FinitenessReport {
  bool finite = false;
  size_t dimension = 0;                  // valid iff finite
  std::optional<HilbertProfile> profile;  // cross-check, when requested
};

struct FaceDiscriminant {
  Face face;
  bool hypersurface = false;
  Polynomial delta;                        // hypersurface case; over alpha_registry(a)
  std::vector<Polynomial> elimination_ideal;  // non-hypersurface case
};

struct EASupport {
  std::vector<FaceDiscriminant> per_face;  // one entry per lattice face
  std::vector<Polynomial> support;         // distinct hypersurface deltas
};

VariableRegistry alpha_registry(const PointConfiguration& a);

// Critical system of f^F on the torus: the nonzero Euler derivatives
// x_i d_i f^F together with the inverse-of-the-product generator
// w*x_1...x_k - 1. With `symbolic` set, the coefficients are the variables
// a_i, i in F.
Ideal face_critical_system(const PointConfiguration& a, const Face& f,
                           const std::vector<Rat>& alpha, bool symbolic = false);

// alpha_F in nabla_F: the critical system has a torus solution
bool nabla_membership(const PointConfiguration& a, const Face& f,
                      const std::vector<Rat>& alpha);

MembershipVerdict vA_membership(const PointConfiguration& a,
                                const FaceLattice& lattice,
                                const std::vector<Rat>& alpha);

// Finiteness of y_i -> x_i d_i f via the presentation I_A + Euler linear
// forms; optional cross-check against the degreewise Hilbert profile. A
// disagreement between the two oracles throws InconsistentOracles.
FinitenessReport finiteness_test(const PointConfiguration& a,
                                 const ToricIdeal& toric,
                                 const std::vector<Rat>& alpha,
                                 bool with_profile = false);

FaceDiscriminant face_discriminant_symbolic(const PointConfiguration& a,
                                            const Face& f,
                                            size_t var_limit = 0);

EASupport eA_support(const PointConfiguration& a, const FaceLattice& lattice,
                     size_t var_limit = 0);

bool eA_vanishes(const EASupport& support, const std::vector<Rat>& alpha);

// Exact rational basis of { alpha_F : u is a critical point of f^F }, i.e.
// the nullspace of M(u)_{i,j} = (a_j)_i u^{a_j}, j in F.
std::vector<std::vector<Rat>> critical_alpha_basis(const PointConfiguration& a,
                                                   const Face& f,
                                                   const std::vector<Rat>& u);

// Seeded exact sample of a point of p_F^{-1}(nabla_F): off-face coordinates
// are random, the face coordinates are a random combination of
// critical_alpha_basis at a random torus point. Always a member.
std::vector<Rat> sample_nabla_point(const PointConfiguration& a, const Face& f,
                                    uint64_t seed);

}  // namespace adet
