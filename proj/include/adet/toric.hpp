#pragma once

#include <cstdint>
#include <vector>

#include "adet/configuration.hpp"
#include "adet/groebner.hpp"
#include "adet/polynomial.hpp"

namespace adet {

// The toric ideal I_A: kernel of z_i -> x^{a_i}, presented by saturated
// binomials. Prime and homogeneous for our graded configurations.
struct ToricIdeal {
  VariableRegistry registry;            // z_1..z_d
  std::vector<Polynomial> generators;   // pure-difference binomials
};

VariableRegistry z_registry(const PointConfiguration& a);

// Lattice-kernel binomials saturated with respect to the product of all
// z-variables.
ToricIdeal toric_ideal(const PointConfiguration& a);

// Exact monomial basis of the degree-n graded piece of R = Q[(x^{a_i})_i]:
// the set of n-fold sums of the a_i, in sorted order. Elements are full
// exponent vectors in Z^k (the last coordinate equals n).
std::vector<std::vector<long long>> semigroup_degree_basis(
    const PointConfiguration& a, size_t n);

// Coordinates of the point of the orbit attached to a face F at torus point
// u: z_i = u^{a_i} on F and 0 off F.
std::vector<Rat> orbit_point(const PointConfiguration& a, const Face& f,
                             const std::vector<Rat>& u);

// Point with the same shape for an arbitrary index subset; used to probe
// non-face subsets, whose points must violate the toric ideal.
std::vector<Rat> subset_point(const PointConfiguration& a,
                              const std::vector<size_t>& subset,
                              const std::vector<Rat>& u);

struct HilbertProfile {
  std::vector<long long> dims;  // quotient dimensions for n = 0,1,2,...
  bool reached_zero = false;
  size_t zero_at = 0;  // first zero index, valid iff reached_zero
  bool cap_hit = false;

  long long total() const {
    long long t = 0;
    for (long long d : dims) t += d;
    return t;
  }
};

// Degreewise dimensions of R_n / sum_i g_i R_{n-1} where g_i = x_i d_i f,
// f = sum alpha_j x^{a_j}. Computed by exact rank, degree by degree; the
// graded pieces are tracked through their (small) dual kernels, which makes
// high degrees cheap. Stops at the first zero unless extra_past_zero asks
// for more entries, and at the cap otherwise.
HilbertProfile hilbert_quotient_profile(const PointConfiguration& a,
                                        const std::vector<Rat>& alpha,
                                        size_t cap, size_t extra_past_zero = 0);

// The k x d coefficient matrix c_{ij} = (a_j)_i * alpha_j of the Euler
// operators in the degree-one presentation.
std::vector<std::vector<Rat>> euler_coefficients(const PointConfiguration& a,
                                                 const std::vector<Rat>& alpha);

// lambda_i = sum_j (a_j)_i alpha_j z_j; identically-zero forms are dropped
std::vector<Polynomial> euler_linear_forms(const PointConfiguration& a,
                                           const std::vector<Rat>& alpha);

}  // namespace adet
