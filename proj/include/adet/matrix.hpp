#pragma once

#include <vector>

#include "adet/int.hpp"
#include "adet/rat.hpp"

namespace adet {

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> entries;  // row-major, size rows*cols

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c) {}
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& data);

  Int& at(size_t r, size_t c) { return entries[r * cols + c]; }
  const Int& at(size_t r, size_t c) const { return entries[r * cols + c]; }
};

struct RatMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> entries;

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c) {}
  static RatMatrix from_rows(const std::vector<std::vector<long long>>& data);

  Rat& at(size_t r, size_t c) { return entries[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return entries[r * cols + c]; }
};

using LatticeVector = std::vector<Int>;
using LatticeBasis = std::vector<LatticeVector>;

// Basis of the integer kernel lattice {v : Mv = 0}, computed by exact
// unimodular column reduction. The result spans the full kernel lattice
// (not merely a finite-index sublattice). Each vector is normalized so its
// first nonzero entry is positive; the list is sorted for determinism.
LatticeBasis integer_kernel_basis(const IntMatrix& m);

struct RowReduceResult {
  size_t rank = 0;
  RatMatrix rref;
  std::vector<size_t> pivot_cols;
  // Reduced-echelon-style kernel basis, one vector per free column in
  // ascending column order.
  std::vector<std::vector<Rat>> nullspace;
};

RowReduceResult rational_row_reduce(const RatMatrix& m);

}  // namespace adet
