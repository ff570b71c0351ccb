#include "adet/matrix.hpp"

#include <algorithm>

#include "adet/errors.hpp"

namespace adet {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& data) {
  IntMatrix m(data.size(), data.empty() ? 0 : data[0].size());
  for (size_t r = 0; r < m.rows; ++r) {
    if (data[r].size() != m.cols)
      throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = Int(data[r][c]);
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long long>>& data) {
  RatMatrix m(data.size(), data.empty() ? 0 : data[0].size());
  for (size_t r = 0; r < m.rows; ++r) {
    if (data[r].size() != m.cols)
      throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = Rat(data[r][c]);
  }
  return m;
}

namespace {

// lexicographic compare of integer vectors
bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void normalize_sign(LatticeVector& v) {
  for (const Int& x : v) {
    if (x.is_zero()) continue;
    if (x.is_negative())
      for (Int& y : v) y = -y;
    return;
  }
}

}  // namespace

LatticeBasis integer_kernel_basis(const IntMatrix& m) {
  const size_t rows = m.rows, cols = m.cols;
  // column-major working copies: M columns and the tracking unimodular U
  std::vector<std::vector<Int>> col(cols, std::vector<Int>(rows));
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols));
  for (size_t c = 0; c < cols; ++c) {
    for (size_t r = 0; r < rows; ++r) col[c][r] = m.at(r, c);
    u[c][c] = Int(1);
  }

  size_t pc = 0;  // next pivot column slot
  for (size_t r = 0; r < rows && pc < cols; ++r) {
    // Euclidean reduction across columns pc..cols-1 on row r
    for (;;) {
      size_t best = cols;
      for (size_t c = pc; c < cols; ++c) {
        if (col[c][r].is_zero()) continue;
        if (best == cols || col[c][r].abs() < col[best][r].abs()) best = c;
      }
      if (best == cols) break;  // row r already zero on remaining columns
      if (best != pc) {
        std::swap(col[best], col[pc]);
        std::swap(u[best], u[pc]);
      }
      bool others = false;
      for (size_t c = pc + 1; c < cols; ++c) {
        if (col[c][r].is_zero()) continue;
        others = true;
        Int q = col[c][r] / col[pc][r];  // truncated: |remainder| < |pivot|
        if (!q.is_zero()) {
          for (size_t i = 0; i < rows; ++i) col[c][i] -= q * col[pc][i];
          for (size_t i = 0; i < cols; ++i) u[c][i] -= q * u[pc][i];
        }
      }
      if (!others) {
        ++pc;
        break;
      }
      // otherwise loop again; pivot magnitudes strictly decrease
    }
  }

  LatticeBasis basis;
  for (size_t c = pc; c < cols; ++c) {
    bool zero = true;
    for (size_t r = 0; r < rows; ++r)
      if (!col[c][r].is_zero()) {
        zero = false;
        break;
      }
    if (!zero) continue;  // unreachable once reduction is complete
    LatticeVector v = u[c];
    normalize_sign(v);
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

RowReduceResult rational_row_reduce(const RatMatrix& m) {
  RowReduceResult out;
  out.rref = m;
  RatMatrix& a = out.rref;
  size_t pivot_row = 0;
  for (size_t c = 0; c < a.cols && pivot_row < a.rows; ++c) {
    size_t pr = a.rows;
    for (size_t r = pivot_row; r < a.rows; ++r) {
      if (!a.at(r, c).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr == a.rows) continue;
    if (pr != pivot_row)
      for (size_t j = 0; j < a.cols; ++j)
        std::swap(a.at(pr, j), a.at(pivot_row, j));
    Rat inv = a.at(pivot_row, c).inverse();
    for (size_t j = c; j < a.cols; ++j) a.at(pivot_row, j) *= inv;
    for (size_t r = 0; r < a.rows; ++r) {
      if (r == pivot_row || a.at(r, c).is_zero()) continue;
      Rat f = a.at(r, c);
      for (size_t j = c; j < a.cols; ++j)
        a.at(r, j) -= f * a.at(pivot_row, j);
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivot_cols.size();

  std::vector<char> is_pivot(a.cols, 0);
  for (size_t c : out.pivot_cols) is_pivot[c] = 1;
  for (size_t c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(a.cols);
    v[c] = Rat(1);
    for (size_t p = 0; p < out.pivot_cols.size(); ++p)
      v[out.pivot_cols[p]] = -a.at(p, c);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace adet
