#include "adet/toric.hpp"

#include <algorithm>
#include <map>

#include "adet/matrix.hpp"

namespace adet {

VariableRegistry z_registry(const PointConfiguration& a) {
  std::vector<std::string> names;
  names.reserve(a.d);
  for (size_t i = 1; i <= a.d; ++i) names.push_back("z" + std::to_string(i));
  return VariableRegistry(std::move(names));
}

ToricIdeal toric_ideal(const PointConfiguration& a) {
  ToricIdeal out;
  out.registry = z_registry(a);

  IntMatrix m(a.k, a.d);
  for (size_t r = 0; r < a.k; ++r)
    for (size_t c = 0; c < a.d; ++c) m.at(r, c) = Int(a.points[c][r]);
  LatticeBasis kernel = integer_kernel_basis(m);
  if (kernel.empty()) return out;  // injective configuration: zero ideal

  std::vector<Polynomial> binomials;
  for (const LatticeVector& u : kernel) {
    Monomial plus = Monomial::one(a.d), minus = Monomial::one(a.d);
    for (size_t i = 0; i < a.d; ++i) {
      if (u[i].signum() > 0) plus.e[i] = static_cast<int32_t>(u[i].to_int64());
      if (u[i].signum() < 0) minus.e[i] = static_cast<int32_t>((-u[i]).to_int64());
    }
    Polynomial b = Polynomial::term(plus, Rat(1));
    b.add_term(minus, Rat(-1));
    binomials.push_back(std::move(b));
  }

  std::vector<size_t> all_vars(a.d);
  for (size_t i = 0; i < a.d; ++i) all_vars[i] = i;
  Ideal sat = saturate_by_product(Ideal(out.registry, std::move(binomials)), all_vars);
  out.generators = std::move(sat.generators);

  // every generator must stay a homogeneous pure-difference binomial in the
  // kernel of A
  for (const Polynomial& g : out.generators) {
    if (g.term_count() != 2)
      throw Error(ErrorCode::Internal, "toric generator is not a binomial");
    auto it = g.terms().begin();
    const Monomial& m1 = it->first;
    const Rat& c1 = it->second;
    ++it;
    const Monomial& m2 = it->first;
    const Rat& c2 = it->second;
    if (!(c1 + c2).is_zero() || !c1.abs().is_one())
      throw Error(ErrorCode::Internal, "toric generator is not a pure difference");
    for (size_t r = 0; r < a.k; ++r) {
      long long s = 0;
      for (size_t i = 0; i < a.d; ++i)
        s += a.points[i][r] * (m1.e[i] - m2.e[i]);
      if (s != 0)
        throw Error(ErrorCode::Internal, "toric generator exponent not in kernel");
    }
  }
  return out;
}

namespace {

std::vector<std::vector<long long>> sumset_step(
    const PointConfiguration& a, const std::vector<std::vector<long long>>& cur) {
  std::vector<std::vector<long long>> next;
  next.reserve(cur.size() * a.d);
  for (const auto& b : cur) {
    for (size_t j = 0; j < a.d; ++j) {
      std::vector<long long> s(a.k);
      for (size_t c = 0; c < a.k; ++c) s[c] = b[c] + a.points[j][c];
      next.push_back(std::move(s));
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

}  // namespace

std::vector<std::vector<long long>> semigroup_degree_basis(
    const PointConfiguration& a, size_t n) {
  std::vector<std::vector<long long>> cur = {std::vector<long long>(a.k, 0)};
  for (size_t step = 0; step < n; ++step) cur = sumset_step(a, cur);
  return cur;
}

std::vector<Rat> subset_point(const PointConfiguration& a,
                              const std::vector<size_t>& subset,
                              const std::vector<Rat>& u) {
  if (u.size() != a.k)
    throw Error(ErrorCode::InvalidInput, "torus point has wrong dimension");
  for (const Rat& c : u)
    if (c.is_zero())
      throw Error(ErrorCode::ZeroCoordinate, "torus point has a zero coordinate");
  std::vector<Rat> out(a.d, Rat(0));
  for (size_t i : subset) {
    Rat v(1);
    for (size_t c = 0; c < a.k; ++c) v *= u[c].pow(a.points[i][c]);
    out[i] = v;
  }
  return out;
}

std::vector<Rat> orbit_point(const PointConfiguration& a, const Face& f,
                             const std::vector<Rat>& u) {
  return subset_point(a, f.indices, u);
}

std::vector<std::vector<Rat>> euler_coefficients(const PointConfiguration& a,
                                                 const std::vector<Rat>& alpha) {
  if (alpha.size() != a.d)
    throw Error(ErrorCode::InvalidInput, "alpha has wrong length");
  std::vector<std::vector<Rat>> c(a.k, std::vector<Rat>(a.d));
  for (size_t i = 0; i < a.k; ++i)
    for (size_t j = 0; j < a.d; ++j)
      c[i][j] = Rat(a.points[j][i]) * alpha[j];
  return c;
}

std::vector<Polynomial> euler_linear_forms(const PointConfiguration& a,
                                           const std::vector<Rat>& alpha) {
  std::vector<std::vector<Rat>> c = euler_coefficients(a, alpha);
  std::vector<Polynomial> out;
  for (size_t i = 0; i < a.k; ++i) {
    Polynomial form = Polynomial::zero(a.d);
    for (size_t j = 0; j < a.d; ++j) {
      if (c[i][j].is_zero()) continue;
      Monomial m = Monomial::one(a.d);
      m.e[j] = 1;
      form.add_term(m, c[i][j]);
    }
    if (!form.is_zero()) out.push_back(std::move(form));
  }
  return out;
}

namespace {

void make_vector_primitive(std::vector<Rat>& v) {
  Int num_gcd(0), den_lcm(1);
  for (const Rat& x : v) {
    if (x.is_zero()) continue;
    num_gcd = Int::gcd(num_gcd, x.numerator());
    den_lcm = Int::lcm(den_lcm, x.denominator());
  }
  if (num_gcd.is_zero()) return;
  Rat scale(den_lcm, num_gcd);
  if (scale.is_one()) return;
  for (Rat& x : v) x *= scale;
}

// Incremental echelon structure over a small number of columns.
struct SmallEchelon {
  size_t width;
  std::vector<std::vector<Rat>> rows;  // reduced rows
  std::vector<size_t> pivot;           // pivot column of each row

  explicit SmallEchelon(size_t w) : width(w) {}

  // reduce and insert; returns true if the row added rank
  bool add(std::vector<Rat> r) {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (r[pivot[i]].is_zero()) continue;
      Rat f = r[pivot[i]];
      for (size_t c = 0; c < width; ++c)
        if (!rows[i][c].is_zero()) r[c] -= f * rows[i][c];
    }
    size_t p = width;
    for (size_t c = 0; c < width; ++c)
      if (!r[c].is_zero()) {
        p = c;
        break;
      }
    if (p == width) return false;
    Rat inv = r[p].inverse();
    for (size_t c = 0; c < width; ++c) r[c] *= inv;
    rows.push_back(std::move(r));
    pivot.push_back(p);
    return true;
  }

  size_t rank() const { return rows.size(); }

  // kernel basis in free-column form
  std::vector<std::vector<Rat>> kernel() const {
    // back-substitute to reduced echelon form
    std::vector<std::vector<Rat>> rr = rows;
    std::vector<size_t> idx(rr.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t x, size_t y) { return pivot[x] < pivot[y]; });
    std::vector<std::vector<Rat>> ordered;
    std::vector<size_t> piv;
    for (size_t i : idx) {
      ordered.push_back(rr[i]);
      piv.push_back(pivot[i]);
    }
    for (size_t i = ordered.size(); i-- > 0;) {
      for (size_t j = 0; j < i; ++j) {
        Rat f = ordered[j][piv[i]];
        if (f.is_zero()) continue;
        for (size_t c = 0; c < width; ++c)
          if (!ordered[i][c].is_zero()) ordered[j][c] -= f * ordered[i][c];
      }
    }
    std::vector<char> is_pivot(width, 0);
    for (size_t p : piv) is_pivot[p] = 1;
    std::vector<std::vector<Rat>> out;
    for (size_t c = 0; c < width; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Rat> v(width, Rat(0));
      v[c] = Rat(1);
      for (size_t i = 0; i < ordered.size(); ++i) v[piv[i]] = -ordered[i][c];
      out.push_back(std::move(v));
    }
    return out;
  }
};

}  // namespace

HilbertProfile hilbert_quotient_profile(const PointConfiguration& a,
                                        const std::vector<Rat>& alpha,
                                        size_t cap, size_t extra_past_zero) {
  if (cap < 1) throw Error(ErrorCode::InvalidInput, "cap must be >= 1");
  std::vector<std::vector<Rat>> coef = euler_coefficients(a, alpha);

  HilbertProfile out;
  out.dims.push_back(1);  // degree 0: R_0 with no image below it

  // graded pieces are tracked through the dual kernel
  // K_n = { y in (R_n)^* : y(g_i b) = 0 for all i, b },  dim K_n = dims[n]
  std::vector<std::vector<long long>> basis_prev = {std::vector<long long>(a.k, 0)};
  std::vector<std::vector<Rat>> kernel_prev = {{Rat(1)}};

  for (size_t n = 1;; ++n) {
    if (out.reached_zero) {
      if (n > out.zero_at + extra_past_zero) break;  // window recorded
    } else if (n > cap) {
      out.cap_hit = true;
      break;
    }

    std::vector<std::vector<long long>> basis = sumset_step(a, basis_prev);
    const size_t p = kernel_prev.size();
    const size_t dp = a.d * p;

    std::vector<std::vector<Rat>> kernel_next;
    if (p > 0) {
      std::map<std::vector<long long>, size_t> prev_index;
      for (size_t i = 0; i < basis_prev.size(); ++i)
        prev_index.emplace(basis_prev[i], i);

      // resolutions m = b + a_j with b in the previous basis
      std::vector<std::vector<std::pair<size_t, size_t>>> res(basis.size());
      for (size_t mi = 0; mi < basis.size(); ++mi) {
        for (size_t j = 0; j < a.d; ++j) {
          std::vector<long long> b(a.k);
          for (size_t c = 0; c < a.k; ++c) b[c] = basis[mi][c] - a.points[j][c];
          auto it = prev_index.find(b);
          if (it != prev_index.end()) res[mi].push_back({j, it->second});
        }
        if (res[mi].empty())
          throw Error(ErrorCode::Internal, "degree basis element has no resolution");
      }

      // Unknowns c_{j,s}: the coordinates of the shift sigma_j(y) in the
      // previous kernel basis. Constraints: all resolutions of a monomial
      // agree, and the Euler conditions hold.
      SmallEchelon ech(dp);
      for (size_t mi = 0; mi < basis.size() && ech.rank() < dp; ++mi) {
        const auto& [j0, b0] = res[mi][0];
        for (size_t r = 1; r < res[mi].size(); ++r) {
          const auto& [j, b] = res[mi][r];
          std::vector<Rat> row(dp, Rat(0));
          for (size_t s = 0; s < p; ++s) {
            row[j * p + s] += kernel_prev[s][b];
            row[j0 * p + s] -= kernel_prev[s][b0];
          }
          ech.add(std::move(row));
        }
      }
      for (size_t i = 0; i < a.k && ech.rank() < dp; ++i) {
        for (size_t b = 0; b < basis_prev.size() && ech.rank() < dp; ++b) {
          std::vector<Rat> row(dp, Rat(0));
          bool nonzero = false;
          for (size_t j = 0; j < a.d; ++j) {
            if (coef[i][j].is_zero()) continue;
            for (size_t s = 0; s < p; ++s) {
              if (kernel_prev[s][b].is_zero()) continue;
              row[j * p + s] += coef[i][j] * kernel_prev[s][b];
              nonzero = true;
            }
          }
          if (nonzero) ech.add(std::move(row));
        }
      }

      if (ech.rank() < dp) {
        for (const std::vector<Rat>& c : ech.kernel()) {
          std::vector<Rat> y(basis.size(), Rat(0));
          for (size_t mi = 0; mi < basis.size(); ++mi) {
            const auto& [j0, b0] = res[mi][0];
            for (size_t s = 0; s < p; ++s) {
              if (kernel_prev[s][b0].is_zero() || c[j0 * p + s].is_zero()) continue;
              y[mi] += c[j0 * p + s] * kernel_prev[s][b0];
            }
          }
          make_vector_primitive(y);
          kernel_next.push_back(std::move(y));
        }
      }
    }

    out.dims.push_back(static_cast<long long>(kernel_next.size()));
    if (!out.reached_zero && kernel_next.empty()) {
      out.reached_zero = true;
      out.zero_at = n;
    }
    basis_prev = std::move(basis);
    kernel_prev = std::move(kernel_next);
  }
  return out;
}

}  // namespace adet
