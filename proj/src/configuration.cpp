#include "adet/configuration.hpp"

#include <algorithm>
#include <map>

#include "adet/matrix.hpp"

namespace adet {

PointConfiguration validate(const std::vector<std::vector<long long>>& points) {
  if (points.empty())
    throw Error(ErrorCode::InvalidInput, "empty point configuration");
  const size_t k = points[0].size();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "points must have dimension >= 1");
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != k)
      throw Error(ErrorCode::InvalidInput, "points of mixed dimension");
    if (points[i][k - 1] != 1)
      throw Error(ErrorCode::LastCoordNotOne,
                  "point " + std::to_string(i + 1) + " has last coordinate " +
                      std::to_string(points[i][k - 1]),
                  static_cast<long>(i + 1));
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(ErrorCode::DuplicatePoint,
                    "points " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " coincide",
                    static_cast<long>(i + 1), static_cast<long>(j + 1));
  if (points.size() < k)
    throw Error(ErrorCode::DoesNotSpan, "fewer points than the ambient dimension");
  RatMatrix m = RatMatrix::from_rows(points);
  if (rational_row_reduce(m).rank != k)
    throw Error(ErrorCode::DoesNotSpan, "the points do not span R^k");

  PointConfiguration out;
  out.points = points;
  out.d = points.size();
  out.k = k;
  out.n = out.d - out.k;
  return out;
}

namespace {

Int dot(const std::vector<Int>& lambda, const std::vector<long long>& p) {
  Int out(0);
  for (size_t i = 0; i < lambda.size(); ++i) out += lambda[i] * Int(p[i]);
  return out;
}

void make_primitive_vector(std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) g = Int::gcd(g, x);
  if (g.is_zero() || g.is_one()) return;
  for (Int& x : v) x = x / g;
}

size_t affine_dim(const PointConfiguration& a, const std::vector<size_t>& idx) {
  if (idx.size() <= 1) return 0;
  const size_t m = a.k - 1;
  RatMatrix diff(idx.size() - 1, m);
  std::vector<long long> base = a.projected(idx[0]);
  for (size_t r = 1; r < idx.size(); ++r) {
    std::vector<long long> p = a.projected(idx[r]);
    for (size_t c = 0; c < m; ++c) diff.at(r - 1, c) = Rat(p[c] - base[c]);
  }
  return rational_row_reduce(diff).rank;
}

// contact data of a supporting hyperplane
struct Supported {
  std::vector<size_t> indices;
  SupportFunctional fn;
};

// Tries lambda as an outer normal: returns the contact set if every point
// lies weakly on one side (flipping the sign as needed), and nothing if the
// hyperplane cuts through the point set or touches everything.
std::optional<Supported> try_normal(const PointConfiguration& a,
                                    std::vector<Int> lambda) {
  make_primitive_vector(lambda);
  bool all_zero = true;
  for (const Int& x : lambda)
    if (!x.is_zero()) all_zero = false;
  if (all_zero) return std::nullopt;

  std::vector<Int> vals(a.d);
  Int max_val;
  Int min_val;
  for (size_t i = 0; i < a.d; ++i) {
    vals[i] = dot(lambda, a.projected(i));
    if (i == 0) {
      max_val = vals[i];
      min_val = vals[i];
    } else {
      max_val = std::max(max_val, vals[i]);
      min_val = std::min(min_val, vals[i]);
    }
  }
  if (max_val == min_val) return std::nullopt;  // touches everything

  Supported out;
  out.fn.lambda = std::move(lambda);
  out.fn.c = max_val;
  for (size_t i = 0; i < a.d; ++i)
    if (vals[i] == max_val) out.indices.push_back(i);
  return out;
}

}  // namespace

std::optional<size_t> FaceLattice::find(const std::vector<size_t>& indices) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].indices == indices) return i;
  return std::nullopt;
}

FaceLattice face_lattice(const PointConfiguration& a) {
  const size_t m = a.k - 1;
  FaceLattice out;

  Face full;
  for (size_t i = 0; i < a.d; ++i) full.indices.push_back(i);
  full.dim = m;

  if (m == 0) {
    out.faces.push_back(std::move(full));
    return out;
  }

  std::map<std::vector<size_t>, SupportFunctional> contact;

  // hyperplanes through m affinely independent points
  std::vector<size_t> subset(m);
  auto consider = [&](const std::vector<size_t>& idx) {
    std::vector<long long> base = a.projected(idx[0]);
    RatMatrix diff(m >= 1 ? m - 1 : 0, m);
    for (size_t r = 1; r < idx.size(); ++r) {
      std::vector<long long> p = a.projected(idx[r]);
      for (size_t c = 0; c < m; ++c) diff.at(r - 1, c) = Rat(p[c] - base[c]);
    }
    RowReduceResult rr = rational_row_reduce(diff);
    if (rr.rank != m - 1) return;  // not affinely independent: no unique normal
    if (rr.nullspace.size() != 1) return;
    std::vector<Int> lambda(m);
    Int den_lcm(1);
    for (size_t i = 0; i < m; ++i)
      den_lcm = Int::lcm(den_lcm, rr.nullspace[0][i].denominator());
    for (size_t i = 0; i < m; ++i) {
      Rat scaled = rr.nullspace[0][i] * Rat(den_lcm);
      lambda[i] = scaled.numerator();
    }
    if (auto sup = try_normal(a, std::move(lambda)))
      contact.emplace(sup->indices, sup->fn);
  };

  // iterate m-subsets of the point indices
  std::vector<size_t> comb(m);
  for (size_t i = 0; i < m; ++i) comb[i] = i;
  if (m <= a.d) {
    for (;;) {
      consider(comb);
      size_t i = m;
      while (i-- > 0) {
        if (comb[i] + (m - i) < a.d) {
          ++comb[i];
          for (size_t j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = m + 1;
          break;
        }
      }
      if (i == m + 1) break;
    }
  }

  // coordinate-direction extremes
  for (size_t c = 0; c < m; ++c) {
    for (int sgn : {1, -1}) {
      std::vector<Int> lambda(m);
      lambda[c] = Int(sgn);
      if (auto sup = try_normal(a, std::move(lambda)))
        contact.emplace(sup->indices, sup->fn);
    }
  }

  // close under intersection
  for (;;) {
    std::vector<std::pair<std::vector<size_t>, SupportFunctional>> fresh;
    for (auto it1 = contact.begin(); it1 != contact.end(); ++it1) {
      for (auto it2 = std::next(it1); it2 != contact.end(); ++it2) {
        std::vector<size_t> inter;
        std::set_intersection(it1->first.begin(), it1->first.end(),
                              it2->first.begin(), it2->first.end(),
                              std::back_inserter(inter));
        if (inter.empty() || contact.count(inter)) continue;
        SupportFunctional fn;
        fn.lambda.resize(m);
        for (size_t i = 0; i < m; ++i)
          fn.lambda[i] = it1->second.lambda[i] + it2->second.lambda[i];
        fn.c = it1->second.c + it2->second.c;
        make_primitive_vector(fn.lambda);
        // re-derive c from a contact point after normalization
        fn.c = dot(fn.lambda, a.projected(inter[0]));
        fresh.emplace_back(std::move(inter), std::move(fn));
      }
    }
    if (fresh.empty()) break;
    for (auto& f : fresh) contact.emplace(std::move(f.first), std::move(f.second));
  }

  for (auto& [idx, fn] : contact) {
    if (idx == full.indices) continue;  // P needs no functional
    Face f;
    f.indices = idx;
    f.dim = affine_dim(a, idx);
    f.functional = fn;
    out.faces.push_back(std::move(f));
  }
  out.faces.push_back(std::move(full));

  std::sort(out.faces.begin(), out.faces.end(), [](const Face& x, const Face& y) {
    if (x.indices.size() != y.indices.size())
      return x.indices.size() < y.indices.size();
    return x.indices < y.indices;
  });

  // exact certificate check: equality on the face, strict inequality off it
  for (const Face& f : out.faces) {
    if (!f.functional) continue;
    std::vector<char> on(a.d, 0);
    for (size_t i : f.indices) on[i] = 1;
    for (size_t i = 0; i < a.d; ++i) {
      Int v = dot(f.functional->lambda, a.projected(i));
      bool ok = on[i] ? v == f.functional->c : v < f.functional->c;
      if (!ok)
        throw Error(ErrorCode::Internal, "support functional certificate failed");
    }
  }
  return out;
}

VariableRegistry x_registry(const PointConfiguration& a) {
  std::vector<std::string> names;
  names.reserve(a.k);
  for (size_t i = 1; i <= a.k; ++i) names.push_back("x" + std::to_string(i));
  return VariableRegistry(std::move(names));
}

Polynomial face_polynomial(const PointConfiguration& a, const Face& f,
                           const std::vector<Rat>& alpha) {
  if (alpha.size() != a.d)
    throw Error(ErrorCode::InvalidInput, "alpha has wrong length");
  for (size_t i : f.indices)
    if (i >= a.d) throw Error(ErrorCode::FaceNotInLattice, "face index out of range");

  // shift negative exponent coordinates into the nonnegative orthant
  std::vector<long long> shift(a.k, 0);
  for (size_t c = 0; c < a.k; ++c) {
    long long mn = 0;
    for (size_t i : f.indices) mn = std::min(mn, a.points[i][c]);
    shift[c] = -mn;
  }
  Polynomial out = Polynomial::zero(a.k);
  for (size_t i : f.indices) {
    Monomial mono = Monomial::one(a.k);
    for (size_t c = 0; c < a.k; ++c)
      mono.e[c] = static_cast<int32_t>(a.points[i][c] + shift[c]);
    out.add_term(mono, alpha[i]);
  }
  return out;
}

}  // namespace adet
