#include "adet/discriminant.hpp"

#include <algorithm>
#include <cstdlib>

#include "adet/matrix.hpp"
#include "adet/rng.hpp"

namespace adet {

size_t symbolic_var_limit_from_env() {
  const char* env = std::getenv("ADET_VAR_LIMIT");
  if (!env) return kDefaultSymbolicVarLimit;
  long v = std::atol(env);
  if (v < 1) return kDefaultSymbolicVarLimit;
  return static_cast<size_t>(v);
}

VariableRegistry alpha_registry(const PointConfiguration& a) {
  std::vector<std::string> names;
  names.reserve(a.d);
  for (size_t i = 1; i <= a.d; ++i) names.push_back("a" + std::to_string(i));
  return VariableRegistry(std::move(names));
}

namespace {

// registry x_1..x_k, w [, a_i for i in F]
VariableRegistry critical_registry(const PointConfiguration& a, const Face& f,
                                   bool symbolic) {
  std::vector<std::string> names;
  for (size_t i = 1; i <= a.k; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("w");
  if (symbolic)
    for (size_t i : f.indices) names.push_back("a" + std::to_string(i + 1));
  return VariableRegistry(std::move(names));
}

}  // namespace

Ideal face_critical_system(const PointConfiguration& a, const Face& f,
                           const std::vector<Rat>& alpha, bool symbolic) {
  if (!symbolic && alpha.size() != a.d)
    throw Error(ErrorCode::InvalidInput, "alpha has wrong length");
  VariableRegistry reg = critical_registry(a, f, symbolic);
  const size_t nv = reg.size();
  const size_t w = a.k;  // index of the inverse variable

  std::vector<Polynomial> gens;
  for (size_t i = 0; i < a.k; ++i) {
    // Euler derivative x_i d_i f^F in Laurent form, then shifted into the
    // nonnegative orthant (a unit factor on the torus)
    struct Term {
      size_t j;
      Rat c;
    };
    std::vector<Term> terms;
    for (size_t j : f.indices) {
      Rat c = Rat(a.points[j][i]);
      if (!symbolic) c *= alpha[j];
      if (!c.is_zero()) terms.push_back({j, c});
    }
    if (terms.empty()) continue;  // identically-zero generator dropped
    std::vector<long long> shift(a.k, 0);
    for (size_t c = 0; c < a.k; ++c) {
      long long mn = 0;
      for (const Term& t : terms) mn = std::min(mn, a.points[t.j][c]);
      shift[c] = -mn;
    }
    Polynomial g = Polynomial::zero(nv);
    for (const Term& t : terms) {
      Monomial m = Monomial::one(nv);
      for (size_t c = 0; c < a.k; ++c)
        m.e[c] = static_cast<int32_t>(a.points[t.j][c] + shift[c]);
      if (symbolic) {
        size_t av = *reg.index("a" + std::to_string(t.j + 1));
        m.e[av] = 1;
      }
      g.add_term(m, t.c);
    }
    gens.push_back(std::move(g));
  }

  Monomial rab = Monomial::one(nv);
  rab.e[w] = 1;
  for (size_t i = 0; i < a.k; ++i) rab.e[i] += 1;
  Polynomial r = Polynomial::term(rab, Rat(1));
  r.add_term(Monomial::one(nv), Rat(-1));
  gens.push_back(std::move(r));

  return Ideal(std::move(reg), std::move(gens));
}

bool nabla_membership(const PointConfiguration& a, const Face& f,
                      const std::vector<Rat>& alpha) {
  return is_proper(face_critical_system(a, f, alpha));
}

MembershipVerdict vA_membership(const PointConfiguration& a,
                                const FaceLattice& lattice,
                                const std::vector<Rat>& alpha) {
  MembershipVerdict out;
  for (const Face& f : lattice.faces) {
    if (nabla_membership(a, f, alpha)) out.witness_faces.push_back(f);
  }
  out.in_vA = !out.witness_faces.empty();
  return out;
}

FinitenessReport finiteness_test(const PointConfiguration& a,
                                 const ToricIdeal& toric,
                                 const std::vector<Rat>& alpha,
                                 bool with_profile) {
  std::vector<Polynomial> gens = toric.generators;
  for (Polynomial& form : euler_linear_forms(a, alpha))
    gens.push_back(std::move(form));
  ZeroDimReport zd = zero_dim_report(Ideal(toric.registry, std::move(gens)),
                                     MonomialOrder::grevlex());
  FinitenessReport out;
  out.finite = zd.finite;
  out.dimension = zd.dimension;
  if (with_profile) {
    size_t cap = zd.finite ? zd.dimension + 2 : 25;
    HilbertProfile profile = hilbert_quotient_profile(a, alpha, cap);
    bool ok;
    if (zd.finite) {
      ok = profile.reached_zero && profile.zero_at <= zd.dimension + 2 &&
           profile.total() == static_cast<long long>(zd.dimension);
    } else {
      ok = profile.cap_hit;
      for (long long dch : profile.dims) ok = ok && dch > 0;
    }
    if (!ok)
      throw Error(ErrorCode::InconsistentOracles,
                  "finiteness verdict disagrees with the Hilbert profile");
    out.profile = std::move(profile);
  }
  return out;
}

namespace {

Polynomial to_alpha_registry(const Polynomial& p, const VariableRegistry& from,
                             const VariableRegistry& alpha_reg) {
  return p.mapped_to(from, alpha_reg);
}

}  // namespace

FaceDiscriminant face_discriminant_symbolic(const PointConfiguration& a,
                                            const Face& f, size_t var_limit) {
  if (var_limit == 0) var_limit = symbolic_var_limit_from_env();
  const size_t nvars = f.indices.size() + a.k + 1;
  if (nvars > var_limit)
    throw Error(ErrorCode::VariableLimitExceeded,
                "symbolic computation needs " + std::to_string(nvars) +
                    " variables, limit is " + std::to_string(var_limit));

  Ideal sys = face_critical_system(a, f, {}, /*symbolic=*/true);
  std::vector<size_t> drop(a.k + 1);
  for (size_t i = 0; i <= a.k; ++i) drop[i] = i;
  std::vector<Polynomial> elim = eliminate(sys, drop);

  FaceDiscriminant out;
  out.face = f;
  if (elim.empty())
    throw Error(ErrorCode::DimBoundViolation,
                "elimination ideal of a face discriminant is zero");

  VariableRegistry areg = alpha_registry(a);
  MonomialOrder grev = MonomialOrder::grevlex();
  if (elim.size() == 1) {
    out.hypersurface = true;
    out.delta = to_alpha_registry(elim[0], sys.registry, areg).normalized_primitive(grev);
  } else {
    out.hypersurface = false;
    for (const Polynomial& p : elim)
      out.elimination_ideal.push_back(
          to_alpha_registry(p, sys.registry, areg).normalized_primitive(grev));
    std::sort(out.elimination_ideal.begin(), out.elimination_ideal.end(),
              [&](const Polynomial& x, const Polynomial& y) {
                return render(x, areg, grev) < render(y, areg, grev);
              });
  }
  return out;
}

EASupport eA_support(const PointConfiguration& a, const FaceLattice& lattice,
                     size_t var_limit) {
  EASupport out;
  for (const Face& f : lattice.faces) {
    FaceDiscriminant fd = face_discriminant_symbolic(a, f, var_limit);
    if (fd.hypersurface) {
      bool seen = false;
      for (const Polynomial& q : out.support)
        if (q == fd.delta) {
          seen = true;
          break;
        }
      if (!seen) out.support.push_back(fd.delta);
    }
    out.per_face.push_back(std::move(fd));
  }
  return out;
}

bool eA_vanishes(const EASupport& support, const std::vector<Rat>& alpha) {
  std::vector<std::optional<Rat>> assignment(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) assignment[i] = alpha[i];
  for (const Polynomial& delta : support.support)
    if (delta.evaluate(assignment).is_zero()) return true;
  return false;
}

std::vector<std::vector<Rat>> critical_alpha_basis(const PointConfiguration& a,
                                                   const Face& f,
                                                   const std::vector<Rat>& u) {
  if (u.size() != a.k)
    throw Error(ErrorCode::InvalidInput, "torus point has wrong dimension");
  for (const Rat& c : u)
    if (c.is_zero())
      throw Error(ErrorCode::ZeroCoordinate, "torus point has a zero coordinate");
  RatMatrix m(a.k, f.indices.size());
  for (size_t col = 0; col < f.indices.size(); ++col) {
    size_t j = f.indices[col];
    Rat power(1);
    for (size_t c = 0; c < a.k; ++c) power *= u[c].pow(a.points[j][c]);
    for (size_t i = 0; i < a.k; ++i)
      m.at(i, col) = Rat(a.points[j][i]) * power;
  }
  return rational_row_reduce(m).nullspace;
}

std::vector<Rat> sample_nabla_point(const PointConfiguration& a, const Face& f,
                                    uint64_t seed) {
  Rng rng(seed);
  std::vector<Rat> u(a.k);
  for (size_t i = 0; i < a.k; ++i) u[i] = rng.nonzero_rational(10);

  std::vector<std::vector<Rat>> basis = critical_alpha_basis(a, f, u);
  std::vector<Rat> alpha_f(f.indices.size(), Rat(0));
  for (const std::vector<Rat>& v : basis) {
    Rat c = rng.rational(10);
    for (size_t i = 0; i < alpha_f.size(); ++i) alpha_f[i] += c * v[i];
  }

  std::vector<Rat> alpha(a.d);
  std::vector<char> on(a.d, 0);
  for (size_t pos = 0; pos < f.indices.size(); ++pos) {
    alpha[f.indices[pos]] = alpha_f[pos];
    on[f.indices[pos]] = 1;
  }
  for (size_t i = 0; i < a.d; ++i)
    if (!on[i]) alpha[i] = rng.rational(10);
  return alpha;
}

}  // namespace adet
