#include "adet/groebner.hpp"

#include <algorithm>

namespace adet {

Ideal::Ideal(VariableRegistry reg, std::vector<Polynomial> gens)
    : registry(std::move(reg)) {
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != registry.size())
      throw Error(ErrorCode::RegistryMismatch,
                  "generator over a different registry");
    generators.push_back(std::move(g));
  }
}

namespace {

// term list sorted strictly descending under the active order
struct OrdTerm {
  Monomial m;
  Rat c;
};

struct OrdPoly {
  std::vector<OrdTerm> t;

  bool is_zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const Rat& lc() const { return t.front().c; }
};

OrdPoly to_ord(const Polynomial& p, const MonomialOrder& o) {
  OrdPoly out;
  out.t.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) out.t.push_back({m, c});
  std::sort(out.t.begin(), out.t.end(), [&o](const OrdTerm& a, const OrdTerm& b) {
    return o.compare(a.m, b.m) == Cmp::GT;
  });
  return out;
}

Polynomial from_ord(const OrdPoly& p, size_t nvars) {
  Polynomial out = Polynomial::zero(nvars);
  for (const OrdTerm& t : p.t) out.add_term(t.m, t.c);
  return out;
}

// r = a - c * x^m * b, all sorted; linear merge
OrdPoly subtract_scaled(const OrdPoly& a, const Rat& c, const Monomial& m,
                        const OrdPoly& b, const MonomialOrder& o) {
  OrdPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      out.t.push_back(a.t[i++]);
      continue;
    }
    Monomial bm = b.t[j].m * m;
    if (i == a.t.size()) {
      out.t.push_back({std::move(bm), -(c * b.t[j].c)});
      ++j;
      continue;
    }
    Cmp cmp = o.compare(a.t[i].m, bm);
    if (cmp == Cmp::GT) {
      out.t.push_back(a.t[i++]);
    } else if (cmp == Cmp::LT) {
      out.t.push_back({std::move(bm), -(c * b.t[j].c)});
      ++j;
    } else {
      Rat nc = a.t[i].c - c * b.t[j].c;
      if (!nc.is_zero()) out.t.push_back({a.t[i].m, std::move(nc)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(OrdPoly& p) {
  if (p.is_zero()) return;
  Int num_gcd(0), den_lcm(1);
  for (const OrdTerm& t : p.t) {
    num_gcd = Int::gcd(num_gcd, t.c.numerator());
    den_lcm = Int::lcm(den_lcm, t.c.denominator());
  }
  Rat scale = Rat(den_lcm, num_gcd);
  if (p.lc().signum() < 0) scale = -scale;
  if (scale.is_one()) return;
  for (OrdTerm& t : p.t) t.c *= scale;
}

void make_monic(OrdPoly& p) {
  if (p.is_zero() || p.lc().is_one()) return;
  Rat inv = p.lc().inverse();
  for (OrdTerm& t : p.t) t.c *= inv;
}

// full normal form against the list (leading monomials assumed cached by
// caller when hot)
OrdPoly ord_normal_form(OrdPoly f, const std::vector<OrdPoly>& gens,
                        const MonomialOrder& o) {
  OrdPoly result;
  while (!f.is_zero()) {
    const Monomial& m = f.lm();
    const OrdPoly* red = nullptr;
    for (const OrdPoly& g : gens) {
      if (g.lm().divides(m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      result.t.push_back(std::move(f.t.front()));
      f.t.erase(f.t.begin());
      continue;
    }
    Rat c = f.lc() / red->lc();
    Monomial q = m.divided_by(red->lm());
    f = subtract_scaled(f, c, q, *red, o);
  }
  return result;
}

struct Pair {
  size_t i, j;  // indices into basis, i < j
  Monomial lcm;
};

// classical Gebauer-Moeller update: prune new and old pairs, then insert h
void gm_update(std::vector<OrdPoly>& basis, std::vector<Pair>& pairs,
               OrdPoly h) {
  const size_t hidx = basis.size();
  const Monomial& hm = h.lm();

  struct Cand {
    size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  cands.reserve(basis.size());
  for (size_t g = 0; g < basis.size(); ++g)
    cands.push_back({g, Monomial::lcm(basis[g].lm(), hm),
                     Monomial::coprime(basis[g].lm(), hm)});

  std::vector<Cand> kept;
  for (size_t a = 0; a < cands.size(); ++a) {
    bool keep = cands[a].coprime;
    if (!keep) {
      auto strictly_divides = [&](const Monomial& m) {
        return m.divides(cands[a].lcm) && !(m == cands[a].lcm);
      };
      bool dominated = false;
      for (size_t b = a + 1; b < cands.size() && !dominated; ++b)
        dominated = strictly_divides(cands[b].lcm);
      for (size_t k = 0; k < kept.size() && !dominated; ++k)
        dominated = strictly_divides(kept[k].lcm);
      // among equal lcms keep the first candidate only
      for (size_t b = 0; b < a && !dominated; ++b)
        dominated = cands[b].lcm == cands[a].lcm;
      keep = !dominated;
    }
    if (keep) kept.push_back(cands[a]);
  }

  // chain criterion on the old pairs
  std::vector<Pair> surviving;
  surviving.reserve(pairs.size());
  for (Pair& p : pairs) {
    bool drop = hm.divides(p.lcm) &&
                !(Monomial::lcm(basis[p.i].lm(), hm) == p.lcm) &&
                !(Monomial::lcm(basis[p.j].lm(), hm) == p.lcm);
    if (!drop) surviving.push_back(std::move(p));
  }
  for (Cand& k : kept)
    if (!k.coprime) surviving.push_back({k.g, hidx, std::move(k.lcm)});
  pairs = std::move(surviving);
  basis.push_back(std::move(h));
}

std::vector<OrdPoly> buchberger(const std::vector<Polynomial>& gens,
                                const MonomialOrder& o) {
  std::vector<OrdPoly> basis;
  std::vector<Pair> pairs;
  for (const Polynomial& g : gens) {
    OrdPoly p = to_ord(g, o);
    if (p.is_zero()) continue;
    p = ord_normal_form(std::move(p), basis, o);
    if (p.is_zero()) continue;
    make_primitive(p);
    gm_update(basis, pairs, std::move(p));
  }
  while (!pairs.empty()) {
    // normal strategy: smallest lcm first, ties by index
    size_t best = 0;
    for (size_t i = 1; i < pairs.size(); ++i) {
      Cmp c = o.compare(pairs[i].lcm, pairs[best].lcm);
      if (c == Cmp::LT ||
          (c == Cmp::EQ && std::make_pair(pairs[i].i, pairs[i].j) <
                               std::make_pair(pairs[best].i, pairs[best].j)))
        best = i;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<long>(best));

    const OrdPoly& f = basis[p.i];
    const OrdPoly& g = basis[p.j];
    // S-polynomial
    Monomial mf = p.lcm.divided_by(f.lm());
    Monomial mg = p.lcm.divided_by(g.lm());
    OrdPoly sf;
    sf.t.reserve(f.t.size());
    for (const OrdTerm& t : f.t) sf.t.push_back({t.m * mf, t.c / f.lc()});
    OrdPoly s = subtract_scaled(sf, g.lc().inverse(), mg, g, o);

    OrdPoly r = ord_normal_form(std::move(s), basis, o);
    if (r.is_zero()) continue;
    make_primitive(r);
    gm_update(basis, pairs, std::move(r));
  }
  return basis;
}

std::vector<OrdPoly> reduce_basis(std::vector<OrdPoly> basis,
                                  const MonomialOrder& o) {
  // minimal generating set of the leading-term ideal
  std::vector<size_t> order_idx(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
    return o.compare(basis[a].lm(), basis[b].lm()) == Cmp::LT;
  });
  std::vector<OrdPoly> minimal;
  for (size_t idx : order_idx) {
    bool redundant = false;
    for (const OrdPoly& k : minimal)
      if (k.lm().divides(basis[idx].lm())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(basis[idx]));
  }
  // reduce tails
  std::vector<OrdPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrdPoly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OrdPoly r = ord_normal_form(minimal[i], others, o);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrdPoly& a, const OrdPoly& b) {
    return o.compare(a.lm(), b.lm()) == Cmp::LT;
  });
  return reduced;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const MonomialOrder& o) {
  std::vector<OrdPoly> g;
  for (const Polynomial& p : gens)
    if (!p.is_zero()) g.push_back(to_ord(p, o));
  return from_ord(ord_normal_form(to_ord(f, o), g, o), f.nvars());
}

ReducedGB reduced_groebner_basis(const Ideal& ideal, const MonomialOrder& o) {
  std::vector<OrdPoly> basis = buchberger(ideal.generators, o);
  basis = reduce_basis(std::move(basis), o);
  ReducedGB out{o, {}};
  out.basis.reserve(basis.size());
  for (const OrdPoly& p : basis)
    out.basis.push_back(from_ord(p, ideal.registry.size()));
  return out;
}

bool is_proper(const Ideal& ideal) {
  ReducedGB gb = reduced_groebner_basis(ideal, MonomialOrder::grevlex());
  return !gb.is_unit_ideal();
}

std::vector<Polynomial> eliminate(const Ideal& ideal,
                                  const std::vector<size_t>& drop_vars) {
  const size_t n = ideal.registry.size();
  MonomialOrder block = MonomialOrder::block(drop_vars, n);
  ReducedGB gb = reduced_groebner_basis(ideal, block);
  std::vector<char> dropped(n, 0);
  for (size_t v : drop_vars) dropped[v] = 1;
  std::vector<Polynomial> out;
  for (const Polynomial& p : gb.basis) {
    bool mentions = false;
    for (size_t v : p.occurring_variables())
      if (dropped[v]) {
        mentions = true;
        break;
      }
    if (!mentions) out.push_back(p);
  }
  return out;
}

ZeroDimReport zero_dim_report(const Ideal& ideal, const MonomialOrder& o) {
  ReducedGB gb = reduced_groebner_basis(ideal, o);
  const size_t n = ideal.registry.size();
  ZeroDimReport out;

  if (gb.is_unit_ideal()) {
    out.finite = true;
    out.dimension = 0;
    return out;
  }

  std::vector<Monomial> lms;
  lms.reserve(gb.basis.size());
  for (const Polynomial& p : gb.basis) lms.push_back(p.leading_term(o).first);

  // pure-power bound per variable
  std::vector<long long> bound(n, -1);
  for (const Monomial& m : lms) {
    size_t nz = 0, var = 0;
    for (size_t i = 0; i < n; ++i)
      if (m.e[i] > 0) {
        ++nz;
        var = i;
      }
    if (nz == 1 && (bound[var] < 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
  }
  for (size_t i = 0; i < n; ++i)
    if (bound[i] < 0) {
      out.finite = false;
      return out;
    }

  out.finite = true;
  // enumerate monomials below the bounds that avoid every leading monomial
  Monomial cur = Monomial::one(n);
  std::vector<Monomial> standard;
  auto divisible = [&lms](const Monomial& m) {
    for (const Monomial& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  // odometer enumeration
  for (;;) {
    if (!divisible(cur)) standard.push_back(cur);
    size_t i = 0;
    for (; i < n; ++i) {
      if (cur.e[i] + 1 < bound[i]) {
        ++cur.e[i];
        break;
      }
      cur.e[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(standard.begin(), standard.end(), [&o](const Monomial& a, const Monomial& b) {
    return o.compare(a, b) == Cmp::LT;
  });
  out.dimension = standard.size();
  out.standard_monomials = std::move(standard);
  return out;
}

Ideal saturate_by_product(const Ideal& ideal, const std::vector<size_t>& vars) {
  VariableRegistry ext = ideal.registry;
  size_t w = ext.add_fresh("w");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators.size() + 1);
  for (const Polynomial& g : ideal.generators)
    gens.push_back(g.mapped_to(ideal.registry, ext));
  Monomial prod = Monomial::one(ext.size());
  prod.e[w] = 1;
  for (size_t v : vars) prod.e[v] += 1;
  Polynomial rab = Polynomial::term(prod, Rat(1));
  rab.add_term(Monomial::one(ext.size()), Rat(-1));
  gens.push_back(std::move(rab));

  std::vector<Polynomial> elim = eliminate(Ideal(ext, std::move(gens)), {w});
  std::vector<Polynomial> back;
  back.reserve(elim.size());
  for (const Polynomial& p : elim)
    back.push_back(p.mapped_to(ext, ideal.registry));
  return Ideal(ideal.registry, std::move(back));
}

}  // namespace adet
