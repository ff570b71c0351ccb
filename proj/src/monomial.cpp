#include "adet/monomial.hpp"

namespace adet {

namespace {

// mask == nullptr means "all variables"; keep == 1 selects the subset
Cmp cmp_lex(const Monomial& a, const Monomial& b,
            const std::vector<uint8_t>* mask, uint8_t keep) {
  for (size_t i = 0; i < a.e.size(); ++i) {
    if (mask && (*mask)[i] != keep) continue;
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp cmp_grevlex(const Monomial& a, const Monomial& b,
                const std::vector<uint8_t>* mask, uint8_t keep) {
  long long da = 0, db = 0;
  for (size_t i = 0; i < a.e.size(); ++i) {
    if (mask && (*mask)[i] != keep) continue;
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  // ties: the rightmost differing variable decides, smaller exponent wins
  for (size_t i = a.e.size(); i-- > 0;) {
    if (mask && (*mask)[i] != keep) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp cmp_kind(MonomialOrder::Kind k, const Monomial& a, const Monomial& b,
             const std::vector<uint8_t>* mask, uint8_t keep) {
  return k == MonomialOrder::Kind::Lex ? cmp_lex(a, b, mask, keep)
                                       : cmp_grevlex(a, b, mask, keep);
}

}  // namespace

MonomialOrder MonomialOrder::block(const std::vector<size_t>& front_vars,
                                   size_t nvars, Kind front_kind, Kind back_kind) {
  if (front_kind == Kind::Block || back_kind == Kind::Block)
    throw Error(ErrorCode::InvalidInput, "nested block orders are not supported");
  MonomialOrder o(Kind::Block);
  o.front_.assign(nvars, 0);
  for (size_t v : front_vars) {
    if (v >= nvars)
      throw Error(ErrorCode::RegistryMismatch, "front variable out of range");
    o.front_[v] = 1;
  }
  o.front_kind_ = front_kind;
  o.back_kind_ = back_kind;
  return o;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.e.size() != b.e.size())
    throw Error(ErrorCode::RegistryMismatch,
                "monomials over different registries");
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b, nullptr, 0);
    case Kind::GrevLex:
      return cmp_grevlex(a, b, nullptr, 0);
    case Kind::Block: {
      if (a.e.size() != front_.size())
        throw Error(ErrorCode::RegistryMismatch,
                    "block order built for a different registry");
      Cmp f = cmp_kind(front_kind_, a, b, &front_, 1);
      if (f != Cmp::EQ) return f;
      return cmp_kind(back_kind_, a, b, &front_, 0);
    }
  }
  return Cmp::EQ;
}

Cmp order_compare(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return o.compare(a, b);
}

}  // namespace adet
