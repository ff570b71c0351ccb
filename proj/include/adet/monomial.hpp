#pragma once

#include <cstdint>
#include <vector>

#include "adet/errors.hpp"

namespace adet {

// Dense exponent vector over a fixed registry.
struct Monomial {
  std::vector<int32_t> e;

  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}
  static Monomial one(size_t nvars) { return Monomial(std::vector<int32_t>(nvars, 0)); }

  size_t nvars() const { return e.size(); }
  bool is_one() const {
    for (int32_t x : e)
      if (x != 0) return false;
    return true;
  }
  long long degree() const {
    long long d = 0;
    for (int32_t x : e) d += x;
    return d;
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial out = *this;
    for (size_t i = 0; i < e.size(); ++i) out.e[i] += o.e[i];
    return out;
  }

  // requires o.divides(*this)
  Monomial divided_by(const Monomial& o) const {
    Monomial out = *this;
    for (size_t i = 0; i < e.size(); ++i) out.e[i] -= o.e[i];
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (size_t i = 0; i < a.e.size(); ++i)
      if (b.e[i] > out.e[i]) out.e[i] = b.e[i];
    return out;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

  // structural order for canonical term storage (not a monomial order)
  struct StructLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      if (a.e.size() != b.e.size()) return a.e.size() < b.e.size();
      return a.e < b.e;
    }
  };
};

enum class Cmp { LT, EQ, GT };

// Total multiplicative well-ordering on monomials: Lex, GrevLex, or a Block
// order that compares a front subset of the variables first.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  static MonomialOrder block(const std::vector<size_t>& front_vars, size_t nvars,
                             Kind front_kind = Kind::GrevLex,
                             Kind back_kind = Kind::GrevLex);

  Kind kind() const { return kind_; }
  Cmp compare(const Monomial& a, const Monomial& b) const;

  // true when variable i belongs to the front block (always false for
  // non-block orders)
  bool in_front(size_t i) const {
    return kind_ == Kind::Block && i < front_.size() && front_[i];
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<uint8_t> front_;  // block only; indexed by variable
  Kind front_kind_ = Kind::GrevLex;
  Kind back_kind_ = Kind::GrevLex;
};

Cmp order_compare(const MonomialOrder& o, const Monomial& a, const Monomial& b);

}  // namespace adet
