#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adet/monomial.hpp"
#include "adet/rat.hpp"
#include "adet/registry.hpp"

namespace adet {

// Exact multivariate polynomial over the rationals. Terms are stored in a
// canonical structural order with no zero coefficients, so equality is
// structural equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, Monomial::StructLess>;

  Polynomial() = default;
  static Polynomial zero(size_t nvars);
  static Polynomial constant(size_t nvars, const Rat& c);
  static Polynomial term(const Monomial& m, const Rat& c);
  static Polynomial variable(size_t nvars, size_t var, const Rat& c = Rat(1));

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  long long total_degree() const;  // -1 for the zero polynomial

  void add_term(const Monomial& m, const Rat& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rat& c) const;
  Polynomial times_monomial(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::pair<Monomial, Rat> leading_term(const MonomialOrder& o) const;

  // x_i * d/dx_i : multiplies each term by its i-th exponent
  Polynomial euler_derivative(size_t var) const;
  // plain partial derivative
  Polynomial derivative(size_t var) const;

  // Exact evaluation; every variable occurring in the polynomial must have
  // an assignment.
  Rat evaluate(const std::vector<std::optional<Rat>>& assignment) const;

  std::vector<size_t> occurring_variables() const;
  long long degree_in(size_t var) const;

  // gcd of the numerators divided by lcm of the denominators; zero for the
  // zero polynomial
  Rat content() const;
  // integer-primitive form with positive leading coefficient under `o`
  Polynomial normalized_primitive(const MonomialOrder& o) const;
  // divide out the largest common monomial factor
  Polynomial without_monomial_content() const;

  // re-index exponents into a target registry (by variable name); every
  // occurring variable must exist in the target
  Polynomial mapped_to(const VariableRegistry& from, const VariableRegistry& to) const;

 private:
  size_t nvars_ = 0;
  TermMap terms_;
};

// Text rendering: terms sorted descending under `o`, `^` exponents and
// explicit `*`, e.g. "a2^2 - 4*a1*a3".
std::string render(const Polynomial& f, const VariableRegistry& reg,
                   const MonomialOrder& o);

Polynomial parse_polynomial(const std::string& text, const VariableRegistry& reg);

// Squarefreeness via univariate derivative gcds: for every occurring
// variable v the gcd of f and df/dv, taken as univariate polynomials in v,
// must be constant in v. Degrees are obtained from pseudo-remainder
// sequences.
bool is_squarefree(const Polynomial& f);

}  // namespace adet
