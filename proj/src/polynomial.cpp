#include "adet/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace adet {

Polynomial Polynomial::zero(size_t nvars) {
  Polynomial p;
  p.nvars_ = nvars;
  return p;
}

Polynomial Polynomial::constant(size_t nvars, const Rat& c) {
  Polynomial p = zero(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rat& c) {
  Polynomial p = zero(m.nvars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(size_t nvars, size_t var, const Rat& c) {
  Monomial m = Monomial::one(nvars);
  m.e[var] = 1;
  return term(m, c);
}

long long Polynomial::total_degree() const {
  long long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (m.nvars() != nvars_)
    throw Error(ErrorCode::RegistryMismatch, "term over a different registry");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_)
    throw Error(ErrorCode::RegistryMismatch, "polynomials over different registries");
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_)
    throw Error(ErrorCode::RegistryMismatch, "polynomials over different registries");
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_)
    throw Error(ErrorCode::RegistryMismatch, "polynomials over different registries");
  Polynomial out = Polynomial::zero(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out = zero(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial out = zero(nvars_);
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
  return out;
}

std::pair<Monomial, Rat> Polynomial::leading_term(const MonomialOrder& o) const {
  if (terms_.empty())
    throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (o.compare(it->first, best->first) == Cmp::GT) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::euler_derivative(size_t var) const {
  Polynomial out = zero(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    out.terms_.emplace(m, c * Rat(m.e[var]));
  }
  return out;
}

Polynomial Polynomial::derivative(size_t var) const {
  Polynomial out = zero(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial mm = m;
    mm.e[var] -= 1;
    out.add_term(mm, c * Rat(m.e[var]));
  }
  return out;
}

Rat Polynomial::evaluate(const std::vector<std::optional<Rat>>& assignment) const {
  Rat out(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (i >= assignment.size() || !assignment[i])
        throw Error(ErrorCode::MissingAssignment,
                    "no value for variable index " + std::to_string(i));
      t *= assignment[i]->pow(m.e[i]);
    }
    out += t;
  }
  return out;
}

std::vector<size_t> Polynomial::occurring_variables() const {
  std::vector<char> seen(nvars_, 0);
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < nvars_; ++i)
      if (m.e[i] > 0) seen[i] = 1;
  std::vector<size_t> out;
  for (size_t i = 0; i < nvars_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

long long Polynomial::degree_in(size_t var) const {
  long long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long long>(d, m.e[var]);
  return d;
}

Rat Polynomial::content() const {
  if (terms_.empty()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    num_gcd = Int::gcd(num_gcd, c.numerator());
    den_lcm = Int::lcm(den_lcm, c.denominator());
  }
  return Rat(num_gcd, den_lcm);
}

Polynomial Polynomial::normalized_primitive(const MonomialOrder& o) const {
  if (terms_.empty()) return *this;
  Rat c = content();
  if (leading_term(o).second.signum() < 0) c = -c;
  return scaled(c.inverse());
}

Polynomial Polynomial::without_monomial_content() const {
  if (terms_.empty()) return *this;
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < nvars_; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
  if (g.is_one()) return *this;
  Polynomial out = zero(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.divided_by(g), c);
  return out;
}

Polynomial Polynomial::mapped_to(const VariableRegistry& from,
                                 const VariableRegistry& to) const {
  std::vector<std::optional<size_t>> map(nvars_);
  for (size_t i = 0; i < nvars_; ++i) map[i] = to.index(from.name(i));
  Polynomial out = zero(to.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm = Monomial::one(to.size());
    for (size_t i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (!map[i])
        throw Error(ErrorCode::RegistryMismatch,
                    "variable " + from.name(i) + " missing from target registry");
      mm.e[*map[i]] = m.e[i];
    }
    out.add_term(mm, c);
  }
  return out;
}

std::string render(const Polynomial& f, const VariableRegistry& reg,
                   const MonomialOrder& o) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(), [&o](const auto& a, const auto& b) {
    return o.compare(a.first, b.first) == Cmp::GT;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rat a = c.abs();
    if (first) {
      if (c.signum() < 0) out += "-";
      first = false;
    } else {
      out += c.signum() < 0 ? " - " : " + ";
    }
    bool wrote_coeff = false;
    if (!a.is_one() || m.is_one()) {
      out += a.to_string();
      wrote_coeff = true;
    }
    for (size_t i = 0; i < m.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (wrote_coeff) out += "*";
      out += reg.name(i);
      if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
      wrote_coeff = true;
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const VariableRegistry& reg;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }

  std::string read_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error(ErrorCode::InvalidInput, "expected number in polynomial");
    return s.substr(start, pos - start);
  }

  std::string read_name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw Error(ErrorCode::InvalidInput, "expected variable name");
    return s.substr(start, pos - start);
  }

  // coefficient [*] varpow (* varpow)*
  void read_term(Polynomial& out, int sign) {
    Rat coeff(sign);
    Monomial mono = Monomial::one(reg.size());
    bool saw_anything = false;
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_number();
      std::string den = "1";
      if (!eof() && peek() == '/') {
        ++pos;
        den = read_number();
      }
      coeff = coeff * Rat(Int::from_string(num), Int::from_string(den));
      saw_anything = true;
      if (!eof() && peek() == '*') ++pos;
      else {
        out.add_term(mono, coeff);
        return;
      }
    }
    for (;;) {
      std::string name = read_name();
      auto idx = reg.index(name);
      if (!idx)
        throw Error(ErrorCode::InvalidInput, "unknown variable: " + name);
      long long exp = 1;
      if (!eof() && peek() == '^') {
        ++pos;
        exp = Int::from_string(read_number()).to_int64();
      }
      mono.e[*idx] += static_cast<int32_t>(exp);
      saw_anything = true;
      if (!eof() && peek() == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_anything) throw Error(ErrorCode::InvalidInput, "empty term");
    out.add_term(mono, coeff);
  }

  Polynomial run() {
    Polynomial out = Polynomial::zero(reg.size());
    skip_ws();
    int sign = 1;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos;
    }
    if (eof()) throw Error(ErrorCode::InvalidInput, "empty polynomial");
    read_term(out, sign);
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-')
        throw Error(ErrorCode::InvalidInput, "expected + or - in polynomial");
      ++pos;
      read_term(out, c == '-' ? -1 : 1);
    }
    return out;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VariableRegistry& reg) {
  Parser p{text, 0, reg};
  return p.run();
}

namespace {

// univariate view: coefficients (polynomials in the other variables) by
// v-degree
std::vector<Polynomial> univariate_coeffs(const Polynomial& f, size_t var) {
  long long deg = f.degree_in(var);
  std::vector<Polynomial> out(static_cast<size_t>(deg + 1),
                              Polynomial::zero(f.nvars()));
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    int32_t e = mm.e[var];
    mm.e[var] = 0;
    out[static_cast<size_t>(e)].add_term(mm, c);
  }
  return out;
}

long long univ_degree(const std::vector<Polynomial>& coeffs) {
  for (size_t i = coeffs.size(); i-- > 0;)
    if (!coeffs[i].is_zero()) return static_cast<long long>(i);
  return -1;
}

void strip_numeric_content(std::vector<Polynomial>& coeffs) {
  Rat content(0);
  for (const Polynomial& p : coeffs) {
    if (p.is_zero()) continue;
    Rat c = p.content();
    content = content.is_zero()
                  ? c
                  : Rat(Int::gcd(content.numerator(), c.numerator()),
                        Int::lcm(content.denominator(), c.denominator()));
  }
  if (content.is_zero() || content.is_one()) return;
  Rat inv = content.inverse();
  for (Polynomial& p : coeffs) p = p.scaled(inv);
}

// pseudo-remainder of a by b in the variable underlying the views;
// deg(a) >= deg(b) >= 1 required
std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> a,
                                   const std::vector<Polynomial>& b) {
  long long db = univ_degree(b);
  const Polynomial& lcb = b[static_cast<size_t>(db)];
  for (;;) {
    long long da = univ_degree(a);
    if (da < db) break;
    // a := lcb * a - lca * v^(da-db) * b
    const Polynomial lca = a[static_cast<size_t>(da)];
    for (Polynomial& p : a) p = p * lcb;
    for (long long i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] =
          a[static_cast<size_t>(da - db + i)] - lca * b[static_cast<size_t>(i)];
    if (univ_degree(a) == da)
      throw Error(ErrorCode::Internal, "pseudo-division failed to reduce degree");
  }
  return a;
}

}  // namespace

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) return false;
  for (size_t v : f.occurring_variables()) {
    std::vector<Polynomial> a = univariate_coeffs(f, v);
    std::vector<Polynomial> b = univariate_coeffs(f.derivative(v), v);
    // only the degrees of the remainder sequence matter
    while (univ_degree(b) > 0) {
      std::vector<Polynomial> r = pseudo_rem(a, b);
      strip_numeric_content(r);
      a = std::move(b);
      b = std::move(r);
    }
    bool b_zero = univ_degree(b) < 0;
    if (b_zero && univ_degree(a) > 0) return false;  // gcd has positive v-degree
  }
  return true;
}

}  // namespace adet
