#include "adet/rat.hpp"

#include "adet/errors.hpp"

namespace adet {

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero())
    throw Error(ErrorCode::InvalidInput, "zero denominator");
  normalize();
}

void Rat::normalize() {
  if (num_.is_zero()) {
    den_ = Int(1);
    return;
  }
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = Int::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat Rat::parse(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(Int::from_string(s));
  return Rat(Int::from_string(s.substr(0, slash)),
             Int::from_string(s.substr(slash + 1)));
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "inverse of zero");
  return Rat(den_, num_);
}

Rat Rat::abs() const { return num_.is_negative() ? -*this : *this; }

Rat Rat::pow(long long e) const {
  if (e == 0) return Rat(1);
  if (e < 0) return inverse().pow(-e);
  Rat out;
  // bases are canonical, so no re-normalization is needed for powers
  out.num_ = Int::pow(num_, static_cast<unsigned long long>(e));
  out.den_ = Int::pow(den_, static_cast<unsigned long long>(e));
  return out;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::string Rat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace adet
