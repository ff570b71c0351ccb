#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "adet/int.hpp"

namespace adet {

// Exact rational number. Always canonical: denominator positive and coprime
// to the numerator, zero stored as 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  explicit Rat(Int n) : num_(std::move(n)), den_(1) {}
  Rat(Int n, Int d);

  // Accepts "4", "-4", "4/3", "-4/3".
  static Rat parse(std::string_view s);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int signum() const { return num_.signum(); }

  Rat operator-() const;
  Rat inverse() const;
  Rat abs() const;
  Rat pow(long long e) const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  std::string to_string() const;

 private:
  Int num_, den_;
  void normalize();
};

}  // namespace adet
