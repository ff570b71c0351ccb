#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adet {

// Arbitrary-precision signed integer.
//
// Representation: sign in {-1,0,+1} plus little-endian 64-bit limbs with no
// high zero limb. Zero is sign 0 with an empty limb vector, so every value
// has exactly one representation.
class Int {
 public:
  Int() = default;
  Int(long long v);

  static Int from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const { return sign_ == 0 || (mag_[0] & 1) == 0; }
  int signum() const { return sign_; }

  Int operator-() const;
  Int abs() const;

  friend Int operator+(const Int& a, const Int& b);
  friend Int operator-(const Int& a, const Int& b);
  friend Int operator*(const Int& a, const Int& b);

  // Truncated division: quotient rounds toward zero, remainder carries the
  // sign of the dividend, |r| < |b|.
  static void divmod(const Int& a, const Int& b, Int& q, Int& r);
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);

  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);

  friend bool operator==(const Int& a, const Int& b);
  friend std::strong_ordering operator<=>(const Int& a, const Int& b);

  static Int gcd(Int a, Int b);  // nonnegative
  static Int lcm(const Int& a, const Int& b);
  static Int pow(const Int& base, unsigned long long e);

  bool fits_int64() const;
  long long to_int64() const;  // requires fits_int64()

  std::string to_string() const;

  // Invariant probes used by the unit tests.
  size_t limb_count() const { return mag_.size(); }
  bool canonical() const;

 private:
  int sign_ = 0;
  std::vector<uint64_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<uint64_t>& a,
                     const std::vector<uint64_t>& b);
  static std::vector<uint64_t> add_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b);
  static std::vector<uint64_t> sub_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b);
  static std::vector<uint64_t> mul_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b);
  static void divmod_mag(const std::vector<uint64_t>& a,
                         const std::vector<uint64_t>& b,
                         std::vector<uint64_t>& q, std::vector<uint64_t>& r);
};

inline Int operator+(const Int& a, long long b) { return a + Int(b); }
inline Int operator*(const Int& a, long long b) { return a * Int(b); }

}  // namespace adet
