#pragma once

#include <cstdint>

#include "adet/errors.hpp"

namespace adet {

// Prime-field arithmetic, used only as a diagnostic accelerator. All
// user-facing verdicts are computed over the rationals.
class PrimeField {
 public:
  static constexpr uint64_t kDefaultPrime = 1000003;

  explicit PrimeField(uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 2) throw Error(ErrorCode::InvalidInput, "modulus must be >= 2");
  }

  uint64_t modulus() const { return p_; }

  uint64_t reduce(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<uint64_t>(m);
  }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }

  uint64_t inv(uint64_t a) const {
    if (a == 0) throw Error(ErrorCode::InvalidInput, "inverse of zero");
    // extended Euclid
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw Error(ErrorCode::InvalidInput, "element not invertible");
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<uint64_t>(t);
  }

  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t out = 1 % p_;
    while (e) {
      if (e & 1) out = mul(out, a);
      a = mul(a, a);
      e >>= 1;
    }
    return out;
  }

 private:
  uint64_t p_;
};

}  // namespace adet
