#include "adet/int.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "adet/errors.hpp"

namespace adet {

namespace {
using u128 = unsigned __int128;
constexpr uint64_t kDecChunkBase = 10000000000000000000ULL;  // 10^19
constexpr int kDecChunkDigits = 19;
}  // namespace

Int::Int(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  uint64_t m = v < 0 ? (~static_cast<uint64_t>(v) + 1) : static_cast<uint64_t>(v);
  mag_.push_back(m);
}

void Int::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool Int::canonical() const {
  if (sign_ == 0) return mag_.empty();
  return !mag_.empty() && mag_.back() != 0;
}

int Int::cmp_mag(const std::vector<uint64_t>& a,
                 const std::vector<uint64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint64_t> Int::add_mag(const std::vector<uint64_t>& a,
                                   const std::vector<uint64_t>& b) {
  const std::vector<uint64_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint64_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint64_t> out(x.size());
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    u128 s = static_cast<u128>(x[i]) + (i < y.size() ? y[i] : 0) + carry;
    out[i] = static_cast<uint64_t>(s);
    carry = static_cast<uint64_t>(s >> 64);
  }
  if (carry) out.push_back(carry);
  return out;
}

// requires |a| >= |b|
std::vector<uint64_t> Int::sub_mag(const std::vector<uint64_t>& a,
                                   const std::vector<uint64_t>& b) {
  std::vector<uint64_t> out(a.size());
  uint64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    u128 s = static_cast<u128>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
    out[i] = static_cast<uint64_t>(s);
    borrow = (s >> 64) ? 1 : 0;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint64_t> Int::mul_mag(const std::vector<uint64_t>& a,
                                   const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      u128 cur = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint64_t>(cur);
      carry = static_cast<uint64_t>(cur >> 64);
    }
    out[i + b.size()] += carry;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D with 64-bit limbs.
void Int::divmod_mag(const std::vector<uint64_t>& u0,
                     const std::vector<uint64_t>& v,
                     std::vector<uint64_t>& q, std::vector<uint64_t>& r) {
  q.clear();
  r.clear();
  if (v.empty()) throw Error(ErrorCode::InvalidInput, "division by zero");
  if (cmp_mag(u0, v) < 0) {
    r = u0;
    return;
  }
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(u0.size());
  if (n == 1) {
    uint64_t d = v[0];
    q.assign(m, 0);
    u128 rem = 0;
    for (int i = m - 1; i >= 0; --i) {
      u128 cur = (rem << 64) | u0[i];
      q[i] = static_cast<uint64_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint64_t>(rem));
    return;
  }

  const int s = std::countl_zero(v[n - 1]);
  std::vector<uint64_t> vn(n);
  for (int i = n - 1; i > 0; --i)
    vn[i] = s ? ((v[i] << s) | (v[i - 1] >> (64 - s))) : v[i];
  vn[0] = v[0] << s;
  std::vector<uint64_t> un(m + 1);
  un[m] = s ? (u0[m - 1] >> (64 - s)) : 0;
  for (int i = m - 1; i > 0; --i)
    un[i] = s ? ((u0[i] << s) | (u0[i - 1] >> (64 - s))) : u0[i];
  un[0] = u0[0] << s;

  q.assign(m - n + 1, 0);
  const u128 base = static_cast<u128>(1) << 64;
  for (int j = m - n; j >= 0; --j) {
    u128 num = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
    u128 qhat = num / vn[n - 1];
    u128 rhat = num % vn[n - 1];
    while (qhat >= base ||
           static_cast<u128>(static_cast<uint64_t>(qhat)) * vn[n - 2] >
               ((rhat << 64) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= base) break;
    }
    uint64_t qh = static_cast<uint64_t>(qhat);
    u128 borrow = 0, mulcarry = 0;
    for (int i = 0; i < n; ++i) {
      u128 p = static_cast<u128>(qh) * vn[i] + mulcarry;
      mulcarry = p >> 64;
      u128 sub = static_cast<u128>(un[i + j]) - static_cast<uint64_t>(p) - borrow;
      un[i + j] = static_cast<uint64_t>(sub);
      borrow = (sub >> 64) ? 1 : 0;
    }
    u128 sub = static_cast<u128>(un[j + n]) - mulcarry - borrow;
    un[j + n] = static_cast<uint64_t>(sub);
    if (sub >> 64) {  // qhat was one too large: add back
      --qh;
      u128 carry = 0;
      for (int i = 0; i < n; ++i) {
        u128 sum = static_cast<u128>(un[i + j]) + vn[i] + carry;
        un[i + j] = static_cast<uint64_t>(sum);
        carry = sum >> 64;
      }
      un[j + n] += static_cast<uint64_t>(carry);
    }
    q[j] = qh;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  r.assign(n, 0);
  for (int i = 0; i < n; ++i)
    r[i] = s ? ((un[i] >> s) | (i + 1 < n ? (un[i + 1] << (64 - s)) : (un[n] << (64 - s))))
             : un[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
}

Int Int::operator-() const {
  Int out = *this;
  out.sign_ = -out.sign_;
  return out;
}

Int Int::abs() const {
  Int out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

Int operator+(const Int& a, const Int& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  Int out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = Int::add_mag(a.mag_, b.mag_);
  } else {
    int c = Int::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return Int();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.mag_ = Int::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = Int::sub_mag(b.mag_, a.mag_);
    }
  }
  return out;
}

Int operator-(const Int& a, const Int& b) { return a + (-b); }

Int operator*(const Int& a, const Int& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return Int();
  Int out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = Int::mul_mag(a.mag_, b.mag_);
  return out;
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
  if (b.sign_ == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  std::vector<uint64_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q = Int();
  r = Int();
  if (!qm.empty()) {
    q.sign_ = a.sign_ * b.sign_;
    q.mag_ = std::move(qm);
  }
  if (!rm.empty()) {
    r.sign_ = a.sign_;
    r.mag_ = std::move(rm);
  }
}

Int operator/(const Int& a, const Int& b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return q;
}

Int operator%(const Int& a, const Int& b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return r;
}

Int& Int::operator+=(const Int& o) { return *this = *this + o; }
Int& Int::operator-=(const Int& o) { return *this = *this - o; }
Int& Int::operator*=(const Int& o) { return *this = *this * o; }

bool operator==(const Int& a, const Int& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
  if (a.sign_ != b.sign_)
    return a.sign_ < b.sign_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  int c = Int::cmp_mag(a.mag_, b.mag_) * (a.sign_ == 0 ? 0 : a.sign_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Int Int::gcd(Int a, Int b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Int q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Int Int::lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) return Int();
  return (a * b).abs() / gcd(a, b);
}

Int Int::pow(const Int& base, unsigned long long e) {
  Int out(1), b = base;
  while (e) {
    if (e & 1) out *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return out;
}

bool Int::fits_int64() const {
  if (mag_.size() > 1) return false;
  if (mag_.empty()) return true;
  if (sign_ > 0) return mag_[0] <= 0x7fffffffffffffffULL;
  return mag_[0] <= 0x8000000000000000ULL;
}

long long Int::to_int64() const {
  if (!fits_int64()) throw Error(ErrorCode::Internal, "Int does not fit int64");
  if (mag_.empty()) return 0;
  if (sign_ > 0) return static_cast<long long>(mag_[0]);
  return static_cast<long long>(~mag_[0] + 1);
}

std::string Int::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint64_t> chunks;
  std::vector<uint64_t> cur = mag_;
  const std::vector<uint64_t> base = {kDecChunkBase};
  while (!cur.empty()) {
    std::vector<uint64_t> q, r;
    divmod_mag(cur, base, q, r);
    chunks.push_back(r.empty() ? 0 : r[0]);
    cur = std::move(q);
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

Int Int::from_string(std::string_view s) {
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty integer literal");
  bool neg = false;
  size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size())
    throw Error(ErrorCode::InvalidInput, "bad integer literal");
  Int out;
  const Int chunk_base = Int::pow(Int(10), kDecChunkDigits);
  size_t first = (s.size() - pos) % kDecChunkDigits;
  if (first == 0) first = kDecChunkDigits;
  while (pos < s.size()) {
    size_t len = std::min<size_t>(first, s.size() - pos);
    first = kDecChunkDigits;
    uint64_t val = 0;
    for (size_t i = 0; i < len; ++i) {
      char c = s[pos + i];
      if (c < '0' || c > '9')
        throw Error(ErrorCode::InvalidInput, "bad integer literal");
      val = val * 10 + static_cast<uint64_t>(c - '0');
    }
    Int piece;
    if (val) {
      piece.sign_ = 1;
      piece.mag_.push_back(val);
    }
    out = out * ((len == kDecChunkDigits) ? chunk_base : Int::pow(Int(10), len)) + piece;
    pos += len;
  }
  if (neg) out = -out;
  return out;
}

}  // namespace adet
