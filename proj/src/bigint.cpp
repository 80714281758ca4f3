#include "gsg/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsg {

namespace {

constexpr long long kSmallMax = 0x3fffffffffffffffLL;  // headroom for +/-

bool add_overflows(long long a, long long b, long long& out) {
  return __builtin_add_overflow(a, b, &out) || out > kSmallMax || out < -kSmallMax;
}

bool mul_overflows(long long a, long long b, long long& out) {
  return __builtin_mul_overflow(a, b, &out) || out > kSmallMax || out < -kSmallMax;
}

std::vector<std::uint32_t> mag_from_ull(unsigned long long v) {
  std::vector<std::uint32_t> m;
  while (v) {
    m.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
  return m;
}

}  // namespace

int BigInt::sign() const {
  if (!big_.empty()) return small_ < 0 ? -1 : 1;
  return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
}

bool BigInt::is_odd() const {
  if (big_.empty()) return (small_ & 1) != 0;
  return (big_[0] & 1) != 0;
}

BigInt BigInt::make_big(int sg, std::vector<std::uint32_t> mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  BigInt r;
  if (mag.empty()) return r;
  r.big_ = std::move(mag);
  r.small_ = sg < 0 ? -1 : 1;
  r.shrink();
  return r;
}

void BigInt::shrink() {
  if (big_.empty()) return;
  if (big_.size() > 2) return;
  unsigned long long v = big_[0];
  if (big_.size() == 2) v |= static_cast<unsigned long long>(big_[1]) << 32;
  if (v <= static_cast<unsigned long long>(kSmallMax)) {
    long long s = static_cast<long long>(v);
    small_ = small_ < 0 ? -s : s;
    big_.clear();
  }
}

std::vector<std::uint32_t> BigInt::magnitude() const {
  if (!big_.empty()) return big_;
  unsigned long long v = small_ < 0 ? -static_cast<unsigned long long>(small_)
                                    : static_cast<unsigned long long>(small_);
  return mag_from_ull(v);
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> r(hi.size() + 1, 0);
  unsigned long long carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    unsigned long long s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// requires a >= b
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  long long borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    long long d = static_cast<long long>(a[i]) - borrow -
                  (i < b.size() ? static_cast<long long>(b[i]) : 0);
    if (d < 0) {
      d += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned long long carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      unsigned long long cur = r[i + j] +
                               static_cast<unsigned long long>(a[i]) * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      unsigned long long cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Bitwise shift-subtract long division; operand sizes here are tiny, so the
// simple algorithm beats maintaining a Knuth-D implementation.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  q.assign(a.size(), 0);
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    q.clear();
    return;
  }
  const int bits = static_cast<int>(a.size()) * 32;
  for (int i = bits - 1; i >= 0; --i) {
    // r <<= 1
    std::uint32_t carry = 0;
    for (size_t j = 0; j < r.size(); ++j) {
      std::uint32_t nc = r[j] >> 31;
      r[j] = (r[j] << 1) | carry;
      carry = nc;
    }
    if (carry) r.push_back(carry);
    // bit i of a into r
    if ((a[i / 32] >> (i % 32)) & 1u) {
      if (r.empty()) r.push_back(1);
      else r[0] |= 1u;
    }
    if (cmp_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[i / 32] |= (1u << (i % 32));
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
  if (big_.empty()) {
    BigInt r;
    r.small_ = -small_;
    return r;
  }
  BigInt r = *this;
  r.small_ = -r.small_;
  return r;
}

BigInt BigInt::abs() const { return sign() < 0 ? -*this : *this; }

BigInt BigInt::operator+(const BigInt& o) const {
  if (big_.empty() && o.big_.empty()) {
    long long out;
    if (!add_overflows(small_, o.small_, out)) return BigInt(out);
  }
  const int sa = sign(), sb = o.sign();
  if (sa == 0) return o;
  if (sb == 0) return *this;
  auto ma = magnitude(), mb = o.magnitude();
  if (sa == sb) return make_big(sa, add_mag(ma, mb));
  int c = cmp_mag(ma, mb);
  if (c == 0) return BigInt(0);
  return c > 0 ? make_big(sa, sub_mag(ma, mb)) : make_big(sb, sub_mag(mb, ma));
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (big_.empty() && o.big_.empty()) {
    long long out;
    if (!mul_overflows(small_, o.small_, out)) return BigInt(out);
  }
  const int s = sign() * o.sign();
  if (s == 0) return BigInt(0);
  return make_big(s, mul_mag(magnitude(), o.magnitude()));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (a.big_.empty() && b.big_.empty()) {
    q = BigInt(a.small_ / b.small_);
    r = BigInt(a.small_ % b.small_);
    return;
  }
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(a.magnitude(), b.magnitude(), qm, rm);
  const int qsign = a.sign() * b.sign();
  q = make_big(qsign, std::move(qm));
  r = make_big(a.sign(), std::move(rm));
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

int BigInt::compare(const BigInt& o) const {
  const int sa = sign(), sb = o.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  if (big_.empty() && o.big_.empty())
    return small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
  int c = cmp_mag(magnitude(), o.magnitude());
  return sa > 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r(0);
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in '" + std::string(s) + "'");
    r = r * ten + BigInt(s[i] - '0');
  }
  return neg ? -r : r;
}

std::string BigInt::to_string() const {
  if (big_.empty()) return std::to_string(small_);
  std::string digits;
  std::vector<std::uint32_t> m = magnitude();
  const std::vector<std::uint32_t> ten = {10u};
  while (!m.empty()) {
    std::vector<std::uint32_t> q, r;
    divmod_mag(m, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
    m = std::move(q);
  }
  if (sign() < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace gsg
