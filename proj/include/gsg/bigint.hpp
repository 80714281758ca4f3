#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsg {

// Signed arbitrary-precision integer.  Values that fit in a machine word are
// kept inline; only genuinely large magnitudes spill into limb storage, so
// the exhaustive-corpus oracles (millions of tiny exact operations) stay
// allocation-free.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design

  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  bool is_zero() const { return big_.empty() && small_ == 0; }
  bool is_negative() const { return sign() < 0; }
  bool is_odd() const;
  int sign() const;

  bool fits_longlong() const { return big_.empty(); }
  long long as_longlong() const { return small_; }  // valid only if fits

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // truncates toward zero
  BigInt operator%(const BigInt& o) const;  // sign follows dividend
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  int compare(const BigInt& o) const;
  BigInt abs() const;
  static BigInt gcd(BigInt a, BigInt b);
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

 private:
  // Inline representation: big_ empty, value in small_.
  // Spilled representation: big_ holds little-endian 32-bit limbs of the
  // magnitude (no leading zero limb), small_ holds the sign (+1/-1).
  long long small_ = 0;
  std::vector<std::uint32_t> big_;

  static BigInt make_big(int sign, std::vector<std::uint32_t> mag);
  std::vector<std::uint32_t> magnitude() const;
  void shrink();

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r);
};

}  // namespace gsg
