#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maxdrop {

// Exact signed integer of unbounded magnitude.
//
// Sign/magnitude representation with 32-bit limbs, least significant limb
// first. Canonical form: no leading zero limbs, and zero is sign 0 with an
// empty limb vector. Only the operations the polynomial layer needs are
// provided (no general division).
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, numeric type

  static BigInt from_string(std::string_view text);
  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  static BigInt pow(const BigInt& base, unsigned long exponent);

  bool operator==(const BigInt& rhs) const = default;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  // True when the representation invariants hold; used by tests.
  bool canonical() const;

 private:
  static int compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_magnitude(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  // Requires a >= b.
  static std::vector<std::uint32_t> sub_magnitude(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  void trim();

  int sign_ = 0;  // -1, 0, +1
  std::vector<std::uint32_t> mag_;
};

}  // namespace maxdrop
