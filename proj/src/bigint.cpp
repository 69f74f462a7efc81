#include "maxdrop/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "maxdrop/error.hpp"

namespace maxdrop {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
constexpr std::uint32_t kDecChunkBase = 1000000000u;  // 10^9 per chunk
constexpr int kDecChunkDigits = 9;
}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // Two's complement safe for LLONG_MIN.
  std::uint64_t mag = value < 0 ? 0ull - static_cast<std::uint64_t>(value)
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::canonical() const {
  if (sign_ == 0) return mag_.empty();
  return !mag_.empty() && mag_.back() != 0 && (sign_ == 1 || sign_ == -1);
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> out;
  out.reserve(hi.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(diff));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    mag_ = add_magnitude(mag_, rhs.mag_);
    return *this;
  }
  int cmp = compare_magnitude(mag_, rhs.mag_);
  if (cmp == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (cmp > 0) {
    mag_ = sub_magnitude(mag_, rhs.mag_);
  } else {
    mag_ = sub_magnitude(rhs.mag_, mag_);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt r;
  if (lhs.sign_ == 0 || rhs.sign_ == 0) return r;
  r.sign_ = lhs.sign_ * rhs.sign_;
  r.mag_.assign(lhs.mag_.size() + rhs.mag_.size(), 0u);
  for (std::size_t i = 0; i < lhs.mag_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t a = lhs.mag_[i];
    for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
      std::uint64_t cur = r.mag_[i + j] + a * rhs.mag_[j] + carry;
      r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t pos = i + rhs.mag_.size();
    while (carry) {
      std::uint64_t cur = r.mag_[pos] + carry;
      r.mag_[pos] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++pos;
    }
  }
  r.trim();
  return r;
}

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

BigInt BigInt::pow(const BigInt& base, unsigned long exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1ul) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int cmp = compare_magnitude(mag_, rhs.mag_) * sign_;
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> work = mag_;
  std::vector<std::uint32_t> chunks;  // base 10^9, least significant first
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / kDecChunkBase);
      rem = cur % kDecChunkBase;
    }
    chunks.push_back(static_cast<std::uint32_t>(rem));
    while (!work.empty() && work.back() == 0) work.pop_back();
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

BigInt BigInt::from_string(std::string_view text) {
  std::string_view body = text;
  int sign = 1;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    if (body.front() == '-') sign = -1;
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("empty integer literal");
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid integer literal: '" + std::string(text) + "'");
  }
  BigInt result;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t take = std::min<std::size_t>(kDecChunkDigits, body.size() - pos);
    std::uint32_t chunk = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      chunk = chunk * 10 + static_cast<std::uint32_t>(body[pos + i] - '0');
      scale *= 10;
    }
    result *= BigInt(static_cast<long long>(scale));
    result += BigInt(static_cast<long long>(chunk));
    pos += take;
  }
  if (sign < 0) result = -result;
  return result;
}

}  // namespace maxdrop
