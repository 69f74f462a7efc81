#include "maxdrop/poly.hpp"

#include <algorithm>

#include "maxdrop/error.hpp"

namespace maxdrop {

namespace {
const BigInt kZero = 0;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool IntPolynomial::canonical() const {
  for (const BigInt& c : coeffs_)
    if (!c.canonical()) return false;
  return coeffs_.empty() || !coeffs_.back().is_zero();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  std::vector<BigInt> v;
  if (!c.is_zero()) v.push_back(std::move(c));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_ints(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigInt& IntPolynomial::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : kZero;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) v.push_back(-c);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned long exponent) const {
  IntPolynomial result = one();
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1ul) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

BigInt IntPolynomial::evaluate(const BigInt& v) const {
  BigInt acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

IntPolynomial IntPolynomial::substitute_power(unsigned m) const {
  if (m < 1) throw DomainError("substitute_power requires m >= 1");
  if (is_zero() || m == 1) return *this;
  std::vector<BigInt> v((coeffs_.size() - 1) * m + 1);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) v[d * m] = coeffs_[d];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::extract_stride(unsigned m) const {
  if (m < 1) throw DomainError("extract_stride requires m >= 1");
  std::vector<BigInt> v;
  for (std::size_t d = 0; d * m < coeffs_.size(); ++d)
    v.push_back(coeffs_[d * m]);
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].to_string();
  }
  out += "]";
  return out;
}

std::string IntPolynomial::to_pretty_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    BigInt c = coeffs_[i];
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    bool unit = c == BigInt(1);
    if (!unit || i == 0) out += c.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long offset, std::vector<BigInt> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop].is_zero()) ++drop;
  if (drop) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
    offset_ += static_cast<long>(drop);
  }
  if (coeffs_.empty()) offset_ = 0;
}

bool LaurentPolynomial::canonical() const {
  if (coeffs_.empty()) return offset_ == 0;
  return !coeffs_.front().is_zero() && !coeffs_.back().is_zero();
}

LaurentPolynomial LaurentPolynomial::from_polynomial(const IntPolynomial& p) {
  return LaurentPolynomial(0, p.coeffs());
}

LaurentPolynomial LaurentPolynomial::term(BigInt c, long exponent) {
  if (c.is_zero()) return {};
  return LaurentPolynomial(exponent, {std::move(c)});
}

BigInt LaurentPolynomial::coeff(long exponent) const {
  long idx = exponent - offset_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.offset_, b.offset_);
  long hi = std::max(a.max_degree(), b.max_degree());
  std::vector<BigInt> v(static_cast<std::size_t>(hi - lo + 1));
  for (long e = lo; e <= hi; ++e)
    v[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
  return LaurentPolynomial(lo, std::move(v));
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPolynomial(a.offset_ + b.offset_, std::move(v));
}

LaurentPolynomial LaurentPolynomial::scale_shift(const BigInt& c,
                                                 long shift) const {
  if (c.is_zero() || is_zero()) return {};
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (const BigInt& x : coeffs_) v.push_back(x * c);
  return LaurentPolynomial(offset_ + shift, std::move(v));
}

IntPolynomial LaurentPolynomial::to_polynomial() const {
  if (is_zero()) return {};
  if (offset_ < 0)
    throw DomainError("negative-degree residue: lowest term has exponent " +
                      std::to_string(offset_));
  std::vector<BigInt> v(static_cast<std::size_t>(offset_));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

// ---------------------------------------------------------------------------
// BivariateSeries

BivariateSeries::BivariateSeries(std::size_t order) : coeffs_(order + 1) {}

BivariateSeries::BivariateSeries(std::size_t order,
                                 std::vector<IntPolynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1)
    throw DomainError("series coefficients exceed truncation order");
  coeffs_.resize(order + 1);
}

const IntPolynomial& BivariateSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) throw DomainError("series coefficient beyond order");
  return coeffs_[i];
}

void BivariateSeries::set_coeff(std::size_t i, IntPolynomial p) {
  if (i >= coeffs_.size()) throw DomainError("series coefficient beyond order");
  coeffs_[i] = std::move(p);
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order() != b.order())
    throw DomainError("series truncation orders differ");
  BivariateSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i)
    r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order() != b.order())
    throw DomainError("series truncation orders differ");
  BivariateSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i)
    for (std::size_t j = 0; i + j <= a.order(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return r;
}

BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order() != b.order())
    throw DomainError("series truncation orders differ");
  if (b.coeffs_[0] != IntPolynomial::one())
    throw DomainError("series division requires constant term 1");
  BivariateSeries q(a.order());
  for (std::size_t m = 0; m <= a.order(); ++m) {
    IntPolynomial acc = a.coeffs_[m];
    for (std::size_t j = 1; j <= m; ++j) acc -= b.coeffs_[j] * q.coeffs_[m - j];
    q.coeffs_[m] = std::move(acc);
  }
  return q;
}

}  // namespace maxdrop
