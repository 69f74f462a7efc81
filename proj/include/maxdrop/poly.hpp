#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxdrop/bigint.hpp"

namespace maxdrop {

// Polynomial over the exact integers, coefficients stored in ascending
// degree. Canonical form: no trailing zero coefficients; the zero polynomial
// is the empty sequence (its degree is "minus infinity", reported as an empty
// optional).
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t degree);
  static IntPolynomial one() { return constant(1); }
  static IntPolynomial variable() { return monomial(1, 1); }
  static IntPolynomial from_ints(std::initializer_list<long long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of x^d, zero beyond the degree.
  const BigInt& coeff(std::size_t d) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial& operator+=(const IntPolynomial& rhs) { return *this = *this + rhs; }
  IntPolynomial& operator-=(const IntPolynomial& rhs) { return *this = *this - rhs; }
  IntPolynomial& operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }
  IntPolynomial pow(unsigned long exponent) const;

  BigInt evaluate(const BigInt& v) const;  // exact Horner evaluation

  // p(u^m): spreads coefficient d to degree m*d. Requires m >= 1.
  IntPolynomial substitute_power(unsigned m) const;
  // Keeps every m-th coefficient: output coeff d = input coeff m*d.
  // Requires m >= 1.
  IntPolynomial extract_stride(unsigned m) const;

  bool operator==(const IntPolynomial& rhs) const = default;

  // "[1, 32, 35, 4]" — ascending coefficients as decimal strings.
  std::string to_list_string() const;
  // "1 + 32*x + 35*x^2 + 4*x^3"
  std::string to_pretty_string(std::string_view var = "x") const;

  bool canonical() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Polynomial in u and u^-1 over the exact integers. Stores the lowest
// exponent (offset) plus ascending coefficients; canonical at both ends.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero
  LaurentPolynomial(long offset, std::vector<BigInt> coeffs);

  static LaurentPolynomial from_polynomial(const IntPolynomial& p);
  static LaurentPolynomial term(BigInt c, long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long min_degree() const { return offset_; }  // meaningful only when nonzero
  long max_degree() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(long exponent) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    return *this = *this + rhs;
  }
  // Multiplies by c * u^shift.
  LaurentPolynomial scale_shift(const BigInt& c, long shift) const;

  // Fails with DomainError when any negative-degree coefficient remains.
  IntPolynomial to_polynomial() const;

  bool operator==(const LaurentPolynomial& rhs) const = default;
  bool canonical() const;

 private:
  void trim();
  long offset_ = 0;
  std::vector<BigInt> coeffs_;
};

// Power series in z truncated at a fixed order, with IntPolynomial (in x)
// coefficients. Exactly order+1 coefficient polynomials are stored; mixing
// truncation orders is an error, never an implicit re-truncation.
class BivariateSeries {
 public:
  explicit BivariateSeries(std::size_t order);
  BivariateSeries(std::size_t order, std::vector<IntPolynomial> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const IntPolynomial& coeff(std::size_t i) const;
  void set_coeff(std::size_t i, IntPolynomial p);

  friend BivariateSeries operator+(const BivariateSeries& a,
                                   const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a,
                                   const BivariateSeries& b);
  // Requires b's constant term to be the polynomial 1.
  friend BivariateSeries operator/(const BivariateSeries& a,
                                   const BivariateSeries& b);

  bool operator==(const BivariateSeries& rhs) const = default;

 private:
  std::vector<IntPolynomial> coeffs_;
};

}  // namespace maxdrop
