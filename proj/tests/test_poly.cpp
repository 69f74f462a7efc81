#include "maxdrop/poly.hpp"

#include <random>

#include "doctest.h"
#include "maxdrop/error.hpp"

using namespace maxdrop;

namespace {

IntPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  std::vector<BigInt> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("ring basics") {
  IntPolynomial one_plus_x = IntPolynomial::from_ints({1, 1});
  CHECK(one_plus_x * one_plus_x == IntPolynomial::from_ints({1, 2, 1}));
  IntPolynomial p = IntPolynomial::from_ints({3, 0, -2});
  CHECK(p + IntPolynomial() == p);
  IntPolynomial x_minus_1 = IntPolynomial::from_ints({-1, 1});
  CHECK(x_minus_1.pow(3) == IntPolynomial::from_ints({-1, 3, -3, 1}));
}

TEST_CASE("zero polynomial is the empty sequence") {
  CHECK(IntPolynomial().is_zero());
  CHECK(!IntPolynomial().degree().has_value());
  CHECK(IntPolynomial::from_ints({5}).degree() == 0);
  CHECK(IntPolynomial::from_ints({0, 0}).is_zero());
  IntPolynomial p = IntPolynomial::from_ints({1, 2});
  CHECK((p - p).is_zero());
  CHECK((p - p).coeffs().empty());
  CHECK((p * IntPolynomial()).is_zero());
}

TEST_CASE("evaluation") {
  IntPolynomial b42 = IntPolynomial::from_ints({1, 32, 35, 4});
  CHECK(b42.evaluate(1) == BigInt(72));
  CHECK(b42.evaluate(0) == BigInt(1));
  CHECK(IntPolynomial::from_ints({1, 10, 7}).evaluate(1) == BigInt(18));
  CHECK(IntPolynomial().evaluate(99) == BigInt(0));
}

TEST_CASE("substitute_power") {
  CHECK(IntPolynomial::from_ints({1, 1}).substitute_power(3) ==
        IntPolynomial::from_ints({1, 0, 0, 1}));
  CHECK(IntPolynomial::from_ints({7}).substitute_power(5) ==
        IntPolynomial::from_ints({7}));
  CHECK(IntPolynomial::from_ints({1, 6, 1}).substitute_power(3) ==
        IntPolynomial::from_ints({1, 0, 0, 6, 0, 0, 1}));
  CHECK_THROWS_AS(IntPolynomial::from_ints({1}).substitute_power(0),
                  DomainError);
}

TEST_CASE("extract_stride") {
  // Every third coefficient of the degree-10 expansion.
  IntPolynomial expansion =
      IntPolynomial::from_ints({1, 6, 17, 32, 43, 44, 35, 22, 11, 4, 1});
  CHECK(expansion.extract_stride(3) == IntPolynomial::from_ints({1, 32, 35, 4}));
  IntPolynomial p = IntPolynomial::from_ints({4, -1, 3, 9});
  CHECK(p.extract_stride(1) == p);
  IntPolynomial deg8 = IntPolynomial::from_ints({1, 3, 7, 10, 12, 10, 7, 3, 1});
  CHECK(deg8.extract_stride(3) == IntPolynomial::from_ints({1, 10, 7}));
}

TEST_CASE("stride of a spread is the identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial p = random_poly(rng);
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(p.substitute_power(m).extract_stride(m) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    IntPolynomial a = random_poly(rng), b = random_poly(rng),
                  c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (long long v : {-3LL, 0LL, 2LL})
      CHECK((a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v));
    CHECK((a * b).canonical());
    CHECK((a - b).canonical());
  }
}

TEST_CASE("pretty and list formats") {
  IntPolynomial b42 = IntPolynomial::from_ints({1, 32, 35, 4});
  CHECK(b42.to_list_string() == "[1, 32, 35, 4]");
  CHECK(b42.to_pretty_string() == "1 + 32*x + 35*x^2 + 4*x^3");
  CHECK(IntPolynomial().to_pretty_string() == "0");
  CHECK(IntPolynomial::from_ints({0, -1, 0, 1}).to_pretty_string() ==
        "-x + x^3");
  CHECK(IntPolynomial().to_list_string() == "[]");
}

TEST_CASE("laurent arithmetic") {
  LaurentPolynomial u_inv = LaurentPolynomial::term(1, -1);
  LaurentPolynomial u = LaurentPolynomial::term(1, 1);
  CHECK(u_inv * u == LaurentPolynomial::term(1, 0));

  LaurentPolynomial a = u_inv + LaurentPolynomial::term(1, 0);
  LaurentPolynomial minus_u_inv = LaurentPolynomial::term(-1, -1);
  CHECK(a + minus_u_inv == LaurentPolynomial::term(1, 0));

  LaurentPolynomial b(-2, {BigInt(1), BigInt(1), BigInt(1)});  // u^-2+u^-1+1
  CHECK(b.scale_shift(1, 2) == LaurentPolynomial(0, {1, 1, 1}));
  CHECK(b.scale_shift(1, 2).to_polynomial() ==
        IntPolynomial::from_ints({1, 1, 1}));
}

TEST_CASE("laurent to polynomial") {
  LaurentPolynomial q1(0, {1, 2, 1});
  CHECK(q1.to_polynomial() == IntPolynomial::from_ints({1, 2, 1}));
  CHECK(LaurentPolynomial().to_polynomial().is_zero());
  LaurentPolynomial bad(-1, {5, 1});
  CHECK_THROWS_AS(bad.to_polynomial(), DomainError);
  // Cancellation first: offsets can start negative and still convert.
  LaurentPolynomial fixed = bad + LaurentPolynomial::term(-5, -1);
  CHECK(fixed.to_polynomial() == IntPolynomial::from_ints({1}));
}

TEST_CASE("laurent canonical form trims both ends") {
  LaurentPolynomial p(-3, {BigInt(0), BigInt(4), BigInt(0)});
  CHECK(p.min_degree() == -2);
  CHECK(p.max_degree() == -2);
  CHECK(p.canonical());
  LaurentPolynomial zero(5, {BigInt(0)});
  CHECK(zero.is_zero());
  CHECK(zero.canonical());
}

TEST_CASE("geometric series") {
  BivariateSeries one(3);
  one.set_coeff(0, IntPolynomial::one());
  BivariateSeries denom(3);
  denom.set_coeff(0, IntPolynomial::one());
  denom.set_coeff(1, -IntPolynomial::one());
  BivariateSeries q = one / denom;
  for (std::size_t i = 0; i <= 3; ++i) CHECK(q.coeff(i) == IntPolynomial::one());
}

TEST_CASE("series multiplicative identity") {
  BivariateSeries a(4);
  a.set_coeff(0, IntPolynomial::from_ints({2, 1}));
  a.set_coeff(2, IntPolynomial::from_ints({0, 0, 5}));
  a.set_coeff(4, IntPolynomial::from_ints({-3}));
  BivariateSeries one(4);
  one.set_coeff(0, IntPolynomial::one());
  CHECK(a * one == a);
}

TEST_CASE("series division inverts multiplication up to the order") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    BivariateSeries b(5);
    b.set_coeff(0, IntPolynomial::one());
    for (std::size_t i = 1; i <= 5; ++i) b.set_coeff(i, random_poly(rng));
    BivariateSeries a(5);
    for (std::size_t i = 0; i <= 5; ++i) a.set_coeff(i, random_poly(rng));
    CHECK((a / b) * b == a);
  }
}

TEST_CASE("series coefficient of the rational form") {
  // Numerator 1 + (x-2) z + (1+x^2) z^2 over denominator
  // 1 - 3z - 3(x-1) z^2 - (x-1)^2 z^3: degree-4 coefficient of the quotient.
  BivariateSeries num(4), den(4);
  num.set_coeff(0, IntPolynomial::one());
  num.set_coeff(1, IntPolynomial::from_ints({-2, 1}));
  num.set_coeff(2, IntPolynomial::from_ints({1, 0, 1}));
  den.set_coeff(0, IntPolynomial::one());
  den.set_coeff(1, IntPolynomial::from_ints({-3}));
  den.set_coeff(2, IntPolynomial::from_ints({3, -3}));
  den.set_coeff(3, -IntPolynomial::from_ints({-1, 1}).pow(2));
  CHECK((num / den).coeff(4) == IntPolynomial::from_ints({1, 32, 35, 4}));
}

TEST_CASE("series order mismatches and bad divisors are errors") {
  BivariateSeries a(3), b(4);
  CHECK_THROWS_AS(a + b, DomainError);
  CHECK_THROWS_AS(a * b, DomainError);
  BivariateSeries c(3);
  c.set_coeff(0, IntPolynomial::from_ints({2}));
  CHECK_THROWS_AS(a / c, DomainError);
  CHECK_THROWS_AS(a.coeff(9), DomainError);
}
