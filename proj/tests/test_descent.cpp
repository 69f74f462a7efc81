#include "maxdrop/descent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "doctest.h"
#include "maxdrop/error.hpp"

using namespace maxdrop;

namespace {

// Independent oracle: descent distribution by direct enumeration, with the
// maxdrop filter applied per element.
IntPolynomial descent_histogram(Family f, int n, int k) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  auto tally = [&](std::span<const int> w) {
    int des = f == Family::A ? stat::descent_count_a(w) : stat::descent_count_b(w);
    coeffs[static_cast<std::size_t>(des)] += 1;
  };
  if (f == Family::A)
    enumerate_restricted_plain(n, k, tally);
  else
    enumerate_restricted_signed(n, k, tally);
  return IntPolynomial(std::move(coeffs));
}

std::vector<SignedPermutation> collect_bnk(int n, int k) {
  std::vector<SignedPermutation> out;
  enumerate_restricted_signed(n, k, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// All subsets of a sorted member list.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& members) {
  std::vector<std::vector<int>> out;
  const std::size_t total = 1u << members.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask & (1u << i)) s.push_back(members[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("eulerian numbers match direct enumeration") {
  for (int n = 0; n <= 6; ++n) {
    IntPolynomial brute_a = descent_histogram(Family::A, n, n);
    IntPolynomial brute_b = descent_histogram(Family::B, n, n);
    CHECK(eulerian_poly(Family::A, n) == brute_a);
    CHECK(eulerian_poly(Family::B, n) == brute_b);
  }
  CHECK(eulerian_number(Family::A, 3, 1) == BigInt(4));
  CHECK(eulerian_number(Family::B, 2, 1) == BigInt(6));
  for (int n = 1; n <= 8; ++n) CHECK(eulerian_number(Family::A, n, 0) == BigInt(1));
}

TEST_CASE("eulerian numbers vanish beyond the top degree") {
  CHECK(eulerian_number(Family::A, 4, 4) == BigInt(0));
  CHECK(eulerian_number(Family::A, 4, 9) == BigInt(0));
  CHECK(eulerian_number(Family::B, 4, 4) == BigInt(1));  // top coefficient
  CHECK(eulerian_number(Family::B, 4, 5) == BigInt(0));
  CHECK(eulerian_number(Family::B, 4, 12) == BigInt(0));
  CHECK(eulerian_number(Family::B, 3, -1) == BigInt(0));
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian_poly(Family::B, 0) == IntPolynomial::one());
  CHECK(eulerian_poly(Family::A, 0) == IntPolynomial::one());
  CHECK(eulerian_poly(Family::B, 2) == IntPolynomial::from_ints({1, 6, 1}));
  CHECK(eulerian_poly(Family::A, 3) == IntPolynomial::from_ints({1, 4, 1}));
  for (int n = 0; n <= 8; ++n) {
    CHECK(eulerian_poly(Family::A, n).evaluate(1) == factorial(n));
    CHECK(eulerian_poly(Family::B, n).evaluate(1) ==
          BigInt::pow(2, static_cast<unsigned long>(n)) * factorial(n));
  }
}

TEST_CASE("brute route reproduces the frozen regression values") {
  CHECK(restricted_poly_brute(Family::B, 4, 2) ==
        IntPolynomial::from_ints({1, 32, 35, 4}));
  CHECK(restricted_poly_brute(Family::A, 4, 2) ==
        IntPolynomial::from_ints({1, 10, 7}));
  for (int n = 0; n <= 6; ++n)
    CHECK(restricted_poly_brute(Family::B, n, 0) == IntPolynomial::one());
}

TEST_CASE("recurrence route") {
  CHECK(restricted_poly_recurrence(Family::B, 3, 2) ==
        IntPolynomial::from_ints({1, 16, 7}));
  CHECK(restricted_poly_recurrence(Family::B, 3, 2) ==
        descent_histogram(Family::B, 3, 2));
  CHECK(restricted_poly_recurrence(Family::B, 3, 2).evaluate(1) == BigInt(24));
  for (int k = 0; k <= 4; ++k)
    CHECK(restricted_poly_recurrence(Family::B, k, k) ==
          eulerian_poly(Family::B, k));
  CHECK(restricted_poly_recurrence(Family::B, 4, 2) ==
        IntPolynomial::from_ints({1, 32, 35, 4}));
}

TEST_CASE("kernel polynomials") {
  CHECK(recurrence_kernel(Family::B, 0) == IntPolynomial::from_ints({1}));
  CHECK(recurrence_kernel(Family::B, 1) == IntPolynomial::from_ints({1, 2, 1}));
  CHECK(recurrence_kernel(Family::B, 2) ==
        IntPolynomial::from_ints({1, 4, 6, 6, 4, 2, 1}));
  CHECK(recurrence_kernel(Family::A, 2) ==
        IntPolynomial::from_ints({1, 1, 2, 1, 1}));
  for (int k = 0; k <= 7; ++k) {
    CHECK(recurrence_kernel(Family::A, k).coeff(0) == BigInt(1));
    CHECK(recurrence_kernel(Family::B, k).coeff(0) == BigInt(1));
  }
}

TEST_CASE("explicit route") {
  CHECK(restricted_poly_explicit(Family::B, 4, 2) ==
        IntPolynomial::from_ints({1, 32, 35, 4}));
  CHECK(restricted_poly_explicit(Family::A, 4, 2) ==
        IntPolynomial::from_ints({1, 10, 7}));
  // The n = k boundary takes the kernel alone through the stride.
  for (int k = 0; k <= 4; ++k) {
    CHECK(restricted_poly_explicit(Family::B, k, k) ==
          eulerian_poly(Family::B, k));
    CHECK(restricted_poly_explicit(Family::B, k, k) ==
          descent_histogram(Family::B, k, k));
    CHECK(restricted_poly_explicit(Family::A, k, k) ==
          eulerian_poly(Family::A, k));
  }
  // Degree-10 and degree-8 expansions behind the worked strides.
  IntPolynomial ladder2(std::vector<BigInt>{1, 1, 1});
  CHECK(recurrence_kernel(Family::B, 2) * ladder2.pow(2) ==
        IntPolynomial::from_ints({1, 6, 17, 32, 43, 44, 35, 22, 11, 4, 1}));
  CHECK(recurrence_kernel(Family::A, 2) * ladder2.pow(2) ==
        IntPolynomial::from_ints({1, 3, 7, 10, 12, 10, 7, 3, 1}));
}

TEST_CASE("series route") {
  std::vector<IntPolynomial> row = restricted_poly_series(Family::B, 2, 4);
  REQUIRE(row.size() == 5);
  CHECK(row[0] == IntPolynomial::one());
  CHECK(row[4] == IntPolynomial::from_ints({1, 32, 35, 4}));
  CHECK(restricted_poly_series(Family::B, 1, 1)[1] ==
        descent_histogram(Family::B, 1, 1));
  CHECK(restricted_poly_series(Family::B, 1, 1)[1] ==
        IntPolynomial::from_ints({1, 1}));
}

TEST_CASE("four routes agree exactly") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (Family f : {Family::A, Family::B}) {
        IntPolynomial brute = restricted_poly_brute(f, n, k);
        CHECK(brute == restricted_poly_recurrence(f, n, k));
        CHECK(brute == restricted_poly_explicit(f, n, k));
        CHECK(brute ==
              restricted_poly_series(f, k, n)[static_cast<std::size_t>(n)]);
      }
}

TEST_CASE("restriction becomes vacuous beyond k = n") {
  for (int n = 0; n <= 6; ++n)
    for (int k = n; k <= n + 2; ++k) {
      CHECK(restricted_poly_recurrence(Family::B, n, k) ==
            eulerian_poly(Family::B, n));
      CHECK(restricted_poly_explicit(Family::B, n, k) ==
            eulerian_poly(Family::B, n));
    }
  for (int n = 1; n <= 6; ++n)
    for (int k = n - 1; k <= n + 1; ++k)
      CHECK(restricted_poly_recurrence(Family::A, n, k) ==
            eulerian_poly(Family::A, n));
}

TEST_CASE("set-restricted counts") {
  CHECK(restricted_count_superset(4, 2, DescentSet(4, {})) == BigInt(72));
  CHECK(restricted_count_superset(1, 0, DescentSet(1, {})) == BigInt(1));
  // A full descent set forces the strictly decreasing word from 0, whose
  // last letter alone has drop size n; at n = 2, k = 1 nothing survives.
  CHECK(restricted_count_superset_brute(2, 1, DescentSet(2, {0, 1})) ==
        BigInt(0));
  CHECK(restricted_count_superset_product(2, 1, DescentSet(2, {0, 1})) ==
        BigInt(0));
  CHECK(restricted_count_superset_brute(2, 2, DescentSet(2, {0, 1})) ==
        BigInt(1));  // (-1,-2) qualifies once k admits drop size 2
  CHECK_THROWS_AS(restricted_count_superset_product(3, 3, DescentSet(3, {})),
                  DomainError);
  CHECK_THROWS_AS(restricted_count_superset(3, 1, DescentSet(4, {})),
                  DomainError);
}

TEST_CASE("product identity matches enumeration everywhere up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> full(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k <= n - 1; ++k)
      for (const auto& members : subsets_of(full)) {
        DescentSet s(n, members);
        CHECK(restricted_count_superset_brute(n, k, s) ==
              restricted_count_superset_product(n, k, s));
      }
  }
}

TEST_CASE("binomial transform of the restricted polynomial") {
  // D_{n,k}(x+1) = sum over subsets S of b_{n,k}(S) x^{|S|}. One exhaustive
  // pass per n builds counts by (maxdrop, descent mask); every (k, S) query
  // reads from it.
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<std::uint64_t>> table(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::uint64_t>(1u << n, 0));
    enumerate_restricted_signed(n, n, [&](std::span<const int> w) {
      ++table[static_cast<std::size_t>(stat::max_drop_b(w))]
             [stat::descent_mask_b(w)];
    });
    for (int k = 0; k <= n; ++k) {
      IntPolynomial poly = restricted_poly_brute(Family::B, n, k);
      IntPolynomial shifted;  // poly evaluated at x+1
      IntPolynomial x_plus_1 = IntPolynomial::from_ints({1, 1});
      for (std::size_t d = 0; d < poly.coeffs().size(); ++d)
        shifted += IntPolynomial::constant(poly.coeff(d)) * x_plus_1.pow(d);
      IntPolynomial rhs;
      for (unsigned want = 0; want < (1u << n); ++want) {
        std::uint64_t count = 0;
        for (int md = 0; md <= k && md <= n; ++md)
          for (unsigned mask = 0; mask < (1u << n); ++mask)
            if ((mask & want) == want)
              count += table[static_cast<std::size_t>(md)][mask];
        rhs += IntPolynomial::monomial(BigInt(static_cast<long long>(count)),
                                       static_cast<std::size_t>(
                                           std::popcount(want)));
      }
      CHECK(shifted == rhs);
    }
  }
}

TEST_CASE("split map on the worked example") {
  SignedPermutation p({-6, 2, -1, -3, 8, 7, 5, 4});
  DescentSet s(8, {0, 2, 6, 7});
  FSplit split = bijection_f(p, 5, s);
  CHECK(split.alpha == SignedPermutation({-4, 2, -1, -3, 5}));
  CHECK(split.tail_set == std::vector<int>{4, 5, 7});
  CHECK(bijection_g(split.alpha, split.tail_set, 8, 5) == p);
}

TEST_CASE("split map with an empty set keeps everything but the last letter") {
  SignedPermutation p({-3, 1, 4, 2, 5});
  FSplit split = bijection_f(p, 3, DescentSet(5, {}));
  CHECK(split.tail_set == std::vector<int>{5});
  CHECK(split.alpha == signed_standardize(SignedWord({-3, 1, 4, 2})));
}

TEST_CASE("merge map on the worked example") {
  SignedPermutation p({-3, 1, -4, 2, 5});
  SignedPermutation merged = bijection_g(p, {4, 5, 7}, 8, 4);
  CHECK(merged == SignedPermutation({-3, 1, -6, 2, 8, 7, 5, 4}));
  // Applying the split with the induced set recovers the pair.
  DescentSet s(8, {2, 6, 7});  // T = {2} plus the forced tail [6, 7]
  FSplit split = bijection_f(merged, 4, s);
  CHECK(split.alpha == p);
  CHECK(split.tail_set == std::vector<int>{4, 5, 7});
}

TEST_CASE("merge with a singleton appends the new maximum") {
  SignedPermutation p({-2, 1, 3});
  CHECK(bijection_g(p, {4}, 4, 2) == SignedPermutation({-2, 1, 3, 4}));
}

TEST_CASE("split and merge preconditions") {
  SignedPermutation p({-3, 4, -1, -5, 2});  // maxdrop 4
  CHECK_THROWS_AS(bijection_f(p, 5, DescentSet(4, {})), DomainError);
  CHECK_THROWS_AS(bijection_f(p, 3, DescentSet(5, {})), DomainError);  // md > k
  CHECK_THROWS_AS(bijection_f(p, 5, DescentSet(5, {1})), DomainError);  // not a descent
  CHECK_THROWS_AS(bijection_f(p, 7, DescentSet(5, {0})), DomainError);  // k >= n
  CHECK_NOTHROW(bijection_f(p, 4, DescentSet(5, {0, 2, 3})));

  SignedPermutation q({-2, 1});
  CHECK_THROWS_AS(bijection_g(q, {3}, 5, 2), DomainError);   // size mismatch
  CHECK_THROWS_AS(bijection_g(q, {1}, 3, 1), DomainError);   // below n-k
  CHECK_THROWS_AS(bijection_g(q, {4}, 3, 1), DomainError);   // above n
  CHECK_THROWS_AS(bijection_g(q, {3, 3}, 4, 3), DomainError);  // repeated value
  CHECK_THROWS_AS(bijection_g(SignedPermutation({1, -2}), {3}, 3, 1),
                  DomainError);  // maxdrop 2 > k
}

TEST_CASE("split structure and inverse property, exhaustively to n = 4") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (const SignedPermutation& p : collect_bnk(n, k)) {
        for (const auto& members : subsets_of(descent_set(p).members())) {
          DescentSet s(n, members);
          int i = tail_run(s);
          FSplit split = bijection_f(p, k, s);
          CHECK(static_cast<int>(split.tail_set.size()) == i + 1);
          for (int x : split.tail_set) {
            CHECK(x >= n - k);
            CHECK(x <= n);
          }
          CHECK(max_drop(split.alpha) <= k);
          // Descents of alpha still contain the clipped set.
          DescentSet alpha_descents = descent_set(split.alpha);
          for (int m : members)
            if (m <= n - i - 2) CHECK(alpha_descents.contains(m));
          CHECK(bijection_g(split.alpha, split.tail_set, n, k) == p);
        }
      }
}

TEST_CASE("merge then split is the identity, exhaustively to n = 4") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (int i = 0; i <= k; ++i) {
        int m = n - i - 1;
        // i+1 element subsets of [max(1, n-k), n].
        std::vector<int> pool;
        for (int v = std::max(1, n - k); v <= n; ++v) pool.push_back(v);
        for (const auto& x : subsets_of(pool)) {
          if (static_cast<int>(x.size()) != i + 1) continue;
          for (const SignedPermutation& p : collect_bnk(m, std::min(k, m))) {
            if (max_drop(p) > k) continue;
            SignedPermutation merged = bijection_g(p, x, n, k);
            for (const auto& t_members : subsets_of(descent_set(p).members())) {
              std::vector<int> s_members = t_members;
              for (int pos = n - i; pos <= n - 1; ++pos)
                s_members.push_back(pos);
              FSplit split = bijection_f(merged, k, DescentSet(n, s_members));
              CHECK(split.alpha == p);
              CHECK(split.tail_set == x);
            }
          }
        }
      }
}
