#include "maxdrop/descent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "maxdrop/error.hpp"

namespace maxdrop {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  static std::mutex mu;
  static std::vector<std::vector<BigInt>> pascal;  // pascal[n][k]
  std::scoped_lock lock(mu);
  while (pascal.size() <= n) {
    std::size_t m = pascal.size();
    std::vector<BigInt> row(m + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t j = 1; j < m; ++j)
      row[j] = pascal[m - 1][j - 1] + pascal[m - 1][j];
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

BigInt eulerian_number(Family f, int n, int k) {
  if (n < 0) throw DomainError("eulerian_number requires n >= 0");
  if (k < 0) return 0;
  BigInt total;
  for (int i = 0; i <= k; ++i) {
    BigInt c = binomial(static_cast<unsigned>(n) + 1, static_cast<unsigned>(i));
    if (c.is_zero()) break;
    long long base = f == Family::A ? (k + 1 - i) : (2 * k + 1 - 2 * i);
    BigInt term = c * BigInt::pow(base, static_cast<unsigned long>(n));
    if (i % 2) term = -term;
    total += term;
  }
  return total;
}

IntPolynomial eulerian_poly(Family f, int n) {
  if (n < 0) throw DomainError("eulerian_poly requires n >= 0");
  int top = f == Family::A ? std::max(n - 1, 0) : n;
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) coeffs.push_back(eulerian_number(f, n, k));
  return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Route 1: exhaustive enumeration.
//
// One full-group pass per (family, n) bins every element by (max drop,
// descent count); every k is then answered from the cached table. Counts fit
// in 64 bits for any n within the enumeration cap.

namespace {

using DropDescTable = std::vector<std::vector<std::uint64_t>>;  // [md][des]

const DropDescTable& drop_descent_table(Family f, int n, int cap) {
  if (n < 0) throw DomainError("restricted polynomial requires n >= 0");
  if (n > cap)
    throw ResourceLimitError("instance too large: n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
  static std::mutex mu;
  static std::map<std::pair<int, int>, DropDescTable> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(f == Family::A ? 0 : 1, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  DropDescTable table(static_cast<std::size_t>(n) + 1,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  if (n == 0) {
    table[0][0] = 1;  // the empty permutation
  } else if (f == Family::A) {
    do {
      ++table[static_cast<std::size_t>(stat::max_drop_a(perm))]
             [static_cast<std::size_t>(stat::descent_count_a(perm))];
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> word(static_cast<std::size_t>(n));
    do {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i)
          word[static_cast<std::size_t>(i)] =
              (mask >> i) & 1u ? -perm[static_cast<std::size_t>(i)]
                               : perm[static_cast<std::size_t>(i)];
        ++table[static_cast<std::size_t>(stat::max_drop_b(word))]
               [static_cast<std::size_t>(stat::descent_count_b(word))];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

IntPolynomial restricted_poly_brute(Family f, int n, int k, int cap) {
  if (k < 0) throw DomainError("restricted polynomial requires k >= 0");
  const DropDescTable& table = drop_descent_table(f, n, cap);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int md = 0; md <= std::min(k, n); ++md)
    for (int des = 0; des <= n; ++des) {
      std::uint64_t c = table[static_cast<std::size_t>(md)]
                             [static_cast<std::size_t>(des)];
      if (c)
        coeffs[static_cast<std::size_t>(des)] +=
            BigInt(static_cast<long long>(c));
    }
  return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Route 2: recurrence.

IntPolynomial restricted_poly_recurrence(Family f, int n, int k) {
  if (n < 0 || k < 0)
    throw DomainError("restricted polynomial requires n >= 0, k >= 0");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, IntPolynomial> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_tuple(f == Family::A ? 0 : 1, k, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // (x-1)^{j-1} powers, computed once per k.
  IntPolynomial xm1 = IntPolynomial::variable() - IntPolynomial::one();
  std::vector<IntPolynomial> xm1_pow(static_cast<std::size_t>(k) + 1);
  xm1_pow[0] = IntPolynomial::one();
  for (int j = 1; j <= k; ++j)
    xm1_pow[static_cast<std::size_t>(j)] =
        xm1_pow[static_cast<std::size_t>(j - 1)] * xm1;

  std::vector<IntPolynomial> row;  // row[m] holds the length-m polynomial
  row.reserve(static_cast<std::size_t>(std::max(n, k)) + 1);
  for (int m = 0; m <= std::min(n, k); ++m) row.push_back(eulerian_poly(f, m));
  for (int m = k + 1; m <= n; ++m) {
    IntPolynomial acc;
    for (int j = 1; j <= k + 1 && j <= m; ++j)
      acc += IntPolynomial::constant(
                 binomial(static_cast<unsigned>(k) + 1, static_cast<unsigned>(j))) *
             xm1_pow[static_cast<std::size_t>(j - 1)] *
             row[static_cast<std::size_t>(m - j)];
    row.push_back(std::move(acc));
  }
  for (int m = 0; m <= n; ++m)
    cache.emplace(std::make_tuple(f == Family::A ? 0 : 1, k, m),
                  row[static_cast<std::size_t>(m)]);
  return row[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Route 3: kernel polynomial and stride extraction.

IntPolynomial recurrence_kernel(Family f, int k) {
  if (k < 0) throw DomainError("recurrence_kernel requires k >= 0");
  const unsigned period = static_cast<unsigned>(k) + 1;
  IntPolynomial u_period_minus_1 =
      IntPolynomial::monomial(1, period) - IntPolynomial::one();
  LaurentPolynomial acc;
  for (int j = 0; j <= k; ++j) {
    IntPolynomial head = eulerian_poly(f, k - j).substitute_power(period) *
                         u_period_minus_1.pow(static_cast<unsigned long>(j));
    LaurentPolynomial tail;  // sum_{i=j}^{k} C(i, j) u^{-i}
    for (int i = j; i <= k; ++i)
      tail += LaurentPolynomial::term(
          binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)), -i);
    acc += LaurentPolynomial::from_polynomial(head) * tail;
  }
  return acc.to_polynomial();
}

IntPolynomial restricted_poly_explicit(Family f, int n, int k) {
  if (n < 0 || k < 0)
    throw DomainError("restricted polynomial requires n >= 0, k >= 0");
  if (n < k) return eulerian_poly(f, n);
  IntPolynomial kernel = recurrence_kernel(f, k);
  // (1 - u^{k+1}) / (1 - u) = 1 + u + ... + u^k.
  IntPolynomial ladder(std::vector<BigInt>(static_cast<std::size_t>(k) + 1, 1));
  IntPolynomial gamma =
      kernel * ladder.pow(static_cast<unsigned long>(n - k));
  return gamma.extract_stride(static_cast<unsigned>(k) + 1);
}

// ---------------------------------------------------------------------------
// Route 4: truncated rational generating function.

std::vector<IntPolynomial> restricted_poly_series(Family f, int k, int up_to_n) {
  if (k < 0 || up_to_n < 0)
    throw DomainError("series route requires k >= 0, up_to_n >= 0");
  const std::size_t order = static_cast<std::size_t>(up_to_n);
  IntPolynomial xm1 = IntPolynomial::variable() - IntPolynomial::one();

  BivariateSeries den(order);
  den.set_coeff(0, IntPolynomial::one());
  for (int i = 1; i <= k + 1 && static_cast<std::size_t>(i) <= order; ++i)
    den.set_coeff(static_cast<std::size_t>(i),
                  -(IntPolynomial::constant(binomial(static_cast<unsigned>(k) + 1,
                                                     static_cast<unsigned>(i))) *
                    xm1.pow(static_cast<unsigned long>(i - 1))));

  BivariateSeries num(order);
  num.set_coeff(0, IntPolynomial::one());
  for (int t = 1; t <= k && static_cast<std::size_t>(t) <= order; ++t) {
    IntPolynomial v = eulerian_poly(f, t);
    for (int i = 1; i <= t; ++i)
      v -= IntPolynomial::constant(binomial(static_cast<unsigned>(k) + 1,
                                            static_cast<unsigned>(i))) *
           xm1.pow(static_cast<unsigned long>(i - 1)) * eulerian_poly(f, t - i);
    num.set_coeff(static_cast<std::size_t>(t), std::move(v));
  }

  BivariateSeries q = num / den;
  std::vector<IntPolynomial> out;
  out.reserve(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out.push_back(q.coeff(i));
  return out;
}

// ---------------------------------------------------------------------------
// Set-restricted counts.

namespace {

void check_superset_args(int n, int k, const DescentSet& s) {
  if (n < 0 || k < 0) throw DomainError("counts require n >= 0, k >= 0");
  if (s.ambient() != n)
    throw DomainError("descent set ambient length " +
                      std::to_string(s.ambient()) + " does not match n = " +
                      std::to_string(n));
}

}  // namespace

BigInt restricted_count_superset_brute(int n, int k, const DescentSet& s,
                                       int cap) {
  check_superset_args(n, k, s);
  unsigned want = 0;
  for (int i : s.members()) want |= 1u << i;
  std::uint64_t count = 0;
  enumerate_restricted_signed(
      n, k,
      [&](std::span<const int> w) {
        if ((stat::descent_mask_b(w) & want) == want) ++count;
      },
      cap);
  return BigInt(static_cast<long long>(count));
}

BigInt restricted_count_superset_product(int n, int k, const DescentSet& s,
                                         int cap) {
  check_superset_args(n, k, s);
  if (k > n - 1)
    throw DomainError("product route requires k <= n-1");
  BigInt factor = 1;
  int cur_n = n;
  std::vector<int> members = s.members();
  while (cur_n > k) {
    DescentSet cur(cur_n, members);
    int i = tail_run(cur);
    // A forced decreasing tail longer than k+1 admits no member at all.
    if (i > k) return 0;
    factor *= binomial(static_cast<unsigned>(k) + 1, static_cast<unsigned>(i) + 1);
    cur_n = cur_n - i - 1;
    // S ∩ [0, cur_n - 1] for the shorter word.
    std::vector<int> kept;
    for (int m : members)
      if (m <= cur_n - 1) kept.push_back(m);
    members = std::move(kept);
  }
  // Remaining instance involves every signed permutation of length cur_n.
  return factor *
         restricted_count_superset_brute(cur_n, k, DescentSet(cur_n, members),
                                         cap);
}

BigInt restricted_count_superset(int n, int k, const DescentSet& s, int cap) {
  BigInt brute = restricted_count_superset_brute(n, k, s, cap);
  if (k <= n - 1) {
    BigInt product = restricted_count_superset_product(n, k, s, cap);
    if (product != brute)
      throw DomainError("count routes disagree: brute " + brute.to_string() +
                        " vs product " + product.to_string());
  }
  return brute;
}

// ---------------------------------------------------------------------------
// The split bijection and its inverse.

FSplit bijection_f(const SignedPermutation& p, int k, const DescentSet& s) {
  const int n = p.size();
  if (s.ambient() != n)
    throw DomainError("descent set ambient length does not match the permutation");
  if (k >= n)
    throw DomainError("split requires k < n (got k = " + std::to_string(k) +
                      ", n = " + std::to_string(n) + ")");
  if (max_drop(p) > k)
    throw DomainError("maximum drop " + std::to_string(max_drop(p)) +
                      " exceeds k = " + std::to_string(k));
  if (!s.subset_of(descent_set(p)))
    throw DomainError("set " + s.to_string() +
                      " is not contained in the descent set " +
                      descent_set(p).to_string());
  const int i = tail_run(s);
  std::vector<int> head(p.values().begin(), p.values().end() - (i + 1));
  std::vector<int> tail(p.values().end() - (i + 1), p.values().end());
  std::sort(tail.begin(), tail.end());
  return FSplit{signed_standardize(SignedWord(std::move(head))),
                std::move(tail)};
}

SignedPermutation bijection_g(const SignedPermutation& p,
                              const std::vector<int>& tail_set, int n, int k) {
  if (k < 0 || n < 0) throw DomainError("split inverse requires n, k >= 0");
  std::vector<int> tail = tail_set;
  std::sort(tail.begin(), tail.end());
  if (std::adjacent_find(tail.begin(), tail.end()) != tail.end())
    throw DomainError("tail set contains a repeated value");
  if (p.size() + static_cast<int>(tail.size()) != n)
    throw DomainError("length " + std::to_string(p.size()) + " plus tail size " +
                      std::to_string(tail.size()) + " must equal n = " +
                      std::to_string(n));
  for (int x : tail)
    if (x < std::max(1, n - k) || x > n)
      throw DomainError("tail value " + std::to_string(x) + " outside [" +
                        std::to_string(n - k) + ", " + std::to_string(n) + "]");
  if (max_drop(p) > k)
    throw DomainError("maximum drop " + std::to_string(max_drop(p)) +
                      " exceeds k = " + std::to_string(k));

  std::vector<int> support;
  support.reserve(static_cast<std::size_t>(n) - tail.size());
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(tail.begin(), tail.end(), v)) support.push_back(v);

  std::vector<int> out = signed_standardize_inverse(support, p).values();
  out.insert(out.end(), tail.rbegin(), tail.rend());
  return SignedPermutation(std::move(out));
}

}  // namespace maxdrop
