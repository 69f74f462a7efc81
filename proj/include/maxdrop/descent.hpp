#pragma once

#include <vector>

#include "maxdrop/bigint.hpp"
#include "maxdrop/perm.hpp"
#include "maxdrop/poly.hpp"

namespace maxdrop {

// Which descent statistic a query is about: plain permutations (A) or signed
// permutations (B).
enum class Family { A, B };

// Exact binomial coefficient, 0 outside the triangle.
BigInt binomial(unsigned n, unsigned k);

// Number of (signed) permutations of length n with exactly k descents,
// by the explicit alternating sums
//   A: sum_i (-1)^i C(n+1, i) (k+1-i)^n
//   B: sum_i (-1)^i C(n+1, i) (2k+1-2i)^n
// Both vanish beyond the top descent count (n-1 for A, n for B).
BigInt eulerian_number(Family f, int n, int k);

// Descent-count generating polynomial over the whole group: degree n-1 for
// family A (n >= 1), degree n for family B. Evaluates to n! resp. 2^n n!
// at 1.
IntPolynomial eulerian_poly(Family f, int n);

// --- The four routes to the maxdrop-restricted descent polynomial --------
//
// All four compute the same object: the generating polynomial of the descent
// count over permutations (family A) or signed permutations (family B) of
// length n whose maximum drop is at most k.

// Route 1: exhaustive enumeration with the statistics evaluated directly.
// The independent oracle for the other routes. Guarded by the enumeration
// cap.
IntPolynomial restricted_poly_brute(Family f, int n, int k,
                                    int cap = kEnumerationCap);

// Route 2: the order-(k+1) recurrence
//   D_{n,k}(x) = sum_{j=1}^{k+1} C(k+1, j) (x-1)^{j-1} D_{n-j,k}(x)
// with the full Eulerian polynomials as initial conditions for n <= k.
// Results are memoized per (family, k, n).
IntPolynomial restricted_poly_recurrence(Family f, int n, int k);

// The kernel polynomial of the closed-form route:
//   sum_{j=0}^{k} E_{k-j}(u^{k+1}) (u^{k+1}-1)^j sum_{i=j}^{k} C(i, j) u^{-i}
// where E is the family's Eulerian polynomial. Assembled in Laurent
// arithmetic; conversion back to a plain polynomial doubles as a structural
// check (any negative-degree residue means the assembly is wrong).
// Named "recurrence kernel" to keep it apart from the bubble operator.
IntPolynomial recurrence_kernel(Family f, int k);

// Route 3: multiply the kernel by (1 + u + ... + u^k)^(n-k) and keep every
// (k+1)-st coefficient. For n < k falls back to the Eulerian polynomial.
IntPolynomial restricted_poly_explicit(Family f, int n, int k);

// Route 4: expand the rational generating function
//   numerator 1 + sum_{t=1}^{k} (E_t(x) - sum_{i=1}^{t} C(k+1,i)(x-1)^{i-1}
//                                 E_{t-i}(x)) z^t
//   denominator 1 - sum_{i=1}^{k+1} C(k+1, i) z^i (x-1)^{i-1}
// as a truncated series; element n of the result is the degree-n
// coefficient.
std::vector<IntPolynomial> restricted_poly_series(Family f, int k, int up_to_n);

// --- Set-restricted counts and the underlying bijection ------------------

// Number of signed permutations of length n with maximum drop <= k whose
// descent set contains s, by direct enumeration.
BigInt restricted_count_superset_brute(int n, int k, const DescentSet& s,
                                       int cap = kEnumerationCap);

// Same count through the product identity
//   b_{n,k}(S) = b_{n-i-1,k}(S ∩ [0, n-i-2]) * C(k+1, i+1),  i = tail_run(S),
// applied while k <= n-1, with a brute-force base case once the whole group
// is involved. Requires k <= n-1 at the top level.
BigInt restricted_count_superset_product(int n, int k, const DescentSet& s,
                                         int cap = kEnumerationCap);

// Runs both routes (the product route whenever k <= n-1) and returns the
// agreed value; a mismatch raises DomainError.
BigInt restricted_count_superset(int n, int k, const DescentSet& s,
                                 int cap = kEnumerationCap);

// Split of a signed permutation into a shorter one plus the set of letters
// in its forced decreasing tail.
struct FSplit {
  SignedPermutation alpha;
  std::vector<int> tail_set;  // sorted ascending

  bool operator==(const FSplit& rhs) const = default;
};

// With i = tail_run(s): standardizes the first n-i-1 letters into alpha and
// collects the last i+1 letters (all positive, from [n-k, n]) into the tail
// set. Requires k < n, max_drop(p) <= k and s ⊆ descent_set(p).
FSplit bijection_f(const SignedPermutation& p, int k, const DescentSet& s);

// Inverse direction: maps p onto the support [n] \ tail_set and appends the
// tail set in decreasing order. Requires |p| + |tail_set| = n, the tail set
// inside [n-k, n], and max_drop(p) <= k.
SignedPermutation bijection_g(const SignedPermutation& p,
                              const std::vector<int>& tail_set, int n, int k);

}  // namespace maxdrop
