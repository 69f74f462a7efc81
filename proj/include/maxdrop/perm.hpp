#pragma once

#include <functional>
#include <span>
#include <vector>

#include "maxdrop/error.hpp"

namespace maxdrop {

// Permutation of [n] = {1, ..., n} in one-line notation. Positions are
// 1-based; the empty permutation (n = 0) is allowed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  // 1-based access.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  bool is_identity() const;

  bool operator==(const Permutation& rhs) const = default;

 private:
  std::vector<int> values_;
};

// Signed permutation: a word of nonzero integers whose absolute values form
// a permutation of [n]. The implicit value at position 0 is 0, which is what
// makes position 0 a possible descent.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> values);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  Permutation abs() const;
  bool is_identity() const;

  bool operator==(const SignedPermutation& rhs) const = default;

 private:
  std::vector<int> values_;
};

// Word of nonzero integers with pairwise distinct absolute values (the
// absolute values need not be 1..n). Signed permutations embed as the words
// supported on [n].
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<int> values);
  explicit SignedWord(const SignedPermutation& p) : values_(p.values()) {}

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  // The set of absolute values, sorted ascending.
  std::vector<int> support() const;

  bool operator==(const SignedWord& rhs) const = default;

 private:
  std::vector<int> values_;
};

// Subset of {0, 1, ..., n-1} with the ambient length n attached.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, std::vector<int> members);

  int ambient() const { return n_; }
  const std::vector<int>& members() const { return members_; }  // sorted
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int i) const;
  bool subset_of(const DescentSet& other) const;

  // "{0,2,3}"
  std::string to_string() const;

  bool operator==(const DescentSet& rhs) const = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

// Raw statistics on one-line words; positions are 1-based within the span.
// These are the single source of truth for the descent/drop definitions and
// are kept inline for the exhaustive-enumeration loops.
namespace stat {

// Descents of a plain word: positions i in [1, n-1] with w(i) > w(i+1).
inline int descent_count_a(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) ++count;
  return count;
}

// Descents of a signed word, with the convention w(0) = 0: positions i in
// [0, n-1] with w(i) > w(i+1). Position 0 descends exactly when w(1) < 0.
inline int descent_count_b(std::span<const int> w) {
  int count = 0;
  int prev = 0;
  for (int v : w) {
    if (prev > v) ++count;
    prev = v;
  }
  return count;
}

// Bit i set iff i is a descent (type B convention). Requires n <= 31.
inline unsigned descent_mask_b(std::span<const int> w) {
  unsigned mask = 0;
  int prev = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (prev > w[i]) mask |= 1u << i;
    prev = w[i];
  }
  return mask;
}

// max(i - w(i)) over all positions; 0 at the identity.
inline int max_drop_a(std::span<const int> w) {
  int best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int drop = static_cast<int>(i) + 1 - w[i];
    if (drop > best) best = drop;
  }
  return best;
}

// Drop size at position i is min(i - w(i), i) when w(i) < i, i.e. i - w(i)
// for a positive letter below its position and i for any negative letter.
// Returns the largest drop size, 0 when there are no drops.
inline int max_drop_b(std::span<const int> w) {
  int best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    int drop = w[i] < 0 ? pos : pos - w[i];
    if (drop > best) best = drop;
  }
  return best;
}

}  // namespace stat

DescentSet descent_set(const Permutation& p);
DescentSet descent_set(const SignedPermutation& p);
DescentSet descent_set(const SignedWord& w);
int descent_count(const Permutation& p);
int descent_count(const SignedPermutation& p);
int max_drop(const Permutation& p);
int max_drop(const SignedPermutation& p);

// One left-to-right bubble sweep: at each position with a descent, apply the
// corresponding generator. The plain version sweeps adjacent transpositions
// s_1..s_{n-1}; the signed version starts with the sign step s_0 (negate the
// first letter when position 0 descends).
Permutation bubble_pass(const Permutation& p);
SignedWord bubble_pass(const SignedWord& w);
SignedPermutation bubble_pass(const SignedPermutation& p);

// Same map computed by the recursive split: with j the unique position
// maximizing (|w(1)|, w(2), ..., w(n)), the word L w(j) R maps to
// (recurse on L) R |w(j)|.
SignedWord bubble_pass_recursive(const SignedWord& w);
SignedPermutation bubble_pass_recursive(const SignedPermutation& p);

// Number of bubble sweeps needed to reach the identity, computed by
// iterating the sweep (not delegated to max_drop, so their equality stays a
// testable fact).
int bubble_sort_complexity(const Permutation& p);
int bubble_sort_complexity(const SignedPermutation& p);

// Order-isomorphic relabeling of a word of distinct positive integers
// onto [n].
Permutation standardize(const SignedWord& w);
// Standardizes the absolute values and restores each letter's sign;
// preserves the signed descent set.
SignedPermutation signed_standardize(const SignedWord& w);
// Inverse of signed_standardize onto the given support (set of distinct
// positive integers, |support| = p.size()).
SignedWord signed_standardize_inverse(std::vector<int> support,
                                      const SignedPermutation& p);

// Largest i >= 0 with [n-i, n-1] contained in the set; 0 when n-1 is absent.
int tail_run(const DescentSet& s);

inline constexpr int kEnumerationCap = 10;

// Enumerates, in lexicographic order of the one-line notation under ordinary
// integer comparison (-n < ... < -1 < 1 < ... < n), every signed permutation
// of [n] whose maximum drop is at most k. Signals ResourceLimitError when n
// exceeds the cap.
void enumerate_restricted_signed(
    int n, int k, const std::function<void(std::span<const int>)>& visit,
    int cap = kEnumerationCap);

// Plain analogue over permutations of [n] with max_drop_a at most k.
void enumerate_restricted_plain(
    int n, int k, const std::function<void(std::span<const int>)>& visit,
    int cap = kEnumerationCap);

}  // namespace maxdrop
