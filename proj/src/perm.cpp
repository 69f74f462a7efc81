#include "maxdrop/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <string>

namespace maxdrop {

namespace {

std::string word_text(std::span<const int> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

void check_distinct_abs(const std::vector<int>& values, bool require_range) {
  const int n = static_cast<int>(values.size());
  std::vector<int> seen;
  seen.reserve(values.size());
  for (int v : values) {
    if (v == 0) throw DomainError("zero entry in '" + word_text(values) + "'");
    int a = std::abs(v);
    if (require_range && a > n)
      throw DomainError("entry " + std::to_string(v) + " out of range in '" +
                        word_text(values) + "'");
    seen.push_back(a);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw DomainError("duplicate absolute value in '" + word_text(values) + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Domain types

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  for (int v : values_)
    if (v < 1 || v > n)
      throw DomainError("entry " + std::to_string(v) +
                        " out of range for a permutation of length " +
                        std::to_string(n));
  check_distinct_abs(values_, true);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

SignedPermutation::SignedPermutation(std::vector<int> values)
    : values_(std::move(values)) {
  check_distinct_abs(values_, true);
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.values_ = Permutation::identity(n).values();
  return p;
}

Permutation SignedPermutation::abs() const {
  std::vector<int> v;
  v.reserve(values_.size());
  for (int x : values_) v.push_back(std::abs(x));
  return Permutation(std::move(v));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

SignedWord::SignedWord(std::vector<int> values) : values_(std::move(values)) {
  check_distinct_abs(values_, false);
}

std::vector<int> SignedWord::support() const {
  std::vector<int> s;
  s.reserve(values_.size());
  for (int v : values_) s.push_back(std::abs(v));
  std::sort(s.begin(), s.end());
  return s;
}

DescentSet::DescentSet(int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw DomainError("duplicate descent position");
  for (int i : members_)
    if (i < 0 || i >= n_)
      throw DomainError("descent position " + std::to_string(i) +
                        " outside [0, " + std::to_string(n_ - 1) + "]");
}

bool DescentSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool DescentSet::subset_of(const DescentSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string DescentSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  out += "}";
  return out;
}

// ---------------------------------------------------------------------------
// Statistics

namespace {

DescentSet descent_set_a_impl(std::span<const int> w) {
  std::vector<int> m;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) m.push_back(static_cast<int>(i));
  return DescentSet(static_cast<int>(w.size()), std::move(m));
}

DescentSet descent_set_b_impl(std::span<const int> w) {
  std::vector<int> m;
  int prev = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (prev > w[i]) m.push_back(static_cast<int>(i));
    prev = w[i];
  }
  return DescentSet(static_cast<int>(w.size()), std::move(m));
}

}  // namespace

DescentSet descent_set(const Permutation& p) {
  return descent_set_a_impl(p.values());
}
DescentSet descent_set(const SignedPermutation& p) {
  return descent_set_b_impl(p.values());
}
DescentSet descent_set(const SignedWord& w) {
  return descent_set_b_impl(w.values());
}
int descent_count(const Permutation& p) {
  return stat::descent_count_a(p.values());
}
int descent_count(const SignedPermutation& p) {
  return stat::descent_count_b(p.values());
}
int max_drop(const Permutation& p) { return stat::max_drop_a(p.values()); }
int max_drop(const SignedPermutation& p) { return stat::max_drop_b(p.values()); }

// ---------------------------------------------------------------------------
// Bubble sweeps

namespace {

// Sweep over a raw word; with sign_step, position 0 is treated as a descent
// when the first letter is negative.
std::vector<int> sweep(std::vector<int> w, bool sign_step) {
  if (w.empty()) return w;
  if (sign_step && w[0] < 0) w[0] = -w[0];
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) std::swap(w[i], w[i + 1]);
  return w;
}

void recursive_sweep(std::span<const int> w, std::vector<int>& out) {
  if (w.empty()) return;
  // sigma = (|w(1)|, w(2), ..., w(n)); its maximum is positive and unique
  // because absolute values are distinct.
  std::size_t j = 0;
  int best = std::abs(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > best) {
      best = w[i];
      j = i;
    }
  }
#ifndef NDEBUG
  int hits = std::abs(w[0]) == best ? 1 : 0;
  for (std::size_t i = 1; i < w.size(); ++i) hits += w[i] == best ? 1 : 0;
  assert(hits == 1 && "argmax of (|w1|, w2, ..., wn) must be unique");
#endif
  recursive_sweep(w.first(j), out);
  for (std::size_t i = j + 1; i < w.size(); ++i) out.push_back(w[i]);
  out.push_back(best);
}

}  // namespace

Permutation bubble_pass(const Permutation& p) {
  return Permutation(sweep(p.values(), false));
}

SignedWord bubble_pass(const SignedWord& w) {
  return SignedWord(sweep(w.values(), true));
}

SignedPermutation bubble_pass(const SignedPermutation& p) {
  return SignedPermutation(sweep(p.values(), true));
}

SignedWord bubble_pass_recursive(const SignedWord& w) {
  std::vector<int> out;
  out.reserve(w.values().size());
  recursive_sweep(w.values(), out);
  return SignedWord(std::move(out));
}

SignedPermutation bubble_pass_recursive(const SignedPermutation& p) {
  std::vector<int> out;
  out.reserve(p.values().size());
  recursive_sweep(p.values(), out);
  return SignedPermutation(std::move(out));
}

int bubble_sort_complexity(const Permutation& p) {
  int count = 0;
  Permutation cur = p;
  while (!cur.is_identity()) {
    cur = bubble_pass(cur);
    ++count;
  }
  return count;
}

int bubble_sort_complexity(const SignedPermutation& p) {
  int count = 0;
  SignedPermutation cur = p;
  while (!cur.is_identity()) {
    cur = bubble_pass(cur);
    ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Standardization

Permutation standardize(const SignedWord& w) {
  for (int v : w.values())
    if (v < 0)
      throw DomainError("standardize requires an all-positive word, got " +
                        std::to_string(v));
  std::vector<int> support = w.support();
  std::vector<int> out;
  out.reserve(support.size());
  for (int v : w.values()) {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    out.push_back(static_cast<int>(it - support.begin()) + 1);
  }
  return Permutation(std::move(out));
}

SignedPermutation signed_standardize(const SignedWord& w) {
  std::vector<int> support = w.support();
  std::vector<int> out;
  out.reserve(support.size());
  for (int v : w.values()) {
    auto it = std::lower_bound(support.begin(), support.end(), std::abs(v));
    int rank = static_cast<int>(it - support.begin()) + 1;
    out.push_back(v < 0 ? -rank : rank);
  }
  return SignedPermutation(std::move(out));
}

SignedWord signed_standardize_inverse(std::vector<int> support,
                                      const SignedPermutation& p) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw DomainError("support contains a repeated value");
  if (!support.empty() && support.front() < 1)
    throw DomainError("support must consist of positive integers");
  if (static_cast<int>(support.size()) != p.size())
    throw DomainError("support size " + std::to_string(support.size()) +
                      " does not match length " + std::to_string(p.size()));
  std::vector<int> out;
  out.reserve(support.size());
  for (int v : p.values()) {
    int c = support[static_cast<std::size_t>(std::abs(v)) - 1];
    out.push_back(v < 0 ? -c : c);
  }
  return SignedWord(std::move(out));
}

int tail_run(const DescentSet& s) {
  int i = 0;
  while (i < s.ambient() && s.contains(s.ambient() - 1 - i)) ++i;
  return i;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Depth-first generation in increasing value order. `used` is indexed by
// absolute value; a drop of size > k at the position being filled prunes the
// whole subtree.
void enumerate_signed_rec(int n, int k, int pos, std::vector<int>& word,
                          std::vector<bool>& used,
                          const std::function<void(std::span<const int>)>& visit) {
  if (pos > n) {
    visit(word);
    return;
  }
  for (int v = -n; v <= n; ++v) {
    if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
    int drop = v < 0 ? pos : (v < pos ? pos - v : 0);
    if (drop > k) continue;  // larger v only shrinks the drop
    used[static_cast<std::size_t>(std::abs(v))] = true;
    word.push_back(v);
    enumerate_signed_rec(n, k, pos + 1, word, used, visit);
    word.pop_back();
    used[static_cast<std::size_t>(std::abs(v))] = false;
  }
}

void enumerate_plain_rec(int n, int k, int pos, std::vector<int>& word,
                         std::vector<bool>& used,
                         const std::function<void(std::span<const int>)>& visit) {
  if (pos > n) {
    visit(word);
    return;
  }
  for (int v = std::max(1, pos - k); v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    word.push_back(v);
    enumerate_plain_rec(n, k, pos + 1, word, used, visit);
    word.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

void check_enumeration_args(int n, int k, int cap) {
  if (n < 0 || k < 0) throw DomainError("enumeration requires n >= 0, k >= 0");
  if (n > cap)
    throw ResourceLimitError("instance too large: n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
}

}  // namespace

void enumerate_restricted_signed(
    int n, int k, const std::function<void(std::span<const int>)>& visit,
    int cap) {
  check_enumeration_args(n, k, cap);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  enumerate_signed_rec(n, k, 1, word, used, visit);
}

void enumerate_restricted_plain(
    int n, int k, const std::function<void(std::span<const int>)>& visit,
    int cap) {
  check_enumeration_args(n, k, cap);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  enumerate_plain_rec(n, k, 1, word, used, visit);
}

}  // namespace maxdrop
