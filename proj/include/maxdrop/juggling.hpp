#pragma once

#include <string>
#include <vector>

#include "maxdrop/perm.hpp"

namespace maxdrop {

// Periodic siteswap pattern: throw t_i at time i stays in the air t_i time
// units, the pattern repeating with period n. Validity means no two balls
// land at the same time, i.e. the residues (t_i + i) mod n are pairwise
// distinct; the number of balls is then the mean throw value.
class JugglingSequence {
 public:
  explicit JugglingSequence(std::vector<int> throws);

  int period() const { return static_cast<int>(throws_.size()); }
  const std::vector<int>& throws() const { return throws_; }
  int ball_count() const { return balls_; }

  bool operator==(const JugglingSequence& rhs) const = default;

 private:
  std::vector<int> throws_;
  int balls_ = 0;
};

// Siteswap pattern juggled with balls of two colors, encoded by signed
// throws. The absolute values must form a valid juggling sequence, and a
// ball keeps its color: each nonzero throw's sign must match the sign at the
// position where the ball is next thrown (position successor
// ((i + |t_i| - 1) mod n) + 1).
class ColoredJugglingSequence {
 public:
  explicit ColoredJugglingSequence(std::vector<int> throws);
  ColoredJugglingSequence(const JugglingSequence& plain);  // NOLINT: widening

  int period() const { return static_cast<int>(throws_.size()); }
  const std::vector<int>& throws() const { return throws_; }
  int ball_count() const { return balls_; }
  JugglingSequence abs() const;

  bool operator==(const ColoredJugglingSequence& rhs) const = default;

 private:
  std::vector<int> throws_;
  int balls_ = 0;
};

// Landing schedule after the juggler stops at the end of a period: bit i is
// 1 when a ball lands i time units later. Trailing zeros are trimmed, so the
// last entry of a nonempty state is 1.
using JugglingState = std::vector<int>;

JugglingState state(const JugglingSequence& t);
JugglingState state(const ColoredJugglingSequence& t);  // colors ignored

// Ground state for k balls: the k balls land in the first k slots.
bool is_ground_state(const JugglingSequence& t, int k);
bool is_ground_state(const ColoredJugglingSequence& t, int k);

// The order in which the first k balls thrown land once the juggler stops:
// following each chain of rethrows to its landing time n + tau(i). Requires
// the ground state for k balls and k <= period.
Permutation landing_permutation(const JugglingSequence& t, int k);
Permutation landing_permutation(const ColoredJugglingSequence& t, int k);

// Permutation -> juggling sequence via t_i = k - i + p(i). Defined whenever
// max_drop(p) <= k; the result juggles k balls from the ground state.
JugglingSequence to_juggling(const Permutation& p, int k);

// Inverse of to_juggling: p(i) = t_i + i - k. The input must juggle k balls
// from the ground state and the result must be a valid permutation.
Permutation from_juggling(const JugglingSequence& t, int k);

inline constexpr int kColoredFactorialCap = 6;

// Signed permutation -> 2-colored sequence: the plain image of |p| repeated
// k! times, with the signs of the first k letters of p coloring the k balls
// and every rethrow keeping its ball's color. The period is n * k!, so k is
// capped.
ColoredJugglingSequence to_colored_juggling(const SignedPermutation& p, int k,
                                            int cap = kColoredFactorialCap);

// Inverse: recovers the plain permutation from the first period of |T| and
// reads the k ball colors off the first k throws. T must have period n * k!
// with |T| n-periodic, juggle k balls and have the ground state.
SignedPermutation from_colored_juggling(const ColoredJugglingSequence& t,
                                        int n, int k);

enum class DiagramFormat { ascii, svg };
DiagramFormat parse_diagram_format(const std::string& token);

// Arc diagram of the pattern: time on the horizontal axis, one arc per
// throw from its throw time to its landing time. The two colors use two
// stroke styles. Deterministic output.
std::string render_diagram(const ColoredJugglingSequence& t, DiagramFormat format);

}  // namespace maxdrop
