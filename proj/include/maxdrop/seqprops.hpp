#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "maxdrop/bigint.hpp"

namespace maxdrop {

// Outcome of a shape predicate on a coefficient sequence. When the property
// fails, `witness` holds the indices demonstrating the failure (one index for
// unimodality/log-concavity, the mismatched pair for symmetry).
struct SequenceVerdict {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;  // human-readable account of the failure, empty on success

  bool operator==(const SequenceVerdict& rhs) const {
    return holds == rhs.holds && witness == rhs.witness;
  }
};

// a_i == a_{n-i} for all i; reports the first mismatched pair.
SequenceVerdict is_symmetric(std::span<const BigInt> c);

// Non-strict rise to some peak, then non-strict fall; reports the first
// index that rises again after a strict fall.
SequenceVerdict is_unimodal(std::span<const BigInt> c);

// a_i^2 >= a_{i-1} * a_{i+1} for all interior i; reports the first violating
// index.
SequenceVerdict is_log_concave(std::span<const BigInt> c);

// Every interior index violating log-concavity, in order.
std::vector<std::size_t> log_concavity_violations(std::span<const BigInt> c);

}  // namespace maxdrop
