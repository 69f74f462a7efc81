#include "maxdrop/seqprops.hpp"

#include "maxdrop/error.hpp"

namespace maxdrop {

SequenceVerdict is_symmetric(std::span<const BigInt> c) {
  if (c.empty()) throw DomainError("empty coefficient sequence");
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i <= n / 2; ++i) {
    if (c[i] != c[n - i]) {
      return {false,
              {i, n - i},
              "a[" + std::to_string(i) + "] = " + c[i].to_string() +
                  " != a[" + std::to_string(n - i) + "] = " +
                  c[n - i].to_string()};
    }
  }
  return {};
}

SequenceVerdict is_unimodal(std::span<const BigInt> c) {
  if (c.empty()) throw DomainError("empty coefficient sequence");
  bool falling = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] > c[i - 1]) {
      if (falling) {
        return {false,
                {i},
                "a[" + std::to_string(i) + "] = " + c[i].to_string() +
                    " rises again after a fall"};
      }
    } else if (c[i] < c[i - 1]) {
      falling = true;
    }
  }
  return {};
}

SequenceVerdict is_log_concave(std::span<const BigInt> c) {
  if (c.empty()) throw DomainError("empty coefficient sequence");
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) {
      return {false,
              {i},
              c[i].to_string() + "^2 < " + c[i - 1].to_string() + "*" +
                  c[i + 1].to_string() + " at index " + std::to_string(i)};
    }
  }
  return {};
}

std::vector<std::size_t> log_concavity_violations(std::span<const BigInt> c) {
  if (c.empty()) throw DomainError("empty coefficient sequence");
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) out.push_back(i);
  return out;
}

}  // namespace maxdrop
