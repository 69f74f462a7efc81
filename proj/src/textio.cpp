#include "maxdrop/textio.hpp"

#include <algorithm>
#include <cctype>

#include "maxdrop/error.hpp"

namespace maxdrop {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string_view strip_brackets(std::string_view s) {
  s = strip(s);
  if (s.size() >= 2 && ((s.front() == '{' && s.back() == '}') ||
                        (s.front() == '[' && s.back() == ']')))
    return strip(s.substr(1, s.size() - 2));
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  if (strip(s).empty()) return parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::string_view part = strip(s.substr(start, i - start));
      if (part.empty()) throw ParseError("empty entry in list");
      parts.push_back(part);
      start = i + 1;
    }
  }
  return parts;
}

long long parse_int(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body.size() > 18)
    throw ParseError("invalid integer '" + std::string(token) + "'");
  long long value = 0;
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid integer '" + std::string(token) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (std::string_view part : split_commas(strip(text)))
    out.push_back(static_cast<int>(parse_int(part)));
  return out;
}

std::vector<int> parse_braced_int_list(std::string_view text) {
  return parse_int_list(strip_brackets(text));
}

Permutation parse_permutation(std::string_view text) {
  try {
    return Permutation(parse_int_list(text));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid permutation: ") + e.what());
  }
}

SignedPermutation parse_signed_permutation(std::string_view text) {
  try {
    return SignedPermutation(parse_int_list(text));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid signed permutation: ") + e.what());
  }
}

DescentSet parse_descent_set(int n, std::string_view text) {
  try {
    return DescentSet(n, parse_braced_int_list(text));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid descent set: ") + e.what());
  }
}

std::vector<BigInt> parse_bigint_list(std::string_view text) {
  std::vector<BigInt> out;
  for (std::string_view part : split_commas(strip_brackets(text)))
    out.push_back(BigInt::from_string(part));
  return out;
}

std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_signed_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if (values[i] > 0) out += '+';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace maxdrop
