#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxdrop/bigint.hpp"
#include "maxdrop/perm.hpp"

namespace maxdrop {

// Text formats shared by the CLI and the test suites. Parsers are strict and
// raise ParseError; invalid domain values found while parsing are reported as
// ParseError too (they are input mistakes, not library misuse).

// "-3,4,-1,-5,2" -> list of integers; optional '+' signs and spaces allowed.
std::vector<int> parse_int_list(std::string_view text);

// Same, but also accepts an optional surrounding {...} or [...].
std::vector<int> parse_braced_int_list(std::string_view text);

Permutation parse_permutation(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view text);
// n is the ambient length; accepts "0,2,6,7" or "{0,2,6,7}" or "{}".
DescentSet parse_descent_set(int n, std::string_view text);

// "[1, 32, 35, 4]" or "1,32,35,4" with arbitrarily large entries.
std::vector<BigInt> parse_bigint_list(std::string_view text);

std::string format_int_list(const std::vector<int>& values);
// "+5,-2,0,-1": explicit sign on positive entries (zero stays bare).
std::string format_signed_list(const std::vector<int>& values);

}  // namespace maxdrop
