#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperop {

// The working universe: arbitrary-precision nonnegative integers. cpp_int is
// signed under the hood; public entry points reject negative inputs and no
// operation in this library produces one.
using Natural = boost::multiprecision::cpp_int;

// Hyperoperator rank: 0 = addition, 1 = multiplication, 2 = exponentiation,
// 3 = tetration, and so on upward.
using Rank = unsigned;

// Input outside an operation's domain. The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Number of significant bits; 0 for n = 0.
std::uint64_t bit_length(const Natural& n);

bool fits_u64(const Natural& n);

// n^e by binary exponentiation. Unbudgeted; callers guard result size.
Natural pow_u64(const Natural& n, std::uint64_t e);

// Strict decimal parse: digits only, no signs, no blanks.
Natural parse_natural(const std::string& text);

void require_nonnegative(const Natural& n, const char* context);

}  // namespace hyperop
