#include "hyperop/natural.hpp"

#include <limits>

namespace hyperop {

std::uint64_t bit_length(const Natural& n) {
  if (n.is_zero()) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(n)) + 1;
}

bool fits_u64(const Natural& n) {
  return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

Natural pow_u64(const Natural& n, std::uint64_t e) {
  Natural result = 1;
  Natural base = n;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw DomainError("not a natural number: empty string");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw DomainError("not a natural number: '" + text + "'");
  }
  return Natural(text);
}

void require_nonnegative(const Natural& n, const char* context) {
  if (n < 0) throw DomainError(std::string(context) + ": negative operand");
}

}  // namespace hyperop
