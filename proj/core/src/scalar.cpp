#include "liedual/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace liedual {

Scalar scalar_from_fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("scalar denominator must be nonzero");
  }
  return Scalar(num) / Scalar(den);
}

Scalar parse_scalar(const std::string& text) {
  auto parse_int = [](const std::string& s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("empty integer in scalar");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer in scalar: " + s);
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw std::invalid_argument("bad integer in scalar: " + s);
      }
    }
    return BigInt(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Scalar(parse_int(text));
  }
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  return scalar_from_fraction(num, den);
}

std::string scalar_str(const Scalar& s) { return s.str(); }

}  // namespace liedual
