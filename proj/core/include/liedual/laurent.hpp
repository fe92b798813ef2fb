#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "liedual/scalar.hpp"

namespace liedual {

/// Coefficient domain: ordinary polynomials (exponents >= 0) or Laurent
/// polynomials (any integer exponent).
enum class Domain { Poly, Laurent };

const char* domain_name(Domain d);
Domain domain_from_name(const std::string& name);

/// Sparse exact polynomial or Laurent polynomial in x. Zero coefficients are
/// pruned eagerly, so structural equality is mathematical equality.
class LaurentElement {
 public:
  explicit LaurentElement(Domain domain) : domain_(domain) {}

  static LaurentElement monomial(Domain domain, std::int64_t exponent,
                                 const Scalar& coeff = Scalar(1));

  Domain domain() const { return domain_; }
  const std::map<std::int64_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^exponent (0 when absent).
  Scalar coeff(std::int64_t exponent) const;

  /// Accumulates c * x^exponent. Enforces the domain's exponent range.
  void add_term(std::int64_t exponent, const Scalar& c);

  LaurentElement& operator+=(const LaurentElement& rhs);
  LaurentElement& operator-=(const LaurentElement& rhs);
  LaurentElement& operator*=(const Scalar& s);
  LaurentElement operator-() const;

  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) {
    a += b;
    return a;
  }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) {
    a -= b;
    return a;
  }
  friend LaurentElement operator*(LaurentElement a, const Scalar& s) {
    a *= s;
    return a;
  }
  friend LaurentElement operator*(const Scalar& s, LaurentElement a) {
    a *= s;
    return a;
  }

  bool operator==(const LaurentElement&) const = default;

 private:
  Domain domain_;
  std::map<std::int64_t, Scalar> terms_;
};

/// Cauchy product. Both factors must share a domain.
LaurentElement multiply(const LaurentElement& a, const LaurentElement& b);

/// d/dx: x^n -> n x^(n-1), extended linearly. Poly stays Poly (the constant
/// term vanishes).
LaurentElement derive(const LaurentElement& a);

/// Human-readable form, e.g. "x^2 - 1/2*x^-1".
std::string to_string(const LaurentElement& a);

}  // namespace liedual
