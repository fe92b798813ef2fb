#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "liedual/scalar.hpp"

namespace liedual {

/// Dense univariate polynomial over the rationals; coefficient i belongs to
/// the x^i term. Trailing zeros are trimmed, the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<Scalar> coeffs);
  explicit QPoly(std::vector<Scalar> coeffs);

  static QPoly constant(const Scalar& c);
  static QPoly monomial(std::size_t degree, const Scalar& coeff = Scalar(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Scalar eval(const Scalar& x) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const Scalar& s);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
  friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Scalar& s) { a *= s; return a; }
  friend QPoly operator*(const Scalar& s, QPoly a) { a *= s; return a; }

  /// Euclidean division; throws on a zero divisor.
  static std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
  friend QPoly operator/(const QPoly& a, const QPoly& b);

  QPoly derivative() const;
  QPoly monic() const;

  /// Monic gcd (zero if both arguments are zero).
  static QPoly gcd(QPoly a, QPoly b);

  bool operator==(const QPoly&) const = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// One irreducible (or unresolved) factor of a rational polynomial.
struct PolyFactor {
  QPoly factor;  // monic
  int multiplicity = 1;
  /// True when irreducibility over Q is certain. False only for factors the
  /// bounded Kronecker search could not settle.
  bool certified_irreducible = true;

  bool operator==(const PolyFactor&) const = default;
};

/// Rational roots with multiplicities.
std::vector<std::pair<Scalar, int>> rational_roots(const QPoly& p);

/// Monic irreducible factorization over Q of a nonzero polynomial
/// (rational-root extraction, Yun square-free split, bounded Kronecker
/// search for the rest). Factors are sorted by degree then coefficients.
std::vector<PolyFactor> factor_over_q(const QPoly& p);

}  // namespace liedual
