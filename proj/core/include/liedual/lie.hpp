#pragma once

#include <string>

#include "liedual/laurent.hpp"

namespace liedual {

/// The three Lie algebras of interest. OneSidedWitt lives on F[x], the
/// Witt and Virasoro algebras on F[x, x^-1]; Virasoro adds a central c.
enum class AlgebraKind { OneSidedWitt, Witt, Virasoro };

Domain domain_of(AlgebraKind k);
const char* kind_name(AlgebraKind k);
AlgebraKind kind_from_name(const std::string& name);

/// Element of a Witt-type algebra: Laurent body plus a multiple of the
/// central element c (kept at zero outside the Virasoro algebra).
struct LieElement {
  LaurentElement body;
  Scalar central;

  explicit LieElement(Domain d) : body(d), central(0) {}
  explicit LieElement(LaurentElement b, Scalar c = Scalar(0))
      : body(std::move(b)), central(std::move(c)) {}

  static LieElement monomial(AlgebraKind kind, std::int64_t exponent,
                             const Scalar& coeff = Scalar(1));
  static LieElement central_element(const Scalar& coeff = Scalar(1));

  Domain domain() const { return body.domain(); }
  bool is_zero() const { return body.is_zero() && central == 0; }

  LieElement& operator+=(const LieElement& rhs);
  LieElement& operator-=(const LieElement& rhs);
  LieElement& operator*=(const Scalar& s);
  LieElement operator-() const;

  friend LieElement operator+(LieElement a, const LieElement& b) {
    a += b;
    return a;
  }
  friend LieElement operator-(LieElement a, const LieElement& b) {
    a -= b;
    return a;
  }
  friend LieElement operator*(LieElement a, const Scalar& s) {
    a *= s;
    return a;
  }
  friend LieElement operator*(const Scalar& s, LieElement a) {
    a *= s;
    return a;
  }

  bool operator==(const LieElement&) const = default;
};

/// True when a's domain matches the kind and a carries no central part
/// outside the Virasoro algebra.
bool conforms(AlgebraKind kind, const LieElement& a);
void require_conforms(AlgebraKind kind, const LieElement& a);

/// The Virasoro 2-cocycle value on (x^(m+1), x^(1-m)): (m^3 - m)/12.
Scalar virasoro_cocycle(std::int64_t m);

/// Lie bracket of the chosen algebra:
///   OneSidedWitt / Witt:  [a, b] = a d(b) - d(a) b
///   Virasoro:             the same body plus the central cocycle term
///                         [x^(m+1), x^(n+1)] += (m^3-m)/12 delta_{m+n,0} c.
/// Central inputs bracket to zero.
LieElement bracket(AlgebraKind kind, const LieElement& a, const LieElement& b);

}  // namespace liedual
