#include "liedual/lie.hpp"

#include <stdexcept>

namespace liedual {

Domain domain_of(AlgebraKind k) {
  return k == AlgebraKind::OneSidedWitt ? Domain::Poly : Domain::Laurent;
}

const char* kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::OneSidedWitt:
      return "one-sided-witt";
    case AlgebraKind::Witt:
      return "witt";
    case AlgebraKind::Virasoro:
      return "virasoro";
  }
  return "?";
}

AlgebraKind kind_from_name(const std::string& name) {
  if (name == "one-sided-witt") return AlgebraKind::OneSidedWitt;
  if (name == "witt") return AlgebraKind::Witt;
  if (name == "virasoro") return AlgebraKind::Virasoro;
  throw std::invalid_argument("unknown algebra kind: " + name);
}

LieElement LieElement::monomial(AlgebraKind kind, std::int64_t exponent,
                                const Scalar& coeff) {
  return LieElement(LaurentElement::monomial(domain_of(kind), exponent, coeff));
}

LieElement LieElement::central_element(const Scalar& coeff) {
  return LieElement(LaurentElement(Domain::Laurent), coeff);
}

LieElement& LieElement::operator+=(const LieElement& rhs) {
  body += rhs.body;
  central += rhs.central;
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& rhs) {
  body -= rhs.body;
  central -= rhs.central;
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& s) {
  body *= s;
  central *= s;
  return *this;
}

LieElement LieElement::operator-() const { return LieElement(-body, -central); }

bool conforms(AlgebraKind kind, const LieElement& a) {
  if (a.domain() != domain_of(kind)) return false;
  if (kind != AlgebraKind::Virasoro && a.central != 0) return false;
  return true;
}

void require_conforms(AlgebraKind kind, const LieElement& a) {
  if (!conforms(kind, a)) {
    throw std::invalid_argument(std::string("element does not conform to ") +
                                kind_name(kind));
  }
}

Scalar virasoro_cocycle(std::int64_t m) {
  const Scalar mm(m);
  return (mm * mm * mm - mm) / Scalar(12);
}

LieElement bracket(AlgebraKind kind, const LieElement& a, const LieElement& b) {
  require_conforms(kind, a);
  require_conforms(kind, b);
  LieElement out(domain_of(kind));
  // a d(b) - d(a) b, expanded bilinearly: [x^p, x^q] = (q - p) x^(p+q-1)
  for (const auto& [p, ap] : a.body.terms()) {
    for (const auto& [q, bq] : b.body.terms()) {
      if (p == q) continue;
      out.body.add_term(p + q - 1, ap * bq * Scalar(q - p));
    }
  }
  if (kind == AlgebraKind::Virasoro) {
    // [x^p, x^q] picks up (m^3 - m)/12 c at m = p-1 whenever p + q = 2.
    Scalar z(0);
    for (const auto& [p, ap] : a.body.terms()) {
      const Scalar bq = b.body.coeff(2 - p);
      if (bq != 0) z += ap * bq * virasoro_cocycle(p - 1);
    }
    out.central = z;
  }
  return out;
}

}  // namespace liedual
