#include "liedual/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace liedual {

const char* domain_name(Domain d) {
  return d == Domain::Poly ? "poly" : "laurent";
}

Domain domain_from_name(const std::string& name) {
  if (name == "poly") return Domain::Poly;
  if (name == "laurent") return Domain::Laurent;
  throw std::invalid_argument("unknown domain: " + name);
}

LaurentElement LaurentElement::monomial(Domain domain, std::int64_t exponent,
                                        const Scalar& coeff) {
  LaurentElement e(domain);
  e.add_term(exponent, coeff);
  return e;
}

Scalar LaurentElement::coeff(std::int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentElement::add_term(std::int64_t exponent, const Scalar& c) {
  if (c == 0) return;
  if (domain_ == Domain::Poly && exponent < 0) {
    throw std::invalid_argument("negative exponent in poly domain");
  }
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& rhs) {
  if (domain_ != rhs.domain_) {
    throw std::invalid_argument("domain mismatch in addition");
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& rhs) {
  if (domain_ != rhs.domain_) {
    throw std::invalid_argument("domain mismatch in subtraction");
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentElement& LaurentElement::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement out(domain_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentElement multiply(const LaurentElement& a, const LaurentElement& b) {
  if (a.domain() != b.domain()) {
    throw std::invalid_argument("domain mismatch in multiplication");
  }
  LaurentElement out(a.domain());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentElement derive(const LaurentElement& a) {
  LaurentElement out(a.domain());
  for (const auto& [e, c] : a.terms()) {
    if (e == 0) continue;
    out.add_term(e - 1, c * Scalar(e));
  }
  return out;
}

std::string to_string(const LaurentElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    Scalar v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      os << scalar_str(v);
    } else {
      if (v != 1) os << scalar_str(v) << "*";
      os << "x";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace liedual
