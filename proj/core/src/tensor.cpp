#include "liedual/tensor.hpp"

#include <stdexcept>

namespace liedual {

std::string label_str(const BasisLabel& l) {
  return l.is_central() ? "c" : std::to_string(l.exp());
}

BasisLabel label_from_str(const std::string& s) {
  if (s == "c") return BasisLabel::central();
  std::size_t pos = 0;
  long long e = 0;
  try {
    e = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad basis label: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("bad basis label: " + s);
  return BasisLabel::exponent(e);
}

LieElement label_element(AlgebraKind kind, const BasisLabel& l) {
  if (l.is_central()) {
    if (kind != AlgebraKind::Virasoro) {
      throw std::invalid_argument("central label outside virasoro");
    }
    return LieElement::central_element();
  }
  return LieElement::monomial(kind, l.exp());
}

std::vector<std::pair<BasisLabel, Scalar>> label_terms(const LieElement& a) {
  std::vector<std::pair<BasisLabel, Scalar>> out;
  out.reserve(a.body.terms().size() + 1);
  for (const auto& [e, c] : a.body.terms()) {
    out.emplace_back(BasisLabel::exponent(e), c);
  }
  if (a.central != 0) out.emplace_back(BasisLabel::central(), a.central);
  return out;
}

Scalar Tensor2::coeff(const BasisLabel& a, const BasisLabel& b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Tensor2::add_term(const BasisLabel& a, const BasisLabel& b, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Tensor2& Tensor2::operator+=(const Tensor2& rhs) {
  if (kind_ != rhs.kind_) throw std::invalid_argument("tensor kind mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& rhs) {
  if (kind_ != rhs.kind_) throw std::invalid_argument("tensor kind mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 out(kind_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

void Tensor3::add_term(const BasisLabel& a, const BasisLabel& b,
                       const BasisLabel& c, const Scalar& v) {
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(Key{a, b, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& rhs) {
  if (kind_ != rhs.kind_) throw std::invalid_argument("tensor kind mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k[0], k[1], k[2], c);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& rhs) {
  if (kind_ != rhs.kind_) throw std::invalid_argument("tensor kind mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k[0], k[1], k[2], -c);
  return *this;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 out(kind_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Tensor2 tensor_product(AlgebraKind kind, const LieElement& a, const LieElement& b) {
  require_conforms(kind, a);
  require_conforms(kind, b);
  Tensor2 out(kind);
  for (const auto& [la, ca] : label_terms(a)) {
    for (const auto& [lb, cb] : label_terms(b)) {
      out.add_term(la, lb, ca * cb);
    }
  }
  return out;
}

namespace {

// memoizes [x, basis(label)] across the labels of one tensor
class LabelBracketCache {
 public:
  LabelBracketCache(AlgebraKind kind, const LieElement& x) : kind_(kind), x_(x) {}

  const std::vector<std::pair<BasisLabel, Scalar>>& expand(const BasisLabel& l) {
    auto it = cache_.find(l);
    if (it == cache_.end()) {
      it = cache_.emplace(l, label_terms(bracket(kind_, x_, label_element(kind_, l))))
               .first;
    }
    return it->second;
  }

 private:
  AlgebraKind kind_;
  const LieElement& x_;
  std::map<BasisLabel, std::vector<std::pair<BasisLabel, Scalar>>> cache_;
};

}  // namespace

Tensor2 act(AlgebraKind kind, const LieElement& x, const Tensor2& t) {
  require_conforms(kind, x);
  if (t.kind() != kind) throw std::invalid_argument("tensor kind mismatch");
  Tensor2 out(kind);
  LabelBracketCache brackets(kind, x);
  for (const auto& [key, c] : t.terms()) {
    const auto& [u, v] = key;
    for (const auto& [l, s] : brackets.expand(u)) out.add_term(l, v, c * s);
    for (const auto& [l, s] : brackets.expand(v)) out.add_term(u, l, c * s);
  }
  return out;
}

Tensor3 act(AlgebraKind kind, const LieElement& x, const Tensor3& t) {
  require_conforms(kind, x);
  if (t.kind() != kind) throw std::invalid_argument("tensor kind mismatch");
  Tensor3 out(kind);
  LabelBracketCache brackets(kind, x);
  for (const auto& [key, c] : t.terms()) {
    for (int slot = 0; slot < 3; ++slot) {
      for (const auto& [l, s] : brackets.expand(key[slot])) {
        Tensor3::Key k = key;
        k[slot] = l;
        out.add_term(k[0], k[1], k[2], c * s);
      }
    }
  }
  return out;
}

Tensor3 cybe_residual(AlgebraKind kind, const Tensor2& r) {
  if (r.kind() != kind) throw std::invalid_argument("tensor kind mismatch");
  Tensor3 out(kind);
  for (const auto& [k1, c1] : r.terms()) {
    const auto& [a, b] = k1;
    const LieElement ea = label_element(kind, a);
    const LieElement eb = label_element(kind, b);
    for (const auto& [k2, c2] : r.terms()) {
      const auto& [c, d] = k2;
      const Scalar w = c1 * c2;
      // [r12, r13] = sum [a, c] (x) b (x) d
      for (const auto& [l, s] : label_terms(bracket(kind, ea, label_element(kind, c)))) {
        out.add_term(l, b, d, w * s);
      }
      // [r12, r23] = sum a (x) [b, c] (x) d
      for (const auto& [l, s] : label_terms(bracket(kind, eb, label_element(kind, c)))) {
        out.add_term(a, l, d, w * s);
      }
      // [r13, r23] = sum a (x) c (x) [b, d]
      for (const auto& [l, s] : label_terms(bracket(kind, eb, label_element(kind, d)))) {
        out.add_term(a, c, l, w * s);
      }
    }
  }
  return out;
}

Tensor2 swap_factors(const Tensor2& t) {
  Tensor2 out(t.kind());
  for (const auto& [k, c] : t.terms()) out.add_term(k.second, k.first, c);
  return out;
}

Tensor3 rotate_factors(const Tensor3& t) {
  Tensor3 out(t.kind());
  for (const auto& [k, c] : t.terms()) out.add_term(k[2], k[0], k[1], c);
  return out;
}

}  // namespace liedual
