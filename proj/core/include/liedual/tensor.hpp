#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liedual/lie.hpp"

namespace liedual {

/// Basis label of a Witt-type algebra: a monomial exponent or the Virasoro
/// central element c. Labels order exponents ascending, with c last.
class BasisLabel {
 public:
  static BasisLabel exponent(std::int64_t e) { return BasisLabel(false, e); }
  static BasisLabel central() { return BasisLabel(true, 0); }

  bool is_central() const { return central_; }
  std::int64_t exp() const { return exp_; }

  auto operator<=>(const BasisLabel&) const = default;

 private:
  BasisLabel(bool central, std::int64_t e) : central_(central), exp_(e) {}
  bool central_;
  std::int64_t exp_;
};

std::string label_str(const BasisLabel& l);
BasisLabel label_from_str(const std::string& s);

/// Basis element named by a label.
LieElement label_element(AlgebraKind kind, const BasisLabel& l);

/// Splits an element into (label, coefficient) pairs over the monomial + c
/// basis.
std::vector<std::pair<BasisLabel, Scalar>> label_terms(const LieElement& a);

/// Sparse element of L (x) L. Zero coefficients are never stored.
class Tensor2 {
 public:
  using Key = std::pair<BasisLabel, BasisLabel>;

  explicit Tensor2(AlgebraKind kind) : kind_(kind) {}

  AlgebraKind kind() const { return kind_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const BasisLabel& a, const BasisLabel& b) const;

  void add_term(const BasisLabel& a, const BasisLabel& b, const Scalar& c);

  Tensor2& operator+=(const Tensor2& rhs);
  Tensor2& operator-=(const Tensor2& rhs);
  Tensor2& operator*=(const Scalar& s);
  Tensor2 operator-() const;
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { a += b; return a; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { a -= b; return a; }

  bool operator==(const Tensor2&) const = default;

 private:
  AlgebraKind kind_;
  std::map<Key, Scalar> terms_;
};

/// Sparse element of L (x) L (x) L.
class Tensor3 {
 public:
  using Key = std::array<BasisLabel, 3>;

  explicit Tensor3(AlgebraKind kind) : kind_(kind) {}

  AlgebraKind kind() const { return kind_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisLabel& a, const BasisLabel& b, const BasisLabel& c,
                const Scalar& v);

  Tensor3& operator+=(const Tensor3& rhs);
  Tensor3& operator-=(const Tensor3& rhs);
  Tensor3 operator-() const;
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { a += b; return a; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { a -= b; return a; }

  bool operator==(const Tensor3&) const = default;

 private:
  AlgebraKind kind_;
  std::map<Key, Scalar> terms_;
};

/// a (x) b.
Tensor2 tensor_product(AlgebraKind kind, const LieElement& a, const LieElement& b);

/// Diagonal module action x . (y (x) z) = [x,y] (x) z + y (x) [x,z],
/// extended bilinearly.
Tensor2 act(AlgebraKind kind, const LieElement& x, const Tensor2& t);

/// Three-factor Leibniz action.
Tensor3 act(AlgebraKind kind, const LieElement& x, const Tensor3& t);

/// Classical Yang-Baxter residual
///   C(r) = [r12, r13] + [r12, r23] + [r13, r23]
/// computed inside L (x) L (x) L. Zero means r solves the CYBE.
Tensor3 cybe_residual(AlgebraKind kind, const Tensor2& r);

/// Exchanges the two factors; an involution.
Tensor2 swap_factors(const Tensor2& t);

/// Cyclic rotation a (x) b (x) c -> c (x) a (x) b.
Tensor3 rotate_factors(const Tensor3& t);

}  // namespace liedual
