#pragma once

#include <utility>

#include "liedual/tensor.hpp"
#include "liedual/window.hpp"

namespace liedual {

/// Parameters of the two-dimensional subalgebra family
///   X = -1/(n-1) x + l x^n,
///   Y = -k/(2(n-1)l) x^(2-n) + k x - (n-1)l k/2 x^n,
/// with n != 1 and l, k != 0, for which [X, Y] = Y.
class BialgebraParams {
 public:
  BialgebraParams(std::int64_t n, Scalar ell, Scalar k);

  std::int64_t n() const { return n_; }
  const Scalar& ell() const { return ell_; }
  const Scalar& k() const { return k_; }

  // coefficients of X and Y above, single source of truth for the dual
  // bracket formulas
  Scalar ell0() const;  // -1/(n-1)
  Scalar k0() const;    // -k/(2(n-1)l)
  Scalar k1() const;    // -(n-1)l k/2

  bool operator==(const BialgebraParams&) const = default;

 private:
  std::int64_t n_;
  Scalar ell_;
  Scalar k_;
};

/// Antisymmetric element of L (x) L (swap(r) = -r, checked at construction).
class RMatrix {
 public:
  explicit RMatrix(Tensor2 t);
  AlgebraKind kind() const { return tensor_.kind(); }
  const Tensor2& tensor() const { return tensor_; }
  bool operator==(const RMatrix&) const = default;

 private:
  Tensor2 tensor_;
};

/// a (x) b - b (x) a for nonzero a, b.
RMatrix r_from_pair(AlgebraKind kind, const LieElement& a, const LieElement& b);

/// r_n = x (x) x^n - x^n (x) x, n != 1 (n >= 0 on the one-sided algebra).
RMatrix witt_family_r(AlgebraKind kind, std::int64_t n);

/// The subalgebra pair (X, Y) with [X, Y] = Y, defined on the Witt and
/// Virasoro algebras. On the Virasoro algebra Y carries the central
/// correction -k n(n-2)/24 c, without which the cocycle term of
/// [x^n, x^(2-n)] breaks [X, Y] = Y (the correction vanishes for n in
/// {0, 2}).
std::pair<LieElement, LieElement> build_subalgebra_pair(AlgebraKind kind,
                                                        const BialgebraParams& p);

/// X (x) Y - Y (x) X for the pair above.
RMatrix xy_family_r(AlgebraKind kind, const BialgebraParams& p);

/// Coboundary cobracket delta(x) = x . r.
Tensor2 coboundary_cobracket(AlgebraKind kind, const RMatrix& r, const LieElement& x);

/// The 1-cocycle compatibility axiom:
/// delta([a,b]) = a . delta(b) - b . delta(a).
bool check_compatibility(AlgebraKind kind, const RMatrix& r, const LieElement& a,
                         const LieElement& b);

/// Co-Jacobi: the cyclic sum of the three factor rotations of
/// (delta (x) id) delta(a) vanishes. delta need not come from an RMatrix
/// here; the raw-tensor overload lets tests feed a non-solution.
bool check_cojacobi(AlgebraKind kind, const Tensor2& r, const LieElement& a);
bool check_cojacobi(AlgebraKind kind, const RMatrix& r, const LieElement& a);

/// Co-Jacobi over every monomial x^m, m in window.
bool check_cojacobi_window(AlgebraKind kind, const RMatrix& r, Window window);

}  // namespace liedual
