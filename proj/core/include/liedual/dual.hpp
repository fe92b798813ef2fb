#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "liedual/lie.hpp"
#include "liedual/qpoly.hpp"
#include "liedual/window.hpp"

namespace liedual {

/// Functional on F[x] or F[x,x^-1] in the epsilon basis (<eps^i, x^j> =
/// delta_ij): either a finite epsilon-combination or a linearly recursive
/// coefficient stream f_n = h_1 f_{n-1} + ... + h_r f_{n-r}.
class DualElement {
 public:
  struct Recursive {
    int order = 1;              // r >= 1
    std::vector<Scalar> h;      // h[i-1] = h_i, size r
    std::int64_t anchor = 0;    // index of the first seed
    std::vector<Scalar> seeds;  // r seeds (Laurent) / r+1 seeds (Poly, anchor 0)

    bool operator==(const Recursive&) const = default;
  };

  static DualElement zero(Domain domain);
  static DualElement finite(Domain domain, std::map<std::int64_t, Scalar> coeffs);
  static DualElement epsilon(Domain domain, std::int64_t n,
                             const Scalar& coeff = Scalar(1));
  /// Validates the representation invariants:
  ///   Laurent: h_r != 0 (backward extension must be total), r seeds;
  ///   Poly:    anchor 0, r+1 seeds (the recursion constrains only n > r).
  static DualElement recursive(Domain domain, Recursive rep);

  Domain domain() const { return domain_; }
  bool is_finite() const { return std::holds_alternative<Finite>(rep_); }
  const std::map<std::int64_t, Scalar>& finite_terms() const&;
  // rvalue overload so the terms of a temporary never dangle
  std::map<std::int64_t, Scalar> finite_terms() &&;
  const Recursive& recursive_rep() const;
  bool is_zero() const;

  bool operator==(const DualElement&) const = default;

 private:
  using Finite = std::map<std::int64_t, Scalar>;
  DualElement(Domain d, Finite f) : domain_(d), rep_(std::move(f)) {}
  DualElement(Domain d, Recursive r) : domain_(d), rep_(std::move(r)) {}

  Domain domain_;
  std::variant<Finite, Recursive> rep_;
};

/// f_n. Recursive reps extend forward, and backward via
/// f_{n-r} = (f_n - h_1 f_{n-1} - ... - h_{r-1} f_{n-r+1}) / h_r (Laurent).
/// Throws for n < 0 on the Poly domain.
Scalar coefficient_at(const DualElement& f, std::int64_t n);

/// f_lo .. f_hi in one pass.
std::vector<Scalar> coefficients_range(const DualElement& f, std::int64_t lo,
                                       std::int64_t hi);

/// <f, g> = sum_j f_j g_j over the finite support of g. Domains must match.
Scalar pairing(const DualElement& f, const LaurentElement& g);

/// Membership in the restricted dual:
///   Poly: every finite or recursive rep qualifies;
///   Laurent: recursive reps only (a nonzero finite support never recurs
///   two-sidedly).
bool is_in_restricted_dual(const DualElement& f);

struct Recurrence {
  int order = 0;
  std::vector<Scalar> h;
  bool operator==(const Recurrence&) const = default;
};

/// Minimal linear recurrence fitting the whole value window
/// (Berlekamp-Massey over Q); nullopt when only recurrences too long to be
/// confirmed by the window (order > len/2) fit. Needs at least 2 values.
std::optional<Recurrence> infer_recurrence(const std::vector<Scalar>& values);

/// Window-truncated element of the dual tensor square; coefficients inside
/// the window are exact, indices outside are never stored.
class DualTensor2 {
 public:
  explicit DualTensor2(Window window) : window_(window) {}

  const Window& window() const { return window_; }
  const std::map<std::pair<std::int64_t, std::int64_t>, Scalar>& terms() const {
    return terms_;
  }
  Scalar coeff(std::int64_t i, std::int64_t j) const;
  /// Accumulates; silently drops terms outside the window.
  void add_term(std::int64_t i, std::int64_t j, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const DualTensor2&) const = default;

 private:
  Window window_;
  std::map<std::pair<std::int64_t, std::int64_t>, Scalar> terms_;
};

/// Dual comultiplication mu°(eps^n) = sum_{i+j=n} eps^i (x) eps^j.
/// Poly: the finite full sum (result window [0, n], the argument window is
/// ignored). Laurent: the window-truncated slice of the infinite sum.
DualTensor2 mu_dual(std::int64_t n, Domain domain, Window window);

/// Dual derivation d°(eps^n) = (n+1) eps^{n+1}.
DualElement partial_dual_derivation(std::int64_t n, Domain domain);

/// Dual cobracket Delta(eps^n) = sum_{i+j=n+1} (j-i) eps^i (x) eps^j,
/// computed as (id (x) d° - d° (x) id) mu°(eps^n) and checked against the
/// closed form on the window (std::logic_error on mismatch).
DualTensor2 cobracket_dual(std::int64_t n, Domain domain, Window window);

/// One irreducible component S_a: the sequence n -> poly(n) * a^n.
struct Component {
  Scalar root;
  QPoly poly;  // polynomial in n
  bool operator==(const Component&) const = default;
};

/// Full decomposition into components. On the Poly domain a sequence may
/// also carry a finitely supported part (the a = 0 component, where
/// poly(n) a^n cannot reach indices past 0).
struct Decomposition {
  std::vector<Component> components;
  std::map<std::int64_t, Scalar> finite_part;
  bool operator==(const Decomposition&) const = default;
};

/// Emitted instead of a decomposition when the characteristic polynomial
/// has irrational (or unresolved) factors.
struct IrreducibleFactorReport {
  std::vector<PolyFactor> factors;
  bool operator==(const IrreducibleFactorReport&) const = default;
};

using DecomposeResult = std::variant<Decomposition, IrreducibleFactorReport>;

/// x^r - h_1 x^(r-1) - ... - h_r.
QPoly characteristic_polynomial(const DualElement::Recursive& rep);

/// Splits f into components over the rational characteristic roots, or
/// reports the irreducible factors when some root is irrational.
DecomposeResult decompose_components(const DualElement& f);

/// Generating function sum_{n>=0} f_n eps^n = num/den in lowest terms with
/// den(0) = 1. Poly domain only.
struct RationalFunctionRep {
  QPoly num;
  QPoly den;
  bool operator==(const RationalFunctionRep&) const = default;
};

RationalFunctionRep to_rational_function(const DualElement& f);
DualElement from_rational_function(const RationalFunctionRep& rf);

/// Rank of the translate family {f . x^i : i in window} evaluated against
/// x^j over the same window, where (f . x^i)(x^j) = f([x^i, x^j]).
/// A window-stable rank is evidence of restricted-dual membership.
int translate_rank(AlgebraKind kind, const DualElement& f, Window window);

}  // namespace liedual
