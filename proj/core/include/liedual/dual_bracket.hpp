#pragma once

#include <map>
#include <string>
#include <variant>

#include "liedual/bialgebra.hpp"
#include "liedual/dual.hpp"

namespace liedual {

enum class Provenance { ClosedForm, Oracle };
const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

/// Sign flips for mutation testing: each value negates one case of a dual
/// bracket closed form, which the pairing oracle must then detect.
enum class Mutation {
  None,
  WittCase1Sign,  // the i = 1 row of the r = x (x) x^n family
  WittCase2Sign,  // the i = n row of the r = x (x) x^n family
  XYCase1Sign,    // the i = 1 row of the X/Y family
  XYCase2Sign,    // the i = 2-n row of the X/Y family
  XYCase3Sign,    // the i = n row of the X/Y family
};
Mutation mutation_from_name(const std::string& name);
const char* mutation_name(Mutation m);

/// Dual bracket of the r = x (x) x^n - x^n (x) x family, as the single
/// master expression
///   [e^i, e^j] = (1-i) d_{j,n} e^i - (1-j) d_{i,n} e^j
///              + (2n-j-1) d_{i,1} e^{j+1-n} - (2n-i-1) d_{j,1} e^{i+1-n},
/// with epsilon powers of negative exponent dropped on the one-sided
/// algebra (they are not functionals on F[x]).
DualElement closed_form_witt(AlgebraKind kind, std::int64_t n, std::int64_t i,
                             std::int64_t j, Mutation mutation = Mutation::None);

/// Dual bracket of the r = X (x) Y - Y (x) X family: the four-case table in
/// the first index, rows not covered by a case filled in by antisymmetry,
/// everything else zero.
DualElement closed_form_xy(AlgebraKind kind, const BialgebraParams& p,
                           std::int64_t i, std::int64_t j,
                           Mutation mutation = Mutation::None);

/// The half term A_ij of the X/Y pairing expansion; the bracket decomposes
/// as [e^i, e^j] = A_ij - A_ji.
DualElement xy_half_term(const BialgebraParams& p, std::int64_t i, std::int64_t j);

/// Independent oracle: <[e^i, e^j], x^m> = <e^i (x) e^j, x^m . r>, evaluated
/// through the tensor module action and the Kronecker pairing. Central
/// tensor slots pair to zero.
Scalar dual_bracket_oracle(AlgebraKind kind, const RMatrix& r, std::int64_t i,
                           std::int64_t j, std::int64_t m);

/// Caches x^m . r per m so (i, j) sweeps cost one lookup each. Not
/// synchronized; confine an instance to one thread.
class OracleSweep {
 public:
  OracleSweep(AlgebraKind kind, RMatrix r);
  Scalar value(std::int64_t i, std::int64_t j, std::int64_t m);

 private:
  AlgebraKind kind_;
  RMatrix r_;
  std::map<std::int64_t, Tensor2> cache_;
};

/// All epsilon exponents of [e^i, e^j] lie within
/// [min(i,j) - |n| - 1, max(i,j) + |n| + 1]; the sweep adds slack 2.
/// n_shift is the family's n.
Window oracle_support_window(std::int64_t n_shift, std::int64_t i, std::int64_t j);

/// One family of dual brackets: kind plus either the Witt-n or the X/Y
/// parameters.
class BracketFamily {
 public:
  static BracketFamily witt(AlgebraKind kind, std::int64_t n);
  static BracketFamily xy(AlgebraKind kind, BialgebraParams p);

  AlgebraKind kind() const { return kind_; }
  bool is_xy() const { return std::holds_alternative<BialgebraParams>(params_); }
  std::int64_t n() const;
  const BialgebraParams& params() const { return std::get<BialgebraParams>(params_); }

  DualElement bracket(std::int64_t i, std::int64_t j,
                      Mutation mutation = Mutation::None) const;
  RMatrix r_matrix() const;

  bool operator==(const BracketFamily&) const = default;

 private:
  BracketFamily(AlgebraKind kind, std::variant<std::int64_t, BialgebraParams> p)
      : kind_(kind), params_(std::move(p)) {}
  AlgebraKind kind_;
  std::variant<std::int64_t, BialgebraParams> params_;
};

/// Structure constants of a dual Lie algebra over a window.
struct BracketTable {
  BracketFamily family;
  Window window;
  /// every (i, j) in window x window, zero entries included
  std::map<std::pair<std::int64_t, std::int64_t>, DualElement> entries;
  Provenance provenance = Provenance::ClosedForm;
};

/// Fills a table from the closed form, or from oracle m-sweeps over the
/// support bound.
BracketTable build_table(const BracketFamily& family, Window window,
                         Provenance provenance, Mutation mutation = Mutation::None);

/// [[e^i, e^j], e^l] + [[e^j, e^l], e^i] + [[e^l, e^i], e^j] = 0, expanding
/// inner brackets bilinearly through the closed form.
bool jacobi_check(const BracketFamily& family, std::int64_t i, std::int64_t j,
                  std::int64_t l, Mutation mutation = Mutation::None);

/// [e^i, e^j] = -[e^j, e^i].
bool antisymmetry_check(const BracketFamily& family, std::int64_t i,
                        std::int64_t j, Mutation mutation = Mutation::None);

}  // namespace liedual
