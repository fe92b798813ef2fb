#include "liedual/bialgebra.hpp"
#include <map>

#include <stdexcept>

namespace liedual {

BialgebraParams::BialgebraParams(std::int64_t n, Scalar ell, Scalar k)
    : n_(n), ell_(std::move(ell)), k_(std::move(k)) {
  if (n_ == 1) throw std::invalid_argument("subalgebra family requires n != 1");
  if (ell_ == 0 || k_ == 0) {
    throw std::invalid_argument("subalgebra family requires ell, k != 0");
  }
  // n and 2-n never collide (that would force n = 1)
}

Scalar BialgebraParams::ell0() const { return Scalar(-1) / Scalar(n_ - 1); }

Scalar BialgebraParams::k0() const {
  return -k_ / (Scalar(2) * Scalar(n_ - 1) * ell_);
}

Scalar BialgebraParams::k1() const {
  return -Scalar(n_ - 1) * ell_ * k_ / Scalar(2);
}

RMatrix::RMatrix(Tensor2 t) : tensor_(std::move(t)) {
  if (!(swap_factors(tensor_) == -tensor_)) {
    throw std::invalid_argument("r-matrix must be antisymmetric");
  }
}

RMatrix r_from_pair(AlgebraKind kind, const LieElement& a, const LieElement& b) {
  if (a.is_zero() || b.is_zero()) {
    throw std::invalid_argument("r_from_pair needs nonzero elements");
  }
  return RMatrix(tensor_product(kind, a, b) - tensor_product(kind, b, a));
}

RMatrix witt_family_r(AlgebraKind kind, std::int64_t n) {
  if (n == 1) throw std::invalid_argument("witt family requires n != 1");
  if (kind == AlgebraKind::OneSidedWitt && n < 0) {
    throw std::invalid_argument("one-sided witt family requires n >= 0");
  }
  return r_from_pair(kind, LieElement::monomial(kind, 1),
                     LieElement::monomial(kind, n));
}

std::pair<LieElement, LieElement> build_subalgebra_pair(AlgebraKind kind,
                                                        const BialgebraParams& p) {
  if (kind == AlgebraKind::OneSidedWitt) {
    throw std::invalid_argument(
        "the subalgebra pair lives on the Witt or Virasoro algebra");
  }
  LieElement x_elem(Domain::Laurent);
  x_elem.body.add_term(1, p.ell0());
  x_elem.body.add_term(p.n(), p.ell());
  LieElement y_elem(Domain::Laurent);
  y_elem.body.add_term(2 - p.n(), p.k0());
  y_elem.body.add_term(1, p.k());
  y_elem.body.add_term(p.n(), p.k1());
  if (kind == AlgebraKind::Virasoro) {
    const Scalar nn(p.n());
    y_elem.central = -p.k() * nn * (nn - 2) / Scalar(24);
  }
  return {std::move(x_elem), std::move(y_elem)};
}

RMatrix xy_family_r(AlgebraKind kind, const BialgebraParams& p) {
  const auto [x_elem, y_elem] = build_subalgebra_pair(kind, p);
  return r_from_pair(kind, x_elem, y_elem);
}

Tensor2 coboundary_cobracket(AlgebraKind kind, const RMatrix& r,
                             const LieElement& x) {
  return act(kind, x, r.tensor());
}

bool check_compatibility(AlgebraKind kind, const RMatrix& r, const LieElement& a,
                         const LieElement& b) {
  const Tensor2 lhs = coboundary_cobracket(kind, r, bracket(kind, a, b));
  const Tensor2 rhs = act(kind, a, coboundary_cobracket(kind, r, b)) -
                      act(kind, b, coboundary_cobracket(kind, r, a));
  return lhs == rhs;
}

bool check_cojacobi(AlgebraKind kind, const Tensor2& r, const LieElement& a) {
  const Tensor2 da = act(kind, a, r);
  // (delta (x) id) delta(a), expanding delta slotwise on basis labels
  Tensor3 expanded(kind);
  std::map<BasisLabel, Tensor2> delta_cache;
  for (const auto& [key, c] : da.terms()) {
    const auto& [u, v] = key;
    auto it = delta_cache.find(u);
    if (it == delta_cache.end()) {
      it = delta_cache.emplace(u, act(kind, label_element(kind, u), r)).first;
    }
    for (const auto& [ukey, uc] : it->second.terms()) {
      expanded.add_term(ukey.first, ukey.second, v, c * uc);
    }
  }
  const Tensor3 rot1 = rotate_factors(expanded);
  const Tensor3 rot2 = rotate_factors(rot1);
  return (expanded + rot1 + rot2).is_zero();
}

bool check_cojacobi(AlgebraKind kind, const RMatrix& r, const LieElement& a) {
  return check_cojacobi(kind, r.tensor(), a);
}

bool check_cojacobi_window(AlgebraKind kind, const RMatrix& r, Window window) {
  std::int64_t lo = window.lo;
  if (domain_of(kind) == Domain::Poly) lo = std::max<std::int64_t>(lo, 0);
  for (std::int64_t m = lo; m <= window.hi; ++m) {
    if (!check_cojacobi(kind, r, LieElement::monomial(kind, m))) return false;
  }
  return true;
}

}  // namespace liedual
