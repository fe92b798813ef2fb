#include "liedual/dual_bracket.hpp"

#include <cstdlib>
#include <stdexcept>

namespace liedual {

const char* provenance_name(Provenance p) {
  return p == Provenance::ClosedForm ? "closed-form" : "oracle";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "closed-form") return Provenance::ClosedForm;
  if (name == "oracle") return Provenance::Oracle;
  throw std::invalid_argument("unknown provenance: " + name);
}

Mutation mutation_from_name(const std::string& name) {
  if (name == "none") return Mutation::None;
  if (name == "case1-sign" || name == "witt-case1-sign") return Mutation::WittCase1Sign;
  if (name == "case2-sign" || name == "witt-case2-sign") return Mutation::WittCase2Sign;
  if (name == "xy-case1-sign") return Mutation::XYCase1Sign;
  if (name == "xy-case2-sign") return Mutation::XYCase2Sign;
  if (name == "xy-case3-sign") return Mutation::XYCase3Sign;
  throw std::invalid_argument("unknown mutation: " + name);
}

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::WittCase1Sign: return "witt-case1-sign";
    case Mutation::WittCase2Sign: return "witt-case2-sign";
    case Mutation::XYCase1Sign: return "xy-case1-sign";
    case Mutation::XYCase2Sign: return "xy-case2-sign";
    case Mutation::XYCase3Sign: return "xy-case3-sign";
  }
  return "?";
}

namespace {

using FsMap = std::map<std::int64_t, Scalar>;

void accumulate(FsMap& acc, std::int64_t e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

DualElement fs_element(Domain domain, FsMap acc) {
  return DualElement::finite(domain, std::move(acc));
}

}  // namespace

DualElement closed_form_witt(AlgebraKind kind, std::int64_t n, std::int64_t i,
                             std::int64_t j, Mutation mutation) {
  if (n == 1) throw std::invalid_argument("witt family requires n != 1");
  const Domain domain = domain_of(kind);
  if (domain == Domain::Poly && (n < 0 || i < 0 || j < 0)) {
    throw std::invalid_argument("one-sided witt dual bracket needs n, i, j >= 0");
  }
  FsMap acc;
  if (j == n) accumulate(acc, i, Scalar(1 - i));
  if (i == n) accumulate(acc, j, -Scalar(1 - j));
  // epsilon powers below 0 are not functionals on F[x]: dropped on Poly
  if (i == 1 && (domain == Domain::Laurent || j + 1 - n >= 0)) {
    accumulate(acc, j + 1 - n, Scalar(2 * n - j - 1));
  }
  if (j == 1 && (domain == Domain::Laurent || i + 1 - n >= 0)) {
    accumulate(acc, i + 1 - n, -Scalar(2 * n - i - 1));
  }
  const bool in_case1 = (i == 1) != (j == 1);
  const bool in_case2 = i != 1 && j != 1 && ((i == n) != (j == n));
  if ((mutation == Mutation::WittCase1Sign && in_case1) ||
      (mutation == Mutation::WittCase2Sign && in_case2)) {
    for (auto& [e, c] : acc) c = -c;
  }
  return fs_element(domain, std::move(acc));
}

namespace {

// the three nonzero rows of the X/Y dual bracket table, first index fixed
FsMap xy_case1(const BialgebraParams& p, std::int64_t j) {  // i = 1, j != 1
  const std::int64_t n = p.n();
  const Scalar& k = p.k();
  const Scalar& ell = p.ell();
  FsMap acc;
  if (j == n || j == 2 - n) accumulate(acc, j, -k);
  const Scalar den = Scalar(2) * Scalar(n - 1) * Scalar(n - 1) * ell;
  accumulate(acc, j + n - 1, -k * Scalar(j + 2 * n - 3) / den);
  accumulate(acc, j - n + 1, -k * ell / Scalar(2) * Scalar(2 * n - j - 1));
  return acc;
}

FsMap xy_case2(const BialgebraParams& p, std::int64_t j) {  // i = 2-n, j != 1, 2-n
  const std::int64_t n = p.n();
  const Scalar& k = p.k();
  const Scalar& ell = p.ell();
  FsMap acc;
  if (j == n) {
    accumulate(acc, 1, -k / Scalar(2));
    accumulate(acc, 2 - n, -k * ell / Scalar(2) * Scalar(n - 1));
  }
  accumulate(acc, j,
             k * Scalar(j - 1) / (Scalar(2) * Scalar(n - 1) * Scalar(n - 1) * ell));
  accumulate(acc, j - n + 1, k * Scalar(2 * n - j - 1) / (Scalar(2) * Scalar(n - 1)));
  return acc;
}

FsMap xy_case3(const BialgebraParams& p, std::int64_t j) {  // i = n, j != 1, 2-n, n
  const std::int64_t n = p.n();
  const Scalar& k = p.k();
  const Scalar& ell = p.ell();
  FsMap acc;
  accumulate(acc, j + n - 1, k * Scalar(j + 2 * n - 3) / (Scalar(2) * Scalar(n - 1)));
  accumulate(acc, j, k * ell / Scalar(2) * Scalar(1 - j));
  return acc;
}

void negate(FsMap& acc) {
  for (auto& [e, c] : acc) c = -c;
}

}  // namespace

DualElement closed_form_xy(AlgebraKind kind, const BialgebraParams& p,
                           std::int64_t i, std::int64_t j, Mutation mutation) {
  if (kind == AlgebraKind::OneSidedWitt) {
    throw std::invalid_argument("the X/Y family lives on the Witt or Virasoro algebra");
  }
  const std::int64_t n = p.n();
  auto finish = [&](FsMap acc, Mutation hit, bool flip) {
    if (mutation == hit) negate(acc);
    if (flip) negate(acc);
    return fs_element(Domain::Laurent, std::move(acc));
  };
  if (i == 1 && j != 1) return finish(xy_case1(p, j), Mutation::XYCase1Sign, false);
  if (i == 2 - n && j != 1 && j != 2 - n) {
    return finish(xy_case2(p, j), Mutation::XYCase2Sign, false);
  }
  if (i == n && j != 1 && j != 2 - n && j != n) {
    return finish(xy_case3(p, j), Mutation::XYCase3Sign, false);
  }
  // rows whose first index matches no case come from antisymmetry
  if (j == 1 && i != 1) return finish(xy_case1(p, i), Mutation::XYCase1Sign, true);
  if (j == 2 - n && i != 1 && i != 2 - n) {
    return finish(xy_case2(p, i), Mutation::XYCase2Sign, true);
  }
  if (j == n && i != 1 && i != 2 - n && i != n) {
    return finish(xy_case3(p, i), Mutation::XYCase3Sign, true);
  }
  return DualElement::zero(Domain::Laurent);
}

DualElement xy_half_term(const BialgebraParams& p, std::int64_t i, std::int64_t j) {
  const std::int64_t n = p.n();
  const Scalar ell0 = p.ell0(), k0 = p.k0(), k1 = p.k1();
  const Scalar& ell = p.ell();
  const Scalar& k = p.k();
  // <e^j, Y> and <e^j, X>
  Scalar ej_y(0);
  if (j == 2 - n) ej_y += k0;
  if (j == 1) ej_y += k;
  if (j == n) ej_y += k1;
  Scalar ej_x(0);
  if (j == 1) ej_x += ell0;
  if (j == n) ej_x += ell;
  FsMap acc;
  if (ej_y != 0) {
    accumulate(acc, i, ej_y * ell0 * Scalar(1 - i));
    accumulate(acc, i - n + 1, ej_y * ell * Scalar(2 * n - i - 1));
  }
  if (ej_x != 0) {
    accumulate(acc, i + n - 1, -ej_x * k0 * Scalar(3 - i - 2 * n));
    accumulate(acc, i, -ej_x * k * Scalar(1 - i));
    accumulate(acc, i - n + 1, -ej_x * k1 * Scalar(2 * n - i - 1));
  }
  return fs_element(Domain::Laurent, std::move(acc));
}

Scalar dual_bracket_oracle(AlgebraKind kind, const RMatrix& r, std::int64_t i,
                           std::int64_t j, std::int64_t m) {
  if (domain_of(kind) == Domain::Poly && (i < 0 || j < 0 || m < 0)) {
    throw std::invalid_argument("one-sided oracle needs i, j, m >= 0");
  }
  const Tensor2 delta = act(kind, LieElement::monomial(kind, m), r.tensor());
  return delta.coeff(BasisLabel::exponent(i), BasisLabel::exponent(j));
}

OracleSweep::OracleSweep(AlgebraKind kind, RMatrix r)
    : kind_(kind), r_(std::move(r)) {}

Scalar OracleSweep::value(std::int64_t i, std::int64_t j, std::int64_t m) {
  auto it = cache_.find(m);
  if (it == cache_.end()) {
    it = cache_
             .emplace(m, act(kind_, LieElement::monomial(kind_, m), r_.tensor()))
             .first;
  }
  return it->second.coeff(BasisLabel::exponent(i), BasisLabel::exponent(j));
}

Window oracle_support_window(std::int64_t n_shift, std::int64_t i, std::int64_t j) {
  const std::int64_t pad = std::llabs(n_shift) + 1 + 2;
  return Window(std::min(i, j) - pad, std::max(i, j) + pad);
}

BracketFamily BracketFamily::witt(AlgebraKind kind, std::int64_t n) {
  if (n == 1) throw std::invalid_argument("witt family requires n != 1");
  if (kind == AlgebraKind::OneSidedWitt && n < 0) {
    throw std::invalid_argument("one-sided witt family requires n >= 0");
  }
  return BracketFamily(kind, n);
}

BracketFamily BracketFamily::xy(AlgebraKind kind, BialgebraParams p) {
  if (kind == AlgebraKind::OneSidedWitt) {
    throw std::invalid_argument("the X/Y family lives on the Witt or Virasoro algebra");
  }
  return BracketFamily(kind, std::move(p));
}

std::int64_t BracketFamily::n() const {
  return is_xy() ? params().n() : std::get<std::int64_t>(params_);
}

DualElement BracketFamily::bracket(std::int64_t i, std::int64_t j,
                                   Mutation mutation) const {
  return is_xy() ? closed_form_xy(kind_, params(), i, j, mutation)
                 : closed_form_witt(kind_, n(), i, j, mutation);
}

RMatrix BracketFamily::r_matrix() const {
  return is_xy() ? xy_family_r(kind_, params()) : witt_family_r(kind_, n());
}

BracketTable build_table(const BracketFamily& family, Window window,
                         Provenance provenance, Mutation mutation) {
  BracketTable table{family, window, {}, provenance};
  const Domain domain = domain_of(family.kind());
  if (provenance == Provenance::ClosedForm) {
    for (std::int64_t i = window.lo; i <= window.hi; ++i) {
      for (std::int64_t j = window.lo; j <= window.hi; ++j) {
        table.entries.emplace(std::make_pair(i, j), family.bracket(i, j, mutation));
      }
    }
    return table;
  }
  OracleSweep sweep(family.kind(), family.r_matrix());
  for (std::int64_t i = window.lo; i <= window.hi; ++i) {
    for (std::int64_t j = window.lo; j <= window.hi; ++j) {
      const Window support = oracle_support_window(family.n(), i, j);
      FsMap acc;
      std::int64_t m_lo = support.lo;
      if (domain == Domain::Poly) m_lo = std::max<std::int64_t>(m_lo, 0);
      for (std::int64_t m = m_lo; m <= support.hi; ++m) {
        accumulate(acc, m, sweep.value(i, j, m));
      }
      table.entries.emplace(std::make_pair(i, j), fs_element(domain, std::move(acc)));
    }
  }
  return table;
}

bool jacobi_check(const BracketFamily& family, std::int64_t i, std::int64_t j,
                  std::int64_t l, Mutation mutation) {
  FsMap acc;
  const std::int64_t idx[3] = {i, j, l};
  for (int rot = 0; rot < 3; ++rot) {
    const std::int64_t a = idx[rot];
    const std::int64_t b = idx[(rot + 1) % 3];
    const std::int64_t c = idx[(rot + 2) % 3];
    const DualElement inner = family.bracket(a, b, mutation);
    for (const auto& [e, coeff] : inner.finite_terms()) {
      const DualElement outer = family.bracket(e, c, mutation);
      for (const auto& [e2, coeff2] : outer.finite_terms()) {
        accumulate(acc, e2, coeff * coeff2);
      }
    }
  }
  return acc.empty();
}

bool antisymmetry_check(const BracketFamily& family, std::int64_t i,
                        std::int64_t j, Mutation mutation) {
  const DualElement ab = family.bracket(i, j, mutation);
  const DualElement ba = family.bracket(j, i, mutation);
  FsMap acc = ab.finite_terms();
  for (const auto& [e, c] : ba.finite_terms()) accumulate(acc, e, c);
  return acc.empty();
}

}  // namespace liedual
