#include "liedual/dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace liedual {

namespace {

Scalar pow_scalar(const Scalar& a, std::int64_t n) {
  if (n < 0) {
    if (a == 0) throw std::domain_error("0 cannot be raised to a negative power");
    return Scalar(1) / pow_scalar(a, -n);
  }
  Scalar base = a, acc(1);
  for (std::uint64_t e = static_cast<std::uint64_t>(n); e != 0; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

int gaussian_rank(std::vector<std::vector<Scalar>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const Scalar inv = Scalar(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Solves a square exact linear system; the callers' systems are always
// nonsingular (evaluation maps of recurrence solution spaces).
std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> m,
                                 std::vector<Scalar> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular system in decomposition");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Scalar inv = Scalar(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

DualElement DualElement::zero(Domain domain) { return DualElement(domain, Finite{}); }

DualElement DualElement::finite(Domain domain, std::map<std::int64_t, Scalar> coeffs) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second == 0) {
      it = coeffs.erase(it);
      continue;
    }
    if (domain == Domain::Poly && it->first < 0) {
      throw std::invalid_argument("negative epsilon exponent in poly domain");
    }
    ++it;
  }
  return DualElement(domain, std::move(coeffs));
}

DualElement DualElement::epsilon(Domain domain, std::int64_t n, const Scalar& coeff) {
  Finite f;
  if (coeff != 0) f.emplace(n, coeff);
  return finite(domain, std::move(f));
}

DualElement DualElement::recursive(Domain domain, Recursive rep) {
  if (rep.order < 1) throw std::invalid_argument("recursive order must be >= 1");
  if (rep.h.size() != static_cast<std::size_t>(rep.order)) {
    throw std::invalid_argument("recursion coefficient count must equal the order");
  }
  if (domain == Domain::Laurent) {
    if (rep.h.back() == 0) {
      throw std::invalid_argument("laurent recursion needs h_r != 0");
    }
    if (rep.seeds.size() != static_cast<std::size_t>(rep.order)) {
      throw std::invalid_argument("laurent recursion needs exactly r seeds");
    }
  } else {
    if (rep.anchor != 0) {
      throw std::invalid_argument("poly recursion must anchor at 0");
    }
    if (rep.seeds.size() != static_cast<std::size_t>(rep.order) + 1) {
      throw std::invalid_argument("poly recursion needs exactly r+1 seeds");
    }
  }
  return DualElement(domain, std::move(rep));
}

const std::map<std::int64_t, Scalar>& DualElement::finite_terms() const& {
  if (!is_finite()) throw std::logic_error("not a finite-support dual element");
  return std::get<Finite>(rep_);
}

std::map<std::int64_t, Scalar> DualElement::finite_terms() && {
  if (!is_finite()) throw std::logic_error("not a finite-support dual element");
  return std::move(std::get<Finite>(rep_));
}

const DualElement::Recursive& DualElement::recursive_rep() const {
  if (is_finite()) throw std::logic_error("not a recursive dual element");
  return std::get<Recursive>(rep_);
}

bool DualElement::is_zero() const {
  if (is_finite()) return std::get<Finite>(rep_).empty();
  const auto& r = std::get<Recursive>(rep_);
  return std::all_of(r.seeds.begin(), r.seeds.end(),
                     [](const Scalar& s) { return s == 0; });
}

std::vector<Scalar> coefficients_range(const DualElement& f, std::int64_t lo,
                                       std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty coefficient range");
  if (f.domain() == Domain::Poly && lo < 0) {
    throw std::invalid_argument("negative index on poly domain");
  }
  std::vector<Scalar> out;
  out.reserve(hi - lo + 1);
  if (f.is_finite()) {
    const auto& terms = f.finite_terms();
    for (std::int64_t n = lo; n <= hi; ++n) {
      const auto it = terms.find(n);
      out.push_back(it == terms.end() ? Scalar(0) : it->second);
    }
    return out;
  }
  const auto& rep = f.recursive_rep();
  const int r = rep.order;
  const std::int64_t seed_lo = rep.anchor;
  const std::int64_t seed_hi = rep.anchor + static_cast<std::int64_t>(rep.seeds.size()) - 1;
  const std::int64_t full_lo = std::min(lo, seed_lo);
  const std::int64_t full_hi = std::max(hi, seed_hi);
  std::vector<Scalar> buf(full_hi - full_lo + 1, Scalar(0));
  auto at = [&](std::int64_t n) -> Scalar& { return buf[n - full_lo]; };
  for (std::size_t i = 0; i < rep.seeds.size(); ++i) {
    at(seed_lo + static_cast<std::int64_t>(i)) = rep.seeds[i];
  }
  for (std::int64_t n = seed_hi + 1; n <= full_hi; ++n) {
    Scalar v(0);
    for (int i = 1; i <= r; ++i) v += rep.h[i - 1] * at(n - i);
    at(n) = v;
  }
  // backward extension exists on the Laurent domain only (h_r != 0)
  for (std::int64_t n = seed_lo - 1; n >= full_lo; --n) {
    Scalar v = at(n + r);
    for (int i = 1; i < r; ++i) v -= rep.h[i - 1] * at(n + r - i);
    at(n) = v / rep.h[r - 1];
  }
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(at(n));
  return out;
}

Scalar coefficient_at(const DualElement& f, std::int64_t n) {
  return coefficients_range(f, n, n).front();
}

Scalar pairing(const DualElement& f, const LaurentElement& g) {
  if (f.domain() != g.domain()) {
    throw std::invalid_argument("domain mismatch in pairing");
  }
  if (g.is_zero()) return Scalar(0);
  const std::int64_t lo = g.terms().begin()->first;
  const std::int64_t hi = g.terms().rbegin()->first;
  const auto fs = coefficients_range(f, lo, hi);
  Scalar acc(0);
  for (const auto& [e, c] : g.terms()) acc += fs[e - lo] * c;
  return acc;
}

bool is_in_restricted_dual(const DualElement& f) {
  if (f.domain() == Domain::Poly) return true;
  if (f.is_finite()) return f.is_zero();
  return true;  // construction already guarantees h_r != 0
}

std::optional<Recurrence> infer_recurrence(const std::vector<Scalar>& values) {
  const std::size_t n_vals = values.size();
  if (n_vals < 2) throw std::invalid_argument("need at least 2 values");
  // Berlekamp-Massey over Q; connection polynomial convention
  // s_n + sum_{i>=1} c_i s_{n-i} = 0.
  std::vector<Scalar> conn{Scalar(1)}, prev{Scalar(1)};
  int len = 0, gap = 1;
  Scalar last_disc(1);
  for (std::size_t n = 0; n < n_vals; ++n) {
    Scalar disc = values[n];
    for (int i = 1; i <= len; ++i) disc += conn[i] * values[n - i];
    if (disc == 0) {
      ++gap;
      continue;
    }
    const Scalar factor = disc / last_disc;
    if (2 * len <= static_cast<int>(n)) {
      std::vector<Scalar> keep = conn;
      if (conn.size() < prev.size() + gap) conn.resize(prev.size() + gap, Scalar(0));
      for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= factor * prev[i];
      len = static_cast<int>(n) + 1 - len;
      prev = std::move(keep);
      last_disc = disc;
      gap = 1;
    } else {
      if (conn.size() < prev.size() + gap) conn.resize(prev.size() + gap, Scalar(0));
      for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= factor * prev[i];
      ++gap;
    }
  }
  if (len == 0) {
    // identically zero window: the zero sequence has minimal order 1, h = (0)
    return Recurrence{1, {Scalar(0)}};
  }
  if (2 * len > static_cast<int>(n_vals)) return std::nullopt;
  Recurrence rec;
  rec.order = len;
  rec.h.resize(len, Scalar(0));
  for (int i = 1; i <= len; ++i) {
    rec.h[i - 1] = i < static_cast<int>(conn.size()) ? -conn[i] : Scalar(0);
  }
  for (std::size_t n = rec.order; n < n_vals; ++n) {
    Scalar v(0);
    for (int i = 1; i <= rec.order; ++i) v += rec.h[i - 1] * values[n - i];
    if (v != values[n]) return std::nullopt;
  }
  return rec;
}

Scalar DualTensor2::coeff(std::int64_t i, std::int64_t j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void DualTensor2::add_term(std::int64_t i, std::int64_t j, const Scalar& c) {
  if (c == 0 || !window_.contains(i) || !window_.contains(j)) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DualTensor2 mu_dual(std::int64_t n, Domain domain, Window window) {
  if (domain == Domain::Poly) {
    if (n < 0) throw std::invalid_argument("mu_dual needs n >= 0 on poly domain");
    DualTensor2 out(Window(0, std::max<std::int64_t>(n, 0)));
    for (std::int64_t i = 0; i <= n; ++i) out.add_term(i, n - i, Scalar(1));
    return out;
  }
  DualTensor2 out(window);
  for (std::int64_t i = window.lo; i <= window.hi; ++i) {
    out.add_term(i, n - i, Scalar(1));
  }
  return out;
}

DualElement partial_dual_derivation(std::int64_t n, Domain domain) {
  if (domain == Domain::Poly && n < 0) {
    throw std::invalid_argument("negative epsilon index on poly domain");
  }
  return DualElement::epsilon(domain, n + 1, Scalar(n + 1));
}

DualTensor2 cobracket_dual(std::int64_t n, Domain domain, Window window) {
  if (domain == Domain::Poly && n < 0) {
    throw std::invalid_argument("cobracket_dual needs n >= 0 on poly domain");
  }
  const Window out_window =
      domain == Domain::Poly ? Window(0, n + 1) : window;

  // route 1: (id (x) d° - d° (x) id) mu°(eps^n), built over a window padded
  // by one so every in-window coefficient receives all its contributions
  const Window padded(out_window.lo - 1, out_window.hi + 1);
  const DualTensor2 mu = mu_dual(n, domain, padded);
  DualTensor2 routed(out_window);
  for (const auto& [key, c] : mu.terms()) {
    const auto& [i, j] = key;
    routed.add_term(i, j + 1, c * Scalar(j + 1));
    routed.add_term(i + 1, j, -c * Scalar(i + 1));
  }

  // route 2: the closed form sum_{i+j=n+1} (j-i) eps^i (x) eps^j
  DualTensor2 closed(out_window);
  for (std::int64_t i = out_window.lo; i <= out_window.hi; ++i) {
    const std::int64_t j = n + 1 - i;
    if (domain == Domain::Poly && j < 0) continue;
    closed.add_term(i, j, Scalar(j - i));
  }

  if (!(routed == closed)) {
    throw std::logic_error("dual cobracket routes disagree");
  }
  return routed;
}

QPoly characteristic_polynomial(const DualElement::Recursive& rep) {
  std::vector<Scalar> v(rep.order + 1, Scalar(0));
  v[rep.order] = 1;
  for (int i = 1; i <= rep.order; ++i) v[rep.order - i] = -rep.h[i - 1];
  return QPoly(std::move(v));
}

DecomposeResult decompose_components(const DualElement& f) {
  if (!is_in_restricted_dual(f)) {
    throw std::invalid_argument("element is not in the restricted dual");
  }
  if (f.is_finite()) {
    Decomposition d;
    d.finite_part = f.finite_terms();
    return d;
  }
  const auto& rep = f.recursive_rep();
  if (f.is_zero()) return Decomposition{};

  const QPoly charpoly = characteristic_polynomial(rep);
  const auto factors = factor_over_q(charpoly);
  const bool all_rational_roots =
      std::all_of(factors.begin(), factors.end(), [](const PolyFactor& pf) {
        return pf.factor.degree() == 1 && pf.certified_irreducible;
      });
  if (!all_rational_roots) return IrreducibleFactorReport{factors};

  // roots with multiplicities; a monic linear factor x + c has root -c
  std::vector<std::pair<Scalar, int>> roots;
  int zero_mult = 0;
  for (const auto& pf : factors) {
    const Scalar root = -pf.factor.coeff(0);
    if (root == 0) {
      zero_mult = pf.multiplicity;
    } else {
      roots.emplace_back(root, pf.multiplicity);
    }
  }

  const int unknowns = rep.order - zero_mult;
  std::vector<Component> components;
  if (unknowns > 0) {
    // sample where the recurrence already governs the sequence
    const std::int64_t n0 =
        f.domain() == Domain::Laurent ? rep.anchor : rep.order + 1;
    const auto samples = coefficients_range(f, n0, n0 + unknowns - 1);
    std::vector<std::vector<Scalar>> m(unknowns, std::vector<Scalar>(unknowns));
    for (int row = 0; row < unknowns; ++row) {
      const std::int64_t n = n0 + row;
      int col = 0;
      for (const auto& [a, mult] : roots) {
        const Scalar an = pow_scalar(a, n);
        Scalar nt(1);
        for (int t = 0; t < mult; ++t) {
          m[row][col++] = nt * an;
          nt *= Scalar(n);
        }
      }
    }
    const auto gamma = solve_linear(std::move(m), samples);
    int col = 0;
    for (const auto& [a, mult] : roots) {
      std::vector<Scalar> poly;
      for (int t = 0; t < mult; ++t) poly.push_back(gamma[col++]);
      QPoly p(std::move(poly));
      if (!p.is_zero()) components.push_back({a, std::move(p)});
    }
  }

  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) { return a.root < b.root; });
  Decomposition d;
  d.components = std::move(components);
  auto steady_at = [&d](std::int64_t n) {
    Scalar acc(0);
    for (const auto& comp : d.components) {
      acc += comp.poly.eval(Scalar(n)) * pow_scalar(comp.root, n);
    }
    return acc;
  };
  if (f.domain() == Domain::Poly) {
    // whatever the geometric parts miss below the recurrence horizon is the
    // finitely supported a = 0 component
    const auto head = coefficients_range(f, 0, rep.order);
    for (std::int64_t n = 0; n <= rep.order; ++n) {
      const Scalar diff = head[n] - steady_at(n);
      if (diff != 0) d.finite_part.emplace(n, diff);
    }
  }

  // reconstruction must be exact; spot-check a window around the seeds
  const std::int64_t check_lo =
      f.domain() == Domain::Laurent ? rep.anchor - rep.order - 2 : 0;
  const std::int64_t check_hi = rep.anchor + 3 * rep.order + 2;
  const auto vals = coefficients_range(f, check_lo, check_hi);
  for (std::int64_t n = check_lo; n <= check_hi; ++n) {
    Scalar expect = steady_at(n);
    if (const auto it = d.finite_part.find(n); it != d.finite_part.end()) {
      expect += it->second;
    }
    if (expect != vals[n - check_lo]) {
      throw std::logic_error("component reconstruction mismatch");
    }
  }
  return d;
}

RationalFunctionRep to_rational_function(const DualElement& f) {
  if (f.domain() != Domain::Poly) {
    throw std::invalid_argument(
        "rational-function form exists on the poly domain only");
  }
  if (f.is_finite()) {
    std::vector<Scalar> num;
    for (const auto& [e, c] : f.finite_terms()) {
      if (num.size() <= static_cast<std::size_t>(e)) num.resize(e + 1, Scalar(0));
      num[e] = c;
    }
    return {QPoly(std::move(num)), QPoly::constant(Scalar(1))};
  }
  const auto& rep = f.recursive_rep();
  std::vector<Scalar> den_v(rep.order + 1, Scalar(0));
  den_v[0] = 1;
  for (int i = 1; i <= rep.order; ++i) den_v[i] = -rep.h[i - 1];
  QPoly den(std::move(den_v));
  // num = den * F truncated; the recursion kills every term past degree r
  std::vector<Scalar> num_v(rep.order + 1, Scalar(0));
  for (int m = 0; m <= rep.order; ++m) {
    Scalar v = rep.seeds[m];
    for (int i = 1; i <= std::min(m, rep.order); ++i) {
      v -= rep.h[i - 1] * rep.seeds[m - i];
    }
    num_v[m] = v;
  }
  QPoly num(std::move(num_v));
  const QPoly g = QPoly::gcd(num, den);
  if (g.degree() >= 1) {
    num = num / g;
    den = den / g;
  }
  const Scalar d0 = den.coeff(0);
  num *= Scalar(1) / d0;
  den *= Scalar(1) / d0;
  return {num, den};
}

DualElement from_rational_function(const RationalFunctionRep& rf) {
  if (rf.den.is_zero() || rf.den.coeff(0) == 0) {
    throw std::invalid_argument("denominator must not vanish at 0");
  }
  const Scalar d0 = rf.den.coeff(0);
  QPoly num = rf.num * (Scalar(1) / d0);
  QPoly den = rf.den * (Scalar(1) / d0);
  if (den.degree() == 0) {
    std::map<std::int64_t, Scalar> coeffs;
    for (int i = 0; i <= num.degree(); ++i) {
      if (num.coeff(i) != 0) coeffs.emplace(i, num.coeff(i));
    }
    return DualElement::finite(Domain::Poly, std::move(coeffs));
  }
  const int order = std::max(den.degree(), num.degree());
  DualElement::Recursive rep;
  rep.order = order;
  rep.anchor = 0;
  rep.h.resize(order, Scalar(0));
  for (int i = 1; i <= den.degree(); ++i) rep.h[i - 1] = -den.coeff(i);
  rep.seeds.resize(order + 1, Scalar(0));
  for (int m = 0; m <= order; ++m) {
    Scalar v = num.coeff(m);
    for (int i = 1; i <= std::min(m, den.degree()); ++i) {
      v -= den.coeff(i) * rep.seeds[m - i];
    }
    rep.seeds[m] = v;
  }
  return DualElement::recursive(Domain::Poly, std::move(rep));
}

int translate_rank(AlgebraKind kind, const DualElement& f, Window window) {
  if (f.domain() != domain_of(kind)) {
    throw std::invalid_argument("dual element does not match the algebra's domain");
  }
  std::int64_t lo = window.lo;
  if (domain_of(kind) == Domain::Poly) lo = std::max<std::int64_t>(lo, 0);
  if (lo > window.hi) return 0;
  std::vector<std::vector<Scalar>> rows;
  for (std::int64_t i = lo; i <= window.hi; ++i) {
    const LieElement xi = LieElement::monomial(kind, i);
    std::vector<Scalar> row;
    row.reserve(window.hi - lo + 1);
    for (std::int64_t j = lo; j <= window.hi; ++j) {
      const LieElement xj = LieElement::monomial(kind, j);
      row.push_back(pairing(f, bracket(kind, xi, xj).body));
    }
    rows.push_back(std::move(row));
  }
  return gaussian_rank(std::move(rows));
}

}  // namespace liedual
