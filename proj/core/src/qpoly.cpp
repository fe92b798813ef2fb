#include "liedual/qpoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace liedual {

QPoly::QPoly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
QPoly::QPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Scalar& c) { return QPoly({c}); }

QPoly QPoly::monomial(std::size_t degree, const Scalar& coeff) {
  std::vector<Scalar> v(degree + 1, Scalar(0));
  v[degree] = coeff;
  return QPoly(std::move(v));
}

Scalar QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
}

Scalar QPoly::leading() const {
  return coeffs_.empty() ? Scalar(0) : coeffs_.back();
}

Scalar QPoly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  QPoly rem = num;
  if (num.degree() < den.degree()) return {QPoly(), rem};
  std::vector<Scalar> q(num.degree() - den.degree() + 1, Scalar(0));
  const Scalar lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const std::size_t shift = rem.degree() - den.degree();
    const Scalar f = rem.leading() / lead;
    q[shift] = f;
    rem -= QPoly::monomial(shift, f) * den;
  }
  return {QPoly(std::move(q)), rem};
}

QPoly operator/(const QPoly& a, const QPoly& b) { return QPoly::divmod(a, b).first; }

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return QPoly();
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Scalar(static_cast<long long>(i));
  }
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly out = *this;
  const Scalar inv = Scalar(1) / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << scalar_str(c);
    } else {
      if (c != 1) os << scalar_str(c) << "*";
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// ---- integer-side helpers for root finding and Kronecker factoring ----

std::vector<BigInt> to_primitive_int(const QPoly& p) {
  BigInt lcm_den(1);
  for (const auto& c : p.coeffs()) {
    const BigInt d = denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> v(p.coeffs().size());
  BigInt content(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = numerator(p.coeffs()[i]) * (lcm_den / denominator(p.coeffs()[i]));
    content = boost::multiprecision::gcd(content, v[i]);
  }
  if (content > 1) {
    for (auto& x : v) x /= content;
  }
  return v;
}

BigInt eval_int(const std::vector<BigInt>& p, const BigInt& x) {
  BigInt acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// All positive divisors, or nullopt when v cannot be fully factored within
// the trial-division budget.
std::optional<std::vector<BigInt>> positive_divisors(BigInt v) {
  if (v < 0) v = -v;
  if (v == 0) return std::nullopt;
  std::vector<std::pair<BigInt, int>> primes;
  auto push = [&](const BigInt& p, int e) { primes.emplace_back(p, e); };
  int e2 = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++e2;
  }
  if (e2 > 0) push(2, e2);
  BigInt d(3);
  long long steps = 0;
  while (d * d <= v) {
    if (++steps > 2'000'000) return std::nullopt;
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      push(d, e);
    }
    d += 2;
  }
  if (v > 1) push(v, 1);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    BigInt pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Rational roots of a squarefree polynomial (each with multiplicity one).
// nullopt when the divisor enumeration budget is exceeded.
std::optional<std::vector<Scalar>> squarefree_rational_roots(const QPoly& p) {
  std::vector<Scalar> roots;
  QPoly work = p;
  // zero roots
  while (!work.is_zero() && work.coeff(0) == 0) {
    roots.push_back(Scalar(0));
    work = work / QPoly::monomial(1);
  }
  if (work.degree() < 1) return roots;
  const auto ip = to_primitive_int(work);
  const auto nums = positive_divisors(ip.front());
  const auto dens = positive_divisors(ip.back());
  if (!nums || !dens) return std::nullopt;
  for (const auto& pn : *nums) {
    for (const auto& qd : *dens) {
      if (boost::multiprecision::gcd(pn, qd) != 1) continue;
      for (int sign : {1, -1}) {
        const Scalar cand = scalar_from_fraction(sign * pn, qd);
        if (work.eval(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Yun square-free decomposition of a monic polynomial:
// p = prod parts[i].first ^ parts[i].second with each part monic squarefree.
std::vector<std::pair<QPoly, int>> yun_squarefree(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> parts;
  QPoly g = QPoly::gcd(p, p.derivative());
  if (g.degree() < 1) {
    parts.emplace_back(p, 1);
    return parts;
  }
  QPoly w = p / g;
  int i = 1;
  while (w.degree() >= 1) {
    QPoly y = QPoly::gcd(w, g);
    QPoly z = w / y;
    if (z.degree() >= 1) parts.emplace_back(z.monic(), i);
    g = g / y;
    w = std::move(y);
    ++i;
  }
  return parts;
}

// Lagrange interpolation through (points[t], values[t]).
QPoly interpolate(const std::vector<BigInt>& points, const std::vector<BigInt>& values) {
  QPoly acc;
  for (std::size_t t = 0; t < points.size(); ++t) {
    QPoly basis = QPoly::constant(Scalar(1));
    Scalar denom(1);
    for (std::size_t s = 0; s < points.size(); ++s) {
      if (s == t) continue;
      basis = basis * QPoly{-Scalar(points[s]), Scalar(1)};
      denom *= Scalar(points[t]) - Scalar(points[s]);
    }
    acc += basis * (Scalar(values[t]) / denom);
  }
  return acc;
}

enum class KronOutcome { Split, Irreducible, GaveUp };

// Kronecker search for a proper factor of a monic squarefree polynomial with
// no rational roots. Any monic rational factor of the primitive integer form
// is an integer polynomial (Gauss), so candidate factor values at integer
// points must divide the polynomial's values there.
KronOutcome kronecker_split(const QPoly& p, QPoly& left, QPoly& right) {
  constexpr long long kComboCap = 500'000;
  const int d = p.degree();
  const auto ip = to_primitive_int(p);
  bool gave_up = false;
  for (int k = 2; k <= d / 2; ++k) {
    std::vector<BigInt> points;
    for (int t = 0; points.size() < static_cast<std::size_t>(k + 1); ++t) {
      points.push_back(t % 2 == 0 ? BigInt(t / 2) : BigInt(-(t / 2 + 1)));
    }
    std::vector<std::vector<BigInt>> choice(k + 1);
    long long combos = 1;
    bool ok = true;
    for (int t = 0; t <= k; ++t) {
      const auto divs = positive_divisors(eval_int(ip, points[t]));
      if (!divs) {
        ok = false;
        break;
      }
      for (const auto& dv : *divs) {
        choice[t].push_back(dv);
        if (t > 0) choice[t].push_back(-dv);  // sign of the factor is normalized at t=0
      }
      combos *= static_cast<long long>(choice[t].size());
      if (combos > kComboCap) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      gave_up = true;
      continue;
    }
    std::vector<std::size_t> idx(k + 1, 0);
    std::vector<BigInt> vals(k + 1);
    while (true) {
      for (int t = 0; t <= k; ++t) vals[t] = choice[t][idx[t]];
      const QPoly cand = interpolate(points, vals);
      if (cand.degree() == k) {
        const auto [q, r] = QPoly::divmod(p, cand);
        if (r.is_zero()) {
          left = cand.monic();
          right = q.monic();
          return KronOutcome::Split;
        }
      }
      int t = 0;
      while (t <= k && ++idx[t] == choice[t].size()) {
        idx[t] = 0;
        ++t;
      }
      if (t > k) break;
    }
  }
  return gave_up ? KronOutcome::GaveUp : KronOutcome::Irreducible;
}

// Factors a monic squarefree polynomial with no rational roots.
void factor_squarefree_core(const QPoly& p, int multiplicity,
                            std::vector<PolyFactor>& out) {
  constexpr int kKroneckerMaxDegree = 10;
  if (p.degree() <= 0) return;
  // degree 2 or 3 without rational roots is irreducible over Q
  if (p.degree() <= 3) {
    out.push_back({p, multiplicity, true});
    return;
  }
  if (p.degree() > kKroneckerMaxDegree) {
    out.push_back({p, multiplicity, false});
    return;
  }
  QPoly left, right;
  switch (kronecker_split(p, left, right)) {
    case KronOutcome::Split:
      factor_squarefree_core(left, multiplicity, out);
      factor_squarefree_core(right, multiplicity, out);
      return;
    case KronOutcome::Irreducible:
      out.push_back({p, multiplicity, true});
      return;
    case KronOutcome::GaveUp:
      out.push_back({p, multiplicity, false});
      return;
  }
}

}  // namespace

std::vector<std::pair<Scalar, int>> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  std::vector<std::pair<Scalar, int>> out;
  for (const auto& [part, mult] : yun_squarefree(p.monic())) {
    const auto roots = squarefree_rational_roots(part);
    if (!roots) continue;
    for (const auto& r : *roots) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolyFactor> factor_over_q(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_over_q of zero polynomial");
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : yun_squarefree(p.monic())) {
    QPoly rest = part;
    const auto roots = squarefree_rational_roots(part);
    if (roots) {
      for (const auto& r : *roots) {
        out.push_back({QPoly{-r, Scalar(1)}, mult, true});
        rest = rest / QPoly{-r, Scalar(1)};
      }
      factor_squarefree_core(rest.monic(), mult, out);
    } else {
      // root enumeration exceeded its budget; report the part unresolved
      out.push_back({part, mult, false});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) {
      return a.factor.degree() < b.factor.degree();
    }
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

}  // namespace liedual
