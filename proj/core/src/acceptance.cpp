#include "liedual/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "liedual/parallel.hpp"

namespace liedual::accept {

namespace {

const std::vector<std::string> kSuites = {
    "cybe",   "subalgebra", "witt-dual",  "xy-dual", "jacobi",
    "cobracket", "axioms",  "membership", "mutation"};

std::vector<std::int64_t> witt_family_ns(AlgebraKind kind, std::int64_t lo,
                                         std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (n == 1) continue;
    if (kind == AlgebraKind::OneSidedWitt && n < 0) continue;
    out.push_back(n);
  }
  return out;
}

std::vector<BialgebraParams> xy_grid() {
  const std::vector<Scalar> values = {Scalar(1), Scalar(-1), Scalar(1) / Scalar(2),
                                      Scalar(3)};
  std::vector<BialgebraParams> out;
  for (std::int64_t n = -4; n <= 4; ++n) {
    if (n == 1) continue;
    for (const auto& ell : values) {
      for (const auto& k : values) out.emplace_back(n, ell, k);
    }
  }
  return out;
}

struct Tally {
  long long checks = 0;
  long long failures = 0;
  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
  void merge(const Tally& rhs) {
    checks += rhs.checks;
    failures += rhs.failures;
  }
};

// oracle vs closed form for one family; every (i, j) in the window, m over
// the support bound
void equivalence_sweep(const BracketFamily& family, Window window, Mutation mutation,
                       Tally& tally) {
  const Domain domain = domain_of(family.kind());
  std::int64_t lo = window.lo;
  if (domain == Domain::Poly) lo = std::max<std::int64_t>(lo, 0);
  OracleSweep sweep(family.kind(), family.r_matrix());
  for (std::int64_t i = lo; i <= window.hi; ++i) {
    for (std::int64_t j = lo; j <= window.hi; ++j) {
      const DualElement closed = family.bracket(i, j, mutation);
      const Window support = oracle_support_window(family.n(), i, j);
      std::int64_t m_lo = support.lo;
      if (domain == Domain::Poly) m_lo = std::max<std::int64_t>(m_lo, 0);
      for (const auto& [e, c] : closed.finite_terms()) {
        tally.expect(m_lo <= e && e <= support.hi);  // support bound holds
      }
      for (std::int64_t m = m_lo; m <= support.hi; ++m) {
        Scalar expected(0);
        const auto it = closed.finite_terms().find(m);
        if (it != closed.finite_terms().end()) expected = it->second;
        tally.expect(sweep.value(i, j, m) == expected);
      }
    }
  }
}

CriterionResult criterion_cybe(const Options&) {
  Tally tally;
  for (const AlgebraKind kind :
       {AlgebraKind::Witt, AlgebraKind::Virasoro, AlgebraKind::OneSidedWitt}) {
    for (const std::int64_t n : witt_family_ns(kind, -5, 5)) {
      const RMatrix r = witt_family_r(kind, n);
      tally.expect(cybe_residual(kind, r.tensor()).is_zero());
    }
  }
  return {1, "cybe", tally.failures == 0, tally.checks, tally.failures, 0.0,
          "r = x(x)x^n - x^n(x)x solves the CYBE on all three algebras"};
}

CriterionResult criterion_subalgebra(const Options&) {
  Tally tally;
  for (const AlgebraKind kind : {AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    for (const auto& p : xy_grid()) {
      const auto [x_elem, y_elem] = build_subalgebra_pair(kind, p);
      tally.expect(bracket(kind, x_elem, y_elem) == y_elem);
      tally.expect(cybe_residual(kind, xy_family_r(kind, p).tensor()).is_zero());
    }
  }
  return {2, "subalgebra", tally.failures == 0, tally.checks, tally.failures, 0.0,
          "[X,Y] = Y and C(X(x)Y - Y(x)X) = 0 over the (n, ell, k) grid"};
}

CriterionResult criterion_witt_dual(const Options& opts) {
  struct Config {
    AlgebraKind kind;
    std::int64_t n;
  };
  std::vector<Config> configs;
  for (const AlgebraKind kind :
       {AlgebraKind::OneSidedWitt, AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    for (const std::int64_t n : {-3, -2, -1, 0, 2, 3, 4, 5}) {
      if (kind == AlgebraKind::OneSidedWitt && n < 0) continue;
      configs.push_back({kind, n});
    }
  }
  std::vector<Tally> tallies(configs.size());
  parallel_for(configs.size(), [&](std::size_t idx) {
    const Window window = opts.window.value_or(Window(-8, 8));
    equivalence_sweep(BracketFamily::witt(configs[idx].kind, configs[idx].n), window,
                      opts.mutation, tallies[idx]);
  });
  Tally tally;
  for (const auto& t : tallies) tally.merge(t);
  std::ostringstream detail;
  detail << configs.size() << " (kind, n) configs, " << tally.failures
         << " oracle mismatches";
  return {3, "witt-dual", tally.failures == 0, tally.checks, tally.failures, 0.0,
          detail.str()};
}

CriterionResult criterion_xy_dual(const Options& opts) {
  struct Config {
    AlgebraKind kind;
    BialgebraParams params;
  };
  std::vector<Config> configs;
  for (const AlgebraKind kind : {AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    for (const auto& p : xy_grid()) configs.push_back({kind, p});
  }
  std::vector<Tally> tallies(configs.size());
  parallel_for(configs.size(), [&](std::size_t idx) {
    const Window window = opts.window.value_or(Window(-8, 8));
    const auto& cfg = configs[idx];
    Tally& tally = tallies[idx];
    const BracketFamily family = BracketFamily::xy(cfg.kind, cfg.params);
    equivalence_sweep(family, window, opts.mutation, tally);
    // termwise A_ij - A_ji decomposition
    for (std::int64_t i = window.lo; i <= window.hi; ++i) {
      for (std::int64_t j = window.lo; j <= window.hi; ++j) {
        const DualElement closed = family.bracket(i, j, opts.mutation);
        const DualElement a_ij = xy_half_term(cfg.params, i, j);
        const DualElement a_ji = xy_half_term(cfg.params, j, i);
        auto acc = a_ij.finite_terms();
        for (const auto& [e, c] : a_ji.finite_terms()) {
          auto [it, inserted] = acc.emplace(e, -c);
          if (!inserted) {
            it->second -= c;
            if (it->second == 0) acc.erase(it);
          }
        }
        tally.expect(acc == closed.finite_terms());
      }
    }
  });
  Tally tally;
  for (const auto& t : tallies) tally.merge(t);
  std::ostringstream detail;
  detail << configs.size() << " (kind, n, ell, k) configs, " << tally.failures
         << " mismatches";
  return {4, "xy-dual", tally.failures == 0, tally.checks, tally.failures, 0.0,
          detail.str()};
}

CriterionResult criterion_jacobi(const Options& opts) {
  const auto grid = xy_grid();
  std::vector<Tally> tallies(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const Window window = opts.window.value_or(Window(-5, 5));
    Tally& tally = tallies[idx];
    const BracketFamily family = BracketFamily::xy(AlgebraKind::Witt, grid[idx]);
    for (std::int64_t i = window.lo; i <= window.hi; ++i) {
      for (std::int64_t j = window.lo; j <= window.hi; ++j) {
        for (std::int64_t l = window.lo; l <= window.hi; ++l) {
          tally.expect(jacobi_check(family, i, j, l));
        }
      }
    }
    const Window anti = opts.window.value_or(Window(-8, 8));
    for (std::int64_t i = anti.lo; i <= anti.hi; ++i) {
      for (std::int64_t j = anti.lo; j <= anti.hi; ++j) {
        tally.expect(antisymmetry_check(family, i, j));
      }
    }
  });
  Tally tally;
  for (const auto& t : tallies) tally.merge(t);
  std::ostringstream detail;
  detail << grid.size() << " parameter sets, Jacobi plus antisymmetry";
  return {5, "jacobi", tally.failures == 0, tally.checks, tally.failures, 0.0,
          detail.str()};
}

CriterionResult criterion_cobracket(const Options& opts) {
  Tally tally;
  const Window window = opts.window.value_or(Window(-8, 8));
  for (const AlgebraKind kind : {AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    std::vector<DualTensor2> deltas;
    for (std::int64_t n = window.lo; n <= window.hi; ++n) {
      deltas.push_back(cobracket_dual(n, Domain::Laurent, window));
    }
    for (std::int64_t a = window.lo; a <= window.hi; ++a) {
      for (std::int64_t b = window.lo; b <= window.hi; ++b) {
        const LaurentElement w =
            bracket(kind, LieElement::monomial(kind, a), LieElement::monomial(kind, b))
                .body;
        for (std::int64_t n = window.lo; n <= window.hi; ++n) {
          const Scalar lhs = deltas[n - window.lo].coeff(a, b);
          const Scalar rhs = pairing(DualElement::epsilon(Domain::Laurent, n), w);
          tally.expect(lhs == rhs);
        }
      }
    }
  }
  {
    const Window poly_window(std::max<std::int64_t>(window.lo, 0), window.hi);
    std::vector<DualTensor2> deltas;
    for (std::int64_t n = poly_window.lo; n <= poly_window.hi; ++n) {
      deltas.push_back(cobracket_dual(n, Domain::Poly, poly_window));
    }
    for (std::int64_t a = poly_window.lo; a <= poly_window.hi; ++a) {
      for (std::int64_t b = poly_window.lo; b <= poly_window.hi; ++b) {
        const LaurentElement w =
            bracket(AlgebraKind::OneSidedWitt, LieElement::monomial(AlgebraKind::OneSidedWitt, a),
                    LieElement::monomial(AlgebraKind::OneSidedWitt, b))
                .body;
        for (std::int64_t n = poly_window.lo; n <= poly_window.hi; ++n) {
          const DualTensor2& delta = deltas[n - poly_window.lo];
          const Scalar lhs = delta.window().contains(a) && delta.window().contains(b)
                                 ? delta.coeff(a, b)
                                 : Scalar(0);
          const Scalar rhs = pairing(DualElement::epsilon(Domain::Poly, n), w);
          tally.expect(lhs == rhs);
        }
      }
    }
  }
  return {6, "cobracket", tally.failures == 0, tally.checks, tally.failures, 0.0,
          "<Delta(e^n), x^a (x) x^b> = <e^n, [x^a, x^b]> on both domains"};
}

CriterionResult criterion_axioms(const Options& opts) {
  struct Family {
    AlgebraKind kind;
    RMatrix r;
  };
  std::vector<Family> families;
  for (const AlgebraKind kind :
       {AlgebraKind::OneSidedWitt, AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    for (const std::int64_t n : {-3, -2, -1, 0, 2, 3, 4, 5}) {
      if (kind == AlgebraKind::OneSidedWitt && n < 0) continue;
      families.push_back({kind, witt_family_r(kind, n)});
    }
  }
  for (const AlgebraKind kind : {AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    for (const auto& p : xy_grid()) families.push_back({kind, xy_family_r(kind, p)});
  }
  std::vector<Tally> tallies(families.size());
  parallel_for(families.size(), [&](std::size_t idx) {
    const Window window = opts.window.value_or(Window(-6, 6));
    Tally& tally = tallies[idx];
    const auto& fam = families[idx];
    std::int64_t lo = window.lo;
    if (domain_of(fam.kind) == Domain::Poly) lo = std::max<std::int64_t>(lo, 0);
    for (std::int64_t a = lo; a <= window.hi; ++a) {
      const LieElement xa = LieElement::monomial(fam.kind, a);
      tally.expect(check_cojacobi(fam.kind, fam.r, xa));
      for (std::int64_t b = lo; b <= window.hi; ++b) {
        tally.expect(check_compatibility(fam.kind, fam.r, xa,
                                         LieElement::monomial(fam.kind, b)));
      }
    }
  });
  Tally tally;
  for (const auto& t : tallies) tally.merge(t);
  std::ostringstream detail;
  detail << families.size() << " r-matrices, cocycle + co-Jacobi axioms";
  return {7, "axioms", tally.failures == 0, tally.checks, tally.failures, 0.0,
          detail.str()};
}

CriterionResult criterion_membership(const Options&) {
  Tally tally;
  // Fibonacci on the poly domain
  const DualElement fib_poly = DualElement::recursive(
      Domain::Poly, {2, {Scalar(1), Scalar(1)}, 0, {Scalar(0), Scalar(1), Scalar(1)}});
  tally.expect(is_in_restricted_dual(fib_poly));
  const auto rec = infer_recurrence(coefficients_range(fib_poly, 0, 7));
  tally.expect(rec.has_value() && rec->order == 2 &&
               rec->h == std::vector<Scalar>{Scalar(1), Scalar(1)});
  // nonzero finite support is never two-sided recursive
  tally.expect(!is_in_restricted_dual(
      DualElement::finite(Domain::Laurent, {{3, Scalar(1)}})));
  // 2^n + 3*5^n splits into its two components
  const DualElement two_five = DualElement::recursive(
      Domain::Laurent, {2, {Scalar(7), Scalar(-10)}, 0, {Scalar(4), Scalar(17)}});
  const auto result = decompose_components(two_five);
  bool ok = std::holds_alternative<Decomposition>(result);
  if (ok) {
    const auto& d = std::get<Decomposition>(result);
    ok = d.components.size() == 2 && d.finite_part.empty() &&
         d.components[0] == Component{Scalar(2), QPoly{Scalar(1)}} &&
         d.components[1] == Component{Scalar(5), QPoly{Scalar(3)}};
    if (ok) {
      for (std::int64_t n = -8; n <= 8 && ok; ++n) {
        Scalar acc(0);
        for (const auto& comp : d.components) {
          Scalar p(1);
          for (std::int64_t t = 0; t < n; ++t) p *= comp.root;
          for (std::int64_t t = 0; t > n; --t) p /= comp.root;
          acc += comp.poly.eval(Scalar(n)) * p;
        }
        ok = acc == coefficient_at(two_five, n);
      }
    }
  }
  tally.expect(ok);
  // Fibonacci's characteristic polynomial is irreducible
  const auto fib_result = decompose_components(fib_poly);
  bool fib_ok = std::holds_alternative<IrreducibleFactorReport>(fib_result);
  if (fib_ok) {
    const auto& report = std::get<IrreducibleFactorReport>(fib_result);
    fib_ok = report.factors.size() == 1 &&
             report.factors[0].factor == QPoly{Scalar(-1), Scalar(-1), Scalar(1)} &&
             report.factors[0].multiplicity == 1 &&
             report.factors[0].certified_irreducible;
  }
  tally.expect(fib_ok);
  return {8, "membership", tally.failures == 0, tally.checks, tally.failures, 0.0,
          "recursive membership, inference, and component decomposition"};
}

CriterionResult criterion_mutation(const Options& opts) {
  Tally tally;
  std::ostringstream detail;
  for (const Mutation m : {Mutation::WittCase1Sign, Mutation::WittCase2Sign}) {
    Options mutated = opts;
    mutated.mutation = m;
    const CriterionResult r = criterion_witt_dual(mutated);
    tally.expect(!r.passed);
    detail << mutation_name(m) << (r.passed ? " MISSED; " : " detected; ");
  }
  for (const Mutation m :
       {Mutation::XYCase1Sign, Mutation::XYCase2Sign, Mutation::XYCase3Sign}) {
    Options mutated = opts;
    mutated.mutation = m;
    const CriterionResult r = criterion_xy_dual(mutated);
    tally.expect(!r.passed);
    detail << mutation_name(m) << (r.passed ? " MISSED; " : " detected; ");
  }
  return {9, "mutation", tally.failures == 0, tally.checks, tally.failures, 0.0,
          detail.str()};
}

}  // namespace

int criterion_from_suite(const std::string& name) {
  for (std::size_t i = 0; i < kSuites.size(); ++i) {
    if (kSuites[i] == name) return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() { return kSuites; }

CriterionResult run_criterion(int index, const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  switch (index) {
    case 1: result = criterion_cybe(opts); break;
    case 2: result = criterion_subalgebra(opts); break;
    case 3: result = criterion_witt_dual(opts); break;
    case 4: result = criterion_xy_dual(opts); break;
    case 5: result = criterion_jacobi(opts); break;
    case 6: result = criterion_cobracket(opts); break;
    case 7: result = criterion_axioms(opts); break;
    case 8: result = criterion_membership(opts); break;
    case 9: result = criterion_mutation(opts); break;
    default: throw std::invalid_argument("criterion index out of range");
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= 9; ++i) out.push_back(run_criterion(i, opts));
  return out;
}

}  // namespace liedual::accept
