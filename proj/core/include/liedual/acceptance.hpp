#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedual/dual_bracket.hpp"

namespace liedual::accept {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  long long checks = 0;    // individual exact comparisons performed
  long long failures = 0;  // comparisons that came out unequal
  double seconds = 0.0;
  std::string detail;
};

struct Options {
  /// Overrides the criterion's main index window (criteria 3-7).
  std::optional<Window> window;
  /// Sign-flips one closed-form case before checking (criteria 3 and 4).
  Mutation mutation = Mutation::None;
};

/// Suite names, one per criterion:
///   1 cybe, 2 subalgebra, 3 witt-dual, 4 xy-dual, 5 jacobi, 6 cobracket,
///   7 axioms, 8 membership, 9 mutation.
int criterion_from_suite(const std::string& name);
std::vector<std::string> suite_names();

CriterionResult run_criterion(int index, const Options& opts = {});
std::vector<CriterionResult> run_all(const Options& opts = {});

}  // namespace liedual::accept
