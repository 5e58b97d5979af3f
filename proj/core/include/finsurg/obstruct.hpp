#pragma once

#include "finsurg/nemethi.hpp"
#include "finsurg/rational.hpp"
#include "finsurg/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finsurg {

enum class Verdict {
  ObstructedByBounds,
  RealizedByTorusKnot,
  ExcludedNonCyclicH1,
  InvalidPresentation,
  Undetermined,
};

std::string verdict_name(Verdict v);

/// Verdict for one dihedral family member, with witnessing data.
struct ObstructionReport {
  long long m = 0;
  long long n = 0;
  Verdict verdict = Verdict::Undetermined;

  // Present when d-invariants were computed (odd valid n).
  std::optional<Rational> d_min;
  std::optional<Rational> d_max;

  // ObstructedByBounds: the extremal entry and which bound it violates.
  std::optional<SpincVector> witness_vector;
  std::optional<Rational> witness_d;
  std::optional<std::string> bound_violated;  // "lower" or "upper"

  // RealizedByTorusKnot: the surgery description.
  std::optional<Realization> realization;
};

/// Applies the obstruction pipeline to Y_n:
///   even n            → ExcludedNonCyclicH1 (H1 = Z_2 × Z_{2m} is not cyclic);
///   gcd(m,|n|) ≠ 1    → InvalidPresentation (also n = 0);
///   |n| = 1           → RealizedByTorusKnot (lens space, unknot surgery);
///   some d outside the closed interval d_bounds(m), strictly
///                     → ObstructedByBounds (cannot be ±4m-surgery on a knot);
///   torus-knot realization hit → RealizedByTorusKnot;
///   otherwise         → Undetermined.
/// Boundary equality with a bound does not obstruct.
ObstructionReport evaluate(long long m, long long n);

struct ScanSummary {
  long long m = 0;
  long long n_lo = 0;
  long long n_hi = 0;
  /// Least N such that every valid odd |n| in [N, max|n|] within the range
  /// was ObstructedByBounds; 0 when every valid member was obstructed.
  long long n_star = 0;
  long long threshold_16m = 0;  // the 16m reference threshold
  bool within_16m = false;      // n_star ≤ 16m
  long long count_obstructed = 0;
  long long count_realized = 0;
  long long count_undetermined = 0;
  long long count_excluded = 0;
  long long count_invalid = 0;
};

struct ScanResult {
  std::vector<ObstructionReport> reports;  // ordered by n
  ScanSummary summary;
};

/// Evaluates every n in [n_lo, n_hi] (inclusive). Reports are ordered by n
/// regardless of worker count. Requires n_lo ≤ n_hi.
ScanResult scan(long long m, long long n_lo, long long n_hi, unsigned workers = 1);

/// Realization record oriented for the signed index n: the divisor branch
/// decides which orientation carries the positive coefficient
/// (2rq − 4m = +2 realizes Y_{+|n|}, −2 realizes Y_{−|n|}); the other side
/// is the mirror-knot surgery with negated coefficient, except that a
/// reversed unknot surgery is re-expressed positively via q → 4m − q.
std::optional<Realization> oriented_realization(long long m, long long n);

struct UnboundednessWitness {
  long long n = 0;
  SpincVector sigma;
  Rational d;
};

/// Least valid n ≥ 2 (odd, gcd(2m, n) = 1, scanning upward) whose table
/// contains |d(Y_n, σ)| ≥ target, with the witnessing entry. Throws
/// search_exhausted when no witness appears up to n_cap.
UnboundednessWitness unboundedness_witness(long long m, const Rational& target,
                                           long long n_cap = 100000);

}  // namespace finsurg
