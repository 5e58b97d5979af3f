#pragma once

#include "finsurg/rational.hpp"
#include "finsurg/seifert.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace finsurg {

/// Representative vector (a0, a1, a2, a3) for a Spin^c structure of a
/// negative-definite three-fiber plumbing, with a0 ≥ 0 and 0 ≤ a_l < α_l.
struct SpincVector {
  long long a0 = 0;
  long long a1 = 0;
  long long a2 = 0;
  long long a3 = 0;

  auto operator<=>(const SpincVector&) const = default;
};

std::string spinc_str(const SpincVector& v);

/// s(i) = 1 + a0 + i·e0 + Σ_l ⌊(i·ω_l + a_l)/α_l⌋ for i ≥ 1. A vector
/// represents a Spin^c structure exactly when s(i) ≤ 0 for all i > 0.
long long s_function(const NemethiInvariants& inv, const SpincVector& v, long long i);

/// All vectors satisfying the constraints above. The search is finite:
/// s(1) ≥ 1 + a0 + e0 forces a0 ≤ −1 − e0, and ⌊x⌋ ≤ x gives
/// s(i) ≤ 4 + a0 + i·e, so s(i) ≤ 0 automatically once i ≥ (4 + a0)/|e|;
/// only i below that cutoff are tested. Results are sorted
/// lexicographically. Throws consistency_error unless the count equals
/// |H1| = α1·α2·α3·|e|.
std::vector<SpincVector> enumerate_spinc(const NemethiInvariants& inv);

/// K² + s = ε²e + e + 5 − 12·Σ_l s(ω_l, α_l). The constant 5 is specific
/// to three exceptional fibers.
Rational k2s(const NemethiInvariants& inv);

/// χ of the line bundle attached to a solution vector:
/// −χ = Σ_{l=0..3} a_l/2 + εã/2 + ã²/(2e) − Σ_l Σ_{i=1}^{a_l} {i·ω'_l/α_l},
/// with ã = a0 + Σ a_l/α_l.
Rational chi(const NemethiInvariants& inv, const SpincVector& v);

/// min_{i≥0} τ(i), where τ(0) = 0 and
/// τ(i+1) − τ(i) = 1 + a0 − i·e0 + Σ_l ⌊(−i·ω_l + a_l)/α_l⌋.
/// Δτ(i) ≥ a0 − 2 + i|e| > 0 for i > 2/|e|, so the minimum is attained
/// on 0 ≤ i ≤ ⌈2/|e|⌉ + 1.
long long tau_min(const NemethiInvariants& inv, const SpincVector& v);

/// d = (K² + s)/4 − 2χ − 2·min τ for a solution vector.
Rational d_invariant(const NemethiInvariants& inv, const SpincVector& v);

/// d-invariants of one dihedral family member Y_n, computed on the
/// negative-definite orientation. For n > 0 the stored values are the
/// negated plumbing values (d(Y,σ) = −d(−Y,σ̄)); for n < 0 they are the
/// plumbing values directly. Entries are keyed by the representative
/// vectors of the negative-definite side, sorted lexicographically.
struct DInvariantTable {
  SeifertPresentation manifold;                        // normal form of Y_n
  std::vector<std::pair<SpincVector, Rational>> entries;  // size 4m
  bool negated_from_reverse = false;                   // true when n > 0
};

/// Table for Y_n. Requires m ≥ 1, |n| ≥ 2 and gcd(2m, |n|) = 1 (|n| = 1 is
/// a lens space and is handled by the lens-space recursion instead).
DInvariantTable d_table(long long m, long long n);

}  // namespace finsurg
