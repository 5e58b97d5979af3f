#pragma once

#include "finsurg/rational.hpp"
#include "finsurg/seifert.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace finsurg {

/// Symmetric Alexander polynomial, stored as the coefficients a_0..a_g
/// (the negative-index half is implied by a_{-j} = a_j).
struct AlexanderPoly {
  std::vector<long long> coeffs;  // coeffs[j] = a_j; non-empty

  long long genus() const { return static_cast<long long>(coeffs.size()) - 1; }
  long long at(long long j) const {
    long long k = j < 0 ? -j : j;
    return k <= genus() ? coeffs[static_cast<size_t>(k)] : 0;
  }

  bool operator==(const AlexanderPoly&) const = default;
};

/// d-invariant of the lens space S³_{p/q}(U) in Spin^c structure i, by the
/// recursion d(p,q,i) = −(pq − (2i+1−p−q)²)/(4pq) − d(q, p mod q, i mod q),
/// grounded at d(S³) = 0. Requires gcd(p,q) = 1, p,q ≥ 1, 0 ≤ i < p.
Rational lens_d(long long p, long long q, long long i);

/// Closed form for L(4m, 1): −1/4 + (i − 2m)²/(4m), valid for 0 ≤ i ≤ 2m.
Rational lens_d_closed_4m(long long m, long long i);

/// Alexander polynomial of the (r,s) torus knot, normalized symmetric;
/// genus (r−1)(s−1)/2. Requires coprime r, s ≥ 2 — except that r = 1 is
/// accepted and yields the unknot polynomial.
AlexanderPoly torus_alexander(long long r, long long s);

/// True when the coefficients can belong to a knot with a lens-space-like
/// surgery: entries in {−1, 0, 1}, nonzero coefficients alternating in
/// sign from a_g = +1 downward, and a_{g−1} = −1 whenever g > 1.
bool validate_lspace(const AlexanderPoly& poly);

/// Torsion sum t_i = Σ_{j≥1} j·a_{i+j} for i ≥ 0 (terms vanish past g).
/// Requires an L-space-valid polynomial.
long long torsion_sum(const AlexanderPoly& poly, long long i);

struct TorusKnot {
  long long r = 2;
  long long s = 3;
};

/// Knot datum for a surgery: a torus knot or explicit Alexander
/// coefficients. Coefficient p/q with gcd(p,q) = 1, q ≥ 1.
struct SurgerySpec {
  std::variant<TorusKnot, AlexanderPoly> knot;
  long long p = 0;
  long long q = 1;
};

/// d(S³_p(K), i) = d(S³_p(U), i) − 2·t_{min(i, p−i)} for integral p > 0 and
/// 0 ≤ i < p. The reflected index keeps d(Y, i) = d(Y, p−i). Only q = 1 is
/// supported; other q throw std::invalid_argument.
Rational surgery_d(const SurgerySpec& spec, long long i);

/// Whether S³_{p/q}(K) is a Heegaard Floer L-space for a knot of genus g
/// admitting positive L-space surgeries: p/q ≥ 2g − 1, compared exactly.
bool lspace_condition(long long p, long long q, long long g);

/// Genus cap implied by the condition above at coefficient 4m: g ≤ 2m.
bool genus_within_4m_cap(long long m, long long g);

/// [lower, upper] = [−4m + 7/4, m − 1/4]: the range every d-invariant of
/// an integral 4m L-space surgery must lie in.
std::pair<Rational, Rational> d_bounds(long long m);

/// Multiplicities {r, s, |rsq − p|} of S³_{p/q}(T(r,s)), sorted. Requires
/// p/q ≠ rs (the reducible slope), gcd(p,q) = 1, q ≥ 1.
std::array<long long, 3> moser_multiplicities(long long r, long long s, long long p, long long q);

/// The presentation (−1; (2,1), (3,1), (6q−p, q)) of S³_{p/q}(T(3,2)),
/// with the third fiber sign-canonicalized when 6q − p < 0. Requires
/// p/q ≠ 6.
SeifertPresentation trefoil_surgery_presentation(long long p, long long q);

/// A torus-knot surgery description of a dihedral manifold.
struct Realization {
  bool unknot = false;  // degenerate r = 1 case (lens space)
  long long r = 0;      // knot is T(r, 2) when !unknot
  long long p = 0;
  long long q = 1;
  bool mirrored = false;  // set by callers describing the reversed orientation
};

std::string realization_str(const Realization& rec);

/// Torus-knot realization test for the dihedral manifold with third
/// multiplicity n (odd, positive, gcd(2m, n) = 1): a hit exists exactly
/// when n divides 2m+1 or 2m−1, giving T(n,2) with coefficient 4m/q,
/// q = (2m±1)/n. For n = 1 the knot degenerates to the unknot with
/// q = 2m−1. Returns empty when n divides neither.
std::optional<Realization> dihedral_realization(long long m, long long n);

}  // namespace finsurg
