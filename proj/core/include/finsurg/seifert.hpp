#pragma once

#include "finsurg/rational.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace finsurg {

/// One exceptional fiber of multiplicity alpha and Seifert invariant omega,
/// with gcd(alpha, omega) = 1 and alpha ≥ 1.
struct Fiber {
  long long alpha = 1;
  long long omega = 0;

  bool operator==(const Fiber&) const = default;
};

/// A Seifert fibered presentation (b; (α1,ω1), …) over S², with at most
/// three exceptional fibers. "Normalized" means every α ≥ 2 and 0 < ω < α.
struct SeifertPresentation {
  long long b = 0;
  std::vector<Fiber> fibers;  // size ≤ 3

  bool operator==(const SeifertPresentation&) const = default;
};

/// Throws std::invalid_argument unless every fiber has alpha ≥ 1,
/// gcd(alpha, omega) = 1, and there are at most three fibers.
void validate(const SeifertPresentation& p);

bool is_normalized(const SeifertPresentation& p);

/// Orbifold Euler number e = b + Σ ω_l/α_l.
Rational euler_number(const SeifertPresentation& p);

/// Equivalent presentation with every α ≥ 2 and 0 < ω < α. Each shift
/// ω → ω − kα is compensated by b → b + k; fibers with α = 1 are deleted
/// with b → b + ω. Fiber order is preserved among survivors, and the
/// Euler number is unchanged.
SeifertPresentation normalize(const SeifertPresentation& p);

/// The same manifold with reversed orientation: negate b and every ω,
/// then normalize. An involution on normal forms.
SeifertPresentation reverse_orientation(const SeifertPresentation& p);

/// |H1| = α1·α2·α3·|b + Σ ω_l/α_l| (missing fibers contribute factor 1 and
/// summand 0). Zero signals infinite H1. Always an integer-valued rational.
Rational h1_order(const SeifertPresentation& p);

enum class EllipticTag {
  Icosahedral,
  Octahedral,
  Tetrahedral,
  Dihedral,
  Lens,
  NotElliptic,
};

std::string elliptic_tag_name(EllipticTag tag);

/// Classification of a Seifert presentation by its multiplicities.
/// h1 is the order of H1 (0 when infinite). cyclic_h1 is meaningful for
/// the elliptic tags: a dihedral space has cyclic H1 exactly when its
/// third multiplicity is odd; types I/O/T and lens spaces are cyclic.
struct EllipticType {
  EllipticTag tag = EllipticTag::NotElliptic;
  long long h1 = 0;
  bool cyclic_h1 = false;
};

/// Classifies a normalized presentation by the multiset of multiplicities:
/// {2,3,5} icosahedral, {2,3,4} octahedral, {2,3,3} tetrahedral,
/// {2,2,n} dihedral, ≤ 2 fibers lens, anything else not elliptic.
/// Throws std::invalid_argument on non-normalized input.
EllipticType classify_elliptic(const SeifertPresentation& p);

/// Member of the dihedral family: for n > 0 the normal form of
/// (−1; (2,1), (2,1), (n, m)); for n < 0 the orientation reversal of the
/// |n| member. |H1| = 4m throughout. Requires gcd(m, |n|) = 1, n ≠ 0, m ≥ 1.
SeifertPresentation dihedral_family(long long m, long long n);

/// Invariants of a normalized, negative-definite (e < 0) presentation with
/// exactly three exceptional fibers, as consumed by the d-invariant engine.
struct NemethiFiber {
  long long alpha = 0;
  long long omega = 0;
  long long omega_inv = 0;  // 0 < ω' ≤ α, ω·ω' ≡ 1 (mod α)
};

struct NemethiInvariants {
  long long e0 = 0;
  std::array<NemethiFiber, 3> fibers{};
  Rational e;    // e0 + Σ ω/α, negative
  Rational eps;  // (2 − 3 + Σ 1/α)/e
};

/// Computes the invariants above. Throws std::invalid_argument when the
/// presentation is not normalized, does not have exactly three fibers
/// (unsupported shape), or has e ≥ 0 (not negative definite; reverse the
/// orientation first).
NemethiInvariants nemethi_form(const SeifertPresentation& p);

/// Text form "(b; ω1/α1, ω2/α2, ω3/α3)", e.g. "(-1; 1/2, 1/2, 3/5)" for
/// (−1; (2,1), (2,1), (5,3)). Parsing is exact and whitespace-insensitive.
SeifertPresentation parse_presentation(std::string_view text);
std::string format_presentation(const SeifertPresentation& p);

}  // namespace finsurg
