#pragma once

#include "finsurg/rational.hpp"

namespace finsurg {

/// Sawtooth function ((x)): x − ⌊x⌋ − 1/2 for non-integer x, 0 on integers.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(p, q) = Σ_{i=1}^{q−1} ((i/q)) ((pi/q)).
///
/// Evaluated by the definition sum in O(q); s(p, 1) = 0 (empty sum).
/// Throws std::invalid_argument if q ≤ 0.
Rational dedekind_sum(long long p, long long q);

/// Right-hand side of the Dedekind reciprocity identity for coprime a, b ≥ 1:
/// (1/12)(a/b + b/a + 1/(ab)) − 1/4. Equals s(a,b) + s(b,a).
Rational reciprocity_rhs(long long a, long long b);

/// Modular inverse: the unique w' with 0 < w' ≤ a and w·w' ≡ 1 (mod a).
/// For a = 1 returns 1. Throws std::invalid_argument unless gcd(w, a) = 1
/// and a ≥ 1.
long long mod_inverse(long long w, long long a);

/// Floor division for possibly-negative numerators (d > 0).
constexpr long long floor_div(long long n, long long d) {
  long long q = n / d;
  return (n % d != 0 && (n < 0) != (d < 0)) ? q - 1 : q;
}

/// n mod d normalized into [0, d) for d > 0.
constexpr long long mod_floor(long long n, long long d) { return n - floor_div(n, d) * d; }

}  // namespace finsurg
