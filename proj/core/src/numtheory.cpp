#include "finsurg/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace finsurg {

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor_int()) - Rational(1, 2);
}

Rational dedekind_sum(long long p, long long q) {
  if (q <= 0) throw std::invalid_argument("dedekind_sum: q must be positive");
  // Σ ((i/q))((pi/q)) with ((i/q)) = (2i − q)/(2q) for 0 < i < q and
  // ((pi/q)) = (2(pi mod q) − q)/(2q) unless q | pi, where the term is 0.
  // Accumulating the integer numerator over the common denominator 4q²
  // keeps the whole sum exact; pi mod q is tracked incrementally.
  const long long pm = mod_floor(p, q);
  long long r = 0;
  long long acc = 0;
  for (long long i = 1; i < q; ++i) {
    r += pm;
    if (r >= q) r -= q;
    if (r == 0) continue;
    acc += (2 * i - q) * (2 * r - q);
  }
  return Rational(acc, 4 * q * q);
}

Rational reciprocity_rhs(long long a, long long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("reciprocity_rhs: arguments must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("reciprocity_rhs: arguments must be coprime");
  Rational sum = Rational(a, b) + Rational(b, a) + Rational(BigInt(1), BigInt(a) * b);
  return sum / Rational(12) - Rational(1, 4);
}

long long mod_inverse(long long w, long long a) {
  if (a < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (a == 1) return 1;
  long long w0 = mod_floor(w, a);
  if (std::gcd(w0, a) != 1) throw std::invalid_argument("mod_inverse: arguments must be coprime");
  // Extended Euclid on (w0, a).
  long long r0 = w0, r1 = a;
  long long x0 = 1, x1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  return mod_floor(x0, a);  // in [1, a−1] since a > 1 and gcd = 1
}

}  // namespace finsurg
