#include "finsurg/surgery.hpp"

#include "finsurg/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace finsurg {

namespace {

// Terminates at p = 1 (S³): after a q = 1 step the recursion lands on
// (1, 0, 0), which is S³ as well.
Rational lens_d_rec(long long p, long long q, long long i) {
  if (p == 1) return Rational(0);
  long long t = 2 * i + 1 - p - q;
  Rational term(BigInt(t) * t - BigInt(p) * q, BigInt(4) * p * q);  // −(pq − t²)/(4pq)
  return term - lens_d_rec(q, p % q, i % q);
}

}  // namespace

Rational lens_d(long long p, long long q, long long i) {
  if (p < 1 || q < 1) throw std::invalid_argument("lens_d: p and q must be positive");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("lens_d: p and q must be coprime");
  if (i < 0 || i >= p) throw std::invalid_argument("lens_d: i out of range [0, p)");
  return lens_d_rec(p, q, i);
}

Rational lens_d_closed_4m(long long m, long long i) {
  if (m < 1) throw std::invalid_argument("lens_d_closed_4m: m must be positive");
  if (i < 0 || i > 2 * m) throw std::invalid_argument("lens_d_closed_4m: i out of range [0, 2m]");
  long long t = i - 2 * m;
  return Rational(-1, 4) + Rational(t * t, 4 * m);
}

namespace {

// Exact division of integer polynomials (ascending coefficients);
// the remainder must vanish.
std::vector<long long> poly_div(std::vector<long long> num, const std::vector<long long>& den) {
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  for (size_t k = quot.size(); k-- > 0;) {
    long long c = num[k + den.size() - 1] / den.back();
    quot[k] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (long long c : num)
    if (c != 0) throw std::logic_error("poly_div: nonzero remainder");
  return quot;
}

std::vector<long long> cyclotomic_like(long long n) {  // t^n − 1
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  return p;
}

}  // namespace

AlexanderPoly torus_alexander(long long r, long long s) {
  if (r > s) std::swap(r, s);
  if (r < 1 || s < 2) throw std::invalid_argument("torus_alexander: parameters out of range");
  if (std::gcd(r, s) != 1) throw std::invalid_argument("torus_alexander: parameters must be coprime");
  if (r == 1) return AlexanderPoly{{1}};  // unknot

  // Δ(t) = (t^{rs} − 1)(t − 1) / ((t^r − 1)(t^s − 1)), degree (r−1)(s−1).
  std::vector<long long> num = cyclotomic_like(r * s);
  num = poly_div(std::move(num), cyclotomic_like(r));  // Σ t^{rk}
  std::vector<long long> scaled(num.size() + 1, 0);    // × (t − 1)
  for (size_t j = 0; j < num.size(); ++j) {
    scaled[j + 1] += num[j];
    scaled[j] -= num[j];
  }
  std::vector<long long> delta = poly_div(std::move(scaled), cyclotomic_like(s));

  const long long g = (r - 1) * (s - 1) / 2;
  AlexanderPoly poly;
  poly.coeffs.assign(delta.begin() + g, delta.end());
  return poly;
}

bool validate_lspace(const AlexanderPoly& poly) {
  if (poly.coeffs.empty()) return false;
  const long long g = poly.genus();
  if (poly.at(g) != 1) return false;
  if (g > 1 && poly.at(g - 1) != -1) return false;
  long long last = 0;
  for (long long j = g; j >= 0; --j) {
    long long c = poly.at(j);
    if (c == 0) continue;
    if (c != 1 && c != -1) return false;
    if (last != 0 && c != -last) return false;
    last = c;
  }
  return true;
}

long long torsion_sum(const AlexanderPoly& poly, long long i) {
  if (i < 0) throw std::invalid_argument("torsion_sum: i must be nonnegative");
  if (!validate_lspace(poly))
    throw std::invalid_argument("torsion_sum: polynomial is not L-space-valid");
  long long total = 0;
  for (long long j = 1; i + j <= poly.genus(); ++j) total += j * poly.at(i + j);
  return total;
}

Rational surgery_d(const SurgerySpec& spec, long long i) {
  if (spec.q != 1)
    throw std::invalid_argument("surgery_d: only integral surgeries (q = 1) are supported");
  if (spec.p < 1) throw std::invalid_argument("surgery_d: p must be positive");
  if (i < 0 || i >= spec.p) throw std::invalid_argument("surgery_d: i out of range [0, p)");

  AlexanderPoly poly = std::holds_alternative<TorusKnot>(spec.knot)
                           ? torus_alexander(std::get<TorusKnot>(spec.knot).r,
                                             std::get<TorusKnot>(spec.knot).s)
                           : std::get<AlexanderPoly>(spec.knot);
  long long reflected = std::min(i, spec.p - i);
  return lens_d(spec.p, 1, i) - Rational(2 * torsion_sum(poly, reflected));
}

bool lspace_condition(long long p, long long q, long long g) {
  if (q < 1) throw std::invalid_argument("lspace_condition: q must be positive");
  if (std::gcd(std::llabs(p), q) != 1)
    throw std::invalid_argument("lspace_condition: p and q must be coprime");
  return Rational(p, q) >= Rational(2 * g - 1);
}

bool genus_within_4m_cap(long long m, long long g) { return g <= 2 * m; }

std::pair<Rational, Rational> d_bounds(long long m) {
  if (m < 1) throw std::invalid_argument("d_bounds: m must be positive");
  return {Rational(-16 * m + 7, 4), Rational(4 * m - 1, 4)};
}

std::array<long long, 3> moser_multiplicities(long long r, long long s, long long p, long long q) {
  if (r < 2 || s < 2 || std::gcd(r, s) != 1)
    throw std::invalid_argument("moser_multiplicities: invalid torus knot parameters");
  if (q < 1 || std::gcd(std::llabs(p), q) != 1)
    throw std::invalid_argument("moser_multiplicities: invalid surgery coefficient");
  if (p == r * s * q)
    throw std::invalid_argument("moser_multiplicities: p/q = rs is the reducible slope");
  std::array<long long, 3> mult{r, s, std::llabs(r * s * q - p)};
  std::sort(mult.begin(), mult.end());
  return mult;
}

SeifertPresentation trefoil_surgery_presentation(long long p, long long q) {
  if (q < 1 || std::gcd(std::llabs(p), q) != 1)
    throw std::invalid_argument("trefoil_surgery_presentation: invalid coefficient");
  if (p == 6 * q)
    throw std::invalid_argument("trefoil_surgery_presentation: p/q = 6 is the reducible slope");
  long long alpha = 6 * q - p;
  long long omega = q;
  if (alpha < 0) {
    alpha = -alpha;
    omega = -omega;
  }
  SeifertPresentation out;
  out.b = -1;
  out.fibers = {{2, 1}, {3, 1}, {alpha, omega}};
  validate(out);
  return out;
}

std::string realization_str(const Realization& rec) {
  std::string knot = rec.unknot ? "U" : "T(" + std::to_string(rec.r) + ",2)";
  if (rec.mirrored) knot = "mirror(" + knot + ")";
  long long p = rec.mirrored ? -rec.p : rec.p;
  return knot + " " + std::to_string(p) + "/" + std::to_string(rec.q);
}

std::optional<Realization> dihedral_realization(long long m, long long n) {
  if (m < 1) throw std::invalid_argument("dihedral_realization: m must be positive");
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("dihedral_realization: n must be odd and positive");
  if (std::gcd(2 * m, n) != 1)
    throw std::invalid_argument("dihedral_realization: 2m and n must be coprime");

  if (n == 1) {
    // Degenerate lens member: Y_1 = L(4m, 2m+1) = S³_{4m/(2m+1)}(U).
    return Realization{true, 1, 4 * m, 2 * m + 1, false};
  }
  if ((2 * m + 1) % n == 0) return Realization{false, n, 4 * m, (2 * m + 1) / n, false};
  if ((2 * m - 1) % n == 0) return Realization{false, n, 4 * m, (2 * m - 1) / n, false};
  return std::nullopt;
}

}  // namespace finsurg
