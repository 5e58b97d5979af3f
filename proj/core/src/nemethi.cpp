#include "finsurg/nemethi.hpp"

#include "finsurg/errors.hpp"
#include "finsurg/numtheory.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace finsurg {

namespace {

long long ceil_div_pos(long long num, long long den) {
  return (num + den - 1) / den;  // num, den > 0
}

// |H1| = α1 α2 α3 |e| as an integer.
long long h1_from_invariants(const NemethiInvariants& inv) {
  Rational h1 = Rational(inv.fibers[0].alpha) * Rational(inv.fibers[1].alpha) *
                Rational(inv.fibers[2].alpha) * inv.e.abs();
  if (!h1.is_integer()) throw consistency_error("|H1| did not evaluate to an integer");
  return static_cast<long long>(h1.num());
}

// i beyond which s(i) <= 0 is forced for this a0: ceil((4 + a0)/|e|).
long long s_check_cutoff(const NemethiInvariants& inv, long long a0) {
  long long e_num = std::llabs(static_cast<long long>(inv.e.num()));
  long long e_den = static_cast<long long>(inv.e.den());
  return ceil_div_pos((4 + a0) * e_den, e_num);
}

bool is_solution(const NemethiInvariants& inv, const SpincVector& v, long long cutoff) {
  for (long long i = 1; i <= cutoff; ++i)
    if (s_function(inv, v, i) > 0) return false;
  return true;
}

}  // namespace

std::string spinc_str(const SpincVector& v) {
  return "(" + std::to_string(v.a0) + "," + std::to_string(v.a1) + "," + std::to_string(v.a2) +
         "," + std::to_string(v.a3) + ")";
}

long long s_function(const NemethiInvariants& inv, const SpincVector& v, long long i) {
  if (i < 1) throw std::invalid_argument("s_function: i must be positive");
  long long value = 1 + v.a0 + i * inv.e0;
  const long long a[3] = {v.a1, v.a2, v.a3};
  for (int l = 0; l < 3; ++l)
    value += floor_div(i * inv.fibers[static_cast<size_t>(l)].omega + a[l],
                       inv.fibers[static_cast<size_t>(l)].alpha);
  return value;
}

std::vector<SpincVector> enumerate_spinc(const NemethiInvariants& inv) {
  if (!inv.e.is_negative()) throw std::invalid_argument("enumerate_spinc: e must be negative");

  const long long a0_max = -1 - inv.e0;
  std::vector<SpincVector> out;
  for (long long a0 = 0; a0 <= a0_max; ++a0) {
    const long long cutoff = s_check_cutoff(inv, a0);
    for (long long a1 = 0; a1 < inv.fibers[0].alpha; ++a1)
      for (long long a2 = 0; a2 < inv.fibers[1].alpha; ++a2)
        for (long long a3 = 0; a3 < inv.fibers[2].alpha; ++a3) {
          SpincVector v{a0, a1, a2, a3};
          if (is_solution(inv, v, cutoff)) out.push_back(v);
        }
  }
  // Loop order already yields lexicographic order.
  const long long h1 = h1_from_invariants(inv);
  if (static_cast<long long>(out.size()) != h1)
    throw consistency_error("Spin^c enumeration found " + std::to_string(out.size()) +
                            " vectors, expected |H1| = " + std::to_string(h1));
  return out;
}

Rational k2s(const NemethiInvariants& inv) {
  Rational dedekind_total(0);
  for (const NemethiFiber& f : inv.fibers) dedekind_total += dedekind_sum(f.omega, f.alpha);
  return inv.eps * inv.eps * inv.e + inv.e + Rational(5) - Rational(12) * dedekind_total;
}

Rational chi(const NemethiInvariants& inv, const SpincVector& v) {
  const long long a[3] = {v.a1, v.a2, v.a3};

  Rational a_tilde(v.a0);
  for (int l = 0; l < 3; ++l)
    a_tilde += Rational(a[l], inv.fibers[static_cast<size_t>(l)].alpha);

  Rational neg_chi = Rational(v.a0 + v.a1 + v.a2 + v.a3, 2);
  neg_chi += inv.eps * a_tilde / Rational(2);
  neg_chi += a_tilde * a_tilde / (Rational(2) * inv.e);

  // Σ_{i=1}^{a_l} {i ω'/α} = (Σ_i (i ω' mod α)) / α, exactly.
  for (int l = 0; l < 3; ++l) {
    const NemethiFiber& f = inv.fibers[static_cast<size_t>(l)];
    long long residue_sum = 0;
    long long r = 0;
    const long long w = mod_floor(f.omega_inv, f.alpha);
    for (long long i = 1; i <= a[l]; ++i) {
      r += w;
      if (r >= f.alpha) r -= f.alpha;
      residue_sum += r;
    }
    neg_chi -= Rational(residue_sum, f.alpha);
  }
  return -neg_chi;
}

long long tau_min(const NemethiInvariants& inv, const SpincVector& v) {
  long long e_num = std::llabs(static_cast<long long>(inv.e.num()));
  long long e_den = static_cast<long long>(inv.e.den());
  const long long i_max = ceil_div_pos(2 * e_den, e_num) + 1;

  const long long a[3] = {v.a1, v.a2, v.a3};
  long long tau = 0;
  long long best = 0;
  for (long long i = 0; i < i_max; ++i) {
    long long delta = 1 + v.a0 - i * inv.e0;
    for (int l = 0; l < 3; ++l)
      delta += floor_div(-i * inv.fibers[static_cast<size_t>(l)].omega + a[l],
                         inv.fibers[static_cast<size_t>(l)].alpha);
    tau += delta;
    if (tau < best) best = tau;
  }
  return best;
}

Rational d_invariant(const NemethiInvariants& inv, const SpincVector& v) {
  return k2s(inv) / Rational(4) - Rational(2) * chi(inv, v) - Rational(2 * tau_min(inv, v));
}

DInvariantTable d_table(long long m, long long n) {
  if (m < 1) throw std::invalid_argument("d_table: m must be positive");
  if (std::llabs(n) < 2)
    throw std::invalid_argument("d_table: |n| must be at least 2 (|n| = 1 is a lens space)");
  if (std::gcd(2 * m, std::llabs(n)) != 1)
    throw std::invalid_argument("d_table: 2m and n must be coprime");

  DInvariantTable table;
  table.manifold = dihedral_family(m, n);

  SeifertPresentation neg = table.manifold;
  table.negated_from_reverse = !euler_number(neg).is_negative();
  if (table.negated_from_reverse) neg = reverse_orientation(neg);

  const NemethiInvariants inv = nemethi_form(neg);
  const Rational k = k2s(inv);
  for (const SpincVector& v : enumerate_spinc(inv)) {
    Rational d = k / Rational(4) - Rational(2) * chi(inv, v) - Rational(2 * tau_min(inv, v));
    if (table.negated_from_reverse) d = -d;
    table.entries.emplace_back(v, std::move(d));
  }
  if (static_cast<long long>(table.entries.size()) != 4 * m)
    throw consistency_error("d_table: entry count does not equal 4m");
  return table;
}

}  // namespace finsurg
