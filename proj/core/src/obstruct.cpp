#include "finsurg/obstruct.hpp"

#include "finsurg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace finsurg {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ObstructedByBounds: return "ObstructedByBounds";
    case Verdict::RealizedByTorusKnot: return "RealizedByTorusKnot";
    case Verdict::ExcludedNonCyclicH1: return "ExcludedNonCyclicH1";
    case Verdict::InvalidPresentation: return "InvalidPresentation";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

ObstructionReport evaluate_lens_member(long long m, long long n) {
  ObstructionReport rep;
  rep.m = m;
  rep.n = n;
  // Y_1 = L(4m, 2m+1), Y_{−1} = L(4m, 2m−1).
  const long long p = 4 * m;
  const long long q = n > 0 ? 2 * m + 1 : 2 * m - 1;
  Rational lo = lens_d(p, q, 0), hi = lo;
  for (long long i = 1; i < p; ++i) {
    Rational d = lens_d(p, q, i);
    if (d < lo) lo = d;
    if (d > hi) hi = d;
  }
  rep.d_min = lo;
  rep.d_max = hi;
  rep.verdict = Verdict::RealizedByTorusKnot;
  rep.realization = oriented_realization(m, n);
  return rep;
}

}  // namespace

std::optional<Realization> oriented_realization(long long m, long long n) {
  if (n == 0) throw std::invalid_argument("oriented_realization: n must be nonzero");
  auto rec = dihedral_realization(m, std::llabs(n));
  if (!rec) return rec;
  // 2rq − 4m = +2 exactly when the positive coefficient lands on Y_{+|n|}.
  const bool positive_branch = 2 * rec->r * rec->q - 4 * m == 2;
  const bool direct = (n > 0) == positive_branch;
  if (direct) return rec;
  if (rec->unknot)
    rec->q = 4 * m - rec->q;  // −L(p,q) = L(p, p−q), still a positive unknot surgery
  else
    rec->mirrored = true;  // −S³_{p/q}(K) = S³_{−p/q}(mirror K)
  return rec;
}

ObstructionReport evaluate(long long m, long long n) {
  if (m < 1) throw std::invalid_argument("evaluate: m must be positive");

  ObstructionReport rep;
  rep.m = m;
  rep.n = n;

  if (n != 0 && n % 2 == 0) {
    rep.verdict = Verdict::ExcludedNonCyclicH1;
    return rep;
  }
  if (n == 0 || std::gcd(m, std::llabs(n)) != 1) {
    rep.verdict = Verdict::InvalidPresentation;
    return rep;
  }
  if (std::llabs(n) == 1) return evaluate_lens_member(m, n);

  const DInvariantTable table = d_table(m, n);
  const auto [lower, upper] = d_bounds(m);

  auto min_it = table.entries.begin(), max_it = table.entries.begin();
  for (auto it = table.entries.begin(); it != table.entries.end(); ++it) {
    if (it->second < min_it->second) min_it = it;
    if (it->second > max_it->second) max_it = it;
  }
  rep.d_min = min_it->second;
  rep.d_max = max_it->second;

  if (min_it->second < lower || max_it->second > upper) {
    rep.verdict = Verdict::ObstructedByBounds;
    if (min_it->second < lower) {
      rep.witness_vector = min_it->first;
      rep.witness_d = min_it->second;
      rep.bound_violated = "lower";
    } else {
      rep.witness_vector = max_it->first;
      rep.witness_d = max_it->second;
      rep.bound_violated = "upper";
    }
    return rep;
  }

  if (auto rec = oriented_realization(m, n)) {
    rep.verdict = Verdict::RealizedByTorusKnot;
    rep.realization = rec;
    return rep;
  }

  rep.verdict = Verdict::Undetermined;
  return rep;
}

ScanResult scan(long long m, long long n_lo, long long n_hi, unsigned workers) {
  if (n_lo > n_hi) throw std::invalid_argument("scan: empty range (n_lo > n_hi)");

  const size_t count = static_cast<size_t>(n_hi - n_lo + 1);
  ScanResult result;
  result.reports.resize(count);

  if (workers < 1) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count));

  if (workers == 1) {
    for (size_t idx = 0; idx < count; ++idx)
      result.reports[idx] = evaluate(m, n_lo + static_cast<long long>(idx));
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
      for (;;) {
        size_t idx = next.fetch_add(1);
        if (idx >= count) return;
        try {
          result.reports[idx] = evaluate(m, n_lo + static_cast<long long>(idx));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  ScanSummary& s = result.summary;
  s.m = m;
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  s.threshold_16m = 16 * m;
  long long max_unobstructed = -1;
  for (const ObstructionReport& rep : result.reports) {
    switch (rep.verdict) {
      case Verdict::ObstructedByBounds: ++s.count_obstructed; break;
      case Verdict::RealizedByTorusKnot: ++s.count_realized; break;
      case Verdict::Undetermined: ++s.count_undetermined; break;
      case Verdict::ExcludedNonCyclicH1: ++s.count_excluded; break;
      case Verdict::InvalidPresentation: ++s.count_invalid; break;
    }
    if (rep.verdict == Verdict::RealizedByTorusKnot || rep.verdict == Verdict::Undetermined)
      max_unobstructed = std::max(max_unobstructed, std::llabs(rep.n));
  }
  s.n_star = max_unobstructed + 1;
  s.within_16m = s.n_star <= s.threshold_16m;
  return result;
}

UnboundednessWitness unboundedness_witness(long long m, const Rational& target, long long n_cap) {
  if (m < 1) throw std::invalid_argument("unboundedness_witness: m must be positive");
  if (n_cap < 2) throw std::invalid_argument("unboundedness_witness: cap must be at least 2");

  for (long long n = 2; n <= n_cap; ++n) {
    if (std::gcd(2 * m, n) != 1) continue;
    const DInvariantTable table = d_table(m, n);
    const auto* best = &table.entries.front();
    for (const auto& entry : table.entries)
      if (entry.second.abs() > best->second.abs()) best = &entry;
    if (best->second.abs() >= target) return {n, best->first, best->second};
  }
  throw search_exhausted("unboundedness_witness: no |d| >= " + target.str() +
                         " found for m = " + std::to_string(m) +
                         " up to n = " + std::to_string(n_cap));
}

}  // namespace finsurg
