#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dhindex/cycmap.hpp"
#include "dhindex/modarith.hpp"
#include "dhindex/report.hpp"

// The Diffie-Hellman mappings d(gamma^x) = gamma^(x^2) and
// D(gamma^x, gamma^y) = gamma^(xy), their index witnesses, and coincidence
// counting against arbitrary cyclotomic mappings.

namespace dhindex {

ExpMap dh_uni(u64 n);
BiExpMap dh_bi(u64 n);

// Index-n/2 representation of d for even n: ell = n/2, r the least positive
// integer congruent to n/2 mod 2, mult[i] = i^2 - i*r (mod n). Rejects odd n.
CyclotomicMap thm1_witness(u64 n);

// Agreement of f_a(y) = gamma^a * y^r with d, i.e. the roots of
// x^2 - r*x - a = 0 (mod n). `bound` is 2 exactly when n is prime; `ratio`
// carries count/sqrt(n) for inspection (no constant is asserted for
// composite n).
struct UniCoincidenceReport {
  u64 n = 1;
  u64 r = 0;
  u64 a = 0;
  std::vector<u64> points;
  u64 count = 0;
  std::optional<u64> bound;
  double ratio = 0.0;
};

UniCoincidenceReport uni_coincidences(u64 n, u64 r, u64 a);

// Exact best agreement any index-ell mapping can achieve with d:
// max over r of the per-coset-optimal choice of multipliers. Requires
// ell | n and n <= 200.
u64 max_coincidences_for_index(u64 n, u64 ell);

// Agreement of gamma^a * x^r1 * y^r2 with D, counted per y through
// gcd(y - r1, n) and enumerated via linear_congruence. `bound` is the exact
// finite bound sum over t | n of phi(n/t)*t.
struct BiCoincidenceReport {
  u64 n = 1;
  u64 r1 = 0;
  u64 r2 = 0;
  u64 a = 0;
  std::vector<std::pair<u64, u64>> points;
  u64 count = 0;
  u64 bound = 0;
};

BiCoincidenceReport bi_coincidences(u64 n, u64 r1, u64 r2, u64 a);

// lhs = sum over t | n of phi(n/t)*t, rhs = n * sum over d | n of phi(d)/d
// summed in exact rationals. `equal` asserts lhs = rhs, `within_tau_bound`
// asserts lhs <= tau(n)*n.
struct DivisorSumIdentity {
  u64 n = 1;
  u64 lhs = 0;
  Rational rhs;
  u64 tau_bound = 0;
  bool equal = false;
  bool within_tau_bound = false;
};

DivisorSumIdentity divisor_sum_identity(u64 n);

// D(gamma^a, gamma^b) computed from d alone: the exponent
// ((a+b)^2 - a^2 - b^2) / 2 mod n. Requires odd n (unique square roots);
// even n is rejected.
u64 bi_from_uni(u64 n, u64 a, u64 b);

// Verification sweeps. Each emits one row per parameter point in canonical
// order; `pass` aggregates every check made for that point.
//
//   t1: computed index of d equals n (n odd) or n/2 (n even); for even n the
//       explicit witness also tabulates back to d.
//   t2: for prime n, max coincidence count over all (r, a) is <= 2
//       (expected = 2). With composite_max set, extra "t2-empirical" rows
//       report the worst count/sqrt(n) ratio without asserting it.
//   t3: minimal index pairs of D equal {(n, n)}.
//   t4: fast bivariate coincidence count equals the n^2 scan and stays
//       within the divisor-sum bound (n_max <= 64).
void verify_thm1(u64 n_lo, u64 n_hi, const RowSink& sink);
void verify_thm2(u64 primes_up_to, std::optional<u64> composite_max,
                 const RowSink& sink);
void verify_thm3(u64 n_max, const RowSink& sink);
void verify_thm4(u64 n_max, u64 samples, u64 seed, const RowSink& sink);

}  // namespace dhindex
