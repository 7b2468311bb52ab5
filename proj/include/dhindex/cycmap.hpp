#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dhindex/modarith.hpp"
#include "dhindex/rng.hpp"

// Self-mappings of a cyclic group of order n in exponent representation:
// a map f with f(gamma^x) = gamma^(g(x)) is stored as the table g. The group
// itself never appears; everything is integer arithmetic mod n.

namespace dhindex {

// Arithmetic skeleton of the cyclic group of order n.
struct GroupCtx {
  u64 n = 1;
  Factorization fact;
  std::vector<u64> divs;

  explicit GroupCtx(u64 order);
};

// table[x] = g(x) in [0, n), length exactly n.
struct ExpMap {
  u64 n = 1;
  std::vector<u64> table;

  friend bool operator==(const ExpMap&, const ExpMap&) = default;
};

// Cyclotomic mapping of index ell | n and order r: exponents x with
// x = i (mod ell) map to mult[i] + r*x (mod n).
struct CyclotomicMap {
  u64 n = 1;
  u64 ell = 1;
  u64 r = 0;
  std::vector<u64> mult;
};

// table[x][y] = g(x, y) in [0, n), full n-by-n table.
struct BiExpMap {
  u64 n = 1;
  std::vector<std::vector<u64>> table;

  friend bool operator==(const BiExpMap&, const BiExpMap&) = default;
};

// Bivariate cyclotomic mapping of index pair (ell1, ell2) and order
// (r1, r2): g(x, y) = mult[x mod ell1][y mod ell2] + r1*x + r2*y (mod n).
struct BiCyclotomicMap {
  u64 n = 1;
  u64 ell1 = 1;
  u64 ell2 = 1;
  u64 r1 = 0;
  u64 r2 = 0;
  std::vector<std::vector<u64>> mult;
};

// Cyclotomic representation found for a map. r is stored as the least
// nonnegative representative of its class mod n/ell; canonical_r() reports
// n instead of 0 so the exponent is a positive integer.
struct IndexWitness {
  u64 n = 1;
  u64 ell = 1;
  u64 r = 0;
  std::vector<u64> mult;

  u64 canonical_r() const { return r == 0 ? n : r; }
  CyclotomicMap to_map() const { return {n, ell, r, mult}; }
};

struct BiIndexWitness {
  u64 n = 1;
  u64 ell1 = 1;
  u64 ell2 = 1;
  u64 r1 = 0;
  u64 r2 = 0;
  std::vector<std::vector<u64>> mult;

  u64 canonical_r1() const { return r1 == 0 ? n : r1; }
  u64 canonical_r2() const { return r2 == 0 ? n : r2; }
  BiCyclotomicMap to_map() const { return {n, ell1, ell2, r1, r2, mult}; }
};

// Structural invariant checks (ell | n, multiplier shape, entries in
// range); throw std::invalid_argument on violation.
void validate(const CyclotomicMap& m);
void validate(const BiCyclotomicMap& m);

// Label of the coset containing gamma^x, i.e. x mod ell. Rejects ell not
// dividing n.
u64 coset_of(u64 x, u64 ell, u64 n);

u64 eval_cyclotomic(const CyclotomicMap& m, u64 x);
u64 eval_bicyclotomic(const BiCyclotomicMap& m, u64 x, u64 y);

ExpMap to_expmap(const CyclotomicMap& m);
BiExpMap bi_to_expmap(const BiCyclotomicMap& m);

// Cyclotomic representation of f at index ell | n, if one exists. The
// candidate class of r comes from the coset-0 difference g(ell) - g(0) via
// linear_congruence; all cosets are then verified.
std::optional<IndexWitness> representable_at(const ExpMap& f, u64 ell);

// Minimal ell over the ascending divisor list with a representation; always
// succeeds (ell = n is a representation of anything).
IndexWitness compute_index(const ExpMap& f);

// Same minimal ell, by checking the definition verbatim for every divisor
// and every r in [0, n). Test oracle; requires n <= 100.
IndexWitness compute_index_oracle(const ExpMap& f);

std::optional<BiIndexWitness> bi_representable_at(const BiExpMap& f, u64 ell1,
                                                  u64 ell2);

// Componentwise-minimal antichain of the representable index pairs.
// Requires n <= 64.
std::vector<std::pair<u64, u64>> minimal_index_pairs(const BiExpMap& f);

// Number of exponents where the two maps agree; window_agreement restricts
// to the H exponents N, N+1, ..., N+H-1 taken mod n.
u64 agreement_count(const ExpMap& f, const ExpMap& g);
u64 window_agreement(const ExpMap& f, const ExpMap& g, u64 window_start,
                     u64 window_len);

// Max over all wrap-around column intervals V of min(|U|, |V|), where U is
// the set of rows on which f and g agree at every column of V. Requires
// n <= 40.
u64 rectangle_profile(const BiExpMap& f, const BiExpMap& g);

ExpMap random_expmap(u64 n, SeededRng& rng);
CyclotomicMap random_cyclotomic(const GroupCtx& g, SeededRng& rng);
BiCyclotomicMap random_bicyclotomic(const GroupCtx& g, SeededRng& rng);

}  // namespace dhindex
