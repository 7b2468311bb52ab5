#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dhindex/cycmap.hpp"
#include "dhindex/modarith.hpp"
#include "dhindex/report.hpp"

// Order-n subgroups of prime fields F_p and the polynomial form of
// cyclotomic mappings: subgroup interpolation, sparse-polynomial weight and
// zero counts, and the window/rectangle lower-bound checkers.

namespace dhindex {

// gamma is a field element of multiplicative order exactly n | p-1;
// subgroup lists gamma^0, ..., gamma^(n-1).
struct PrimeFieldCtx {
  u64 p = 3;
  u64 n = 1;
  u64 gamma = 1;
  std::vector<u64> subgroup;
};

// Deterministic context: gamma = g^((p-1)/n) for the least base g giving
// exact order n. Rejects composite or even p and n not dividing p-1.
PrimeFieldCtx make_ctx(u64 p, u64 n);

struct Term {
  u64 degree = 0;
  u64 coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Strictly increasing degrees, no zero coefficients; the zero polynomial is
// the empty term list.
struct SparsePoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  u64 degree() const { return terms.empty() ? 0 : terms.back().degree; }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

// Sparsified copy of a dense coefficient vector (index = degree).
SparsePoly sparse_from_dense(const std::vector<u64>& dense);

u64 eval_poly(const SparsePoly& poly, u64 x, u64 p);

// Unique interpolant of degree < n through (gamma^x, values[x]) for all x,
// via the inverse DFT over the subgroup: c_j = n^-1 * sum values[x] *
// gamma^(-xj).
SparsePoly interpolate_subgroup(const PrimeFieldCtx& ctx,
                                const std::vector<u64>& values);

// Polynomial form of a cyclotomic map: X^r * sum A_i X^(i*n/ell) with the
// A_i interpolating the multipliers gamma^(mult[i]) against the ell-th
// roots of unity; exponents reduced mod n (X^n = 1 on the subgroup).
SparsePoly cyclotomic_to_poly(const CyclotomicMap& m, const PrimeFieldCtx& ctx);

inline u64 weight(const SparsePoly& poly) { return poly.terms.size(); }

struct SubgroupZeros {
  u64 count = 0;
  std::vector<u64> exponents;  // x with poly(gamma^x) = 0
};

// Rejects the zero polynomial.
SubgroupZeros subgroup_zeros(const SparsePoly& poly, const PrimeFieldCtx& ctx);

struct BoundReport {
  u64 observed = 0;
  Rational bound;
  bool pass = false;
};

// weight >= n / (n - Z) for a nonzero polynomial of degree <= n-1 with Z
// subgroup zeros; exact rational comparison. Rejects zero polynomial and
// degree >= n.
BoundReport weight_zero_bound(const SparsePoly& poly, const PrimeFieldCtx& ctx);

// F(X) = h(gamma*X) - gamma^(1-r) * X^2 * h(X). Requires deg h <= n-3 so
// that deg F <= n-1.
SparsePoly build_F(const SparsePoly& h, u64 r, const PrimeFieldCtx& ctx);

// A window of H consecutive exponents starting at N (wrapping mod n) with
// defect s = H minus the agreements with d inside it; 0 <= s <= H.
struct WindowSpec {
  u64 start = 0;  // N
  u64 len = 1;    // H
  u64 defect = 0; // s
};

// Window lower bound on the index of f against d: over every window (N, H)
// with defect s, ind(f) >= n / (2(n-H+2s+1)). Reports the tightest window.
// When ind(f) <= n/3 the witness polynomial F(X) is built and its subgroup
// zero count checked against H - 2s - 1 at that window.
struct Thm5Report {
  u64 ell = 1;  // observed index of f
  WindowSpec best_window;
  Rational bound;
  bool bound_pass = false;
  bool fzero_checked = false;
  u64 fzero_count = 0;
  u64 fzero_required = 0;
  bool fzero_pass = true;
  bool pass = false;
};

Thm5Report thm5_check(const ExpMap& f, const PrimeFieldCtx& ctx);

// Rectangle lower bound on the index pair of f against D:
// min over minimal pairs of max(ell1, ell2) >= rectangle_profile(f, D).
struct Thm6Report {
  u64 observed = 0;
  u64 bound = 0;
  std::vector<std::pair<u64, u64>> minimal_pairs;
  bool pass = false;
};

Thm6Report thm6_check(const BiCyclotomicMap& f, u64 n);

// The three matrices of the rectangle-bound argument, built over F_p and
// tested for invertibility by Gaussian elimination. Node-distinctness flags
// say when the Vandermonde argument applies; duplicates are reported, not
// asserted against.
struct VandermondeWitness {
  u64 m = 0;
  bool v1_nodes_distinct = false;
  bool v2_nodes_distinct = false;
  bool g_nodes_distinct = false;
  bool v1_invertible = false;
  bool v2_invertible = false;
  bool g_invertible = false;

  // The proof-shape claim: distinct nodes force invertibility.
  bool consistent() const {
    return (!v1_nodes_distinct || v1_invertible) &&
           (!v2_nodes_distinct || v2_invertible) &&
           (!g_nodes_distinct || g_invertible);
  }
};

// V1[x][i] = gamma^(i*(n/ell1)*u_x), V2[j][y] = gamma^(j*(n/ell2)*(N+y)),
// G[x][y] = gamma^((u_x - r2)(N+y) - r1*u_x), all m-by-m with
// m = |u_list| <= 12.
VandermondeWitness vandermonde_witness(const PrimeFieldCtx& ctx,
                                       const std::vector<u64>& u_list,
                                       u64 window_start, u64 ell1, u64 ell2,
                                       u64 r1, u64 r2);

// Sweeps (rows in canonical order, seeded sampling):
//   t5: thm5_check for f = d, then `samples` random cyclotomic maps.
//   t6: thm6_check for `samples` random bivariate cyclotomic maps of order n.
//   vandermonde: `samples` random distinct-node instances with m nodes.
void verify_thm5(u64 p, u64 n, u64 samples, u64 seed, const RowSink& sink);
void verify_thm6(u64 n, u64 samples, u64 seed, const RowSink& sink);
void verify_vandermonde(u64 p, u64 n, u64 m, u64 samples, u64 seed,
                        const RowSink& sink);

}  // namespace dhindex
