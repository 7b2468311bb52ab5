#pragma once

// Brute-force reference implementations, independent of the library's fast
// paths. Expected values in the test files were produced by these.

#include <vector>

#include "dhindex/ffpoly.hpp"
#include "dhindex/modarith.hpp"

namespace dhindex::oracles {

inline std::vector<u64> quadratic_roots(u64 n, u64 b, u64 c) {
  std::vector<u64> roots;
  for (u64 x = 0; x < n; ++x) {
    u64 v = (mul_mod(x, x, n) + mul_mod(b % n, x, n)) % n;
    if ((v + c % n) % n == 0) roots.push_back(x);
  }
  return roots;
}

inline std::vector<u64> linear_roots(u64 a, u64 b, u64 n) {
  std::vector<u64> roots;
  for (u64 x = 0; x < n; ++x)
    if (mul_mod(a % n, x, n) == b % n) roots.push_back(x);
  return roots;
}

inline std::vector<u64> sqrt_roots(u64 a, u64 p) {
  std::vector<u64> roots;
  for (u64 x = 0; x < p; ++x)
    if (mul_mod(x, x, p) == a % p) roots.push_back(x);
  return roots;
}

inline u64 bi_coincidence_count(u64 n, u64 r1, u64 r2, u64 a) {
  u64 count = 0;
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) {
      u64 rhs = (a % n + mul_mod(r1, x, n) + mul_mod(r2, y, n)) % n;
      if (mul_mod(x, y, n) == rhs) ++count;
    }
  return count;
}

// Classic Lagrange interpolation over the subgroup points, as a cross-check
// for the DFT-based interpolate_subgroup.
inline SparsePoly lagrange_interpolate(const PrimeFieldCtx& ctx,
                                       const std::vector<u64>& values) {
  const u64 n = ctx.n, p = ctx.p;
  std::vector<u64> acc(n, 0);
  for (u64 k = 0; k < n; ++k) {
    if (values[k] == 0) continue;
    // Basis polynomial through ctx.subgroup[k], zero elsewhere.
    std::vector<u64> basis{1};
    u64 denom = 1;
    for (u64 j = 0; j < n; ++j) {
      if (j == k) continue;
      u64 node = ctx.subgroup[j];
      std::vector<u64> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] = (next[d + 1] + basis[d]) % p;
        next[d] = (next[d] + p - mul_mod(basis[d], node, p)) % p;
      }
      basis = std::move(next);
      denom = mul_mod(denom, (ctx.subgroup[k] + p - node) % p, p);
    }
    u64 scale = mul_mod(values[k], inv_mod(denom, p), p);
    for (std::size_t d = 0; d < basis.size(); ++d)
      acc[d] = (acc[d] + mul_mod(scale, basis[d], p)) % p;
  }
  return sparse_from_dense(acc);
}

}  // namespace dhindex::oracles
