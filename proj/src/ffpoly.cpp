#include "dhindex/ffpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dhindex/dh.hpp"
#include "dhindex/rng.hpp"

namespace dhindex {

PrimeFieldCtx make_ctx(u64 p, u64 n) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("make_ctx: p must be an odd prime");
  if (n == 0 || (p - 1) % n != 0)
    throw std::invalid_argument("make_ctx: n must divide p-1");
  Factorization nf = factorize(n);
  u64 cofactor = (p - 1) / n;
  u64 gamma = 0;
  for (u64 g = 2; g < p; ++g) {
    u64 cand = pow_mod(g, cofactor, p);
    bool exact = cand != 1 || n == 1;
    for (const auto& [q, e] : nf.factors) {
      (void)e;
      if (pow_mod(cand, n / q, p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) {
      gamma = cand;
      break;
    }
  }
  if (gamma == 0) throw std::logic_error("make_ctx: no element of exact order n");
  PrimeFieldCtx ctx;
  ctx.p = p;
  ctx.n = n;
  ctx.gamma = gamma;
  ctx.subgroup.resize(n);
  u64 cur = 1;
  for (u64 k = 0; k < n; ++k) {
    ctx.subgroup[k] = cur;
    cur = mul_mod(cur, gamma, p);
  }
  return ctx;
}

SparsePoly sparse_from_dense(const std::vector<u64>& dense) {
  SparsePoly poly;
  for (u64 d = 0; d < dense.size(); ++d)
    if (dense[d] != 0) poly.terms.push_back({d, dense[d]});
  return poly;
}

u64 eval_poly(const SparsePoly& poly, u64 x, u64 p) {
  u64 acc = 0;
  for (const auto& [d, c] : poly.terms)
    acc = (acc + mul_mod(c, pow_mod(x, d, p), p)) % p;
  return acc;
}

SparsePoly interpolate_subgroup(const PrimeFieldCtx& ctx,
                                const std::vector<u64>& values) {
  const u64 n = ctx.n, p = ctx.p;
  if (values.size() != n)
    throw std::invalid_argument("interpolate_subgroup: need n values");
  for (u64 v : values)
    if (v >= p)
      throw std::invalid_argument("interpolate_subgroup: value out of field");
  u64 inv_n = inv_mod(n % p, p);
  std::vector<u64> dense(n);
  for (u64 j = 0; j < n; ++j) {
    u64 acc = 0;
    for (u64 x = 0; x < n; ++x) {
      u64 idx = (n - mul_mod(x, j, n)) % n;  // gamma^(-xj)
      acc = (acc + mul_mod(values[x], ctx.subgroup[idx], p)) % p;
    }
    dense[j] = mul_mod(inv_n, acc, p);
  }
  return sparse_from_dense(dense);
}

SparsePoly cyclotomic_to_poly(const CyclotomicMap& m, const PrimeFieldCtx& ctx) {
  const u64 n = ctx.n, p = ctx.p;
  if (m.n != n) throw std::invalid_argument("cyclotomic_to_poly: order mismatch");
  validate(m);
  const u64 ell = m.ell;
  const u64 step = n / ell;
  // A_j interpolate the multipliers a_i = gamma^(mult[i]) against the
  // ell-th roots of unity omega = gamma^(n/ell).
  u64 inv_ell = inv_mod(ell % p, p);
  std::vector<std::pair<u64, u64>> terms;  // (degree, coeff), unsorted
  for (u64 j = 0; j < ell; ++j) {
    u64 acc = 0;
    for (u64 i = 0; i < ell; ++i) {
      u64 a_i = ctx.subgroup[m.mult[i] % n];
      u64 idx = (n - mul_mod(step, mul_mod(i, j, n), n) % n) % n;  // omega^(-ij)
      acc = (acc + mul_mod(a_i, ctx.subgroup[idx], p)) % p;
    }
    u64 coeff = mul_mod(inv_ell, acc, p);
    if (coeff != 0) terms.push_back({(m.r % n + j * step) % n, coeff});
  }
  std::sort(terms.begin(), terms.end());
  SparsePoly poly;
  for (auto [d, c] : terms) poly.terms.push_back({d, c});
  return poly;
}

SubgroupZeros subgroup_zeros(const SparsePoly& poly, const PrimeFieldCtx& ctx) {
  if (poly.is_zero())
    throw std::invalid_argument("subgroup_zeros: zero polynomial");
  SubgroupZeros out;
  for (u64 x = 0; x < ctx.n; ++x) {
    if (eval_poly(poly, ctx.subgroup[x], ctx.p) == 0) {
      ++out.count;
      out.exponents.push_back(x);
    }
  }
  return out;
}

BoundReport weight_zero_bound(const SparsePoly& poly, const PrimeFieldCtx& ctx) {
  if (poly.is_zero())
    throw std::invalid_argument("weight_zero_bound: zero polynomial");
  if (poly.degree() > ctx.n - 1)
    throw std::invalid_argument("weight_zero_bound: degree must be <= n-1");
  SubgroupZeros zeros = subgroup_zeros(poly, ctx);
  BoundReport rep;
  rep.observed = weight(poly);
  rep.bound = Rational(ctx.n, ctx.n - zeros.count);
  rep.pass = rep.bound <= Rational(rep.observed, 1);
  return rep;
}

SparsePoly build_F(const SparsePoly& h, u64 r, const PrimeFieldCtx& ctx) {
  const u64 n = ctx.n, p = ctx.p;
  if (!h.is_zero() && h.degree() > n - 3)
    throw std::invalid_argument("build_F: need deg h <= n-3");
  if (h.is_zero()) return {};
  u64 shift = ctx.subgroup[(1 + n - (r % n)) % n];  // gamma^(1-r)
  std::vector<u64> dense(h.degree() + 3, 0);
  for (const auto& [d, c] : h.terms) {
    // h(gamma X) contributes c*gamma^d at degree d.
    dense[d] = (dense[d] + mul_mod(c, ctx.subgroup[d % n], p)) % p;
    // gamma^(1-r) X^2 h(X) is subtracted at degree d+2.
    dense[d + 2] = (dense[d + 2] + p - mul_mod(shift, c, p)) % p;
  }
  return sparse_from_dense(dense);
}

Thm5Report thm5_check(const ExpMap& f, const PrimeFieldCtx& ctx) {
  const u64 n = ctx.n;
  if (f.n != n) throw std::invalid_argument("thm5_check: order mismatch");
  ExpMap d = dh_uni(n);
  IndexWitness w = compute_index(f);

  Thm5Report rep;
  rep.ell = w.ell;
  // Prefix sums of the agreement indicator over a doubled range make each
  // wrap-around window an O(1) lookup.
  std::vector<u64> pref(2 * n + 1, 0);
  for (u64 k = 0; k < 2 * n; ++k)
    pref[k + 1] = pref[k] + (f.table[k % n] == d.table[k % n] ? 1 : 0);

  bool have_best = false;
  for (u64 len = 1; len <= n; ++len) {
    for (u64 start = 0; start < n; ++start) {
      u64 agree = pref[start + len] - pref[start];
      u64 defect = len - agree;
      Rational bound(n, 2 * (n - len + 2 * defect + 1));
      if (!have_best || (rep.bound <= bound && !(bound <= rep.bound))) {
        have_best = true;
        rep.bound = bound;
        rep.best_window = {start, len, defect};
      }
    }
  }
  rep.bound_pass = rep.bound <= Rational(rep.ell, 1);

  if (3 * rep.ell <= n) {
    rep.fzero_checked = true;
    CyclotomicMap h_map{n, w.ell, 0, w.mult};
    SparsePoly h = cyclotomic_to_poly(h_map, ctx);
    SparsePoly F = build_F(h, w.r, ctx);
    rep.fzero_count = F.is_zero() ? n : subgroup_zeros(F, ctx).count;
    u64 len = rep.best_window.len, defect = rep.best_window.defect;
    rep.fzero_required = (len > 2 * defect + 1) ? len - 2 * defect - 1 : 0;
    rep.fzero_pass = rep.fzero_count >= rep.fzero_required;
  }
  rep.pass = rep.bound_pass && rep.fzero_pass;
  return rep;
}

Thm6Report thm6_check(const BiCyclotomicMap& f, u64 n) {
  if (f.n != n) throw std::invalid_argument("thm6_check: order mismatch");
  BiExpMap table = bi_to_expmap(f);
  Thm6Report rep;
  rep.minimal_pairs = minimal_index_pairs(table);
  rep.observed = n;
  for (auto [a, b] : rep.minimal_pairs)
    rep.observed = std::min(rep.observed, std::max(a, b));
  rep.bound = rectangle_profile(table, dh_bi(n));
  rep.pass = rep.observed >= rep.bound;
  return rep;
}

namespace {

bool invertible_mod(std::vector<std::vector<u64>> mat, u64 p) {
  const std::size_t m = mat.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && mat[pivot][col] == 0) ++pivot;
    if (pivot == m) return false;
    std::swap(mat[col], mat[pivot]);
    u64 inv = inv_mod(mat[col][col], p);
    for (std::size_t row = col + 1; row < m; ++row) {
      if (mat[row][col] == 0) continue;
      u64 factor = mul_mod(mat[row][col], inv, p);
      for (std::size_t k = col; k < m; ++k) {
        u64 sub = mul_mod(factor, mat[col][k], p);
        mat[row][k] = (mat[row][k] + p - sub) % p;
      }
    }
  }
  return true;
}

bool all_distinct(std::vector<u64> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

VandermondeWitness vandermonde_witness(const PrimeFieldCtx& ctx,
                                       const std::vector<u64>& u_list,
                                       u64 window_start, u64 ell1, u64 ell2,
                                       u64 r1, u64 r2) {
  const u64 n = ctx.n;
  const std::size_t m = u_list.size();
  if (m == 0 || m > 12)
    throw std::invalid_argument("vandermonde_witness: need 1 <= m <= 12");
  if (ell1 == 0 || n % ell1 != 0 || ell2 == 0 || n % ell2 != 0)
    throw std::invalid_argument("vandermonde_witness: indices must divide n");
  r1 %= n;
  r2 %= n;
  const u64 step1 = n / ell1, step2 = n / ell2;

  auto at = [&](u64 exponent) { return ctx.subgroup[exponent % n]; };

  std::vector<u64> v1_nodes(m), v2_nodes(m), g_nodes(m);
  for (std::size_t x = 0; x < m; ++x) {
    u64 u = u_list[x] % n;
    v1_nodes[x] = at(mul_mod(step1, u, n));
    g_nodes[x] = at((u + n - r2) % n);
  }
  for (std::size_t y = 0; y < m; ++y)
    v2_nodes[y] = at(mul_mod(step2, (window_start + y) % n, n));

  std::vector<std::vector<u64>> v1(m, std::vector<u64>(m));
  std::vector<std::vector<u64>> v2(m, std::vector<u64>(m));
  std::vector<std::vector<u64>> g(m, std::vector<u64>(m));
  for (std::size_t x = 0; x < m; ++x) {
    u64 u = u_list[x] % n;
    for (std::size_t i = 0; i < m; ++i)
      v1[x][i] = at(mul_mod(mul_mod(step1, i, n), u, n));
    for (std::size_t y = 0; y < m; ++y) {
      u64 col = (window_start + y) % n;
      u64 e = (mul_mod((u + n - r2) % n, col, n) + n - mul_mod(r1, u, n)) % n;
      g[x][y] = at(e);
    }
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t y = 0; y < m; ++y)
      v2[j][y] = at(mul_mod(mul_mod(step2, j, n), (window_start + y) % n, n));

  VandermondeWitness wit;
  wit.m = m;
  wit.v1_nodes_distinct = all_distinct(v1_nodes);
  wit.v2_nodes_distinct = all_distinct(v2_nodes);
  wit.g_nodes_distinct = all_distinct(g_nodes);
  wit.v1_invertible = invertible_mod(v1, ctx.p);
  wit.v2_invertible = invertible_mod(v2, ctx.p);
  wit.g_invertible = invertible_mod(g, ctx.p);
  return wit;
}

namespace {

ReportRow thm5_row(const Thm5Report& rep, json params) {
  ReportRow row;
  row.id = "t5";
  row.params = std::move(params);
  row.expected = std::to_string(rep.bound.num) + "/" + std::to_string(rep.bound.den);
  row.computed = rep.ell;
  row.witness = {{"N", rep.best_window.start},
                 {"H", rep.best_window.len},
                 {"s", rep.best_window.defect},
                 {"fzero_checked", rep.fzero_checked},
                 {"fzero", rep.fzero_count},
                 {"fzero_required", rep.fzero_required}};
  row.pass = rep.pass;
  return row;
}

}  // namespace

void verify_thm5(u64 p, u64 n, u64 samples, u64 seed, const RowSink& sink) {
  PrimeFieldCtx ctx = make_ctx(p, n);
  sink(thm5_row(thm5_check(dh_uni(n), ctx),
                {{"p", p}, {"n", n}, {"map", "d"}}));
  GroupCtx group(n);
  SeededRng rng(seed);
  for (u64 k = 0; k < samples; ++k) {
    CyclotomicMap m = random_cyclotomic(group, rng);
    sink(thm5_row(thm5_check(to_expmap(m), ctx),
                  {{"p", p}, {"n", n}, {"map", "random"}, {"sample", k}}));
  }
}

void verify_thm6(u64 n, u64 samples, u64 seed, const RowSink& sink) {
  GroupCtx group(n);
  SeededRng rng(seed);
  for (u64 k = 0; k < samples; ++k) {
    BiCyclotomicMap m = random_bicyclotomic(group, rng);
    Thm6Report rep = thm6_check(m, n);
    ReportRow row;
    row.id = "t6";
    row.params = {{"n", n}, {"sample", k}};
    row.expected = rep.bound;
    row.computed = rep.observed;
    json pairs = json::array();
    for (auto [a, b] : rep.minimal_pairs) pairs.push_back(json::array({a, b}));
    row.witness = {{"ell1", m.ell1}, {"ell2", m.ell2},
                   {"r1", m.r1},     {"r2", m.r2},
                   {"minimal_pairs", pairs}};
    row.pass = rep.pass;
    sink(row);
  }
}

void verify_vandermonde(u64 p, u64 n, u64 m, u64 samples, u64 seed,
                        const RowSink& sink) {
  PrimeFieldCtx ctx = make_ctx(p, n);
  if (m == 0 || m > 12 || m > n)
    throw std::invalid_argument("verify_vandermonde: need 1 <= m <= min(n, 12)");
  GroupCtx group(n);
  std::vector<u64> big_divs;
  for (u64 d : group.divs)
    if (d >= m) big_divs.push_back(d);
  SeededRng rng(seed);
  for (u64 k = 0; k < samples; ++k) {
    u64 ell1 = big_divs[rng.below(big_divs.size())];
    u64 ell2 = big_divs[rng.below(big_divs.size())];
    // m distinct residues mod ell1 keep every node family distinct.
    std::vector<u64> pool(ell1);
    for (u64 i = 0; i < ell1; ++i) pool[i] = i;
    std::vector<u64> u_list(m);
    for (u64 i = 0; i < m; ++i) {
      u64 j = i + rng.below(ell1 - i);
      std::swap(pool[i], pool[j]);
      u_list[i] = pool[i];
    }
    u64 window_start = rng.below(n);
    u64 r1 = rng.below(n), r2 = rng.below(n);
    VandermondeWitness wit =
        vandermonde_witness(ctx, u_list, window_start, ell1, ell2, r1, r2);
    ReportRow row;
    row.id = "vandermonde";
    row.params = {{"p", p}, {"n", n}, {"m", m}, {"sample", k}};
    row.computed = {{"v1_invertible", wit.v1_invertible},
                    {"v2_invertible", wit.v2_invertible},
                    {"g_invertible", wit.g_invertible}};
    row.witness = {{"ell1", ell1},
                   {"ell2", ell2},
                   {"r1", r1},
                   {"r2", r2},
                   {"N", window_start},
                   {"v1_nodes_distinct", wit.v1_nodes_distinct},
                   {"v2_nodes_distinct", wit.v2_nodes_distinct},
                   {"g_nodes_distinct", wit.g_nodes_distinct}};
    row.pass = wit.v1_nodes_distinct && wit.v1_invertible &&
               wit.v2_nodes_distinct && wit.v2_invertible && wit.consistent();
    sink(row);
  }
}

}  // namespace dhindex
