#include "dhindex/dh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dhindex/rng.hpp"

namespace dhindex {

ExpMap dh_uni(u64 n) {
  if (n == 0) throw std::invalid_argument("dh_uni: n must be positive");
  ExpMap f;
  f.n = n;
  f.table.resize(n);
  for (u64 x = 0; x < n; ++x) f.table[x] = mul_mod(x, x, n);
  return f;
}

BiExpMap dh_bi(u64 n) {
  if (n == 0) throw std::invalid_argument("dh_bi: n must be positive");
  BiExpMap f;
  f.n = n;
  f.table.assign(n, std::vector<u64>(n));
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) f.table[x][y] = mul_mod(x, y, n);
  return f;
}

CyclotomicMap thm1_witness(u64 n) {
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("thm1_witness: n must be even");
  CyclotomicMap m;
  m.n = n;
  m.ell = n / 2;
  m.r = (n / 2) % 2 == 1 ? 1 : 2;
  m.mult.resize(m.ell);
  for (u64 i = 0; i < m.ell; ++i) {
    u64 sq = mul_mod(i, i, n);
    m.mult[i] = (sq + n - mul_mod(i, m.r, n)) % n;
  }
  return m;
}

UniCoincidenceReport uni_coincidences(u64 n, u64 r, u64 a) {
  if (n == 0) throw std::invalid_argument("uni_coincidences: n must be positive");
  r %= n;
  a %= n;
  UniCoincidenceReport rep;
  rep.n = n;
  rep.r = r;
  rep.a = a;
  ResidueSet roots = solve_quadratic(n, (n - r) % n, (n - a) % n);
  rep.points = roots.residues;
  rep.count = rep.points.size();
  if (is_prime(n)) rep.bound = 2;
  rep.ratio = (double)rep.count / std::sqrt((double)n);
  return rep;
}

u64 max_coincidences_for_index(u64 n, u64 ell) {
  if (n == 0 || n > 200)
    throw std::invalid_argument("max_coincidences_for_index: need 1 <= n <= 200");
  if (ell == 0 || n % ell != 0)
    throw std::invalid_argument("max_coincidences_for_index: ell must divide n");
  std::vector<u64> count(ell * n);
  u64 best = 0;
  for (u64 r = 0; r < n; ++r) {
    std::fill(count.begin(), count.end(), 0);
    for (u64 x = 0; x < n; ++x) {
      u64 a = (mul_mod(x, x, n) + n - mul_mod(r, x, n)) % n;
      ++count[(x % ell) * n + a];
    }
    u64 total = 0;
    for (u64 i = 0; i < ell; ++i) {
      u64 coset_best = 0;
      for (u64 a = 0; a < n; ++a)
        coset_best = std::max(coset_best, count[i * n + a]);
      total += coset_best;
    }
    best = std::max(best, total);
  }
  return best;
}

BiCoincidenceReport bi_coincidences(u64 n, u64 r1, u64 r2, u64 a) {
  if (n == 0) throw std::invalid_argument("bi_coincidences: n must be positive");
  r1 %= n;
  r2 %= n;
  a %= n;
  BiCoincidenceReport rep;
  rep.n = n;
  rep.r1 = r1;
  rep.r2 = r2;
  rep.a = a;
  // x*y = a + r1*x + r2*y (mod n), i.e. x*(y - r1) = a + r2*y (mod n).
  for (u64 y = 0; y < n; ++y) {
    u64 coeff = (y + n - r1) % n;
    u64 rhs = (a + mul_mod(r2, y, n)) % n;
    ResidueSet xs = linear_congruence(coeff, rhs, n);
    for (u64 x : xs.residues) rep.points.push_back({x, y});
  }
  rep.count = rep.points.size();
  rep.bound = divisor_sum_identity(n).lhs;
  return rep;
}

DivisorSumIdentity divisor_sum_identity(u64 n) {
  if (n == 0) throw std::invalid_argument("divisor_sum_identity: n must be positive");
  DivisorSumIdentity out;
  out.n = n;
  Factorization f = factorize(n);
  auto dp = divisors_with_phi(f);
  // lhs over t | n in integers; rhs as an exact rational sum over d = n/t.
  Rational sum(0, 1);
  for (auto [d, phi_d] : dp) {
    out.lhs += phi_d * (n / d);
    sum = sum + Rational(phi_d, d);
  }
  out.rhs = sum * n;
  out.tau_bound = tau(f) * n;
  out.equal = (out.rhs.den == 1 && out.rhs.num == out.lhs);
  out.within_tau_bound = out.lhs <= out.tau_bound;
  return out;
}

u64 bi_from_uni(u64 n, u64 a, u64 b) {
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("bi_from_uni: n must be odd");
  a %= n;
  b %= n;
  ExpMap d = dh_uni(n);
  u64 sum_sq = d.table[(a + b) % n];
  u64 delta = (sum_sq + 2 * n - d.table[a] - d.table[b]) % n;  // = 2ab mod n
  return mul_mod(delta, inv_mod(2 % n, n), n);
}

void verify_thm1(u64 n_lo, u64 n_hi, const RowSink& sink) {
  if (n_lo < 1 || n_lo > n_hi)
    throw std::invalid_argument("verify_thm1: need 1 <= n_lo <= n_hi");
  for (u64 n = n_lo; n <= n_hi; ++n) {
    ExpMap d = dh_uni(n);
    u64 expected = (n == 1) ? 1 : (n % 2 == 1 ? n : n / 2);
    IndexWitness w = compute_index(d);
    bool ok = (w.ell == expected);
    ReportRow row;
    row.id = "t1";
    row.params = {{"n", n}};
    row.expected = expected;
    row.computed = w.ell;
    if (n % 2 == 0) {
      bool witness_ok = (to_expmap(thm1_witness(n)) == d);
      if (!witness_ok) {
        ok = false;
        row.witness = {{"check", "thm1_witness_tabulation"}, {"ok", false}};
      }
    }
    row.pass = ok;
    sink(row);
  }
}

void verify_thm2(u64 primes_up_to, std::optional<u64> composite_max,
                 const RowSink& sink) {
  for (u64 n = 2; n <= primes_up_to; ++n) {
    if (!is_prime(n)) continue;
    u64 worst = 0, worst_r = 0, worst_a = 0;
    for (u64 r = 0; r < n; ++r)
      for (u64 a = 0; a < n; ++a) {
        u64 c = uni_coincidences(n, r, a).count;
        if (c > worst) {
          worst = c;
          worst_r = r;
          worst_a = a;
        }
      }
    ReportRow row;
    row.id = "t2";
    row.params = {{"n", n}};
    row.expected = 2;
    row.computed = worst;
    row.pass = worst <= 2;
    if (!row.pass) row.witness = {{"r", worst_r}, {"a", worst_a}};
    sink(row);
  }
  if (!composite_max) return;
  for (u64 n = 2; n <= *composite_max; ++n) {
    if (is_prime(n)) continue;
    u64 worst = 0, worst_r = 0, worst_a = 0;
    for (u64 r = 0; r < n; ++r)
      for (u64 a = 0; a < n; ++a) {
        u64 c = uni_coincidences(n, r, a).count;
        if (c > worst) {
          worst = c;
          worst_r = r;
          worst_a = a;
        }
      }
    ReportRow row;
    row.id = "t2-empirical";
    row.params = {{"n", n}, {"ell", 1}};
    row.computed = (double)worst / std::sqrt((double)n);
    row.pass = true;
    row.witness = {{"count", worst}, {"r", worst_r}, {"a", worst_a}};
    sink(row);
  }
}

void verify_thm3(u64 n_max, const RowSink& sink) {
  if (n_max < 2 || n_max > 64)
    throw std::invalid_argument("verify_thm3: need 2 <= n_max <= 64");
  for (u64 n = 2; n <= n_max; ++n) {
    auto pairs = minimal_index_pairs(dh_bi(n));
    ReportRow row;
    row.id = "t3";
    row.params = {{"n", n}};
    row.expected = json::array({json::array({n, n})});
    json computed = json::array();
    for (auto [a, b] : pairs) computed.push_back(json::array({a, b}));
    row.computed = computed;
    row.pass = (pairs.size() == 1 && pairs[0] == std::make_pair(n, n));
    sink(row);
  }
}

namespace {

u64 brute_bi_coincidences(u64 n, u64 r1, u64 r2, u64 a) {
  u64 count = 0;
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) {
      u64 lhs = mul_mod(x, y, n);
      u64 rhs = (a + mul_mod(r1, x, n) + mul_mod(r2, y, n)) % n;
      if (lhs == rhs % n) ++count;
    }
  return count;
}

}  // namespace

void verify_thm4(u64 n_max, u64 samples, u64 seed, const RowSink& sink) {
  if (n_max < 1 || n_max > 64)
    throw std::invalid_argument("verify_thm4: need 1 <= n_max <= 64");
  SeededRng rng(seed);
  for (u64 n = 1; n <= n_max; ++n) {
    u64 bound = divisor_sum_identity(n).lhs;
    for (u64 k = 0; k < samples; ++k) {
      u64 r1 = rng.below(n), r2 = rng.below(n), a = rng.below(n);
      BiCoincidenceReport rep = bi_coincidences(n, r1, r2, a);
      u64 brute = brute_bi_coincidences(n, r1, r2, a);
      ReportRow row;
      row.id = "t4";
      row.params = {{"n", n}, {"r1", r1}, {"r2", r2}, {"a", a}};
      row.expected = brute;
      row.computed = rep.count;
      row.witness = {{"bound", bound}};
      row.pass = (rep.count == brute) && (rep.count <= bound);
      sink(row);
    }
  }
}

}  // namespace dhindex
