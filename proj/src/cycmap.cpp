#include "dhindex/cycmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhindex {

namespace {

void check_table(const ExpMap& f) {
  if (f.n == 0 || f.table.size() != f.n)
    throw std::invalid_argument("ExpMap: table length must equal n");
  for (u64 v : f.table)
    if (v >= f.n)
      throw std::invalid_argument("ExpMap: table entries must lie in [0, n)");
}

void check_table(const BiExpMap& f) {
  if (f.n == 0 || f.table.size() != f.n)
    throw std::invalid_argument("BiExpMap: table must be n rows");
  for (const auto& row : f.table) {
    if (row.size() != f.n)
      throw std::invalid_argument("BiExpMap: table must be n columns");
    for (u64 v : row)
      if (v >= f.n)
        throw std::invalid_argument("BiExpMap: table entries must lie in [0, n)");
  }
}

void check_divides(u64 ell, u64 n, const char* what) {
  if (ell == 0 || n % ell != 0) throw std::invalid_argument(what);
}

}  // namespace

void validate(const CyclotomicMap& m) {
  check_divides(m.ell, m.n, "CyclotomicMap: ell must divide n");
  if (m.mult.size() != m.ell)
    throw std::invalid_argument("CyclotomicMap: need ell multipliers");
  for (u64 e : m.mult)
    if (e >= m.n)
      throw std::invalid_argument("CyclotomicMap: multipliers must lie in [0, n)");
}

void validate(const BiCyclotomicMap& m) {
  check_divides(m.ell1, m.n, "BiCyclotomicMap: ell1 must divide n");
  check_divides(m.ell2, m.n, "BiCyclotomicMap: ell2 must divide n");
  if (m.mult.size() != m.ell1)
    throw std::invalid_argument("BiCyclotomicMap: need ell1 multiplier rows");
  for (const auto& row : m.mult) {
    if (row.size() != m.ell2)
      throw std::invalid_argument("BiCyclotomicMap: need ell2 multiplier columns");
    for (u64 e : row)
      if (e >= m.n)
        throw std::invalid_argument("BiCyclotomicMap: multipliers must lie in [0, n)");
  }
}

GroupCtx::GroupCtx(u64 order) : n(order), fact(factorize(order)) {
  divs = divisors(fact);
}

u64 coset_of(u64 x, u64 ell, u64 n) {
  check_divides(ell, n, "coset_of: ell must divide n");
  if (x >= n) throw std::invalid_argument("coset_of: exponent out of range");
  return x % ell;
}

u64 eval_cyclotomic(const CyclotomicMap& m, u64 x) {
  validate(m);
  return (m.mult[x % m.ell] + mul_mod(m.r, x, m.n)) % m.n;
}

u64 eval_bicyclotomic(const BiCyclotomicMap& m, u64 x, u64 y) {
  validate(m);
  u64 v = (m.mult[x % m.ell1][y % m.ell2] + mul_mod(m.r1, x, m.n)) % m.n;
  return (v + mul_mod(m.r2, y, m.n)) % m.n;
}

ExpMap to_expmap(const CyclotomicMap& m) {
  validate(m);
  ExpMap f;
  f.n = m.n;
  f.table.resize(m.n);
  for (u64 x = 0; x < m.n; ++x)
    f.table[x] = (m.mult[x % m.ell] + mul_mod(m.r, x, m.n)) % m.n;
  return f;
}

BiExpMap bi_to_expmap(const BiCyclotomicMap& m) {
  validate(m);
  BiExpMap f;
  f.n = m.n;
  f.table.assign(m.n, std::vector<u64>(m.n));
  for (u64 x = 0; x < m.n; ++x)
    for (u64 y = 0; y < m.n; ++y) {
      u64 v = (m.mult[x % m.ell1][y % m.ell2] + mul_mod(m.r1, x, m.n)) % m.n;
      f.table[x][y] = (v + mul_mod(m.r2, y, m.n)) % m.n;
    }
  return f;
}

std::optional<IndexWitness> representable_at(const ExpMap& f, u64 ell) {
  check_table(f);
  check_divides(ell, f.n, "representable_at: ell must divide n");
  const u64 n = f.n;
  const auto& g = f.table;
  u64 r = 0;
  if (ell < n) {
    // Constancy on coset 0 at j=1 pins the class of r mod n/ell:
    // r*ell = g(ell) - g(0)  (mod n).
    u64 delta = (g[ell] + n - g[0]) % n;
    ResidueSet cls = linear_congruence(ell % n, delta, n);
    if (cls.empty()) return std::nullopt;
    r = cls.residues.front();  // least representative, lies in [0, n/ell)
    for (u64 i = 0; i < ell; ++i) {
      for (u64 j = 1, x = i + ell; x < n; ++j, x += ell) {
        u64 expect = (g[i] + mul_mod(r, j * ell, n)) % n;
        if (g[x] != expect) return std::nullopt;
      }
    }
  }
  IndexWitness w;
  w.n = n;
  w.ell = ell;
  w.r = r;
  w.mult.resize(ell);
  for (u64 i = 0; i < ell; ++i) w.mult[i] = (g[i] + n - mul_mod(r, i, n)) % n;
  return w;
}

IndexWitness compute_index(const ExpMap& f) {
  check_table(f);
  GroupCtx ctx(f.n);
  for (u64 ell : ctx.divs) {
    if (auto w = representable_at(f, ell)) return *w;
  }
  throw std::logic_error("compute_index: no representation found");  // unreachable
}

IndexWitness compute_index_oracle(const ExpMap& f) {
  check_table(f);
  if (f.n > 100)
    throw std::invalid_argument("compute_index_oracle: n must be <= 100");
  const u64 n = f.n;
  GroupCtx ctx(n);
  for (u64 ell : ctx.divs) {
    for (u64 r = 0; r < n; ++r) {
      bool ok = true;
      std::vector<u64> mult(ell);
      for (u64 i = 0; i < ell && ok; ++i) {
        u64 value = (f.table[i] + n - mul_mod(r, i, n)) % n;
        mult[i] = value;
        for (u64 x = i; x < n; x += ell) {
          if ((f.table[x] + n - mul_mod(r, x, n)) % n != value) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return IndexWitness{n, ell, r, std::move(mult)};
    }
  }
  throw std::logic_error("compute_index_oracle: no representation found");
}

std::optional<BiIndexWitness> bi_representable_at(const BiExpMap& f, u64 ell1,
                                                  u64 ell2) {
  check_table(f);
  check_divides(ell1, f.n, "bi_representable_at: ell1 must divide n");
  check_divides(ell2, f.n, "bi_representable_at: ell2 must divide n");
  const u64 n = f.n;
  const auto& g = f.table;
  u64 r1 = 0, r2 = 0;
  if (ell1 < n) {
    u64 delta = (g[ell1][0] + n - g[0][0]) % n;
    ResidueSet cls = linear_congruence(ell1 % n, delta, n);
    if (cls.empty()) return std::nullopt;
    r1 = cls.residues.front();
  }
  if (ell2 < n) {
    u64 delta = (g[0][ell2] + n - g[0][0]) % n;
    ResidueSet cls = linear_congruence(ell2 % n, delta, n);
    if (cls.empty()) return std::nullopt;
    r2 = cls.residues.front();
  }
  BiIndexWitness w;
  w.n = n;
  w.ell1 = ell1;
  w.ell2 = ell2;
  w.r1 = r1;
  w.r2 = r2;
  w.mult.assign(ell1, std::vector<u64>(ell2));
  for (u64 k1 = 0; k1 < ell1; ++k1)
    for (u64 k2 = 0; k2 < ell2; ++k2) {
      u64 v = (g[k1][k2] + n - mul_mod(r1, k1, n)) % n;
      w.mult[k1][k2] = (v + n - mul_mod(r2, k2, n)) % n;
    }
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) {
      u64 v = (w.mult[x % ell1][y % ell2] + mul_mod(r1, x, n)) % n;
      v = (v + mul_mod(r2, y, n)) % n;
      if (g[x][y] != v) return std::nullopt;
    }
  return w;
}

std::vector<std::pair<u64, u64>> minimal_index_pairs(const BiExpMap& f) {
  check_table(f);
  if (f.n > 64)
    throw std::invalid_argument("minimal_index_pairs: n must be <= 64");
  GroupCtx ctx(f.n);
  std::vector<std::pair<u64, u64>> representable;
  for (u64 a : ctx.divs)
    for (u64 b : ctx.divs)
      if (bi_representable_at(f, a, b)) representable.push_back({a, b});
  std::vector<std::pair<u64, u64>> minimal;
  for (const auto& p : representable) {
    bool dominated = false;
    for (const auto& q : representable) {
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(p);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

u64 agreement_count(const ExpMap& f, const ExpMap& g) {
  check_table(f);
  check_table(g);
  if (f.n != g.n) throw std::invalid_argument("agreement_count: order mismatch");
  u64 count = 0;
  for (u64 x = 0; x < f.n; ++x)
    if (f.table[x] == g.table[x]) ++count;
  return count;
}

u64 window_agreement(const ExpMap& f, const ExpMap& g, u64 window_start,
                     u64 window_len) {
  check_table(f);
  check_table(g);
  if (f.n != g.n) throw std::invalid_argument("window_agreement: order mismatch");
  if (window_len == 0 || window_len > f.n)
    throw std::invalid_argument("window_agreement: need 1 <= H <= n");
  u64 count = 0;
  for (u64 k = 0; k < window_len; ++k) {
    u64 x = (window_start + k) % f.n;
    if (f.table[x] == g.table[x]) ++count;
  }
  return count;
}

u64 rectangle_profile(const BiExpMap& f, const BiExpMap& g) {
  check_table(f);
  check_table(g);
  if (f.n != g.n) throw std::invalid_argument("rectangle_profile: order mismatch");
  if (f.n > 40)
    throw std::invalid_argument("rectangle_profile: n must be <= 40");
  const u64 n = f.n;
  u64 best = 0;
  std::vector<char> in_u(n);
  for (u64 start = 0; start < n; ++start) {
    std::fill(in_u.begin(), in_u.end(), 1);
    u64 u_size = n;
    for (u64 len = 1; len <= n; ++len) {
      u64 y = (start + len - 1) % n;
      for (u64 x = 0; x < n; ++x) {
        if (in_u[x] && f.table[x][y] != g.table[x][y]) {
          in_u[x] = 0;
          --u_size;
        }
      }
      best = std::max(best, std::min(u_size, len));
      if (u_size == 0) break;
    }
  }
  return best;
}

ExpMap random_expmap(u64 n, SeededRng& rng) {
  ExpMap f;
  f.n = n;
  f.table.resize(n);
  for (u64 x = 0; x < n; ++x) f.table[x] = rng.below(n);
  return f;
}

CyclotomicMap random_cyclotomic(const GroupCtx& g, SeededRng& rng) {
  CyclotomicMap m;
  m.n = g.n;
  m.ell = g.divs[rng.below(g.divs.size())];
  m.r = rng.below(g.n);
  m.mult.resize(m.ell);
  for (u64 i = 0; i < m.ell; ++i) m.mult[i] = rng.below(g.n);
  return m;
}

BiCyclotomicMap random_bicyclotomic(const GroupCtx& g, SeededRng& rng) {
  BiCyclotomicMap m;
  m.n = g.n;
  m.ell1 = g.divs[rng.below(g.divs.size())];
  m.ell2 = g.divs[rng.below(g.divs.size())];
  m.r1 = rng.below(g.n);
  m.r2 = rng.below(g.n);
  m.mult.assign(m.ell1, std::vector<u64>(m.ell2));
  for (u64 i = 0; i < m.ell1; ++i)
    for (u64 j = 0; j < m.ell2; ++j) m.mult[i][j] = rng.below(g.n);
  return m;
}

}  // namespace dhindex
