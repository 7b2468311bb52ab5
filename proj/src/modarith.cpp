#include "dhindex/modarith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dhindex {

bool ResidueSet::contains(u64 x) const {
  return std::binary_search(residues.begin(), residues.end(), x);
}

Rational::Rational(u64 numerator, u64 denominator) {
  if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
  u64 g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;  // 0/den
  num = numerator / g;
  den = denominator / g;
}

Rational Rational::operator+(const Rational& other) const {
  u64 g = std::gcd(den, other.den);
  u64 scaled_den = den / g * other.den;
  u64 left = num * (other.den / g);
  u64 right = other.num * (den / g);
  return Rational(left + right, scaled_den);
}

Rational Rational::operator*(u64 k) const { return Rational(num * k, den); }

bool Rational::operator==(const Rational& other) const {
  return num == other.num && den == other.den;
}

bool Rational::operator<=(const Rational& other) const {
  return (u128)num * other.den <= (u128)other.num * den;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return (u64)((u128)a * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

// Extended gcd: returns g and x with a*x = g (mod m), 0 <= x < m.
std::pair<u64, u64> ext_gcd_mod(u64 a, u64 m) {
  i64 old_r = (i64)(a % m), r = (i64)m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  i64 x = old_s % (i64)m;
  if (x < 0) x += (i64)m;
  return {(u64)old_r, (u64)x};
}

}  // namespace

u64 inv_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  auto [g, x] = ext_gcd_mod(a, m);
  if (g != 1) throw std::invalid_argument("inv_mod: operand not invertible");
  return x;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every 64-bit integer.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

constexpr u64 kTrialBound = 1'000'000;

u64 pollard_rho(u64 n) {
  // n odd composite with no factor below kTrialBound.
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::map<u64, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, acc);
  factor_into(n / d, acc);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  u64 rest = n;
  std::map<u64, unsigned> acc;
  for (u64 d = 2; d <= kTrialBound && d * d <= rest; d = (d == 2) ? 3 : d + 2) {
    while (rest % d == 0) {
      ++acc[d];
      rest /= d;
    }
  }
  if (rest > 1) {
    if (rest <= kTrialBound * kTrialBound || is_prime(rest)) {
      // Cofactor below the trial square is necessarily prime.
      ++acc[rest];
    } else {
      factor_into(rest, acc);
    }
  }
  for (auto [p, e] : acc) f.factors.push_back({p, e});
  return f;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> divs{1};
  for (const auto& [p, e] : f.factors) {
    std::size_t base = divs.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    u64 pk = 1;
    for (unsigned k = 1; k < e; ++k) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

u64 tau(const Factorization& f) {
  u64 t = 1;
  for (const auto& [p, e] : f.factors) t *= e + 1;
  return t;
}

std::vector<std::pair<u64, u64>> divisors_with_phi(const Factorization& f) {
  std::vector<std::pair<u64, u64>> out{{1, 1}};
  for (const auto& [p, e] : f.factors) {
    std::size_t base = out.size();
    u64 pk = 1, phi_pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      phi_pk = (k == 1) ? p - 1 : phi_pk * p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back({out[i].first * pk, out[i].second * phi_pk});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<u64, u64> crt(const std::vector<std::pair<u64, u64>>& parts) {
  u64 r = 0, m = 1;
  for (auto [ri, mi] : parts) {
    if (mi == 0) throw std::invalid_argument("crt: zero modulus");
    if (ri >= mi) throw std::invalid_argument("crt: residue out of range");
    if (std::gcd(m, mi) != 1)
      throw std::invalid_argument("crt: moduli not pairwise coprime");
    if ((u128)m * mi > (u128)1 << 63)
      throw std::overflow_error("crt: modulus product exceeds 2^63");
    // x = r (mod m), x = ri (mod mi)
    u64 diff = (ri + mi - r % mi) % mi;
    u64 k = mul_mod(diff, inv_mod(m % mi, mi), mi);
    r = r + m * k;
    m = m * mi;
  }
  return {r, m};
}

ResidueSet linear_congruence(u64 a, u64 b, u64 n) {
  if (n == 0) throw std::invalid_argument("linear_congruence: n must be positive");
  a %= n;
  b %= n;
  ResidueSet out;
  out.modulus = n;
  u64 g = std::gcd(a, n);  // gcd(0, n) = n
  if (b % g != 0) return out;
  u64 step = n / g;
  u64 x0 = (step == 1) ? 0 : mul_mod((b / g) % step, inv_mod(a / g, step), step);
  out.residues.reserve(g);
  for (u64 k = 0; k < g; ++k) out.residues.push_back(x0 + k * step);
  return out;
}

ResidueSet sqrt_mod_prime(u64 a, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("sqrt_mod_prime: composite modulus");
  a %= p;
  ResidueSet out;
  out.modulus = p;
  if (p == 2 || a == 0) {
    out.residues.push_back(a % p);
    return out;
  }
  if (pow_mod(a, (p - 1) / 2, p) != 1) return out;  // non-residue
  // Tonelli-Shanks on p-1 = q * 2^s with q odd.
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(a, q, p);
  u64 root = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    u64 exp = m - i - 1;
    u64 bpow = c;
    for (u64 j = 0; j < exp; ++j) bpow = mul_mod(bpow, bpow, p);
    m = i;
    c = mul_mod(bpow, bpow, p);
    t = mul_mod(t, c, p);
    root = mul_mod(root, bpow, p);
  }
  u64 other = p - root;
  out.residues = {std::min(root, other), std::max(root, other)};
  return out;
}

namespace {

// x^2 + b*x + c mod m, overflow-safe.
u64 eval_quadratic(u64 x, u64 b, u64 c, u64 m) {
  u64 v = (mul_mod(x, x, m) + mul_mod(b % m, x, m)) % m;
  return (v + c % m) % m;
}

// Roots of x^2 + b*x + c mod p^e, sorted.
std::vector<u64> quadratic_roots_mod_prime_power(u64 p, unsigned e, u64 b,
                                                 u64 c) {
  std::vector<u64> roots;
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x)
      if (eval_quadratic(x, b, c, 2) == 0) roots.push_back(x);
  } else {
    // (2x + b)^2 = b^2 - 4c (mod p)
    u64 disc = (mul_mod(b % p, b % p, p) + p - mul_mod(4 % p, c % p, p)) % p;
    ResidueSet sq = sqrt_mod_prime(disc, p);
    u64 inv2 = inv_mod(2, p);
    for (u64 s : sq.residues)
      roots.push_back(mul_mod((s + p - b % p) % p, inv2, p));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  }
  u64 mod = p;
  for (unsigned k = 1; k < e; ++k) {
    u64 next_mod = mod * p;
    std::vector<u64> lifted;
    for (u64 x : roots) {
      u64 deriv = (mul_mod(2 % p, x % p, p) + b % p) % p;
      if (p != 2 && deriv != 0) {
        // Regular Hensel step: unique lift of x.
        u64 fx = eval_quadratic(x, b, c, next_mod);
        u64 corr = mul_mod((fx / mod) % p, inv_mod(deriv, p), p);
        u64 lift = (x + (next_mod - mul_mod(corr, mod, next_mod))) % next_mod;
        lifted.push_back(lift);
      } else {
        // Singular (or p = 2): exhaustive per-level scan.
        for (u64 t = 0; t < p; ++t) {
          u64 cand = x + t * mod;
          if (eval_quadratic(cand, b, c, next_mod) == 0) lifted.push_back(cand);
        }
      }
    }
    std::sort(lifted.begin(), lifted.end());
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    roots = std::move(lifted);
    mod = next_mod;
  }
  return roots;
}

}  // namespace

ResidueSet solve_quadratic(u64 n, u64 b, u64 c) {
  if (n == 0) throw std::invalid_argument("solve_quadratic: n must be positive");
  b %= n;
  c %= n;
  ResidueSet out;
  out.modulus = n;
  if (n == 1) {
    out.residues.push_back(0);
    return out;
  }
  Factorization f = factorize(n);
  std::vector<u64> combined{0};
  u64 mod_so_far = 1;
  for (const auto& [p, e] : f.factors) {
    u64 pe = 1;
    for (unsigned k = 0; k < e; ++k) pe *= p;
    std::vector<u64> part = quadratic_roots_mod_prime_power(p, e, b % pe, c % pe);
    if (part.empty()) return out;
    std::vector<u64> next;
    next.reserve(combined.size() * part.size());
    for (u64 x : combined)
      for (u64 y : part)
        next.push_back(crt({{x, mod_so_far}, {y, pe}}).first);
    combined = std::move(next);
    mod_so_far *= pe;
  }
  std::sort(combined.begin(), combined.end());
  out.residues = std::move(combined);
  return out;
}

}  // namespace dhindex
