#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact integer and modular arithmetic on 64-bit operands. All routines are
// pure and deterministic; intermediates that could overflow 64 bits go
// through unsigned __int128.

namespace dhindex {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = product of prime^exponent, primes strictly increasing; n=1 has an
// empty factor list.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;
};

// Sorted, duplicate-free residues in [0, modulus).
struct ResidueSet {
  u64 modulus = 1;
  std::vector<u64> residues;

  bool empty() const { return residues.empty(); }
  std::size_t size() const { return residues.size(); }
  bool contains(u64 x) const;
};

// Nonnegative exact rational, kept normalized (gcd(num, den) = 1, den >= 1).
struct Rational {
  u64 num = 0;
  u64 den = 1;

  Rational() = default;
  Rational(u64 numerator, u64 denominator);

  Rational operator+(const Rational& other) const;
  Rational operator*(u64 k) const;
  bool operator==(const Rational& other) const;
  // Cross-multiplied comparisons in 128 bits.
  bool operator<=(const Rational& other) const;
  bool operator>=(const Rational& other) const { return other <= *this; }
};

inline Rational rational(u64 num, u64 den = 1) { return Rational(num, den); }

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
// Inverse of a mod m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

// Trial division up to 10^6, then Pollard rho on the cofactor. Rejects n = 0.
Factorization factorize(u64 n);

std::vector<u64> divisors(const Factorization& f);
u64 euler_phi(const Factorization& f);
u64 tau(const Factorization& f);
// All (d, phi(d)) for d | n, sorted by d.
std::vector<std::pair<u64, u64>> divisors_with_phi(const Factorization& f);

// Combine congruences x = r_i (mod m_i); moduli must be pairwise coprime.
// Returns (residue, product of moduli).
std::pair<u64, u64> crt(const std::vector<std::pair<u64, u64>>& parts);

// All x in [0, n) with a*x = b (mod n). Empty set when gcd(a, n) does not
// divide b; otherwise gcd(a, n) residues forming one class mod n/gcd.
ResidueSet linear_congruence(u64 a, u64 b, u64 n);

// All x in [0, p) with x^2 = a (mod p), p prime (Tonelli-Shanks; trivial
// shortcuts for p = 2 and a = 0). Rejects composite p.
ResidueSet sqrt_mod_prime(u64 a, u64 p);

// All x in [0, n) with x^2 + b*x + c = 0 (mod n): roots mod each prime power
// of n (Hensel lifting, exhaustive per-level scans in the singular case and
// for p = 2), then CRT.
ResidueSet solve_quadratic(u64 n, u64 b, u64 c);

}  // namespace dhindex
