#include <doctest.h>

#include <numeric>

#include "dhindex/modarith.hpp"
#include "dhindex/rng.hpp"
#include "oracles.hpp"

using namespace dhindex;

TEST_CASE("factorize small and hand-checked values") {
  CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(9991).factors == std::vector<PrimePower>{{97, 1}, {103, 1}});
  CHECK(factorize(97).factors == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n with increasing primes") {
  SeededRng rng(11);
  for (int i = 0; i < 200; ++i) {
    u64 n = 1 + rng.below(1'000'000);
    Factorization f = factorize(n);
    u64 prod = 1, last = 0;
    for (auto [p, e] : f.factors) {
      CHECK(p > last);
      CHECK(is_prime(p));
      last = p;
      for (unsigned k = 0; k < e; ++k) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("factorize needs rho beyond the trial bound") {
  // Both primes exceed the 10^6 trial-division bound.
  u64 p = 1'000'003, q = 1'000'033;
  Factorization f = factorize(p * q);
  CHECK(f.factors == std::vector<PrimePower>{{p, 1}, {q, 1}});
  CHECK(factorize(1ull << 62).factors == std::vector<PrimePower>{{2, 62}});
}

TEST_CASE("divisors") {
  CHECK(divisors(factorize(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(1)) == std::vector<u64>{1});
  std::vector<u64> brute;
  for (u64 d = 1; d <= 36; ++d)
    if (36 % d == 0) brute.push_back(d);
  CHECK(divisors(factorize(36)) == brute);
  CHECK(divisors(factorize(36)).size() == 9);
}

TEST_CASE("euler_phi and tau") {
  CHECK(euler_phi(factorize(12)) == 4);
  CHECK(tau(factorize(12)) == 6);
  CHECK(euler_phi(factorize(1)) == 1);
  CHECK(tau(factorize(1)) == 1);
  CHECK(euler_phi(factorize(97)) == 96);
  CHECK(tau(factorize(97)) == 2);
}

TEST_CASE("sum of phi(d) over divisors equals n") {
  for (u64 n = 1; n <= 10'000; ++n) {
    u64 sum = 0;
    for (auto [d, phi_d] : divisors_with_phi(factorize(n))) {
      (void)d;
      sum += phi_d;
    }
    CHECK(sum == n);
  }
}

TEST_CASE("crt") {
  CHECK(crt({{1, 2}, {2, 3}}) == std::pair<u64, u64>{5, 6});
  CHECK(crt({{0, 1}}) == std::pair<u64, u64>{0, 1});
  CHECK(crt({{3, 4}, {5, 7}}) == std::pair<u64, u64>{19, 28});
  CHECK_THROWS_AS(crt({{1, 4}, {3, 6}}), std::invalid_argument);
}

TEST_CASE("linear_congruence matches the scan oracle") {
  CHECK(linear_congruence(2, 4, 6).residues == std::vector<u64>{2, 5});
  CHECK(linear_congruence(3, 1, 5).residues == std::vector<u64>{2});
  CHECK(linear_congruence(2, 3, 4).residues.empty());
  SeededRng rng(5);
  for (int i = 0; i < 300; ++i) {
    u64 n = 1 + rng.below(80);
    u64 a = rng.below(n), b = rng.below(n);
    CHECK(linear_congruence(a, b, n).residues == oracles::linear_roots(a, b, n));
  }
}

TEST_CASE("sqrt_mod_prime") {
  CHECK(sqrt_mod_prime(2, 7).residues == std::vector<u64>{3, 4});
  CHECK(sqrt_mod_prime(0, 101).residues == std::vector<u64>{0});
  CHECK(sqrt_mod_prime(3, 7).residues.empty());
  CHECK(sqrt_mod_prime(1, 2).residues == std::vector<u64>{1});
  CHECK_THROWS_AS(sqrt_mod_prime(3, 15), std::invalid_argument);
  // 193 - 1 = 2^6 * 3 exercises the full Tonelli-Shanks loop.
  for (u64 p : {2ull, 3ull, 5ull, 13ull, 17ull, 97ull, 101ull, 193ull}) {
    for (u64 a = 0; a < p; ++a)
      CHECK(sqrt_mod_prime(a, p).residues == oracles::sqrt_roots(a, p));
  }
}

TEST_CASE("solve_quadratic hand-checked roots") {
  CHECK(solve_quadratic(6, 5, 0).residues == std::vector<u64>{0, 1, 3, 4});
  CHECK(solve_quadratic(4, 0, 0).residues == std::vector<u64>{0, 2});
  CHECK(solve_quadratic(3, 0, 1).residues.empty());
  CHECK(solve_quadratic(1, 0, 0).residues == std::vector<u64>{0});
  CHECK_THROWS_AS(solve_quadratic(0, 0, 0), std::invalid_argument);
}

TEST_CASE("solve_quadratic equals the scan oracle on the small grid") {
  for (u64 n = 1; n <= 30; ++n)
    for (u64 b = 0; b < n; ++b)
      for (u64 c = 0; c < n; ++c)
        CHECK(solve_quadratic(n, b, c).residues == oracles::quadratic_roots(n, b, c));
}

TEST_CASE("solve_quadratic equals the scan oracle on random instances") {
  SeededRng rng(17);
  for (int i = 0; i < 200; ++i) {
    u64 n = 1 + rng.below(3000);
    u64 b = rng.below(n), c = rng.below(n);
    CHECK(solve_quadratic(n, b, c).residues == oracles::quadratic_roots(n, b, c));
  }
}

TEST_CASE("solve_quadratic has at most two roots mod a prime") {
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 31ull, 97ull})
    for (u64 b = 0; b < p; ++b)
      for (u64 c = 0; c < p; ++c)
        CHECK(solve_quadratic(p, b, c).size() <= 2);
}

TEST_CASE("solving mod n equals solving per prime power plus crt") {
  SeededRng rng(23);
  for (int i = 0; i < 100; ++i) {
    u64 n = 2 + rng.below(2000);
    u64 b = rng.below(n), c = rng.below(n);
    Factorization f = factorize(n);
    std::vector<u64> combined{0};
    u64 mod = 1;
    bool empty = false;
    for (auto [p, e] : f.factors) {
      u64 pe = 1;
      for (unsigned k = 0; k < e; ++k) pe *= p;
      auto part = solve_quadratic(pe, b % pe, c % pe).residues;
      if (part.empty()) {
        empty = true;
        break;
      }
      std::vector<u64> next;
      for (u64 x : combined)
        for (u64 y : part) next.push_back(crt({{x, mod}, {y, pe}}).first);
      combined = std::move(next);
      mod *= pe;
    }
    auto whole = solve_quadratic(n, b, c).residues;
    if (empty) {
      CHECK(whole.empty());
    } else {
      std::sort(combined.begin(), combined.end());
      CHECK(whole == combined);
    }
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(5, 6) * 6 == Rational(5, 1));
  CHECK(Rational(6, 5) <= Rational(2, 1));
  CHECK(Rational(2, 1) >= Rational(6, 5));
  CHECK_FALSE(Rational(3, 2) <= Rational(4, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
