#include <doctest.h>

#include "dhindex/dh.hpp"
#include "dhindex/rng.hpp"
#include "oracles.hpp"

using namespace dhindex;

TEST_CASE("dh_uni and dh_bi tables") {
  CHECK(dh_uni(6).table == std::vector<u64>{0, 1, 4, 3, 4, 1});
  CHECK(dh_uni(2).table == std::vector<u64>{0, 1});
  CHECK(dh_uni(5).table == std::vector<u64>{0, 1, 4, 4, 1});
  CHECK(dh_bi(2).table ==
        std::vector<std::vector<u64>>{{0, 0}, {0, 1}});
  for (u64 y = 0; y < 7; ++y) CHECK(dh_bi(7).table[0][y] == 0);
  CHECK(dh_bi(3).table[2][2] == 1);
}

TEST_CASE("thm1_witness") {
  CyclotomicMap w6 = thm1_witness(6);
  CHECK(w6.ell == 3);
  CHECK(w6.r == 1);
  CHECK(w6.mult == std::vector<u64>{0, 0, 2});

  CyclotomicMap w2 = thm1_witness(2);
  CHECK(w2.ell == 1);
  CHECK(w2.r == 1);
  CHECK(w2.mult == std::vector<u64>{0});

  CyclotomicMap w4 = thm1_witness(4);
  CHECK(w4.ell == 2);
  CHECK(w4.r == 2);
  CHECK(w4.mult == std::vector<u64>{0, 3});

  for (u64 n = 2; n <= 64; n += 2) CHECK(to_expmap(thm1_witness(n)) == dh_uni(n));
  CHECK_THROWS_AS(thm1_witness(7), std::invalid_argument);
}

TEST_CASE("uni_coincidences") {
  UniCoincidenceReport rep = uni_coincidences(7, 0, 2);
  CHECK(rep.count == 2);
  CHECK(rep.points == std::vector<u64>{3, 4});
  REQUIRE(rep.bound.has_value());
  CHECK(*rep.bound == 2);

  CHECK(uni_coincidences(7, 0, 3).count == 0);
  CHECK_FALSE(uni_coincidences(6, 1, 0).bound.has_value());
  CHECK(uni_coincidences(6, 1, 0).count == 4);  // x^2 - x = 0 mod 6

  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    for (u64 r = 0; r < p; ++r)
      for (u64 a = 0; a < p; ++a) CHECK(uni_coincidences(p, r, a).count <= 2);
}

TEST_CASE("max_coincidences_for_index") {
  CHECK(max_coincidences_for_index(5, 1) == 2);
  CHECK(max_coincidences_for_index(5, 5) == 5);
  CHECK(max_coincidences_for_index(6, 1) == 4);
  CHECK_THROWS_AS(max_coincidences_for_index(6, 4), std::invalid_argument);
}

TEST_CASE("max_coincidences_for_index bounds") {
  for (u64 n : {6ull, 8ull, 10ull, 12ull, 15ull}) {
    // Any quadratic x^2 - rx - a has some root count; the per-index maximum
    // is at most ell times the best single-residue count.
    u64 max_roots = 0;
    for (u64 r = 0; r < n; ++r)
      for (u64 a = 0; a < n; ++a)
        max_roots = std::max<u64>(
            max_roots, oracles::quadratic_roots(n, (n - r) % n, (n - a) % n).size());
    for (u64 ell : divisors(factorize(n))) {
      u64 value = max_coincidences_for_index(n, ell);
      CHECK(value <= ell * max_roots);
      CHECK(value <= n);
      if (n % 2 == 0 && ell == n / 2) {
        // d itself has index n/2, so the best index-n/2 agreement is n.
        CHECK(value == n);
      }
    }
  }
}

TEST_CASE("constructed index-ell maps never beat max_coincidences_for_index") {
  SeededRng rng(47);
  for (u64 n : {6ull, 9ull, 12ull, 20ull}) {
    ExpMap d = dh_uni(n);
    for (u64 ell : divisors(factorize(n))) {
      u64 best = max_coincidences_for_index(n, ell);
      for (int k = 0; k < 10; ++k) {
        CyclotomicMap m{n, ell, rng.below(n), {}};
        m.mult.resize(ell);
        for (u64 i = 0; i < ell; ++i) m.mult[i] = rng.below(n);
        CHECK(agreement_count(to_expmap(m), d) <= best);
      }
    }
  }
}

TEST_CASE("bi_coincidences") {
  BiCoincidenceReport rep = bi_coincidences(6, 0, 0, 0);
  CHECK(rep.count == 15);
  CHECK(rep.bound == 15);
  CHECK(bi_coincidences(5, 0, 0, 1).count == 4);
  CHECK(bi_coincidences(1, 0, 0, 0).count == 1);

  SeededRng rng(43);
  for (u64 n = 1; n <= 20; ++n) {
    for (int k = 0; k < 10; ++k) {
      u64 r1 = rng.below(n), r2 = rng.below(n), a = rng.below(n);
      BiCoincidenceReport r = bi_coincidences(n, r1, r2, a);
      CHECK(r.count == oracles::bi_coincidence_count(n, r1, r2, a));
      CHECK(r.count <= r.bound);
      for (auto [x, y] : r.points) {
        u64 rhs = (a + mul_mod(r1, x, n) + mul_mod(r2, y, n)) % n;
        CHECK(mul_mod(x, y, n) == rhs);
      }
    }
  }
}

TEST_CASE("divisor_sum_identity") {
  DivisorSumIdentity s6 = divisor_sum_identity(6);
  CHECK(s6.lhs == 15);
  CHECK(s6.rhs == Rational(15, 1));
  CHECK(s6.tau_bound == 24);
  CHECK(s6.equal);
  CHECK(s6.within_tau_bound);

  CHECK(divisor_sum_identity(1).lhs == 1);
  CHECK(divisor_sum_identity(1).tau_bound == 1);
  CHECK(divisor_sum_identity(4).lhs == 8);
  CHECK(divisor_sum_identity(4).tau_bound == 12);

  for (u64 n = 1; n <= 2000; ++n) {
    DivisorSumIdentity id = divisor_sum_identity(n);
    CHECK(id.equal);
    CHECK(id.within_tau_bound);
  }
}

TEST_CASE("bi_from_uni") {
  CHECK(bi_from_uni(5, 2, 3) == 1);
  CHECK(bi_from_uni(9, 0, 7) == 0);
  CHECK(bi_from_uni(9, 3, 3) == 0);
  CHECK_THROWS_AS(bi_from_uni(8, 1, 1), std::invalid_argument);
  for (u64 n = 1; n <= 25; n += 2)
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b) CHECK(bi_from_uni(n, a, b) == mul_mod(a, b, n));
}

TEST_CASE("verify_thm1 rows") {
  auto rows = collect_rows([](const RowSink& sink) { verify_thm1(2, 40, sink); });
  CHECK(rows.size() == 39);
  for (const auto& row : rows) {
    CHECK(row.pass);
    CHECK(row.id == "t1");
    CHECK(row.expected == row.computed);
  }
  CHECK(rows[15].params["n"] == 17);
  CHECK(rows[15].computed == 17);
  CHECK(rows[16].params["n"] == 18);
  CHECK(rows[16].computed == 9);
}

TEST_CASE("verify_thm2 rows") {
  auto rows = collect_rows(
      [](const RowSink& sink) { verify_thm2(31, std::optional<u64>(20), sink); });
  u64 prime_rows = 0, ratio_rows = 0;
  for (const auto& row : rows) {
    CHECK(row.pass);
    if (row.id == "t2") {
      ++prime_rows;
      CHECK(row.computed.get<u64>() <= 2);
    } else {
      CHECK(row.id == "t2-empirical");
      ++ratio_rows;
    }
  }
  CHECK(prime_rows == 11);  // primes up to 31
  CHECK(ratio_rows == 11);  // composites 4, 6, 8, 9, ..., 20
}

TEST_CASE("verify_thm3 and verify_thm4 rows") {
  auto t3 = collect_rows([](const RowSink& sink) { verify_thm3(12, sink); });
  CHECK(t3.size() == 11);
  for (const auto& row : t3) CHECK(row.pass);

  auto t4 = collect_rows(
      [](const RowSink& sink) { verify_thm4(12, 5, 7, sink); });
  CHECK(t4.size() == 60);
  for (const auto& row : t4) CHECK(row.pass);
}
