"""Smoke tests for the python bindings."""

import math

import pytest

import dhindex


def test_factorize():
    f = dhindex.factorize(12)
    assert [(pp.prime, pp.exponent) for pp in f.factors] == [(2, 2), (3, 1)]
    assert dhindex.euler_phi(f) == 4
    assert dhindex.tau(f) == 6
    assert dhindex.divisors(f) == [1, 2, 3, 4, 6, 12]


def test_solve_quadratic_matches_scan():
    for n in (6, 12, 35, 49):
        for b in range(n):
            for c in range(n):
                roots = dhindex.solve_quadratic(n, b, c).residues
                brute = [x for x in range(n) if (x * x + b * x + c) % n == 0]
                assert roots == brute


def test_index_of_squaring_map():
    for n in range(2, 40):
        w = dhindex.compute_index(dhindex.dh_uni(n))
        assert w.ell == (n // 2 if n % 2 == 0 else n)
    w6 = dhindex.compute_index(dhindex.dh_uni(6))
    assert (w6.ell, w6.r, w6.mult) == (3, 1, [0, 0, 2])


def test_thm1_witness_tabulates_to_d():
    for n in range(2, 40, 2):
        wit = dhindex.thm1_witness(n)
        assert dhindex.to_expmap(wit) == dhindex.dh_uni(n)


def test_minimal_index_pairs_of_D():
    for n in range(2, 13):
        assert dhindex.minimal_index_pairs(dhindex.dh_bi(n)) == [(n, n)]


def test_coincidences():
    rep = dhindex.uni_coincidences(7, 0, 2)
    assert rep.count == 2 and rep.points == [3, 4] and rep.bound == 2
    bi = dhindex.bi_coincidences(6, 0, 0, 0)
    assert bi.count == 15 and bi.bound == 15
    brute = sum(
        1 for x in range(6) for y in range(6) if (x * y) % 6 == 0
    )
    assert bi.count == brute


def test_bi_from_uni():
    for n in (5, 9, 15):
        for a in range(n):
            for b in range(n):
                assert dhindex.bi_from_uni(n, a, b) == (a * b) % n
    with pytest.raises(ValueError):
        dhindex.bi_from_uni(8, 1, 1)


def test_field_round_trip():
    ctx = dhindex.make_ctx(13, 6)
    assert ctx.gamma == 4
    poly = dhindex.cyclotomic_to_poly(dhindex.thm1_witness(6), ctx)
    values = [ctx.subgroup[(x * x) % 6] for x in range(6)]
    for x in range(6):
        assert dhindex.eval_poly(poly, ctx.subgroup[x], 13) == values[x]
    assert dhindex.interpolate_subgroup(ctx, values) == poly


def test_thm5_equality_case():
    ctx = dhindex.make_ctx(31, 30)
    rep = dhindex.thm5_check(dhindex.dh_uni(30), ctx)
    assert rep.ell == 15
    assert (rep.bound.num, rep.bound.den) == (15, 1)
    assert rep.pass_


def test_divisor_sum_identity():
    for n in range(1, 200):
        rep = dhindex.divisor_sum_identity(n)
        assert rep.equal and rep.within_tau_bound
        assert rep.lhs == sum(
            dhindex.euler_phi(dhindex.factorize(n // t)) * t
            for t in range(1, n + 1)
            if n % t == 0
        )
