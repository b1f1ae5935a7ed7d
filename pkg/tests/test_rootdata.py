from math import prod

import pytest

from chevring.arith import galois_params, gl_params, prime_power_base
from chevring.errors import InputError
from chevring.rootdata import (
    Registry,
    check_torsion_free,
    default_registry,
    group_order,
    lookup,
    order_divisibility_matches_degrees,
    validate_registry,
)

def _prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power_base(q)
        except InputError:
            continue
        out.append(q)
    return out


def test_lookup_gl_and_sp_degrees():
    for n in range(1, 9):
        gl = lookup("GL", n)
        assert gl.degrees == tuple(range(1, n + 1))
        sp = lookup("Sp", n)
        assert sp.degrees == tuple(2 * i for i in range(1, n + 1))
        assert [2 * d for d in sp.degrees] == [4 * i for i in range(1, n + 1)]


def test_lookup_fixed_ranks_and_weyl_orders():
    assert lookup("GL", 3).weyl_order == 6
    assert lookup("SL", 2).degrees == (2, 3)
    assert lookup("G2", 2).degrees == (2, 6)
    assert lookup("F4", 4).weyl_order == 1152
    assert lookup("E8", 8).degrees == (2, 8, 12, 14, 18, 20, 24, 30)
    so8 = lookup("SO_even", 4)
    assert so8.degrees == (2, 4, 4, 6)
    assert so8.weyl_order == 192


def test_lookup_errors():
    with pytest.raises(InputError):
        lookup("SU", 3)
    with pytest.raises(InputError):
        lookup("E8", 7)
    with pytest.raises(InputError):
        lookup("SO_even", 1)
    with pytest.raises(InputError):
        lookup("GL", 0)


def test_group_order_examples():
    assert group_order(lookup("GL", 2), 3) == 48
    for q in (2, 3, 4, 5, 9):
        assert group_order(lookup("GL", 1), q) == q - 1
    assert group_order(lookup("Sp", 1), 3) == 24
    with pytest.raises(InputError):
        group_order(lookup("GL", 2), 6)


def test_group_order_matches_gl_product_formula():
    for n in range(1, 6):
        datum = lookup("GL", n)
        for q in (2, 3, 4, 5, 8, 9):
            expected = q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(1, n + 1))
            assert group_order(datum, q) == expected


def test_torsion_primes():
    for l in (2, 3, 5, 7):
        assert check_torsion_free(lookup("Sp", 3), l)
        assert check_torsion_free(lookup("GL", 5), l)
        assert check_torsion_free(lookup("SL", 4), l)
    assert not check_torsion_free(lookup("Spin", 3), 2)
    assert check_torsion_free(lookup("Spin", 3), 3)
    assert not check_torsion_free(lookup("G2", 2), 2)
    assert not check_torsion_free(lookup("F4", 4), 3)
    assert not check_torsion_free(lookup("E8", 8), 5)
    assert check_torsion_free(lookup("E8", 8), 7)


def test_registry_identities_hold_for_all_shipped_records():
    checked = validate_registry(max_rank=12)
    assert checked >= 70
    cases = [(f, r) for f in ("GL", "SL", "Sp", "SO_odd", "Spin") for r in range(1, 13)]
    cases += [("SO_even", r) for r in range(2, 13)]
    cases += [("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)]
    for family, rank in cases:
        datum = lookup(family, rank)
        assert prod(datum.degrees) == datum.weyl_order, (family, rank)
        assert sum(d - 1 for d in datum.degrees) == datum.unipotent_exponent, (family, rank)


def test_order_divisibility_iff_degree_divisible():
    for family in ("GL", "SL", "Sp"):
        for rank in range(1, 7):
            datum = lookup(family, rank)
            for l in (2, 3, 5, 7, 11, 13):
                for q in _prime_powers(81):
                    if q % l == 0:
                        continue
                    assert order_divisibility_matches_degrees(datum, q, l), (family, rank, q, l)


def test_gl_trivial_case_iff_order_prime_to_l():
    for l in (3, 5, 7, 11, 13):
        for q in _prime_powers(81):
            if q % l == 0:
                continue
            p = prime_power_base(q)[0]
            params = galois_params(p, q, l)
            for n in range(1, 9):
                glp = gl_params(params, n)
                order = group_order(lookup("GL", n), q)
                assert (glp.m == 0) == (order % l != 0), (n, q, l)


BAD_WEYL = "GL | n >= 1 | 1..n | n! * 2 | n*(n-1)/2 | -"
BAD_ROOTS = "GL | n >= 1 | 1..n | n! | n | -"
GOOD = "GL | n >= 1 | 1..n | n! | n*(n-1)/2 | -"


def test_registry_parser_rejects_violated_identities():
    with pytest.raises(InputError):
        Registry.from_text(BAD_WEYL)
    with pytest.raises(InputError):
        Registry.from_text(BAD_ROOTS)
    reg = Registry.from_text(GOOD)
    assert reg.lookup("GL", 4).weyl_order == 24


def test_registry_parser_grammar_errors():
    with pytest.raises(InputError):
        Registry.from_text("GL | n >= 1 | 1..n | n! | n*(n-1)/2")  # five fields
    with pytest.raises(InputError):
        Registry.from_text("GL | whenever | 1..n | n! | n*(n-1)/2 | -")
    with pytest.raises(InputError):
        Registry.from_text("GL | n >= 1 | 1..n | import_os | n*(n-1)/2 | -")
    with pytest.raises(InputError):
        Registry.from_text("X | n = 2 | 3, 3 | 9 | 4 | 6")  # torsion entry not prime
    with pytest.raises(InputError):
        # 9 degrees multiply to |W| but the division n/4 is inexact
        Registry.from_text("X | n = 2 | 3, 3 | 9 | n/4 | -")


def test_registry_formula_features():
    reg = Registry.from_text("X | n >= 1 | 1..n | n! | n*(n-1)/2 | 2, 3")
    datum = reg.lookup("X", 5)
    assert datum.weyl_order == 120
    assert datum.torsion_primes == frozenset({2, 3})
    reg2 = Registry.from_text("Y | n >= 2 | 2..2*n-2 step 2, n | 2^(n-1) * n! | n*(n-1) | -")
    assert reg2.lookup("Y", 4).degrees == (2, 4, 4, 6)
