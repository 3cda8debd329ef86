import math
from itertools import product

import pytest

import abelian3


def brute_force_count(m, n, r):
    # Subgroups as sets of elements, closed under addition.
    elements = list(product(range(m), range(n), range(r)))
    seen = set()
    frontier = [frozenset({(0, 0, 0)})]
    seen.add(frontier[0])
    while frontier:
        nxt = []
        for h in frontier:
            for g in elements:
                if g in h:
                    continue
                grown = set(h)
                todo = [g]
                while todo:
                    x = todo.pop()
                    if x in grown:
                        continue
                    grown.add(x)
                    for y in list(grown):
                        s = ((x[0] + y[0]) % m, (x[1] + y[1]) % n, (x[2] + y[2]) % r)
                        if s not in grown:
                            todo.append(s)
                key = frozenset(grown)
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return len(seen)


def test_small_counts():
    assert abelian3.count(2, 2, 2) == 16
    assert abelian3.count(1, 1, 12) == 6
    assert abelian3.count_cyclic(2, 2, 2) == 8
    assert abelian3.count_by_order(2, 2, 2, 2) == 7
    assert abelian3.count_rank2(2, 4) == 8


@pytest.mark.parametrize("group", [(2, 2, 2), (2, 3, 4), (3, 3, 1), (2, 2, 4)])
def test_count_matches_brute_force(group):
    assert abelian3.count(*group) == brute_force_count(*group)
    assert abelian3.count_direct(*group) == abelian3.count(*group)


def test_enumerate_yields_distinct_subgroups():
    records = abelian3.enumerate(2, 4, 4)
    assert len(records) == abelian3.count(2, 4, 4)
    sets = {frozenset(map(tuple, abelian3.subgroup_elements(2, 4, 4, r["sextuple"])))
            for r in records}
    assert len(sets) == len(records)
    for r, s in zip(records, sets):
        assert r["order"] in (1, 2, 4, 8, 16, 32)


def test_large_values_are_python_ints():
    n = 2**20 * 3**13
    value = abelian3.count(n, n, n)
    assert isinstance(value, int)
    assert value > 2**64


def test_polynomials():
    p2 = abelian3.symbolic_count(1, 1, 1)
    assert sum(c * 2**i for i, c in enumerate(p2["coefficients"])) == 16
    assert abelian3.general_form(5)["coefficients"] == abelian3.symbolic_count(5, 5, 5)["coefficients"]
    assert abelian3.gaussian_binomial(3, 1)["coefficients"] == [1, 1, 1]
    assert abelian3.h_closed_form(1)["coefficients"]


def test_sieve_and_h():
    s = abelian3.sieve_s(12)
    assert s[12] == 3612
    h = abelian3.h_values(12)
    assert h[1] == 1


def test_constants_and_main_term():
    c = abelian3.dirichlet_constants(10000, 16)
    assert math.isclose(c["H3"], 4.0978283702431205, rel_tol=1e-9)
    rows = abelian3.asymptotic([1000, 10000])
    assert rows[1]["relative_error"] < rows[0]["relative_error"]


def test_verify_small():
    report = abelian3.verify(16)
    assert report["passed"]
    assert report["groups_checked"] > 0


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        abelian3.count_by_order(2, 2, 2, 3)
    with pytest.raises(ValueError):
        abelian3.count(0, 1, 1)
