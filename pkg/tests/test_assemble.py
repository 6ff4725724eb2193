import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blseifert.assemble import build, build_seifert_from_plan, permutation_from_plan, report
from blseifert.exactmat import det_int, matmul, transpose
from blseifert.laurent import LaurentPoly
from blseifert.pathplan import SEQUENTIAL, SHORTEST, LatticePath, make_plan, parse_path
from blseifert.polyparse import parse_poly, print_poly
from blseifert.randomgen import random_admissible
from blseifert.seifert import NotAdmissibleError, decompose, seifert_violations
from oracles import alexander_oracle

W3 = "3*t1*t2 + 3*t1^-1*t2^-1 - 5"
EXAMPLE1 = "2*t1 + 2*t1^-1 + 3*t1*t2 + 3*t1^-1*t2^-1 + 4*t2 + 4*t2^-1 - 17"


def plan_for(text, path_text, m=2):
    return make_plan(parse_path(path_text, m), decompose(parse_poly(text, m)))


@pytest.mark.parametrize(
    "path_text, sigma",
    [("+t1,+t2,-t1", (1, 3, 2)), ("+t1,+t1", (1, 2)), ("+t2,+t1", (2, 1))],
)
def test_sigma(path_text, sigma):
    path = parse_path(path_text, 2)
    plan = make_plan(path, decompose(LaurentPoly.constant(1, 2)))
    got, p = permutation_from_plan(plan)
    assert got == sigma
    n = 2 * path.l
    assert matmul(p, transpose(p)) == [[int(i == j) for j in range(n)] for i in range(n)]
    assert det_int(p) == 1


def test_w3_path_p1():
    asm = build_seifert_from_plan(plan_for(W3, "+t1,+t2"))
    assert asm.A.as_lists() == [[3, 0, 3, 0], [-1, 1, 0, 1], [3, 0, 3, 1], [0, 1, 0, 1]]
    assert asm.sizes == (2, 2)
    assert print_poly(asm.delta) == "3*t1*t2 - 5 + 3*t1^-1*t2^-1"


def test_w3_path_p2_is_the_pair_swap():
    asm = build_seifert_from_plan(plan_for(W3, "+t2,+t1"))
    assert asm.sigma == (2, 1)
    assert print_poly(asm.delta) == "3*t1*t2 - 5 + 3*t1^-1*t2^-1"


def test_example1_matches_fixture(fixtures_dir):
    from blseifert.seifert import load

    asm = build(parse_poly(EXAMPLE1, 2))
    assert str(asm.plan.path) == "+t1,+t2,-t1"
    assert asm.A == load(fixtures_dir / "paper_example1_A6.json")
    assert asm.sizes == (4, 2)


def test_trivial_polynomial():
    asm = build(LaurentPoly.constant(1, 2))
    assert asm.A.n == 0 and asm.sizes == (0, 0)
    assert asm.delta == LaurentPoly.constant(1, 2)


def test_trefoil():
    asm = build(parse_poly("t1 - 1 + t1^-1", 1))
    assert asm.A.as_lists() == [[1, 0], [-1, 1]]
    assert asm.sizes == (2,)


def test_inadmissible_input():
    with pytest.raises(NotAdmissibleError, match="not symmetric"):
        build(parse_poly("t1 + 1", 1))


def test_path_override():
    poly = parse_poly(W3, 2)
    asm = build(poly, path_override=parse_path("-t2,-t1", 2))
    assert str(asm.plan.path) == "+t2,+t1"
    with pytest.raises(ValueError):
        build(poly, path_override=parse_path("+t1", 1))


def test_report_fields():
    poly = parse_poly(W3, 2)
    rep = report(build(poly), poly)
    assert rep["sigma"] == "1->1 2->2"
    assert rep["w"] == [0, 3] and rep["v"] == [3, 3]
    assert rep["roundtrip"] is True
    assert set(rep) == {"input", "m", "path", "w", "v", "sigma", "sizes", "matrix", "delta", "roundtrip"}


@given(st.integers(0, 10**6), st.sampled_from((SEQUENTIAL, SHORTEST)))
@settings(max_examples=40, deadline=None)
def test_random_roundtrip(seed, strategy):
    poly = random_admissible(random.Random(seed), max_pairs=4, max_exp=2)
    asm = build(poly, strategy)
    assert asm.delta == poly
    assert not seifert_violations(asm.A.as_lists(), asm.sizes)
    assert sum(asm.sizes) == 2 * asm.plan.l


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_small_builds_match_leibniz_oracle(seed):
    rng = random.Random(seed)
    poly = random_admissible(rng, max_m=2, max_pairs=2, max_exp=1)
    asm = build(poly, SHORTEST)
    if asm.A.n > 6:
        return
    assert alexander_oracle(asm.A.as_lists(), list(asm.sizes)) == poly.terms


def test_shortest_is_never_longer():
    rng = random.Random(3)
    for _ in range(30):
        poly = random_admissible(rng)
        assert build(poly, SHORTEST).plan.l <= build(poly, SEQUENTIAL).plan.l


def test_path_revisiting_the_origin():
    asm = build(parse_poly("t1 - 1 + t1^-1", 1), path_override=LatticePath(1, ((1, 1), (1, -1), (1, 1))))
    assert asm.delta == parse_poly("t1 - 1 + t1^-1", 1)
    assert asm.plan.w == (1, 0, 0)
