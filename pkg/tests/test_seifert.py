import json

import pytest
from hypothesis import given, settings

from blseifert.laurent import LaurentPoly
from blseifert.polyparse import parse_poly, print_poly
from blseifert.seifert import (
    NotAdmissibleError,
    SeifertValidationError,
    SymmetricPresentation,
    alexander,
    canonical,
    decompose,
    dump,
    load,
    loads,
    reconstruct,
    seifert_violations,
    to_json,
    to_text,
    validate_seifert,
)
from oracles import alexander_oracle
from strategies import laurent, seifert_data

TREFOIL = [[1, 0], [-1, 1]]
BUILT_W3 = [[3, 0, 3, 0], [-1, 1, 0, 1], [3, 0, 3, 1], [0, 1, 0, 1]]


def test_trefoil_is_valid_and_has_expected_delta():
    a = validate_seifert(TREFOIL, [2])
    assert a.m == 1 and a.n == 2
    assert print_poly(alexander(a)) == "t1 - 1 + t1^-1"


def test_empty_matrix():
    a = validate_seifert([], [])
    assert a.m == 0
    assert alexander(a) == LaurentPoly.constant(1, 0)


def test_zero_sized_blocks_are_allowed():
    a = validate_seifert(TREFOIL, [0, 2])
    assert alexander(a) == parse_poly("t2 - 1 + t2^-1", 2)


def test_symmetric_matrix_is_rejected():
    with pytest.raises(SeifertValidationError) as info:
        validate_seifert([[1, 1], [1, 1]], [2])
    (v,) = info.value.violations
    assert v["code"] == "diagonal_det" and v["value"] == 0


@pytest.mark.parametrize(
    "rows, sizes, code",
    [
        ([[1, 2, 3]], [1], "not_square"),
        ([[1]], [1], "odd_block_size"),
        (TREFOIL, [4], "size_sum"),
        ([[1, 0, 5, 0], [-1, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]], [2, 2], "block_symmetry"),
    ],
)
def test_violation_codes(rows, sizes, code):
    assert code in {v["code"] for v in seifert_violations(rows, sizes)}


def test_built_w3_delta():
    a = validate_seifert(BUILT_W3, [2, 2])
    assert print_poly(alexander(a)) == "3*t1*t2 - 5 + 3*t1^-1*t2^-1"


def test_block_access():
    a = validate_seifert(BUILT_W3, [2, 2])
    assert a.block(0, 1) == [[3, 0], [0, 1]]
    assert a.block(1, 0) == [[3, 0], [0, 1]]
    assert a.component_of(3) == 1


@given(seifert_data())
@settings(max_examples=60, deadline=None)
def test_random_matrices_validate_and_match_leibniz(data):
    rows, sizes = data
    a = validate_seifert(rows, sizes)
    delta = alexander(a)
    assert delta.terms == alexander_oracle(rows, sizes)
    assert delta.eval([1] * a.m) == 1
    assert delta.is_symmetric()
    assert alexander(a, strategy="fraction_free") == delta


# -- symmetric presentation ---------------------------------------------------


def test_decompose_examples():
    s = decompose(parse_poly("3*t1*t2 + 3*t1^-1*t2^-1 - 5", 2))
    assert s.pairs == (((1, 1), 3),) and s.constant == -5
    one = decompose(LaurentPoly.constant(1, 2))
    assert one.pairs == () and one.constant == 1
    s = decompose(parse_poly("t1^-1*t2 + t1*t2^-1 - 1", 2))
    assert s.pairs == (((1, -1), 1),) and s.constant == -1


def test_decompose_rejects_inadmissible():
    with pytest.raises(NotAdmissibleError) as info:
        decompose(parse_poly("t1 + 1", 1))
    assert info.value.code == "not_symmetric"
    with pytest.raises(NotAdmissibleError) as info:
        decompose(parse_poly("t1 + t1^-1", 1))
    assert info.value.code == "bad_augmentation"


def test_canonical():
    assert canonical((0, -2, 1)) == (0, 2, -1)
    assert canonical((1, -1)) == (1, -1)
    assert canonical((0, 0)) == (0, 0)


@given(laurent(max_terms=6))
def test_decompose_reconstruct_roundtrip(p):
    sym = p + p.invert_vars()
    sym = sym + LaurentPoly.constant(1 - sym.eval([1] * p.num_vars), p.num_vars)
    s = decompose(sym)
    assert reconstruct(s) == sym
    assert all(canonical(a) == a and any(a) for a, _ in s.pairs)
    assert list(s.pairs) == sorted(s.pairs, reverse=True)
    assert s.constant == sym.constant_term()


def test_reconstruct_of_hand_presentation():
    s = SymmetricPresentation(1, (((1,), 1),))
    assert reconstruct(s) == parse_poly("t1 - 1 + t1^-1", 1)


# -- file formats -------------------------------------------------------------


def test_json_and_text_roundtrip(tmp_path):
    a = validate_seifert(BUILT_W3, [2, 2])
    assert loads(to_json(a)) == a
    assert loads(to_text(a)) == a
    assert json.loads(to_json(a)) == {"m": 2, "sizes": [2, 2], "rows": BUILT_W3}
    for fmt in ("json", "text"):
        f = tmp_path / f"a.{fmt}"
        dump(a, f, fmt)
        assert load(f) == a


def test_text_format_with_comment():
    a = loads("# trefoil\n1 2\n1 0\n-1 1\n")
    assert a.rows == ((1, 0), (-1, 1))


@pytest.mark.parametrize(
    "text", ["", "2 2\n1 0\n-1 1\n", "1 2\n1 0\n", '{"m": 2, "sizes": [2], "rows": [[1, 0], [-1, 1]]}']
)
def test_malformed_matrix_files(text):
    with pytest.raises(ValueError):
        loads(text)
