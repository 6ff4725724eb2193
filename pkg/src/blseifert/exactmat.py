"""Exact linear algebra over Z and over the Laurent ring.

Matrices are plain lists of row lists.  Integer matrices hold Python ints,
polynomial matrices hold :class:`LaurentPoly` entries with a common
``num_vars``.
"""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly, NotDivisibleError

IntMatrix = list[list[int]]
PolyMatrix = list[list[LaurentPoly]]

COFACTOR_MAX = 6

TRIVIAL = "trivial"
COFACTOR = "cofactor"
FRACTION_FREE = "fraction_free"


class NonSquareError(ValueError):
    pass


class EliminationError(AssertionError):
    """An exact division failed during fraction-free elimination.

    Cannot happen in an integral domain, so this always indicates a bug.
    """


def shape(a: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ValueError("ragged matrix")
    return rows, cols


def _square(a: Sequence[Sequence]) -> int:
    r, c = shape(a)
    if r != c:
        raise NonSquareError(f"expected a square matrix, got {r}x{c}")
    return r


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def congruence(a: Sequence[Sequence[int]], p: Sequence[Sequence[int]]) -> IntMatrix:
    """Return ``P A P^t``."""
    n = _square(a)
    if _square(p) != n:
        raise ValueError(f"P is {len(p)}x{len(p)} but A is {n}x{n}")
    if n == 0:
        return []
    return matmul(matmul(p, a), transpose(p))


def det_int(a: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss elimination; the 0x0 determinant is 1."""
    n = _square(a)
    m = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - f * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1] if n else 1


def rank_rational(a: Sequence[Sequence[int]]) -> int:
    """Rank over Q, by fraction-free elimination on an integer copy."""
    rows, cols = shape(a)
    m = [list(map(int, row)) for row in a]
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pk = m[rank][c]
        for i in range(rank + 1, rows):
            f = m[i][c]
            for j in range(c, cols):
                m[i][j] = (m[i][j] * pk - f * m[rank][j]) // prev
        prev = pk
        rank += 1
        if rank == rows:
            break
    return rank


def det_strategy_select(a: Sequence[Sequence]) -> str:
    n = _square(a)
    if n == 0:
        return TRIVIAL
    return COFACTOR if n <= COFACTOR_MAX else FRACTION_FREE


def _num_vars(a: Sequence[Sequence[LaurentPoly]], num_vars: int | None) -> int:
    if a:
        nv = a[0][0].num_vars
        if any(x.num_vars != nv for row in a for x in row):
            raise ValueError("entries have differing num_vars")
        if num_vars is not None and num_vars != nv:
            raise ValueError(f"num_vars={num_vars} but entries have {nv}")
        return nv
    if num_vars is None:
        raise ValueError("num_vars is required for an empty matrix")
    return num_vars


def det_cofactor(a: Sequence[Sequence[LaurentPoly]], num_vars: int | None = None) -> LaurentPoly:
    """Laplace expansion along rows, memoised on the set of remaining columns."""
    n = _square(a)
    nv = _num_vars(a, num_vars)
    one = LaurentPoly.constant(1, nv)
    memo: dict[int, LaurentPoly] = {}

    def minor(row: int, cols: int) -> LaurentPoly:
        # cols is a bitmask of the columns still available
        if row == n:
            return one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = LaurentPoly.zero(nv)
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                entry = a[row][c]
                if entry:
                    sub = minor(row + 1, cols & ~(1 << c))
                    if sub:
                        total = total + entry * sub if sign > 0 else total - entry * sub
                sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


def det_fraction_free(a: Sequence[Sequence[LaurentPoly]], num_vars: int | None = None) -> LaurentPoly:
    """Bareiss elimination over the Laurent ring with sparsity pivoting.

    The pivot is the remaining entry with fewest terms, ties broken by lowest
    (row, column) index.  Every division by the previous pivot is exact.
    """
    n = _square(a)
    nv = _num_vars(a, num_vars)
    if n == 0:
        return LaurentPoly.constant(1, nv)
    m = [list(row) for row in a]
    sign = 1
    prev = LaurentPoly.constant(1, nv)
    for k in range(n):
        best = None
        for i in range(k, n):
            row = m[i]
            for j in range(k, n):
                x = row[j]
                if x and (best is None or len(x) < best[0]):
                    best = (len(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return LaurentPoly.zero(nv)
        _, pi, pj = best
        if pi != k:
            m[k], m[pi] = m[pi], m[k]
            sign = -sign
        if pj != k:
            for row in m:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pk = m[k][k]
        rk = m[k]
        unit_prev = prev.is_unit()
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                x = ri[j] * pk
                if f and rk[j]:
                    x = x - f * rk[j]
                if unit_prev:
                    ri[j] = x * prev ** -1
                else:
                    try:
                        ri[j] = x.exact_div(prev)
                    except NotDivisibleError as exc:
                        raise EliminationError(f"inexact division at step {k}") from exc
            ri[k] = LaurentPoly.zero(nv)
        prev = pk
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def det_poly(
    a: Sequence[Sequence[LaurentPoly]], num_vars: int | None = None, strategy: str | None = None
) -> LaurentPoly:
    """Exact determinant in the Laurent ring; the 0x0 determinant is 1."""
    strategy = strategy or det_strategy_select(a)
    if strategy == TRIVIAL:
        _square(a)
        if a:
            raise ValueError("the trivial strategy only applies to 0x0 matrices")
        return LaurentPoly.constant(1, _num_vars(a, num_vars))
    if strategy == COFACTOR:
        return det_cofactor(a, num_vars)
    if strategy == FRACTION_FREE:
        return det_fraction_free(a, num_vars)
    raise ValueError(f"unknown determinant strategy {strategy!r}")


def int_to_poly(a: Sequence[Sequence[int]], num_vars: int) -> PolyMatrix:
    return [[LaurentPoly.constant(x, num_vars) for x in row] for row in a]


def eval_matrix(a: Sequence[Sequence[LaurentPoly]], point) -> list[list]:
    return [[x.eval(point) for x in row] for row in a]
