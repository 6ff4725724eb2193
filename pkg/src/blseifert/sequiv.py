"""S-equivalence moves, the irreducibility test and non-equivalence obstructions."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import isqrt
from typing import Sequence

from .exactmat import congruence, det_int, rank_rational
from .polyparse import print_poly
from .seifert import SeifertMatrix, alexander, validate_seifert

NOT_EQUIVALENT = "NotEquivalent"
INCONCLUSIVE = "Inconclusive"

COLUMN = "column"
ROW = "row"


class MoveError(ValueError):
    pass


def _block_of(a: SeifertMatrix):
    off = a.offsets()
    return [k for k in range(a.m) for _ in range(a.sizes[k])], off


def block_congruence(a: SeifertMatrix, p: Sequence[Sequence[int]]) -> SeifertMatrix:
    """P A P^t for block-diagonal P whose blocks all have determinant +-1."""
    owner, off = _block_of(a)
    n = a.n
    if len(p) != n or any(len(row) != n for row in p):
        raise MoveError(f"P must be {n}x{n}")
    for r in range(n):
        for c in range(n):
            if p[r][c] and owner[r] != owner[c]:
                raise MoveError(f"P is not block diagonal for sizes {list(a.sizes)}: entry ({r + 1},{c + 1})")
    for k in range(a.m):
        blk = [row[off[k]:off[k + 1]] for row in p[off[k]:off[k + 1]]]
        d = det_int(blk)
        if d not in (1, -1):
            raise MoveError(f"block {k + 1} of P has determinant {d}, not +-1")
    return validate_seifert(congruence(a.as_lists(), p), a.sizes)


def enlarge(
    a: SeifertMatrix, block: int, xi: Sequence[int] | None = None, x: int = 0, kind: str = COLUMN
) -> SeifertMatrix:
    """Append two indices at the end of ``block`` (1-based).

    Column kind::

        [[A,  xi, 0],
         [0,  x,  1],
         [0,  0,  0]]

    Row kind places ``xi`` in the new row and the 1 below the diagonal.
    ``xi`` is a full-length column that must vanish outside the block.
    """
    if not 1 <= block <= a.m:
        raise MoveError(f"block {block} out of range 1..{a.m}")
    if kind not in (COLUMN, ROW):
        raise MoveError(f"unknown enlargement kind {kind!r}")
    n = a.n
    xi = [0] * n if xi is None else [int(v) for v in xi]
    if len(xi) != n:
        raise MoveError(f"xi must have length {n}")
    off = a.offsets()
    lo, hi = off[block - 1], off[block]
    outside = [i + 1 for i, v in enumerate(xi) if v and not lo <= i < hi]
    if outside:
        raise MoveError(f"xi is supported outside block {block} at indices {outside}")

    new_a, new_b = hi, hi + 1  # positions of the appended indices in the result
    old_to_new = [i if i < hi else i + 2 for i in range(n)]
    out = [[0] * (n + 2) for _ in range(n + 2)]
    for i in range(n):
        for j in range(n):
            out[old_to_new[i]][old_to_new[j]] = a.rows[i][j]
    for i in range(n):
        if kind == COLUMN:
            out[old_to_new[i]][new_a] = xi[i]
        else:
            out[new_a][old_to_new[i]] = xi[i]
    out[new_a][new_a] = int(x)
    if kind == COLUMN:
        out[new_a][new_b] = 1
    else:
        out[new_b][new_a] = 1
    sizes = list(a.sizes)
    sizes[block - 1] += 2
    return validate_seifert(out, sizes)


@dataclass(frozen=True)
class NoReductionFound:
    """No enlargement pattern was found; ``deficient`` lists rank-deficient block rows/columns."""

    irreducible: bool
    deficient: tuple = ()

    def __bool__(self) -> bool:
        return False


def rank_profile(a: SeifertMatrix) -> list[dict]:
    """Rank of every block row and block column, next to the block size."""
    out = []
    for k, rng in enumerate(a.block_slices()):
        row = [list(a.rows[r]) for r in rng]
        col = [[a.rows[r][c] for c in rng] for r in range(a.n)]
        out.append({"block": k + 1, "size": a.sizes[k],
                    "row_rank": rank_rational(row), "column_rank": rank_rational(col)})
    return out


def is_irreducible(a: SeifertMatrix) -> bool:
    return all(p["row_rank"] == p["size"] == p["column_rank"] for p in rank_profile(a))


def _pattern(rows, n: int, a: int, b: int, kind: str) -> bool:
    # reads the transpose for row kind so both kinds share one check
    at = (lambda i, j: rows[i][j]) if kind == COLUMN else (lambda i, j: rows[j][i])
    if any(at(b, j) for j in range(n)):
        return False
    if at(a, b) != 1 or any(at(i, b) for i in range(n) if i != a):
        return False
    return not any(at(a, j) for j in range(n) if j not in (a, b))


def find_reduction(a: SeifertMatrix) -> tuple[int, int, str] | None:
    """Locate an enlargement pattern (0-based indices a, b in one block)."""
    owner, _ = _block_of(a)
    n = a.n
    for b in range(n - 1, -1, -1):
        for i in range(n - 1, -1, -1):
            if i == b or owner[i] != owner[b]:
                continue
            for kind in (COLUMN, ROW):
                if _pattern(a.rows, n, i, b, kind):
                    return i, b, kind
    return None


def reduce_once(a: SeifertMatrix) -> SeifertMatrix | NoReductionFound:
    """Undo one enlargement, or report that none is visible.

    Pattern matching is not complete over Z; the rank test in
    :func:`is_irreducible` is the authoritative answer, carried in the result.
    """
    hit = find_reduction(a)
    if hit is None:
        profile = rank_profile(a)
        bad = tuple(p for p in profile if not p["row_rank"] == p["size"] == p["column_rank"])
        return NoReductionFound(irreducible=not bad, deficient=bad)
    i, b, _ = hit
    owner, _ = _block_of(a)
    keep = [k for k in range(a.n) if k not in (i, b)]
    rows = [[a.rows[r][c] for c in keep] for r in keep]
    sizes = list(a.sizes)
    sizes[owner[b]] -= 2
    return validate_seifert(rows, sizes)


# -- obstructions ---------------------------------------------------------------


@dataclass
class ObstructionReport:
    verdict: str
    reasons: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def block_determinants(a: SeifertMatrix) -> list[int]:
    return [det_int(a.block(k, k)) for k in range(a.m)]


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def compare(a1: SeifertMatrix, a2: SeifertMatrix, obstruction_only: bool = False) -> ObstructionReport:
    """Look for a proof that ``a1`` and ``a2`` are *not* S-equivalent.

    Two irreducible S-equivalent matrices are rationally block congruent,
    so their diagonal block determinants differ by positive rational
    squares.  The result is never a claim of equivalence.
    """
    reasons: list[dict] = []
    notes: list[dict] = []
    if a1.m != a2.m:
        reasons.append({"code": "m_mismatch", "m_a": a1.m, "m_b": a2.m})
        return ObstructionReport(NOT_EQUIVALENT, reasons)

    if not obstruction_only:
        d1, d2 = alexander(a1), alexander(a2)
        if d1 != d2:
            reasons.append({"code": "delta_mismatch", "delta_a": print_poly(d1), "delta_b": print_poly(d2)})
            return ObstructionReport(NOT_EQUIVALENT, reasons)

    irr1, irr2 = is_irreducible(a1), is_irreducible(a2)
    if not (irr1 and irr2):
        notes.append({"code": "not_irreducible", "irreducible_a": irr1, "irreducible_b": irr2})
        return ObstructionReport(INCONCLUSIVE, reasons, notes)

    if a1.sizes != a2.sizes:
        reasons.append({"code": "size_mismatch", "sizes_a": list(a1.sizes), "sizes_b": list(a2.sizes)})
        return ObstructionReport(NOT_EQUIVALENT, reasons)

    dets1, dets2 = block_determinants(a1), block_determinants(a2)
    notes.append({"code": "block_determinants", "dets_a": dets1, "dets_b": dets2})
    for k, (x, y) in enumerate(zip(dets1, dets2), start=1):
        base = {"block": k, "det_a": x, "det_b": y}
        if (x == 0) != (y == 0):
            reasons.append({"code": "block_det_zero_pattern", **base})
        elif x and (x > 0) != (y > 0):
            reasons.append({"code": "block_det_sign", **base})
        elif x and not _is_square(x * y):
            reasons.append({"code": "block_det_square_class", **base})
    return ObstructionReport(NOT_EQUIVALENT if reasons else INCONCLUSIVE, reasons, notes)
