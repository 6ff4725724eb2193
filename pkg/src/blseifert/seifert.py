"""Boundary link Seifert matrices and their Alexander polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

from .exactmat import det_int, det_poly, shape
from .laurent import LaurentPoly


class SeifertValidationError(ValueError):
    """Raised when a matrix violates the boundary link Seifert conditions.

    ``violations`` is a list of dicts with a machine-readable ``code``.
    """

    def __init__(self, violations: list[dict]):
        self.violations = violations
        super().__init__("; ".join(v["message"] for v in violations))


class NotAdmissibleError(ValueError):
    """The polynomial is not symmetric or does not evaluate to 1 at (1,...,1)."""

    def __init__(self, code: str, message: str, witness=None):
        self.code = code
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated square integer matrix together with its block sizes."""

    rows: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return len(self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def offsets(self) -> list[int]:
        return [0, *accumulate(self.sizes)]

    def block_slices(self) -> list[range]:
        off = self.offsets()
        return [range(off[i], off[i + 1]) for i in range(self.m)]

    def block(self, i: int, j: int) -> list[list[int]]:
        """Block A_ij with 0-based block indices."""
        ri, rj = self.block_slices()[i], self.block_slices()[j]
        return [[self.rows[r][c] for c in rj] for r in ri]

    def component_of(self, index: int) -> int:
        for k, rng in enumerate(self.block_slices()):
            if index in rng:
                return k
        raise IndexError(index)


def _violations(matrix: Sequence[Sequence[int]], sizes: Sequence[int]) -> list[dict]:
    out: list[dict] = []
    rows, cols = shape(matrix)
    if rows != cols:
        return [{"code": "not_square", "message": f"matrix is {rows}x{cols}"}]
    for k, n_k in enumerate(sizes):
        if n_k < 0 or n_k % 2:
            out.append({"code": "odd_block_size", "block": k + 1, "size": n_k,
                        "message": f"block {k + 1} has size {n_k}, which is not even"})
    if sum(sizes) != rows:
        out.append({"code": "size_sum", "expected": rows, "got": sum(sizes),
                    "message": f"block sizes sum to {sum(sizes)} but the matrix is {rows}x{rows}"})
    if out:
        return out
    off = [0, *accumulate(sizes)]
    blocks = [range(off[k], off[k + 1]) for k in range(len(sizes))]
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            bad = [(r, c) for r in blocks[i] for c in blocks[j] if matrix[r][c] != matrix[c][r]]
            if bad:
                out.append({"code": "block_symmetry", "blocks": [i + 1, j + 1],
                            "entries": [[r + 1, c + 1] for r, c in bad],
                            "message": f"A_{i + 1}{j + 1} is not the transpose of A_{j + 1}{i + 1}"})
        skew = [[matrix[r][c] - matrix[c][r] for c in blocks[i]] for r in blocks[i]]
        d = det_int(skew)
        if d != 1:
            out.append({"code": "diagonal_det", "block": i + 1, "value": d,
                        "message": f"det(A_{i + 1}{i + 1} - A_{i + 1}{i + 1}^t) = {d}, expected 1"})
    return out


def validate_seifert(matrix: Sequence[Sequence[int]], sizes: Sequence[int]) -> SeifertMatrix:
    """Check the boundary link conditions and return a :class:`SeifertMatrix`.

    Raises :class:`SeifertValidationError` listing every violated condition.
    """
    problems = _violations(matrix, list(sizes))
    if problems:
        raise SeifertValidationError(problems)
    return SeifertMatrix(tuple(tuple(int(x) for x in r) for r in matrix), tuple(int(s) for s in sizes))


def seifert_violations(matrix: Sequence[Sequence[int]], sizes: Sequence[int]) -> list[dict]:
    return _violations(matrix, list(sizes))


def alexander_matrix(a: SeifertMatrix) -> list[list[LaurentPoly]]:
    """The matrix ``T A - A^t`` with ``T`` the block-scalar diagonal of variables."""
    m = a.m
    var_of = [LaurentPoly.var(k + 1, m) for k, n_k in enumerate(a.sizes) for _ in range(n_k)]
    return [
        [var_of[r] * a.rows[r][c] - a.rows[c][r] for c in range(a.n)]
        for r in range(a.n)
    ]


def alexander(a: SeifertMatrix, strategy: str | None = None) -> LaurentPoly:
    """Delta(A) = det(T)^(-1/2) det(T A - A^t).

    Both classical properties (value 1 at the all-ones point and symmetry
    under t -> 1/t) are asserted on the result.
    """
    det = det_poly(alexander_matrix(a), num_vars=a.m, strategy=strategy)
    delta = det.monomial_div([n_k // 2 for n_k in a.sizes])
    if delta.eval([1] * a.m) != 1:
        raise AssertionError(f"Delta(1,...,1) = {delta.eval([1] * a.m)} for a validated matrix")
    if not delta.is_symmetric():
        raise AssertionError("Delta(A) is not symmetric for a validated matrix")
    return delta


@dataclass(frozen=True)
class SymmetricPresentation:
    """Delta = sum c_alpha (t^alpha + t^-alpha) + constant, alpha canonical.

    ``pairs`` are ordered by descending alpha, the order in which the positive
    representatives appear in printed polytext.
    """

    m: int
    pairs: tuple[tuple[tuple[int, ...], int], ...] = field(default=())

    @property
    def constant(self) -> int:
        return 1 - 2 * sum(c for _, c in self.pairs)

    @property
    def r(self) -> int:
        return len(self.pairs)


def canonical(alpha: Sequence[int]) -> tuple[int, ...]:
    """Representative of {alpha, -alpha} whose first nonzero entry is positive."""
    alpha = tuple(alpha)
    for x in alpha:
        if x:
            return alpha if x > 0 else tuple(-y for y in alpha)
    return alpha


def decompose(p: LaurentPoly) -> SymmetricPresentation:
    if not p.is_symmetric():
        diff = p - p.invert_vars()
        raise NotAdmissibleError("not_symmetric", "polynomial is not symmetric under t -> 1/t",
                                 witness=diff)
    value = p.eval([1] * p.num_vars)
    if value != 1:
        raise NotAdmissibleError("bad_augmentation",
                                 f"polynomial evaluates to {value} at (1,...,1), expected 1",
                                 witness=value)
    zero = (0,) * p.num_vars
    pairs = sorted(
        ((exp, c) for exp, c in p.terms.items() if exp != zero and canonical(exp) == exp),
        reverse=True,
    )
    return SymmetricPresentation(p.num_vars, tuple(pairs))


def reconstruct(s: SymmetricPresentation) -> LaurentPoly:
    terms: dict[tuple[int, ...], int] = {(0,) * s.m: s.constant}
    for alpha, c in s.pairs:
        neg = tuple(-x for x in alpha)
        terms[alpha] = terms.get(alpha, 0) + c
        terms[neg] = terms.get(neg, 0) + c
    return LaurentPoly(terms, s.m)


# -- file formats -------------------------------------------------------------


def to_json(a: SeifertMatrix) -> str:
    return json.dumps({"m": a.m, "sizes": list(a.sizes), "rows": a.as_lists()})


def to_text(a: SeifertMatrix) -> str:
    head = " ".join(str(x) for x in (a.m, *a.sizes))
    body = [" ".join(str(x) for x in row) for row in a.rows]
    return "\n".join([head, *body]) + "\n"


def parse_matrix_data(text: str) -> tuple[list[list[int]], list[int]]:
    """Read either the JSON or the whitespace text matrix format (unvalidated)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        sizes = [int(s) for s in data["sizes"]]
        if int(data["m"]) != len(sizes):
            raise ValueError(f"m={data['m']} but {len(sizes)} block sizes given")
        rows = [[int(x) for x in row] for row in data["rows"]]
        return rows, sizes
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    head = [int(x) for x in lines[0]]
    m, sizes = head[0], head[1:]
    if m != len(sizes):
        raise ValueError(f"header declares m={m} but lists {len(sizes)} block sizes")
    rows = [[int(x) for x in ln] for ln in lines[1:]]
    n = sum(sizes)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} integers")
    return rows, sizes


def loads(text: str) -> SeifertMatrix:
    rows, sizes = parse_matrix_data(text)
    return validate_seifert(rows, sizes)


def load(path) -> SeifertMatrix:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(a: SeifertMatrix, path, fmt: str = "json") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(a) + "\n" if fmt == "json" else to_text(a))
