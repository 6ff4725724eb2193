"""The inductive ladder matrices B_l and the closed-form twisted determinant.

``build_B`` grows B_i from B_{i-1} by two rows and two columns.  The
determinant of ``Y B - Y^-1 B^t`` with Y = diag(y1, y1, ..., yl, yl) has an
explicit expression (``twisted_det_formula``); ``twisted_det`` computes the
same polynomial by an honest symbolic determinant, so the pair doubles as a
self-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import IntMatrix, PolyMatrix, det_poly
from .laurent import LaurentPoly


@dataclass(frozen=True)
class LadderParams:
    v: tuple[int, ...]
    eps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))
        if len(self.eps) != max(self.l - 1, 0):
            raise ValueError(f"need {max(self.l - 1, 0)} signs for l={self.l}, got {len(self.eps)}")
        if any(e not in (-1, 1) for e in self.eps):
            raise ValueError("signs must be +1 or -1")

    @property
    def l(self) -> int:
        return len(self.v)

    def sign(self, i: int) -> int:
        """epsilon_i for 1-based i; the first step is always +1."""
        return 1 if i == 1 else self.eps[i - 2]

    def z(self, i: int) -> int:
        return (1 + self.sign(i)) // 2


def build_B(params: LadderParams) -> IntMatrix:
    l = params.l
    b = [[0] * (2 * l) for _ in range(2 * l)]
    if l == 0:
        return b
    b[0][0], b[0][1] = params.v[0], 0
    b[1][0], b[1][1] = -1, 1
    for i in range(2, l + 1):
        vi, zi = params.v[i - 1], params.z(i)
        c1, c2 = 2 * i - 2, 2 * i - 1  # 0-based indices of the new columns/rows
        for pair in range(i - 1):
            top, bottom = 2 * pair, 2 * pair + 1
            b[top][c1], b[top][c2] = vi, 0 if pair == 0 else 1
            b[bottom][c1], b[bottom][c2] = 0, 1
        for col in range(2 * i - 2):
            b[c1][col] = vi if col % 2 == 0 else 0
            b[c2][col] = 0 if col == 0 else 1
        b[c1][c1], b[c1][c2] = vi, zi
        b[c2][c1], b[c2][c2] = 1 - zi, 1
    return b


def twisted_matrix(b: IntMatrix, row_vars: list[LaurentPoly]) -> PolyMatrix:
    """``Y B - Y^-1 B^t`` where row r is scaled by the monomial ``row_vars[r]``."""
    n = len(b)
    inv = [y ** -1 for y in row_vars]
    return [[row_vars[r] * b[r][c] - inv[r] * b[c][r] for c in range(n)] for r in range(n)]


def twisted_det(params: LadderParams, strategy: str | None = None) -> LaurentPoly:
    """det(Y_l B_l - Y_l^-1 B_l^t) in y1..yl, by symbolic elimination."""
    l = params.l
    nv = max(l, 1)
    row_vars = [LaurentPoly.var(i // 2 + 1, nv) for i in range(2 * l)]
    return det_poly(twisted_matrix(build_B(params), row_vars), num_vars=nv, strategy=strategy)


def twisted_det_formula(params: LadderParams) -> LaurentPoly:
    """1 - 2 v1 + sum_j (v_j - v_{j+1}) (y1^2 prod y_i^{2 eps_i} + inverse), v_{l+1} = 0."""
    l = params.l
    nv = max(l, 1)
    if l == 0:
        return LaurentPoly.constant(1, nv)
    v = list(params.v) + [0]
    terms: dict[tuple[int, ...], int] = {(0,) * nv: 1 - 2 * v[0]}
    exp = [0] * nv
    for j in range(1, l + 1):
        exp[j - 1] = 2 * params.sign(j)
        w = v[j - 1] - v[j]
        for key in (tuple(exp), tuple(-x for x in exp)):
            terms[key] = terms.get(key, 0) + w
    return LaurentPoly(terms, nv)


mainprop_lhs = twisted_det
mainprop_rhs = twisted_det_formula


def skew_blocks_ok(b: IntMatrix) -> bool:
    """B - B^t is a block sum of 2x2 blocks [[0, +-1], [-+1, 0]]."""
    n = len(b)
    for r in range(n):
        for c in range(n):
            d = b[r][c] - b[c][r]
            if r // 2 == c // 2 and r != c:
                if abs(d) != 1:
                    return False
            elif d:
                return False
    return True
