"""Assemble A = P B P^t from a build plan and run the whole pipeline."""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import IntMatrix, congruence, det_int, identity, matmul, transpose
from .laurent import LaurentPoly
from .ladder import LadderParams, build_B
from .pathplan import SEQUENTIAL, BuildPlan, LatticePath, find_path, greedy_order, make_plan
from .polyparse import print_poly
from .seifert import SeifertMatrix, alexander, decompose, reconstruct, validate_seifert


class RoundtripError(AssertionError):
    """The assembled matrix does not realise the requested polynomial (a bug)."""


@dataclass(frozen=True)
class Assembly:
    plan: BuildPlan
    sigma: tuple[int, ...]
    sizes: tuple[int, ...]
    A: SeifertMatrix
    B: tuple[tuple[int, ...], ...]
    delta: LaurentPoly

    @property
    def m(self) -> int:
        return len(self.sizes)


def permutation_from_plan(plan: BuildPlan) -> tuple[tuple[int, ...], IntMatrix]:
    """Stable sort of the steps by component, and the pair permutation matrix P.

    ``sigma`` is one-line notation (1-based): pair k of A is pair sigma[k] of B.
    P satisfies P B P^t = A, P T~ P^t = T, P^t = P^-1 and det P = 1.
    """
    comps = plan.path.components
    sigma = tuple(sorted(range(1, plan.l + 1), key=lambda t: comps[t - 1]))
    n = 2 * plan.l
    p = [[0] * n for _ in range(n)]
    for k, src in enumerate(sigma):
        p[2 * k][2 * src - 2] = 1
        p[2 * k + 1][2 * src - 1] = 1
    return sigma, p


def _check_permutation(plan: BuildPlan, p: IntMatrix, sizes: tuple[int, ...]) -> None:
    n = len(p)
    if n and matmul(p, transpose(p)) != identity(n):
        raise RoundtripError("P^t is not the inverse of P")
    if det_int(p) != 1:
        raise RoundtripError("det(P) != 1")
    # P T~ P^t is diagonal; compare the variable index carried by each coordinate
    tilde = [s for s in plan.path.components for _ in range(2)]
    sorted_diag = [tilde[[c for c in range(n) if p[r][c]][0]] for r in range(n)]
    expected = [k + 1 for k, n_k in enumerate(sizes) for _ in range(n_k)]
    if sorted_diag != expected:
        raise RoundtripError("P T~ P^-1 is not block sorted")


def build_seifert_from_plan(plan: BuildPlan, target: LaurentPoly | None = None) -> Assembly:
    """A = P B P^t; asserts that A is a Seifert matrix realising the plan's Delta."""
    m = plan.path.m
    b = build_B(LadderParams(plan.v, plan.eps))
    sigma, p = permutation_from_plan(plan)
    sizes = tuple(2 * plan.path.components.count(k) for k in range(1, m + 1))
    _check_permutation(plan, p, sizes)
    a = validate_seifert(congruence(b, p), sizes)
    delta = alexander(a)
    if target is not None and delta != target:
        raise RoundtripError(f"Delta(A) = {print_poly(delta)} but expected {print_poly(target)}")
    return Assembly(plan, sigma, sizes, a, tuple(map(tuple, b)), delta)


def build(
    poly: LaurentPoly,
    strategy: str = SEQUENTIAL,
    path_override: LatticePath | None = None,
) -> Assembly:
    """Decompose, plan a path, assemble, and verify Delta(A) == poly."""
    pres = decompose(poly)
    if path_override is None:
        targets = greedy_order(pres.pairs) if strategy == SEQUENTIAL else list(pres.pairs)
        path = find_path(pres.m, targets, strategy)
    else:
        if path_override.m != pres.m:
            raise ValueError(f"path lives in Z^{path_override.m} but Delta has {pres.m} variables")
        path = path_override.normalized()
    plan = make_plan(path, pres)
    return build_seifert_from_plan(plan, target=reconstruct(pres))


def report(asm: Assembly, source: LaurentPoly | None = None) -> dict:
    """JSON-ready summary of an assembly."""
    return {
        "input": print_poly(source if source is not None else asm.delta),
        "m": asm.m,
        "path": str(asm.plan.path),
        "w": list(asm.plan.w),
        "v": list(asm.plan.v),
        "sigma": " ".join(f"{k + 1}->{s}" for k, s in enumerate(asm.sigma)),
        "sizes": list(asm.sizes),
        "matrix": asm.A.as_lists(),
        "delta": print_poly(asm.delta),
        "roundtrip": source is None or asm.delta == source,
    }
