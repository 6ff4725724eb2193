"""Lattice paths through the exponents of Delta, and the w/v build plan.

A path starts at the origin of Z^m and moves one unit along one axis per
step.  It has to pass through alpha or -alpha for every exponent pair of the
symmetric presentation; either sign works because c_alpha multiplies
t^alpha + t^-alpha.  Paths are normalised so that the first step is
positive (negating a whole path keeps it admissible).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate
from typing import Sequence

from .seifert import SymmetricPresentation, canonical

SEQUENTIAL = "sequential"
SHORTEST = "shortest"
STRATEGIES = (SEQUENTIAL, SHORTEST)

SHORTEST_MAX_TARGETS = 12
DEFAULT_MAX_PATHS = 100_000

Step = tuple[int, int]  # (component s in 1..m, sign +-1)
Target = tuple[tuple[int, ...], int]


class PathLimitError(RuntimeError):
    """Raised when a path search exceeds its configured cap.

    ``partial`` holds whatever was found before the cap was hit.
    """

    def __init__(self, message: str, partial: list | None = None):
        self.partial = partial or []
        super().__init__(message)


class MissedTargetError(ValueError):
    def __init__(self, missing: list[tuple[int, ...]]):
        self.missing = missing
        super().__init__(f"path does not visit +-alpha for alpha in {missing}")


@dataclass(frozen=True)
class LatticePath:
    m: int
    steps: tuple[Step, ...] = ()

    @property
    def l(self) -> int:
        return len(self.steps)

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.steps)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.steps)

    def points(self) -> list[tuple[int, ...]]:
        """p(0), p(1), ..., p(l)."""
        pos = [0] * self.m
        out = [tuple(pos)]
        for s, e in self.steps:
            pos[s - 1] += e
            out.append(tuple(pos))
        return out

    def negated(self) -> LatticePath:
        return LatticePath(self.m, tuple((s, -e) for s, e in self.steps))

    def normalized(self) -> LatticePath:
        if self.steps and self.steps[0][1] < 0:
            return self.negated()
        return self

    def __str__(self) -> str:
        return format_path(self)


def format_path(path: LatticePath) -> str:
    return ",".join(f"{'+' if e > 0 else '-'}t{s}" for s, e in path.steps)


def parse_path(text: str, m: int) -> LatticePath:
    steps = []
    for tok in (t.strip() for t in text.split(",") if t.strip()):
        if len(tok) < 3 or tok[0] not in "+-" or tok[1] != "t":
            raise ValueError(f"bad path step {tok!r}; expected e.g. +t1 or -t2")
        s = int(tok[2:])
        if not 1 <= s <= m:
            raise ValueError(f"component t{s} out of range 1..{m}")
        steps.append((s, 1 if tok[0] == "+" else -1))
    return LatticePath(m, tuple(steps))


def _segment(start: Sequence[int], goal: Sequence[int]) -> list[Step]:
    # Manhattan route, axes in index order
    out = []
    for k, (a, b) in enumerate(zip(start, goal)):
        sign = 1 if b > a else -1
        out.extend([(k + 1, sign)] * abs(b - a))
    return out


def _dist(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


def _step_key(steps: Sequence[Step]) -> tuple:
    return tuple((s, 0 if e > 0 else 1) for s, e in steps)


def visits(path: LatticePath, alpha: Sequence[int]) -> bool:
    alpha = tuple(alpha)
    neg = tuple(-x for x in alpha)
    return any(p == alpha or p == neg for p in path.points()[1:])


def is_admissible_path(path: LatticePath, alphas: Sequence[Sequence[int]]) -> bool:
    """Unit steps from the origin that pass through +-alpha for every alpha."""
    if any(not 1 <= s <= path.m or e not in (-1, 1) for s, e in path.steps):
        return False
    return all(visits(path, a) for a in alphas)


def greedy_order(targets: Sequence[Target]) -> list[Target]:
    """Nearest-neighbour tour over the target pairs.

    From the current point pick the closest of +-alpha over the remaining
    pairs; ties go to the earlier pair, then to the canonical sign.
    """
    if not targets:
        return []
    m = len(targets[0][0])
    pos = (0,) * m
    left = list(targets)
    out = []
    while left:
        best = None
        for idx, (alpha, c) in enumerate(left):
            for rep in (alpha, tuple(-x for x in alpha)):
                d = _dist(pos, rep)
                if best is None or d < best[0]:
                    best = (d, idx, rep, c)
        _, idx, rep, c = best
        out.append((rep, c))
        pos = rep
        left.pop(idx)
    return out


def _sequential(m: int, targets: Sequence[Target]) -> LatticePath:
    pos = (0,) * m
    steps: list[Step] = []
    for alpha, _ in targets:
        steps.extend(_segment(pos, alpha))
        pos = tuple(alpha)
    return LatticePath(m, tuple(steps))


def _shortest(m: int, targets: Sequence[Target]) -> LatticePath:
    alphas = [tuple(a) for a, _ in targets]
    r = len(alphas)
    if r > SHORTEST_MAX_TARGETS:
        raise PathLimitError(f"shortest strategy is capped at {SHORTEST_MAX_TARGETS} targets, got {r}")
    reps = [(a, tuple(-x for x in a)) for a in alphas]
    origin = (0,) * m

    @lru_cache(maxsize=None)
    def rest(pos: tuple[int, ...], remaining: int) -> int:
        # minimal length to visit every pair in the bitmask `remaining` from pos
        if not remaining:
            return 0
        best = None
        for i in range(r):
            if remaining >> i & 1:
                for rep in reps[i]:
                    d = _dist(pos, rep) + rest(rep, remaining & ~(1 << i))
                    if best is None or d < best:
                        best = d
        return best

    full = (1 << r) - 1
    total = rest(origin, full)
    candidates: list[tuple[Step, ...]] = []

    def extend(pos, remaining, prefix):
        if not remaining:
            candidates.append(tuple(prefix))
            return
        need = rest(pos, remaining)
        for i in range(r):
            if remaining >> i & 1:
                for rep in reps[i]:
                    nxt = remaining & ~(1 << i)
                    if _dist(pos, rep) + rest(rep, nxt) == need:
                        extend(rep, nxt, prefix + _segment(pos, rep))

    extend(origin, full, [])
    normalized = {LatticePath(m, c).normalized().steps for c in candidates}
    best = min(normalized, key=_step_key)
    assert len(best) == total
    return LatticePath(m, best)


def find_path(m: int, targets: Sequence[Target], strategy: str = SEQUENTIAL) -> LatticePath:
    """A normalised path through +-alpha for each ``(alpha, c_alpha)`` target.

    ``sequential`` walks to the targets in the given order along Manhattan
    segments; ``shortest`` minimises total length over visit orders and
    signs, breaking ties by the lexicographically smallest step sequence.
    """
    if strategy == SEQUENTIAL:
        path = _sequential(m, targets)
    elif strategy == SHORTEST:
        path = _shortest(m, targets) if targets else LatticePath(m)
    else:
        raise ValueError(f"unknown path strategy {strategy!r}")
    return path.normalized()


def shortest_length(m: int, alphas: Sequence[Sequence[int]]) -> int:
    return _shortest(m, [(tuple(a), 1) for a in alphas]).l if alphas else 0


def enumerate_paths(
    m: int,
    alphas: Sequence[Sequence[int]],
    max_extra_steps: int = 0,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> list[LatticePath]:
    """Every normalised admissible path of length <= shortest + ``max_extra_steps``.

    Ordered by length, then lexicographically by steps.  Raises
    :class:`PathLimitError` (with the partial list) past ``max_paths``.
    """
    pairs = list({canonical(a) for a in alphas})
    r = len(pairs)
    limit = shortest_length(m, pairs) + max_extra_steps
    negs = [tuple(-x for x in a) for a in pairs]
    found: list[tuple[Step, ...]] = []
    moves = [(s, e) for s in range(1, m + 1) for e in (1, -1)]

    def lower_bound(pos, remaining):
        return max(
            (min(_dist(pos, pairs[i]), _dist(pos, negs[i])) for i in range(r) if remaining >> i & 1),
            default=0,
        )

    def walk(pos, remaining, steps):
        if not remaining:
            found.append(tuple(steps))
            if len(found) > max_paths:
                raise PathLimitError(f"more than {max_paths} paths", partial=found[:max_paths])
        if len(steps) == limit:
            return
        for s, e in moves:
            if not steps and e < 0:
                continue
            nxt = list(pos)
            nxt[s - 1] += e
            nxt = tuple(nxt)
            rem = remaining
            for i in range(r):
                if rem >> i & 1 and (nxt == pairs[i] or nxt == negs[i]):
                    rem &= ~(1 << i)
            if len(steps) + 1 + lower_bound(nxt, rem) > limit:
                continue
            steps.append((s, e))
            walk(nxt, rem, steps)
            steps.pop()

    try:
        walk((0,) * m, (1 << r) - 1, [])
    except PathLimitError as exc:
        exc.partial = [LatticePath(m, p) for p in sorted(exc.partial, key=lambda p: (len(p), _step_key(p)))]
        raise
    found.sort(key=lambda p: (len(p), _step_key(p)))
    return [LatticePath(m, p) for p in found]


@dataclass(frozen=True)
class BuildPlan:
    path: LatticePath
    w: tuple[int, ...]
    v: tuple[int, ...]
    hit_times: dict = field(default_factory=dict, compare=False)

    @property
    def l(self) -> int:
        return self.path.l

    @property
    def eps(self) -> tuple[int, ...]:
        return self.path.signs[1:]


def make_plan(path: LatticePath, pres: SymmetricPresentation) -> BuildPlan:
    """Place each c_alpha at the first time the path sits on +-alpha."""
    if path.steps and path.steps[0][1] != 1:
        raise ValueError("path must be normalised (first step positive)")
    points = path.points()
    w = [0] * path.l
    hits: dict[tuple[int, ...], int] = {}
    missing = []
    for alpha, c in pres.pairs:
        neg = tuple(-x for x in alpha)
        t = next((t for t in range(1, path.l + 1) if points[t] in (alpha, neg)), None)
        if t is None:
            missing.append(alpha)
            continue
        hits[alpha] = t
        w[t - 1] = c
    if missing:
        raise MissedTargetError(missing)
    v = list(accumulate(reversed(w)))[::-1]
    return BuildPlan(path, tuple(w), tuple(v), hits)
