"""Command line interface: build, verify, paths, compare, reduce, selftest.

Exit codes: 0 success, 2 input error, 3 internal assertion, 4 resource cap.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass

from . import seifert
from .assemble import build, report
from .ladder import LadderParams, twisted_det, twisted_det_formula
from .pathplan import (
    DEFAULT_MAX_PATHS,
    SEQUENTIAL,
    STRATEGIES,
    PathLimitError,
    enumerate_paths,
    parse_path,
)
from .polyparse import AUTO, PolySyntaxError, parse_poly, print_poly
from .randomgen import random_admissible, random_ladder
from .seifert import NotAdmissibleError, SeifertValidationError, decompose
from .sequiv import NoReductionFound, compare, reduce_once

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_CAP = 4


class InputError(Exception):
    def __init__(self, message: str, details=None):
        self.details = details
        super().__init__(message)


@dataclass
class CliConfig:
    command: str
    poly: str | None = None
    files: tuple[str, ...] = ()
    output: str | None = None
    m: int | str = AUTO
    strategy: str = SEQUENTIAL
    path: str | None = None
    max_extra_steps: int = 0
    max_paths: int = DEFAULT_MAX_PATHS
    format: str = "json"
    seed: int = 0
    cases: int = 200
    exhaustive: bool = False
    obstruction_only: bool = False


def _parse_m(text: str) -> int | str:
    if text == AUTO:
        return AUTO
    m = int(text)
    if m < 1:
        raise argparse.ArgumentTypeError("m must be at least 1")
    return m


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blseifert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")

    p = sub.add_parser("build", help="construct a Seifert matrix realising a polynomial")
    p.add_argument("poly")
    p.add_argument("-m", type=_parse_m, default=AUTO)
    p.add_argument("--strategy", choices=STRATEGIES, default=SEQUENTIAL)
    p.add_argument("--path", help="explicit path, e.g. +t1,+t2,-t1")
    common(p)

    p = sub.add_parser("verify", help="validate a matrix file and print Delta(A)")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("paths", help="build one matrix per admissible path and compare them")
    p.add_argument("poly")
    p.add_argument("-m", type=_parse_m, default=AUTO)
    p.add_argument("--extra-steps", dest="max_extra_steps", type=int, default=0)
    p.add_argument("--max-paths", type=int, default=DEFAULT_MAX_PATHS)
    common(p)

    p = sub.add_parser("compare", help="search for S-equivalence obstructions")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--obstruction-only", action="store_true")
    common(p, fmt=False)

    p = sub.add_parser("reduce", help="undo one row/column enlargement")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("selftest", help="randomised identity and roundtrip checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--exhaustive", action="store_true",
                   help="also check the identity for every l<=3, sign pattern and v in [-2,2]^l")
    common(p, fmt=False)
    return parser


def config_from_args(argv=None) -> CliConfig:
    ns = vars(make_parser().parse_args(argv))
    files = tuple(ns.pop(k) for k in ("file", "file_a", "file_b") if k in ns)
    return CliConfig(files=files, **{k: v for k, v in ns.items() if k in CliConfig.__dataclass_fields__})


# -- helpers -------------------------------------------------------------------


def _poly(cfg: CliConfig):
    try:
        return parse_poly(cfg.poly, cfg.m)
    except (PolySyntaxError, ValueError) as exc:
        raise InputError(f"invalid polynomial: {exc}") from exc


def _load(path: str) -> seifert.SeifertMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        rows, sizes = seifert.parse_matrix_data(text)
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(f"cannot read matrix from {path}: {exc}") from exc
    try:
        return seifert.validate_seifert(rows, sizes)
    except SeifertValidationError as exc:
        raise InputError(f"{path} is not a boundary link Seifert matrix", exc.violations) from exc


def dumps(obj, indent: int = 0) -> str:
    """JSON with nested containers indented but flat lists of scalars kept on one line."""
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj))
        return "[\n" + ",\n".join(inner + dumps(x, indent + 2) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def _matrix_text(rows) -> list[str]:
    if not rows:
        return ["(empty matrix)"]
    width = max(len(str(x)) for r in rows for x in r)
    return ["  " + " ".join(str(x).rjust(width) for x in r) for r in rows]


def _assembly_text(rep: dict) -> str:
    lines = [
        f"input: {rep['input']}",
        f"path: {rep['path'] or '(empty)'}",
        f"w: {rep['w']}",
        f"v: {rep['v']}",
        f"sigma: {rep['sigma'] or '(empty)'}",
        f"sizes: {rep['sizes']}",
        "A:",
        *_matrix_text(rep["matrix"]),
        f"delta: {rep['delta']}",
        f"roundtrip: {'ok' if rep['roundtrip'] else 'FAILED'}",
    ]
    return "\n".join(lines)


# -- commands --------------------------------------------------------------------


def cmd_build(cfg: CliConfig) -> tuple[int, str]:
    poly = _poly(cfg)
    path = None
    if cfg.path is not None:
        try:
            path = parse_path(cfg.path, poly.num_vars)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    try:
        asm = build(poly, cfg.strategy, path)
    except (NotAdmissibleError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    rep = report(asm, poly)
    out = dumps(rep) if cfg.format == "json" else _assembly_text(rep)
    return (EXIT_OK if rep["roundtrip"] else EXIT_INTERNAL), out


def cmd_verify(cfg: CliConfig) -> tuple[int, str]:
    a = _load(cfg.files[0])
    delta = print_poly(seifert.alexander(a))
    if cfg.format == "text":
        return EXIT_OK, delta
    return EXIT_OK, dumps({"valid": True, "m": a.m, "sizes": list(a.sizes), "delta": delta})


def cmd_paths(cfg: CliConfig) -> tuple[int, str]:
    poly = _poly(cfg)
    try:
        pres = decompose(poly)
    except NotAdmissibleError as exc:
        raise InputError(str(exc)) from exc
    code = EXIT_OK
    partial = False
    try:
        paths = enumerate_paths(pres.m, [a for a, _ in pres.pairs], cfg.max_extra_steps, cfg.max_paths)
    except PathLimitError as exc:
        paths, partial, code = exc.partial, True, EXIT_CAP
    assemblies = [build(poly, path_override=p) for p in paths]
    comparisons = []
    for (i, x), (j, y) in itertools.combinations(enumerate(assemblies), 2):
        rep = compare(x.A, y.A)
        comparisons.append({"a": i + 1, "b": j + 1, "verdict": rep.verdict,
                            "reasons": rep.reasons, "notes": rep.notes})
    result = {
        "input": print_poly(poly),
        "max_extra_steps": cfg.max_extra_steps,
        "partial": partial,
        "assemblies": [report(a, poly) for a in assemblies],
        "comparisons": comparisons,
    }
    if cfg.format == "json":
        return code, dumps(result)
    chunks = [f"input: {result['input']}", f"paths: {len(assemblies)}{' (partial)' if partial else ''}"]
    for k, rep in enumerate(result["assemblies"], start=1):
        chunks.append(f"--- assembly {k}\n{_assembly_text(rep)}")
    for c in comparisons:
        chunks.append(f"compare {c['a']} vs {c['b']}: {c['verdict']}"
                      + "".join(f"\n  {r['code']}: {json.dumps(r, sort_keys=True)}" for r in c["reasons"]))
    return code, "\n".join(chunks)


def cmd_compare(cfg: CliConfig) -> tuple[int, str]:
    a, b = (_load(f) for f in cfg.files)
    return EXIT_OK, dumps(json.loads(compare(a, b, cfg.obstruction_only).to_json()))


def cmd_reduce(cfg: CliConfig) -> tuple[int, str]:
    a = _load(cfg.files[0])
    res = reduce_once(a)
    if isinstance(res, NoReductionFound):
        return EXIT_OK, dumps({"reduced": False, "irreducible": res.irreducible,
                               "deficient": list(res.deficient)})
    if cfg.format == "text":
        return EXIT_OK, seifert.to_text(res).rstrip("\n")
    return EXIT_OK, seifert.to_json(res)


def run_selftest(seed: int, cases: int, exhaustive: bool = False) -> tuple[bool, list[str]]:
    rng = random.Random(seed)
    lines = [f"seed: {seed}"]
    ok = True
    if exhaustive:
        total = held = 0
        first = None
        for l in range(4):
            for eps in itertools.product((1, -1), repeat=max(l - 1, 0)):
                for v in itertools.product(range(-2, 3), repeat=l):
                    params = LadderParams(v, eps)
                    total += 1
                    if twisted_det(params) == twisted_det_formula(params):
                        held += 1
                    elif first is None:
                        first = params
        lines.append(f"mainprop exhaustive: {held}/{total} identities hold")
        if first is not None:
            ok = False
            lines.append(f"first counterexample: v={list(first.v)} eps={list(first.eps)}")

    held = 0
    first_mp = None
    for _ in range(cases):
        params = random_ladder(rng)
        if twisted_det(params) == twisted_det_formula(params):
            held += 1
        elif first_mp is None:
            first_mp = params
    rt = 0
    first_rt = None
    for _ in range(cases):
        poly = random_admissible(rng)
        good = True
        for strategy in STRATEGIES:
            try:
                good &= build(poly, strategy).delta == poly
            except AssertionError:
                good = False
        if good:
            rt += 1
        elif first_rt is None:
            first_rt = poly
    lines.append(f"mainprop: {held}/{cases} identities hold; roundtrip: {rt}/{cases}")
    if first_mp is not None:
        lines.append(f"first mainprop counterexample: v={list(first_mp.v)} eps={list(first_mp.eps)}")
    if first_rt is not None:
        lines.append(f"first roundtrip counterexample: {print_poly(first_rt)}")
    return ok and held == cases and rt == cases, lines


def cmd_selftest(cfg: CliConfig) -> tuple[int, str]:
    ok, lines = run_selftest(cfg.seed, cfg.cases, cfg.exhaustive)
    return (EXIT_OK if ok else EXIT_INTERNAL), "\n".join(lines)


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "paths": cmd_paths,
    "compare": cmd_compare,
    "reduce": cmd_reduce,
    "selftest": cmd_selftest,
}


def run(cfg: CliConfig) -> tuple[int, str, str]:
    """Execute a command; returns (exit code, stdout text, stderr text)."""
    try:
        code, out = COMMANDS[cfg.command](cfg)
        return code, out, ""
    except InputError as exc:
        body = dumps({"error": str(exc), "violations": exc.details}) if exc.details else ""
        return EXIT_INPUT, body, f"error: {exc}"
    except AssertionError as exc:
        return EXIT_INTERNAL, "", f"internal error: {exc}"


def main(argv=None) -> int:
    cfg = config_from_args(argv)
    code, out, err = run(cfg)
    if out:
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8") as fh:
                fh.write(out + "\n")
        else:
            print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
