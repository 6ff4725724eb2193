"""Reading and writing Laurent polynomials as plain text ("polytext").

Grammar (whitespace is ignored)::

    poly   := ["-"] term (("+" | "-") term)*
    term   := [integer] ("*"? factor)*
    factor := "t" index ("^" signed-integer)?

An optional pair of parentheses may wrap the whole expression.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly

AUTO = "auto"


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}: {text!r}")


@dataclass
class _Cursor:
    text: str
    pos: int = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def error(self, message: str) -> PolySyntaxError:
        return PolySyntaxError(message, self.pos, self.text)

    def integer(self, signed: bool = False) -> int:
        start = self.pos
        sign = 1
        if signed and self.peek() in "+-":
            sign = -1 if self.take() == "-" else 1
        self.skip()
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            self.pos = start
            raise self.error("expected an integer")
        return sign * int(self.text[digits_at:self.pos])


def _parse_terms(cur: _Cursor) -> list[tuple[int, dict[int, int]]]:
    terms = []
    sign = 1
    if cur.peek() == "-":
        cur.take()
        sign = -1
    while True:
        coeff, powers = _parse_term(cur)
        terms.append((sign * coeff, powers))
        ch = cur.peek()
        if ch in ("+", "-"):
            cur.take()
            sign = 1 if ch == "+" else -1
        else:
            return terms


def _parse_term(cur: _Cursor) -> tuple[int, dict[int, int]]:
    coeff = 1
    powers: dict[int, int] = {}
    seen = False
    if cur.peek().isdigit():
        coeff = cur.integer()
        seen = True
    while True:
        ch = cur.peek()
        if ch == "*":
            if not seen:
                raise cur.error("'*' without a left operand")
            cur.take()
            if cur.peek() != "t":
                raise cur.error("expected a variable after '*'")
            continue
        if ch != "t":
            break
        cur.take()
        if not cur.peek().isdigit():
            raise cur.error("expected a variable index after 't'")
        index = cur.integer()
        power = 1
        if cur.peek() == "^":
            cur.take()
            power = cur.integer(signed=True)
        powers[index] = powers.get(index, 0) + power
        seen = True
    if not seen:
        raise cur.error("expected a term")
    return coeff, powers


def parse_poly(text: str, m: int | str = AUTO) -> LaurentPoly:
    """Parse polytext into a :class:`LaurentPoly` in ``m`` variables.

    ``m="auto"`` infers the variable count from the largest index used
    (at least 1).
    """
    cur = _Cursor(text)
    if not cur.peek():
        raise cur.error("empty input")
    wrapped = cur.peek() == "("
    if wrapped:
        cur.take()
    terms = _parse_terms(cur)
    if wrapped:
        if cur.peek() != ")":
            raise cur.error("expected ')'")
        cur.take()
    if cur.peek():
        raise cur.error(f"unexpected character {cur.peek()!r}")

    used = [i for _, powers in terms for i in powers]
    if m == AUTO:
        m = max(used, default=1)
    m = int(m)
    if m < 1:
        raise ValueError("number of variables must be at least 1")
    for i in used:
        if not 1 <= i <= m:
            raise ValueError(f"variable t{i} out of range t1..t{m}")

    result: dict[tuple[int, ...], int] = {}
    for coeff, powers in terms:
        exp = [0] * m
        for i, e in powers.items():
            exp[i - 1] += e
        key = tuple(exp)
        result[key] = result.get(key, 0) + coeff
    return LaurentPoly(result, m)


def _monomial_text(exp: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e:
            parts.append(f"t{i}^{e}")
    return "*".join(parts)


def print_poly(p: LaurentPoly) -> str:
    """Canonical text: descending lex order, coefficient 1 omitted on non-constants."""
    if p.is_zero():
        return "0"
    out = []
    for exp, c in sorted(p.terms.items(), reverse=True):
        mono = _monomial_text(exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def read_poly_file(path, m: int | str = AUTO) -> list[LaurentPoly]:
    """One polynomial per line; blank lines and ``#`` comments are skipped."""
    polys = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                polys.append(parse_poly(line, m))
    return polys
