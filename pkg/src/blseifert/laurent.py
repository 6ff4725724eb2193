"""Sparse exact Laurent polynomials in t1..tm over the integers."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


class NotDivisibleError(ArithmeticError):
    """Raised by :meth:`LaurentPoly.exact_div` when the quotient is not in the ring."""


class LaurentPoly:
    """Immutable element of Z[t1^{+-1}, ..., tm^{+-1}].

    Terms are stored as a dict ``{exponent tuple: nonzero int}``.  The zero
    polynomial is the empty dict; ``num_vars`` is carried even for constants.
    """

    __slots__ = ("_terms", "num_vars", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None, num_vars: int = 1):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {num_vars}")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self.num_vars = num_vars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], num_vars: int) -> LaurentPoly:
        # trusted constructor: keys already tuples of the right length, values nonzero
        p = object.__new__(cls)
        p._terms = terms
        p.num_vars = num_vars
        p._hash = None
        return p

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> LaurentPoly:
        return cls._raw({}, num_vars)

    @classmethod
    def constant(cls, c: int, num_vars: int) -> LaurentPoly:
        return cls._raw({(0,) * num_vars: int(c)} if c else {}, num_vars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> LaurentPoly:
        exp = tuple(exp)
        return cls._raw({exp: int(c)} if c else {}, len(exp))

    @classmethod
    def var(cls, i: int, num_vars: int, power: int = 1) -> LaurentPoly:
        """The monomial ``t_i^power`` (``i`` is 1-based)."""
        if not 1 <= i <= num_vars:
            raise ValueError(f"variable index {i} outside 1..{num_vars}")
        exp = [0] * num_vars
        exp[i - 1] = power
        return cls._raw({tuple(exp): 1}, num_vars)

    # -- container protocol ---------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        """Terms in ascending lexicographic exponent order."""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * self.num_vars}

    def is_unit(self) -> bool:
        """True for +-t^a, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.num_vars, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.num_vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .polyparse import print_poly

        return f"LaurentPoly({print_poly(self)!r}, num_vars={self.num_vars})"

    # -- ring operations ------------------------------------------------

    def _coerce(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.num_vars)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise ValueError(f"num_vars mismatch: {self.num_vars} vs {other.num_vars}")
        return other

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly._raw(out, self.num_vars)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.num_vars)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.num_vars)
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()}, self.num_vars)
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        n = self.num_vars
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(e1[k] + e2[k] for k in range(n)) if n != 1 else (e1[0] + e2[0],)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative powers only exist for units")
            (exp, c), = self._terms.items()
            return LaurentPoly.monomial(tuple(-e * -k for e in exp), c ** (-k))
        result = LaurentPoly.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitutions --------------------------------------------------

    def invert_vars(self) -> LaurentPoly:
        """Substitute t_i -> t_i^-1 for every variable."""
        return LaurentPoly._raw(
            {tuple(-x for x in e): c for e, c in self._terms.items()}, self.num_vars
        )

    def is_symmetric(self) -> bool:
        return self == self.invert_vars()

    def monomial_div(self, exp: Sequence[int]) -> LaurentPoly:
        """Divide by ``t^exp``; always exact in the Laurent ring."""
        exp = tuple(exp)
        if len(exp) != self.num_vars:
            raise ValueError("exponent length does not match num_vars")
        return LaurentPoly._raw(
            {tuple(a - b for a, b in zip(e, exp)): c for e, c in self._terms.items()},
            self.num_vars,
        )

    def monomial_mul(self, exp: Sequence[int]) -> LaurentPoly:
        return self.monomial_div(tuple(-x for x in exp))

    def eval(self, point: Sequence[int | Fraction]) -> Fraction:
        """Exact value at ``point``; every coordinate must be nonzero."""
        if len(point) != self.num_vars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.num_vars}")
        pt = [Fraction(x) for x in point]
        if any(x == 0 for x in pt):
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at a zero coordinate")
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = Fraction(c)
            for x, e in zip(pt, exp):
                if e:
                    term *= x**e
            total += term
        return total

    def substitute(self, images: Sequence[Sequence[int]], num_vars: int) -> LaurentPoly:
        """Ring map sending t_i to the monomial with exponent vector ``images[i]``."""
        out: dict[Exponent, int] = {}
        for exp, c in self._terms.items():
            new = [0] * num_vars
            for e, img in zip(exp, images):
                for k, x in enumerate(img):
                    new[k] += e * x
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, num_vars)

    # -- division -------------------------------------------------------

    def leading(self) -> tuple[Exponent, int]:
        exp = max(self._terms)
        return exp, self._terms[exp]

    def trailing(self) -> tuple[Exponent, int]:
        exp = min(self._terms)
        return exp, self._terms[exp]

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient ``self / other``, raising :class:`NotDivisibleError` if it is not exact.

        Lex order on Z^m is a group order, so leading terms multiply; the
        division loop stops once the remainder's leading term drops below
        what any valid quotient could produce.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        n = self.num_vars
        if len(other._terms) == 1:
            (exp, c), = other._terms.items()
            out = {}
            for e, a in self._terms.items():
                q, r = divmod(a, c)
                if r:
                    raise NotDivisibleError(f"coefficient {a} not divisible by {c}")
                out[tuple(x - y for x, y in zip(e, exp))] = q
            return LaurentPoly._raw(out, n)
        lead_b, lc_b = other.leading()
        low_b, _ = other.trailing()
        low_a, _ = self.trailing()
        floor = tuple(x - y for x, y in zip(low_a, low_b))
        rem = dict(self._terms)
        quot: dict[Exponent, int] = {}
        while rem:
            lead_r = max(rem)
            q_exp = tuple(x - y for x, y in zip(lead_r, lead_b))
            if q_exp < floor:
                raise NotDivisibleError("remainder left after exhausting the quotient range")
            q, r = divmod(rem[lead_r], lc_b)
            if r:
                raise NotDivisibleError(f"leading coefficient {rem[lead_r]} not divisible by {lc_b}")
            quot[q_exp] = q
            for e, c in other._terms.items():
                key = tuple(x + y for x, y in zip(e, q_exp))
                s = rem.get(key, 0) - q * c
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return LaurentPoly._raw(quot, n)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def invert_vars(a: LaurentPoly) -> LaurentPoly:
    return a.invert_vars()


def is_symmetric(a: LaurentPoly) -> bool:
    return a.is_symmetric()


def eval_rational(a: LaurentPoly, point: Sequence[int | Fraction]) -> Fraction:
    return a.eval(point)


def monomial_div(a: LaurentPoly, e: Sequence[int]) -> LaurentPoly:
    return a.monomial_div(e)
