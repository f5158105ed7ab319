"""Exact coefficient arithmetic: formal exponential sums and Novikov elements.

Both types are formal sums of monomials ``c * t^a`` with exact rational
exponents, stored sorted by exponent descending.  ``ExpSum`` has rational
coefficients and models the group ring Q[Q] (the formal home of the
exponential transport weights).  ``NovElem`` has integer coefficients and
models the rational-exponent part of the Novikov ring; a truncation floor
marks where a series computed by unit inversion stops being known.

All exponents are exact rationals.  Transcendental period values coming
from angular forms are stored after dividing by one full turn, so a half
loop is 1/2; uniform positive rescaling of every exponent is a ring
automorphism and changes no rank, unit status, or torsion downstream.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import NonpositiveScale, NotAUnit, ParseError, ZeroElement

Rat = Fraction


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _merge_terms(raw, coeff_cast):
    """Merge equal exponents, drop zeros, sort exponent-descending."""
    acc: dict[Fraction, object] = {}
    for coeff, exp in raw:
        e = _rat(exp)
        c = coeff_cast(coeff)
        acc[e] = acc.get(e, coeff_cast(0)) + c
    terms = tuple(
        (c, e) for e, c in sorted(acc.items(), key=lambda kv: kv[0], reverse=True) if c != 0
    )
    return terms


class ExpSum:
    """Finite formal sum of c*t^a with rational c and a, exponents distinct."""

    __slots__ = ("terms",)

    def __init__(self, raw_terms=()):
        object.__setattr__(self, "terms", _merge_terms(raw_terms, _rat))

    def __setattr__(self, *a):
        raise AttributeError("ExpSum is immutable")

    @staticmethod
    def zero() -> "ExpSum":
        return ExpSum()

    @staticmethod
    def one() -> "ExpSum":
        return ExpSum([(1, 0)])

    @staticmethod
    def monomial(coeff, exp) -> "ExpSum":
        return ExpSum([(coeff, exp)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, ExpSum):
            return other
        if isinstance(other, (int, Fraction)):
            return ExpSum([(other, 0)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExpSum(self.terms + o.terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpSum([(-c, e) for c, e in self.terms])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prods = [(c1 * c2, e1 + e2) for c1, e1 in self.terms for c2, e2 in o.terms]
        return ExpSum(prods)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(("ExpSum", self.terms))

    def __bool__(self):
        return bool(self.terms)

    def leading(self):
        if not self.terms:
            raise ZeroElement("zero ExpSum has no leading term")
        return self.terms[0]

    def rescale(self, s) -> "ExpSum":
        s = _rat(s)
        if s <= 0:
            raise NonpositiveScale(f"scale must be > 0, got {s}")
        return ExpSum([(c, e * s) for c, e in self.terms])

    def invert_exponents(self) -> "ExpSum":
        """The bar involution t^a -> t^(-a); inverts each unit monomial."""
        return ExpSum([(c, -e) for c, e in self.terms])

    def evaluate(self, base: float = math.e) -> float:
        """Numeric value at t = base.  Diagnostic only; never used for ranks."""
        return sum(float(c) * base ** float(e) for c, e in self.terms)

    def render(self) -> str:
        return _render_terms(self.terms)

    __repr__ = __str__ = render

    @staticmethod
    def parse(text: str) -> "ExpSum":
        terms, floor = _parse_terms(text)
        if floor is not None:
            raise ParseError("truncation floor not allowed in an ExpSum")
        return ExpSum(terms)


class NovElem:
    """Element of the rational-exponent Novikov ring, optionally truncated.

    ``floor`` is None for an exact element.  When set, stored terms all have
    exponent > floor and anything at or below the floor is unknown.
    """

    __slots__ = ("terms", "floor")

    def __init__(self, raw_terms=(), floor=None):
        terms = _merge_terms(raw_terms, _int_cast)
        f = None if floor is None else _rat(floor)
        if f is not None:
            terms = tuple((c, e) for c, e in terms if e > f)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "floor", f)

    def __setattr__(self, *a):
        raise AttributeError("NovElem is immutable")

    @staticmethod
    def zero() -> "NovElem":
        return NovElem()

    @staticmethod
    def one() -> "NovElem":
        return NovElem([(1, 0)])

    @staticmethod
    def monomial(coeff, exp) -> "NovElem":
        return NovElem([(coeff, exp)])

    @property
    def is_zero(self) -> bool:
        """No known terms.  A truncated element may still hide lower terms."""
        return not self.terms

    @property
    def exact(self) -> bool:
        return self.floor is None

    def _coerce(self, other):
        if isinstance(other, NovElem):
            return other
        if isinstance(other, int):
            return NovElem([(other, 0)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        floor = _max_floor(self.floor, o.floor)
        return NovElem(self.terms + o.terms, floor)

    __radd__ = __add__

    def __neg__(self):
        return NovElem([(-c, e) for c, e in self.terms], self.floor)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # Unknown tails only pollute the product below top(a)+floor(b) and
        # top(b)+floor(a); everything above both is exact.
        floor = None
        if o.floor is not None:
            top = self.terms[0][1] if self.terms else self.floor
            floor = None if top is None else _max_floor(floor, top + o.floor)
            if top is None and self.floor is not None:
                floor = _max_floor(floor, self.floor + o.floor)
        if self.floor is not None:
            top = o.terms[0][1] if o.terms else o.floor
            floor = None if top is None else _max_floor(floor, top + self.floor)
        if (self.floor is not None or o.floor is not None) and floor is None:
            # One factor is completely unknown or exactly zero.
            if (self.exact and self.is_zero) or (o.exact and o.is_zero):
                return NovElem.zero()
            return NovElem((), _max_floor(self.floor, o.floor))
        prods = [(c1 * c2, e1 + e2) for c1, e1 in self.terms for c2, e2 in o.terms]
        return NovElem(prods, floor)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms and self.floor == o.floor

    def __hash__(self):
        return hash(("NovElem", self.terms, self.floor))

    def __bool__(self):
        return bool(self.terms)

    def top(self):
        if not self.terms:
            raise ZeroElement("zero NovElem has no top term")
        c, e = self.terms[0]
        return c, e

    def is_unit(self) -> bool:
        return bool(self.terms) and self.terms[0][0] in (1, -1)

    def invert(self, depth) -> "NovElem":
        """Truncated inverse: result floor is its own top exponent minus depth."""
        depth = _rat(depth)
        if depth <= 0:
            raise ValueError("inversion depth must be > 0")
        if not self.is_unit():
            raise NotAUnit(f"not a Novikov unit: {self.render()}")
        n0, e0 = self.terms[0]
        # self = n0 t^e0 (1 + w) with w strictly below exponent 0.
        w = NovElem([(c * n0, e - e0) for c, e in self.terms[1:]])  # n0 in {1,-1}
        floor = -e0 - depth
        inv = NovElem.one()
        power = NovElem.one()
        while True:
            power = NovElem(
                [(-c1 * c2, x1 + x2) for c1, x1 in power.terms for c2, x2 in w.terms]
            )
            power = NovElem([(c, e) for c, e in power.terms if e - e0 > floor])
            if power.is_zero:
                break
            inv = inv + power
        result = [(c * n0, e - e0) for c, e in inv.terms]
        return NovElem(result, floor)

    def rescale(self, s) -> "NovElem":
        s = _rat(s)
        if s <= 0:
            raise NonpositiveScale(f"scale must be > 0, got {s}")
        floor = None if self.floor is None else self.floor * s
        return NovElem([(c, e * s) for c, e in self.terms], floor)

    def invert_exponents(self) -> "NovElem":
        if self.floor is not None:
            raise NotAUnit("cannot invert exponents of a truncated element")
        return NovElem([(c, -e) for c, e in self.terms])

    def truncate(self, floor) -> "NovElem":
        return NovElem(self.terms, _max_floor(self.floor, _rat(floor)))

    def agrees_with(self, other: "NovElem") -> bool:
        """Equal above the coarser of the two floors."""
        floor = _max_floor(self.floor, other.floor)
        if floor is None:
            return self.terms == other.terms
        a = tuple((c, e) for c, e in self.terms if e > floor)
        b = tuple((c, e) for c, e in other.terms if e > floor)
        return a == b

    def render(self) -> str:
        body = _render_terms(self.terms)
        if self.floor is None:
            return body
        tail = f"O(t^(<{self.floor}))"
        if not self.terms:
            return tail
        return f"{body} + {tail}"

    __repr__ = __str__ = render

    @staticmethod
    def parse(text: str) -> "NovElem":
        terms, floor = _parse_terms(text)
        for c, _ in terms:
            if isinstance(c, Fraction) and c.denominator != 1:
                raise ParseError(f"NovElem coefficients must be integers: {c}")
        return NovElem([(int(c), e) for c, e in terms], floor)


def _int_cast(c) -> int:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    raise TypeError(f"NovElem coefficient must be an integer: {c!r}")


def _max_floor(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


# --- spec-level operation names -------------------------------------------

def expsum_normalize(raw_terms) -> ExpSum:
    return ExpSum(raw_terms)


def expsum_mul(a: ExpSum, b: ExpSum) -> ExpSum:
    return a * b


def nov_top(e: NovElem):
    return e.top()


def nov_is_unit(e: NovElem) -> bool:
    return e.is_unit()


def nov_invert(e: NovElem, depth) -> NovElem:
    return e.invert(depth)


def rescale_exponents(e, s):
    return e.rescale(s)


# --- textual grammar ------------------------------------------------------

_TERM_RE = re.compile(
    r"""^(?:
        (?P<coeff>-?\d+(?:/\d+)?)\*t\^\((?P<exp1>-?\d+(?:/\d+)?)\)
      | t\^\((?P<exp2>-?\d+(?:/\d+)?)\)
      | (?P<const>-?\d+(?:/\d+)?)
    )$""",
    re.VERBOSE,
)
_FLOOR_RE = re.compile(r"^O\(t\^\(<(?P<floor>-?\d+(?:/\d+)?)\)\)$")


def _render_terms(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for c, e in terms:
        if e == 0:
            s = str(c)
        elif c == 1:
            s = f"t^({e})"
        elif c == -1:
            s = f"-t^({e})"
        else:
            s = f"{c}*t^({e})"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        if s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


def _split_top_level(text):
    """Split on top-level + and - into signed chunks."""
    chunks = []
    sign = 1
    buf = ""
    depth = 0
    text = text.strip()
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            if buf.strip():
                chunks.append((sign, buf.strip()))
                sign = 1 if ch == "+" else -1
                buf = ""
                continue
            if not buf.strip() and ch == "-" and not buf:
                sign = -sign
                continue
        buf += ch
    if buf.strip():
        chunks.append((sign, buf.strip()))
    return chunks


def _parse_terms(text: str):
    text = text.strip()
    if not text:
        raise ParseError("empty element text")
    if text == "0":
        return [], None
    floor = None
    terms = []
    for sign, chunk in _split_top_level(text):
        m = _FLOOR_RE.match(chunk)
        if m:
            if sign < 0 or floor is not None:
                raise ParseError(f"misplaced truncation marker in {text!r}")
            floor = Fraction(m.group("floor"))
            continue
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"cannot parse term {chunk!r}")
        if m.group("const") is not None:
            c, e = Fraction(m.group("const")), Fraction(0)
        elif m.group("exp2") is not None:
            c, e = Fraction(1), Fraction(m.group("exp2"))
        else:
            c, e = Fraction(m.group("coeff")), Fraction(m.group("exp1"))
        terms.append((sign * c, e))
    return terms, floor


_RAT_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text) -> Fraction:
    """Strict "p/q" (or "n") rationals: decimals would smuggle in rounding."""
    s = str(text).strip()
    if not _RAT_RE.match(s):
        raise ParseError(f"bad rational {text!r}: want p/q with integers")
    return Fraction(s)


def render_rational(x: Fraction) -> str:
    return str(x)
