"""Exact polynomial arithmetic over arbitrary-precision integers.

Four value types live here:

* :class:`BiPoly` -- sparse bivariate polynomial in ``x`` and ``y`` (Tutte polynomials);
* :class:`UniPoly` -- dense univariate polynomial (chromatic/reliability polynomials);
* :class:`LaurentPoly` -- univariate polynomial allowing negative exponents
  (Ising partition functions in ``t = exp(beta*J)``);
* :class:`RationalFunction` -- ``UniPoly`` numerator over a factored denominator,
  used only to clear denominators exactly.

Exact rationals are :class:`fractions.Fraction`.

Large products are computed by Kronecker substitution: both operands are packed
into one big integer, multiplied with GMP and unpacked again.
"""
from __future__ import annotations

import json
import re
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import gmpy2

Rational = Fraction

# Below this many elementary coefficient products the schoolbook loop wins.
_KRONECKER_THRESHOLD = 4096


# ---------------------------------------------------------------------------
# Kronecker packing
# ---------------------------------------------------------------------------

def _pack(coeffs: list[int], width: int) -> int:
    """Pack non-negative ``coeffs`` into one integer, ``width`` bytes per slot."""
    buf = b"".join(c.to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(buf, "little")


def _unpack(value, width: int, count: int) -> list[int]:
    value = int(value)
    buf = value.to_bytes(width * count, "little")
    return [int.from_bytes(buf[i:i + width], "little") for i in range(0, width * count, width)]


def _split_signs(coeffs: list[int]) -> tuple[list[int], list[int] | None]:
    if all(c >= 0 for c in coeffs):
        return coeffs, None
    return [c if c > 0 else 0 for c in coeffs], [-c if c < 0 else 0 for c in coeffs]


def _nonneg_product(a: list[int], b: list[int]) -> list[int]:
    out_len = len(a) + len(b) - 1
    max_a, max_b = max(a), max(b)
    if max_a == 0 or max_b == 0:
        return [0] * out_len
    bound = min(sum(a) * max_b, max_a * sum(b))
    width = bound.bit_length() // 8 + 1
    prod = gmpy2.mpz(_pack(a, width)) * gmpy2.mpz(_pack(b, width))
    return _unpack(prod, width, out_len)


def dense_product(a: list[int], b: list[int]) -> list[int]:
    """Product of two dense integer coefficient lists (low degree first)."""
    if not a or not b:
        return []
    if len(a) * len(b) <= _KRONECKER_THRESHOLD:
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return out
    a_pos, a_neg = _split_signs(a)
    b_pos, b_neg = _split_signs(b)
    out = _nonneg_product(a_pos, b_pos)
    if a_neg is not None and b_neg is not None:
        out = [p + q for p, q in zip(out, _nonneg_product(a_neg, b_neg))]
    if a_neg is not None:
        out = [p - q for p, q in zip(out, _nonneg_product(a_neg, b_pos))]
    if b_neg is not None:
        out = [p - q for p, q in zip(out, _nonneg_product(a_pos, b_neg))]
    return out


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse polynomial in ``x`` and ``y`` with integer coefficients.

    Terms are stored as ``{(x_degree, y_degree): coefficient}`` with no zero
    coefficients. Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative degree ({i}, {j})")
            c = int(c)
            if c:
                key = (int(i), int(j))
                clean[key] = clean.get(key, 0) + c
                if clean[key] == 0:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> BiPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> BiPoly:
        return cls.monomial(0, 1)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({to_text(self)!r})"

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, int):
            if other == 0:
                return BiPoly()
            return BiPoly._raw({k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return BiPoly()
        if len(self._terms) * len(other._terms) <= _KRONECKER_THRESHOLD:
            out: dict[tuple[int, int], int] = defaultdict(int)
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    out[(i1 + i2, j1 + j2)] += c1 * c2
            return BiPoly._raw({k: c for k, c in out.items() if c})
        return self._kronecker_mul(other)

    __rmul__ = __mul__

    def _kronecker_mul(self, other: BiPoly) -> BiPoly:
        stride = self.degree_y + other.degree_y + 1
        a = self._dense(stride)
        b = other._dense(stride)
        prod = dense_product(a, b)
        return BiPoly._raw({divmod(idx, stride): c for idx, c in enumerate(prod) if c})

    def _dense(self, stride: int) -> list[int]:
        # Slot i*stride + j; only low-to-high up to the largest used slot.
        size = max(i * stride + j for i, j in self._terms) + 1
        out = [0] * size
        for (i, j), c in self._terms.items():
            out[i * stride + j] = c
        return out

    def __pow__(self, exponent: int) -> BiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = BiPoly.const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- evaluation ---------------------------------------------------------

    def rows(self) -> dict[int, dict[int, int]]:
        """Terms grouped by x-degree: ``{i: {j: c}}``."""
        out: dict[int, dict[int, int]] = defaultdict(dict)
        for (i, j), c in self._terms.items():
            out[i][j] = c
        return out

    def swap(self) -> BiPoly:
        """Exchange the roles of ``x`` and ``y``."""
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def __call__(self, x_value, y_value):
        return eval_in_ring(self, x_value, y_value)


def product(factors: Iterable[tuple[BiPoly, int]]) -> BiPoly:
    """Expand ``prod f**e`` by a balanced product tree of powers."""
    stack = [f ** e for f, e in factors]
    if not stack:
        return BiPoly.const(1)
    while len(stack) > 1:
        stack.sort(key=len)
        nxt = [stack[i] * stack[i + 1] for i in range(0, len(stack) - 1, 2)]
        if len(stack) % 2:
            nxt.append(stack[-1])
        stack = nxt
    return stack[0]


def cycle_poly(k: int) -> BiPoly:
    """Tutte polynomial of a cycle of length ``k``: ``y + x + ... + x**(k-1)``.

    ``k == 1`` is a loop and gives ``y``.
    """
    if k < 1:
        raise ValueError(f"cycle length must be >= 1, got {k}")
    terms = {(0, 1): 1}
    for i in range(1, k):
        terms[(i, 0)] = 1
    return BiPoly(terms)


def _horner(coeffs: dict[int, int], value):
    top = max(coeffs)
    acc = coeffs[top]
    for d in range(top - 1, -1, -1):
        acc = acc * value
        c = coeffs.get(d)
        if c:
            acc = acc + c
    return acc


def eval_in_ring(p: BiPoly, x_value, y_value):
    """Evaluate ``p`` at ring elements by nested Horner schemes.

    Works for any commutative ring whose elements accept ``+ int`` and
    ``* int`` (ints, Fractions, UniPoly, LaurentPoly, ...). No division happens.
    """
    if not p:
        return 0 * y_value
    rows = p.rows()
    inner = {i: _horner(row, y_value) for i, row in rows.items()}
    top = max(inner)
    acc = inner[top]
    for d in range(top - 1, -1, -1):
        acc = acc * x_value
        v = inner.get(d)
        if v is not None:
            acc = acc + v
    return acc


def _power_table(base, count: int) -> list:
    table = [1]
    for _ in range(count):
        table.append(table[-1] * base)
    return table


def eval_homogeneous(p: BiPoly, x_num, x_den, y_num, y_den, dx: int, dy: int):
    """Return ``x_den**dx * y_den**dy * p(x_num/x_den, y_num/y_den)``.

    The result is computed without division; it is the exact way to clear the
    denominators of a rational substitution. Requires ``deg_x p <= dx`` and
    ``deg_y p <= dy``.
    """
    if p.degree_x > dx or p.degree_y > dy:
        raise ArithmeticError(
            f"degrees ({p.degree_x}, {p.degree_y}) exceed homogenizing bounds ({dx}, {dy})")
    scalar = (int, Fraction)
    if (isinstance(x_num, scalar) and isinstance(x_den, scalar)
            and not (isinstance(y_num, scalar) and isinstance(y_den, scalar))):
        # Collapse the scalar variable in the inner loop.
        return eval_homogeneous(p.swap(), y_num, y_den, x_num, x_den, dy, dx)
    rows = p.rows()
    used_j = {j for row in rows.values() for j in row}
    top_j = max(used_j, default=0)
    yn = _power_table(y_num, top_j)
    yd = _power_table(y_den, dy)
    top_i = max(rows, default=0)
    xn = _power_table(x_num, top_i)
    xd = _power_table(x_den, dx)
    total = 0
    for i, row in rows.items():
        inner = 0
        for j, c in row.items():
            inner = inner + (yn[j] * yd[dy - j]) * c
        total = total + inner * (xn[i] * xd[dx - i])
    return total


# -- serialization -----------------------------------------------------------

def to_json(p: BiPoly) -> str:
    return json.dumps([[i, j, str(c)] for (i, j), c in p.items()], separators=(",", ":"))


def from_json(text: str) -> BiPoly:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValueError("polynomial JSON must be an array of [i, j, coefficient]")
    terms = {}
    for entry in data:
        if (not isinstance(entry, list) or len(entry) != 3
                or not all(isinstance(d, int) and not isinstance(d, bool) for d in entry[:2])
                or not isinstance(entry[2], str)):
            raise ValueError(f"malformed term {entry!r}")
        i, j, c = entry
        if (i, j) in terms:
            raise ValueError(f"duplicate term ({i}, {j})")
        try:
            terms[(i, j)] = int(c)
        except ValueError:
            raise ValueError(f"malformed coefficient {c!r}") from None
    return BiPoly(terms)


def _term_order(p: BiPoly) -> list[tuple[tuple[int, int], int]]:
    return sorted(p.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))


def _format(p: BiPoly, latex: bool) -> str:
    if not p:
        return "0"

    def power(var: str, d: int) -> str:
        if d == 0:
            return ""
        if d == 1:
            return var
        return f"{var}^{{{d}}}" if latex else f"{var}^{d}"

    parts = []
    for (i, j), c in _term_order(p):
        mono = [s for s in (power("x", i), power("y", j)) if s]
        sep = " " if latex else "*"
        body = sep.join(mono)
        mag = abs(c)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}{sep}{body}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def to_text(p: BiPoly) -> str:
    """Plain text such as ``x^3*y^8 + x^2*y^9``."""
    return _format(p, latex=False)


def to_latex(p: BiPoly) -> str:
    """LaTeX such as ``x^{3} y^{8} + x^{2} y^{9}``; terms by total degree descending."""
    return _format(p, latex=True)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+)?\s*[*\s]?\s*
        (?:(?P<x>x)(?:\^\{?(?P<xd>\d+)\}?)?)?\s*[*\s]?\s*
        (?:(?P<y>y)(?:\^\{?(?P<yd>\d+)\}?)?)?$""",
    re.VERBOSE,
)


def from_text(text: str) -> BiPoly:
    """Parse output of :func:`to_text` or :func:`to_latex`."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return BiPoly()
    tokens = re.split(r"\s+([+-])\s+", s)
    first = tokens[0]
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:]
    chunks = [(sign, first)]
    for k in range(1, len(tokens), 2):
        chunks.append((1 if tokens[k] == "+" else -1, tokens[k + 1]))
    terms: dict[tuple[int, int], int] = {}
    for sign, chunk in chunks:
        m = _TERM_RE.match(chunk.strip())
        if not m or not chunk.strip() or (m["coef"] is None and not m["x"] and not m["y"]):
            raise ValueError(f"malformed term {chunk!r}")
        coef = int(m["coef"]) if m["coef"] else 1
        i = (int(m["xd"]) if m["xd"] else 1) if m["x"] else 0
        j = (int(m["yd"]) if m["yd"] else 1) if m["y"] else 0
        if (i, j) in terms:
            raise ValueError(f"duplicate term x^{i} y^{j}")
        terms[(i, j)] = sign * coef
    return BiPoly(terms)


def serialize(p: BiPoly, fmt: str = "text") -> str:
    if fmt == "json":
        return to_json(p)
    if fmt == "latex":
        return to_latex(p)
    if fmt == "text":
        return to_text(p)
    raise ValueError(f"unknown polynomial format {fmt!r}")


def parse(text: str, fmt: str = "text") -> BiPoly:
    if fmt == "json":
        return from_json(text)
    if fmt in ("latex", "text"):
        return from_text(text)
    raise ValueError(f"unknown polynomial format {fmt!r}")


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate integer polynomial, coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _trim([int(c) for c in coeffs])

    @classmethod
    def var(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> UniPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __add__(self, other) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return UniPoly(dense_product(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        result, base = UniPoly.const(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, k: int) -> UniPoly:
        """Multiply by ``var**k`` (``k >= 0``)."""
        return UniPoly((0,) * k + self.coeffs)

    def exact_div(self, divisor: UniPoly) -> UniPoly:
        """Quotient of an exact division over the integers; raises on remainder."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        d = divisor.coeffs
        lead = d[-1]
        rem = list(self.coeffs)
        if len(rem) < len(d):
            if any(rem):
                raise ArithmeticError("non-zero remainder in exact polynomial division")
            return UniPoly()
        q = [0] * (len(rem) - len(d) + 1)
        for k in range(len(q) - 1, -1, -1):
            top = rem[k + len(d) - 1]
            if top:
                qk, r = divmod(top, lead)
                if r:
                    raise ArithmeticError("non-integral quotient in exact polynomial division")
                q[k] = qk
                for i, c in enumerate(d):
                    rem[k + i] -= qk * c
        if any(rem):
            raise ArithmeticError("non-zero remainder in exact polynomial division")
        return UniPoly(q)

    def to_text(self, var: str = "p") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# LaurentPoly
# ---------------------------------------------------------------------------

class LaurentPoly:
    """``t**low * poly(t)`` with ``poly(0) != 0`` (or the zero element)."""

    __slots__ = ("low", "poly")

    def __init__(self, poly: UniPoly | Iterable[int] = (), low: int = 0):
        if not isinstance(poly, UniPoly):
            poly = UniPoly(poly)
        c = poly.coeffs
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        if k == len(c):
            self.poly, self.low = UniPoly(), 0
        else:
            self.poly, self.low = UniPoly(c[k:]), low + k

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo = min(terms)
        dense = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            dense[e - lo] = c
        return cls(dense, lo)

    @classmethod
    def t(cls, power: int = 1) -> LaurentPoly:
        return cls((1,), power)

    @property
    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.poly.coeffs) if c}

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(("LaurentPoly", self.low, self.poly.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms})"

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly((other,))
        if isinstance(other, UniPoly):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        lo = min(self.low, other.low)
        a = self.poly.shift(self.low - lo)
        b = other.poly.shift(other.low - lo)
        return LaurentPoly(a + b, lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(-self.poly, self.low)

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.poly * other.poly, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return LaurentPoly(self.poly ** exponent, self.low * exponent)

    def __call__(self, value):
        """Evaluate at a non-zero exact number (int or Fraction)."""
        base = self.poly(value)
        return base * Fraction(value) ** self.low

    def to_text(self, var: str = "t") -> str:
        if not self:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

_T = UniPoly.var()


class RationalFunction:
    """Numerator ``UniPoly`` over a denominator kept as a product of factors.

    Keeping the denominator factored lets :meth:`to_laurent` clear it with
    cheap repeated divisions. Nothing is ever cancelled implicitly: a factor
    that does not divide the numerator makes :meth:`to_laurent` fail.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly | int, den: Mapping[UniPoly, int] | None = None):
        if isinstance(num, int):
            num = UniPoly.const(num)
        self.num = num
        self.den: Counter = Counter({f: e for f, e in (den or {}).items() if e})

    @classmethod
    def fraction(cls, num: UniPoly | int, den: UniPoly | int) -> RationalFunction:
        if isinstance(den, int):
            den = UniPoly.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        return cls(num, {den: 1})

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, UniPoly)):
            return RationalFunction(other)
        return NotImplemented

    def _den_poly(self, factors: Mapping[UniPoly, int]) -> UniPoly:
        out = UniPoly.const(1)
        for f, e in factors.items():
            out = out * f ** e
        return out

    def __mul__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __add__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        common = self.den | other.den
        a = self.num * self._den_poly(common - self.den)
        b = other.num * self._den_poly(common - other.den)
        return RationalFunction(a + b, common)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return RationalFunction(self.num ** exponent, {f: e * exponent for f, e in self.den.items()})

    def to_laurent(self) -> LaurentPoly:
        """Clear the denominator; raises ``ArithmeticError`` if it does not cancel."""
        num = self.num
        shift = 0
        for f, e in self.den.items():
            c = f.coeffs
            if len(c) == 1:
                scale = c[0] ** e
                if any(x % scale for x in num.coeffs):
                    raise ArithmeticError(f"constant denominator {scale} does not divide numerator")
                num = UniPoly(x // scale for x in num.coeffs)
            elif all(x == 0 for x in c[:-1]):
                # c_k * t**k
                scale = c[-1] ** e
                if any(x % scale for x in num.coeffs):
                    raise ArithmeticError(f"constant denominator {scale} does not divide numerator")
                num = UniPoly(x // scale for x in num.coeffs)
                shift -= (len(c) - 1) * e
            else:
                for _ in range(e):
                    num = num.exact_div(f)
        return LaurentPoly(num, shift)
