"""Ising partition functions in the variable ``t = exp(beta*J)``.

Three independent routes to ``Z(t)`` for the loopless Schreier graphs:

* from the Tutte polynomial on the hyperbola ``(x-1)(y-1) = 2``;
* from the closed forms in ``cosh``/``tanh``, rewritten in ``t``;
* by direct spin enumeration (small graphs only).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..bipoly import BiPoly, LaurentPoly, RationalFunction, UniPoly, eval_homogeneous, eval_in_ring
from ..multigraph import MultiGraph, is_connected
from .oracles import MAX_SPIN_VERTICES, ising_oracle

U = UniPoly.var()  # u = t**2
T_VAR = UniPoly.var()


def _u_to_t(poly: UniPoly) -> UniPoly:
    out = [0] * (2 * len(poly.coeffs))
    out[::2] = poly.coeffs
    return UniPoly(out)


def ising_from_tutte(g: MultiGraph, T: BiPoly, t: Fraction | int | None = None):
    """``2 (t^2-1)^(|V|-1) t^(-|E|) T((t^2+1)/(t^2-1), t^2)``.

    With ``t=None`` the result is a :class:`LaurentPoly` in ``t``; the
    denominator ``(t^2-1)^(|V|-1)`` is cleared by homogenizing, which fails
    loudly if ``deg_x T`` is too large for it to cancel. With a number ``t``
    (``t != 0, +-1``) the value is an exact Fraction.
    """
    if g.loop_count:
        raise ValueError("Ising identity is taken on the loopless graph")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    nv, ne = g.vertex_count, len(g.edges)
    if t is not None:
        t = Fraction(t)
        if t == 0 or t * t == 1:
            raise ZeroDivisionError("t must avoid 0 and +-1")
        u = t * t
        return 2 * (u - 1) ** (nv - 1) * eval_in_ring(T, (u + 1) / (u - 1), u) / t ** ne
    body = eval_homogeneous(T, U + 1, U - 1, U, 1, nv - 1, T.degree_y)
    if isinstance(body, int):
        body = UniPoly.const(body)
    return LaurentPoly(_u_to_t(body) * 2, -ne)


def _cosh() -> RationalFunction:
    return RationalFunction.fraction(T_VAR ** 2 + 1, T_VAR * 2)


def _tanh() -> RationalFunction:
    return RationalFunction.fraction(T_VAR ** 2 - 1, T_VAR ** 2 + 1)


def grigorchuk_z(n: int) -> LaurentPoly:
    """``2^(2^n) cosh^(3*2^(n-1)-2) (1 + tanh^2)^(2^(n-1)-1)`` rewritten in ``t``."""
    h = 2 ** (n - 1)
    th = _tanh()
    z = RationalFunction(2 ** (2 ** n)) * _cosh() ** (3 * h - 2) * (th * th + 1) ** (h - 1)
    return z.to_laurent()


def grigorchuk_common_form(n: int) -> LaurentPoly:
    """``2 (t^2+1)^(2^(n-1)) (t^4+1)^(2^(n-1)-1) / t^(3*2^(n-1)-2)``."""
    h = 2 ** (n - 1)
    num = (T_VAR ** 2 + 1) ** h * (T_VAR ** 4 + 1) ** (h - 1) * 2
    return LaurentPoly(num, -(3 * h - 2))


def basilica_polygon_factors(n: int) -> list[tuple[int, int]]:
    """``(power, exponent)`` pairs with ``Phi_n(z) = prod (1 + z**power)**exponent``."""
    listed = {1: [(2, 1)], 2: [(2, 3)], 3: [(2, 4), (4, 1)]}
    if n in listed:
        return listed[n]
    if n % 2 == 0:
        out = [(2 ** (n // 2), 3)]
        top = n // 2 - 1
    else:
        out = [(2 ** ((n - 1) // 2), 4), (2 ** ((n + 1) // 2), 1)]
        top = (n - 1) // 2 - 1
    return out + [(2 ** i, 3 * 2 ** (n - 2 * i - 1)) for i in range(1, top + 1)]


def basilica_z(n: int) -> LaurentPoly:
    """``2^(2^n) cosh^|E| Phi_n(tanh)`` rewritten in ``t``; levels 1-3 use the listed forms."""
    edges = 3 * 2 ** (n - 1) if n >= 2 else 2
    z = RationalFunction(2 ** (2 ** n)) * _cosh() ** edges
    th = _tanh()
    for power, exponent in basilica_polygon_factors(n):
        z = z * (th ** power + 1) ** exponent
    return z.to_laurent()


def closed_z(group: str, n: int) -> LaurentPoly:
    if group == "grigorchuk":
        return grigorchuk_z(n)
    if group == "basilica":
        return basilica_z(n)
    raise ValueError(f"unknown group {group!r}")


def first_difference(a: LaurentPoly, b: LaurentPoly) -> str:
    ta, tb = a.terms, b.terms
    for e in sorted(set(ta) | set(tb)):
        if ta.get(e, 0) != tb.get(e, 0):
            return f"t^{e}: {ta.get(e, 0)} vs {tb.get(e, 0)}"
    return ""


@dataclass
class IsingCheck:
    group: str
    level: int
    sides: dict[str, LaurentPoly] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.errors or len(self.sides) < 2:
            return False
        values = list(self.sides.values())
        return all(v == values[0] for v in values[1:])

    @property
    def detail(self) -> str:
        if self.errors:
            return "; ".join(f"{k}: {v}" for k, v in self.errors.items())
        names = list(self.sides)
        if self.ok:
            return "agree: " + ", ".join(names)
        ref = names[0]
        diffs = [f"{ref} vs {k}: {first_difference(self.sides[ref], self.sides[k])}"
                 for k in names[1:] if self.sides[k] != self.sides[ref]]
        return "; ".join(diffs)


def ising_identity_check(group: str, n: int, graph: MultiGraph, T: BiPoly, oracle: bool | None = None) -> IsingCheck:
    """Compare the Tutte route, the closed form and (if small enough) spin enumeration.

    ``graph`` and ``T`` are the loopless level-``n`` graph and its Tutte polynomial.
    """
    check = IsingCheck(group, n)
    for name, compute in (
        ("tutte", lambda: ising_from_tutte(graph, T)),
        ("closed_form", lambda: closed_z(group, n)),
    ):
        try:
            check.sides[name] = compute()
        except ArithmeticError as exc:
            check.errors[name] = f"residual denominator: {exc}"
    if group == "grigorchuk":
        check.sides["common_form"] = grigorchuk_common_form(n)
    if oracle is None:
        oracle = graph.vertex_count <= 16
    if oracle and graph.vertex_count <= MAX_SPIN_VERTICES:
        check.sides["spin_sum"] = ising_oracle(graph)
    return check
