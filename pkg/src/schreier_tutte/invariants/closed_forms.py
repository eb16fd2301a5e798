"""Closed-form Tutte polynomials and predicted evaluations for both families."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import mul

from ..bipoly import BiPoly, RationalFunction, UniPoly, cycle_poly, product

X, Y = BiPoly.x(), BiPoly.y()
P = UniPoly.var()


@dataclass(frozen=True)
class ClosedForm:
    group: str
    level: int
    with_loops: bool
    factors: tuple[tuple[BiPoly, int], ...]

    def expand(self) -> BiPoly:
        return product(self.factors)

    def latex(self) -> str:
        from ..bipoly import to_latex

        parts = []
        for f, e in self.factors:
            if e == 0:
                continue
            body = to_latex(f)
            if len(f) > 1:
                body = f"({body})"
            parts.append(body if e == 1 else f"{body}^{{{e}}}")
        return " ".join(parts) or "1"


def _basilica_cycle_factors(n: int) -> list[tuple[int, int]]:
    """``(cycle length, exponent)`` pairs of the product formulas, ``n >= 4``."""
    if n % 2 == 0:
        out = [(2 ** (n // 2), 3)]
        top = n // 2 - 1
    else:
        out = [(2 ** ((n - 1) // 2), 4), (2 ** ((n + 1) // 2), 1)]
        top = (n - 1) // 2 - 1
    out += [(2 ** i, 3 * 2 ** (n - 2 * i - 1)) for i in range(1, top + 1)]
    return out


_BASILICA_SMALL = {
    1: [(2, 1)],
    2: [(2, 3)],
    3: [(2, 4), (4, 1)],
}
_BASILICA_SMALL_LOOPS = {1: 2, 2: 2, 3: 4}


def basilica_cycles(n: int) -> list[tuple[int, int]]:
    """Cycle-length factors of the Basilica Tutte polynomial at level ``n``."""
    if n < 1:
        raise ValueError("level must be >= 1")
    return list(_BASILICA_SMALL[n]) if n <= 3 else _basilica_cycle_factors(n)


def closed_form(group: str, n: int, with_loops: bool = True) -> ClosedForm:
    if n < 1:
        raise ValueError("level must be >= 1")
    if group == "grigorchuk":
        factors = [(Y, 2 ** n + 4)] if with_loops else []
        factors += [(X, 2 ** (n - 1)), (X + Y, 2 ** (n - 1) - 1)]
    elif group == "basilica":
        loops = _BASILICA_SMALL_LOOPS[n] if n <= 3 else 2 ** (n - 1)
        factors = [(Y, loops)] if with_loops else []
        factors += [(cycle_poly(m), e) for m, e in basilica_cycles(n)]
    else:
        raise ValueError(f"unknown group {group!r}")
    return ClosedForm(group, n, with_loops, tuple(factors))


# -- predicted integer evaluations -------------------------------------------------

def _prod(values) -> int:
    return reduce(mul, values, 1)


def _basilica_product(n: int, per_cycle) -> int:
    return _prod(per_cycle(m) ** e for m, e in _basilica_cycle_factors(n))


def grigorchuk_reliability(n: int) -> UniPoly:
    return P ** (2 ** n - 1) * (2 - P) ** (2 ** (n - 1) - 1)


def grigorchuk_chromatic(n: int) -> UniPoly:
    return -P * (1 - P) ** (2 ** n - 1)


def basilica_reliability(n: int) -> UniPoly:
    """Reliability polynomial from the product formula (``n >= 4``) or the listed small cases."""
    if n == 1:
        return P * (2 - P)
    if n == 2:
        return P ** 3 * (2 - P) ** 3
    if n == 3:
        return P ** 7 * (2 - P) ** 4 * (4 - 3 * P)
    q = 1 - P
    rf = RationalFunction(P ** (2 ** n - 1) * q ** (2 ** (n - 1) + 1))
    for m, e in _basilica_cycle_factors(n):
        rf = rf * RationalFunction.fraction(m * q + P, q) ** e
    return _as_polynomial(rf)


def basilica_chromatic(n: int, literal_exponent: bool = False) -> UniPoly:
    """Chromatic polynomial of the loopless Basilica graph.

    For ``n >= 4`` each cycle of length ``2**i`` in the product contributes
    ``((1-l) - (1-l)**2**i) / l``. With ``literal_exponent`` the exponent of
    the generic product factors is taken as ``2*i`` instead, a known variant
    of the product; the two agree while ``i <= 2``.
    """
    if n == 1:
        return -P * (1 - P)
    if n == 2:
        return -P * (1 - P) ** 3
    if n == 3:
        return -P * (1 - P) ** 5 * (P ** 2 - 3 * P + 3)
    q = 1 - P
    rf = RationalFunction(-P)
    if n % 2 == 0:
        tops = [(2 ** (n // 2), 3)]
        top = n // 2 - 1
    else:
        tops = [(2 ** ((n - 1) // 2), 4), (2 ** ((n + 1) // 2), 1)]
        top = (n - 1) // 2 - 1
    for m, e in tops:
        rf = rf * RationalFunction.fraction(q - q ** m, P) ** e
    for i in range(1, top + 1):
        m = 2 * i if literal_exponent else 2 ** i
        rf = rf * RationalFunction.fraction(q - q ** m, P) ** (3 * 2 ** (n - 2 * i - 1))
    return _as_polynomial(rf)


def _as_polynomial(rf: RationalFunction) -> UniPoly:
    lp = rf.to_laurent()
    if lp.low < 0:
        raise ArithmeticError("expression is not a polynomial")
    return lp.poly.shift(lp.low)


def closed_evaluations(group: str, n: int) -> dict[str, object]:
    """Predicted special values at level ``n`` from the closed-form propositions.

    Keys: ``tau``, ``connected_spanning``, ``forests``, ``two_pow_E``,
    ``acyclic`` (loopless graph), ``reliability`` and ``chromatic``
    (loopless graph, in the variable ``p`` resp. lambda).
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    if group == "grigorchuk":
        h = 2 ** (n - 1)
        return {
            "tau": 2 ** (h - 1),
            "connected_spanning": 2 ** (2 ** n + 4) * 3 ** (h - 1),
            "forests": 2 ** h * 3 ** (h - 1),
            "two_pow_E": 2 ** (5 * h + 2),
            "acyclic": 2 ** (2 ** n - 1),
            "reliability": grigorchuk_reliability(n),
            "chromatic": grigorchuk_chromatic(n),
        }
    if group != "basilica":
        raise ValueError(f"unknown group {group!r}")
    if n <= 3:
        small = {
            1: (2, 2 ** 2 * 3, 3, 2),
            2: (2 ** 3, 2 ** 2 * 3 ** 3, 3 ** 3, 2 ** 3),
            3: (2 ** 6, 2 ** 4 * 3 ** 4 * 5, 3 ** 5 * 5, 2 ** 5 * 7),
        }
        tau, connected, forests, acyclic = small[n]
    else:
        tau = 2 ** basilica_tau_exponent(n)
        connected = 2 ** (2 ** (n - 1)) * _basilica_product(n, lambda m: 1 + m)
        forests = _basilica_product(n, lambda m: 2 ** m - 1)
        acyclic = _basilica_product(n, lambda m: 2 ** m - 2)
    return {
        "tau": tau,
        "connected_spanning": connected,
        "forests": forests,
        "two_pow_E": 2 ** (2 ** (n + 1)),
        "acyclic": acyclic,
        "reliability": basilica_reliability(n),
        "chromatic": basilica_chromatic(n),
    }


def basilica_tau_exponent(n: int) -> int:
    num = 2 ** (n + 2) + 3 * n - (5 if n % 2 else 4)
    assert num % 6 == 0
    return num // 6


def grigorchuk_tau_exponent(n: int) -> int:
    return 2 ** (n - 1) - 1
