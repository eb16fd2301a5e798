"""Special evaluations of a Tutte polynomial and the polynomials derived from it."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..bipoly import BiPoly, UniPoly, eval_homogeneous, eval_in_ring
from ..multigraph import MultiGraph, is_connected, stats

LAMBDA = UniPoly.var()


class NotApplicable(ValueError):
    """The evaluation has no meaning for this graph (e.g. acyclic orientations with loops)."""


@dataclass
class EvaluationReport:
    group: str
    level: int
    tau: int
    connected_spanning: int
    forests: int
    two_pow_E: int
    acyclic: int
    chromatic: UniPoly
    reliability: UniPoly
    asymptotic_ratio: Fraction
    ising_identity: bool | None = None
    notes: list[str] = field(default_factory=list)

    def values(self) -> dict[str, str]:
        return {
            "tau": str(self.tau),
            "connected_spanning": str(self.connected_spanning),
            "forests": str(self.forests),
            "two_pow_E": str(self.two_pow_E),
            "acyclic": str(self.acyclic),
            "chromatic": self.chromatic.to_text("l"),
            "reliability": self.reliability.to_text("p"),
            "asymptotic_ratio": f"{self.asymptotic_ratio.numerator}/{self.asymptotic_ratio.denominator}",
            "asymptotic_ratio_float": f"{float(self.asymptotic_ratio):.12g}",
        }


def special_evaluations(T: BiPoly, g: MultiGraph) -> dict[str, int]:
    """Exact values at (1,1), (1,2), (2,1), (2,2) and (2,0).

    ``acyclic`` is 0 on a graph with loops; a loop is an oriented cycle under
    every orientation.
    """
    return {
        "tau": T(1, 1),
        "connected_spanning": T(1, 2),
        "forests": T(2, 1),
        "two_pow_E": T(2, 2),
        "acyclic": acyclic_orientations(T, g),
    }


def acyclic_orientations(T: BiPoly, g: MultiGraph, strict: bool = False) -> int:
    if g.loop_count:
        if strict:
            raise NotApplicable(f"graph has {g.loop_count} loops; no orientation is acyclic")
        return 0
    return T(2, 0)


def chromatic_polynomial(T: BiPoly, g: MultiGraph) -> UniPoly:
    """``(-1)**r(G) * l**k(G) * T(1 - l, 0)``; identically zero if ``g`` has loops."""
    if g.loop_count:
        return UniPoly()
    s = stats(g)
    row = BiPoly({(i, j): c for (i, j), c in T.items() if j == 0})
    value = eval_in_ring(row, 1 - LAMBDA, 0) if row else UniPoly()
    if isinstance(value, int):
        value = UniPoly.const(value)
    value = value.shift(s.k)
    return -value if s.rank % 2 else value


def reliability_polynomial(T: BiPoly, g: MultiGraph) -> UniPoly:
    """``p**(|V|-1) * (1-p)**(|E|-|V|+1) * T(1, 1/(1-p))`` with the denominators cleared."""
    if not is_connected(g):
        raise NotApplicable("reliability polynomial requires a connected graph")
    p = UniPoly.var()
    nullity = len(g.edges) - g.vertex_count + 1
    value = eval_homogeneous(T, 1, 1, 1, 1 - p, T.degree_x, nullity)
    if isinstance(value, int):
        value = UniPoly.const(value)
    return value.shift(g.vertex_count - 1)


def power_of_two_exponent(value: int) -> int:
    if value <= 0 or value & (value - 1):
        raise ValueError(f"{value} is not a power of two")
    return value.bit_length() - 1


LIMITS = {"grigorchuk": Fraction(1, 2), "basilica": Fraction(2, 3)}


@dataclass(frozen=True)
class GrowthRatio:
    ratio: Fraction
    limit: Fraction

    @property
    def gap(self) -> Fraction:
        return self.ratio - self.limit

    def natural_log(self) -> float:
        """``log(tau)/|V|`` in natural-log units."""
        return float(self.ratio) * math.log(2)


def growth_ratio(group: str, tau: int, vertex_count: int) -> GrowthRatio:
    """``log2(tau)/|V|`` exactly; ``tau`` must be a power of two."""
    return GrowthRatio(Fraction(power_of_two_exponent(tau), vertex_count), LIMITS[group])
