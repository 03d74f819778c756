"""Distance-based topological indices, all computed from the distance distribution.

Every index here is sum-over-pairs of some weight of the pairwise distance,
so one BFS pass per graph (the distance distribution) serves every weight.
Integer-valued weights are accumulated exactly; half-integer family members
(hyper-Wiener, Tratch-Stankevich-Zefirov) use exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .graphs import DistanceDistribution, Graph, distance_distribution
from .weights import PowerWeight, QWienerWeight, WeightFunction

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class IndexValue:
    """An index result: exact integer/rational or float, with a display name."""

    value: Number
    mode: str  # "exact" or "float"
    index_name: str

    def __float__(self) -> float:
        return float(self.value)

    def to_json_value(self) -> Union[str, float]:
        """Exact values serialize as decimal strings to survive JSON consumers."""
        if self.mode == "exact":
            return str(self.value)
        return float(self.value)


def index_from_distribution(
    dist: DistanceDistribution, h: WeightFunction, name: str | None = None
) -> IndexValue:
    """Evaluate sum_k counts[k] * h(k) over a precomputed distribution."""
    if isinstance(h, QWienerWeight) and h.variant == 2 and h.diameter is None:
        h = h.with_diameter(dist.max_distance)
    total: Number = 0
    for k in sorted(dist.counts):
        total += dist.counts[k] * h(k)
    mode = "exact" if h.exact else "float"
    if mode == "float":
        total = float(total)
    return IndexValue(total, mode, name if name is not None else h.description)


def generalized_wiener(g: Graph, h: WeightFunction, name: str | None = None) -> IndexValue:
    """The weighted Wiener index sum h(d(u, v)) over unordered vertex pairs."""
    return index_from_distribution(distance_distribution(g), h, name)


def wiener(g: Graph) -> IndexValue:
    """Classic Wiener index: sum of all pairwise distances."""
    return generalized_wiener(g, PowerWeight(1), name="wiener")


def hyper_wiener(g: Graph) -> IndexValue:
    """Hyper-Wiener index (W^1 + W^2) / 2, as an exact rational."""
    dist = distance_distribution(g)
    w1 = index_from_distribution(dist, PowerWeight(1)).value
    w2 = index_from_distribution(dist, PowerWeight(2)).value
    value = Fraction(w1 + w2, 2)
    if value.denominator == 1:
        value = value.numerator
    return IndexValue(value, "exact", "hyper-wiener")


def harary(g: Graph) -> IndexValue:
    """Harary index: sum of inverse squared distances."""
    return generalized_wiener(g, PowerWeight(-2), name="harary")


def reciprocal_wiener(g: Graph) -> IndexValue:
    """Reciprocal Wiener index: sum of inverse distances."""
    return generalized_wiener(g, PowerWeight(-1), name="reciprocal-wiener")


def q_wiener(g: Graph, q: float, variant: int) -> IndexValue:
    """q-Wiener index, variants 1..3; variant 2 uses the graph's diameter."""
    return generalized_wiener(g, QWienerWeight(q, variant), name=f"q-wiener-{variant}")


def tsz_index(g: Graph) -> IndexValue:
    """Tratch-Stankevich-Zefirov index (2 W^1 + 3 W^2 + W^3) / 6, exact rational."""
    dist = distance_distribution(g)
    w1 = index_from_distribution(dist, PowerWeight(1)).value
    w2 = index_from_distribution(dist, PowerWeight(2)).value
    w3 = index_from_distribution(dist, PowerWeight(3)).value
    value = Fraction(2 * w1 + 3 * w2 + w3, 6)
    if value.denominator == 1:
        value = value.numerator
    return IndexValue(value, "exact", "tsz")
