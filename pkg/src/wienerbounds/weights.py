"""Weight functions on positive integer distances.

A weight function h maps each distance k >= 1 to a real number; summing
h(d(u, v)) over unordered vertex pairs yields the whole family of
distance-based indices handled here (plain/powered Wiener, Harary,
q-bracket variants, arbitrary finite tables).

Power weights with a non-negative integer exponent evaluate in exact
integer arithmetic; every other variant evaluates in double precision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, float, Fraction]


class WeightError(ValueError):
    """Invalid weight construction, spec string, or evaluation point."""


class Monotonicity(enum.Enum):
    STRICTLY_INCREASING = "strictly-increasing"
    STRICTLY_DECREASING = "strictly-decreasing"
    NEITHER = "neither"


def q_bracket(q: float, k: int) -> float:
    """The q-analogue of k: (1 - q^k) / (1 - q) = 1 + q + ... + q^(k-1)."""
    return (1.0 - q**k) / (1.0 - q)


class WeightFunction:
    """Base class; subclasses are immutable and evaluate via ``__call__``."""

    exact: bool = False

    def __call__(self, k: int) -> Number:
        raise NotImplementedError

    @property
    def description(self) -> str:
        raise NotImplementedError

    def _check_k(self, k: int) -> None:
        if not isinstance(k, int) or k < 1:
            raise WeightError(f"weight functions are defined for integer k >= 1, got {k!r}")


@dataclass(frozen=True)
class PowerWeight(WeightFunction):
    """h(k) = k**exponent.  Exact integers when the exponent is an int >= 0."""

    exponent: Union[int, float]

    @property
    def exact(self) -> bool:  # type: ignore[override]
        return isinstance(self.exponent, int) and self.exponent >= 0

    def __call__(self, k: int) -> Number:
        self._check_k(k)
        if self.exact:
            return k**self.exponent
        return float(k) ** self.exponent

    @property
    def description(self) -> str:
        return f"power:{self.exponent}"


@dataclass(frozen=True)
class QWienerWeight(WeightFunction):
    """q-bracket kernels, for q > 0, q != 1.

    variant 1: [k]_q
    variant 2: [k]_q * q^(L - k), where L is a fixed graph diameter
    variant 3: [k]_q * q^k
    """

    q: float
    variant: int = 1
    diameter: int | None = None

    def __post_init__(self):
        if not (self.q > 0) or self.q == 1:
            raise WeightError(f"q must be positive and != 1, got {self.q}")
        if self.variant not in (1, 2, 3):
            raise WeightError(f"variant must be 1, 2 or 3, got {self.variant}")
        if self.variant != 2 and self.diameter is not None:
            raise WeightError("only variant 2 takes a diameter")

    def with_diameter(self, diameter: int) -> "QWienerWeight":
        if self.variant != 2:
            raise WeightError("only variant 2 takes a diameter")
        return QWienerWeight(self.q, 2, diameter)

    def __call__(self, k: int) -> float:
        self._check_k(k)
        bracket = q_bracket(self.q, k)
        if self.variant == 1:
            return bracket
        if self.variant == 3:
            return bracket * self.q**k
        if self.diameter is None:
            raise WeightError(
                "variant 2 needs the graph diameter; call with_diameter(L) first"
            )
        return bracket * self.q ** (self.diameter - k)

    @property
    def description(self) -> str:
        if self.variant == 2 and self.diameter is not None:
            return f"q2:{self.q}:{self.diameter}"
        return f"q{self.variant}:{self.q}"


@dataclass(frozen=True)
class TableWeight(WeightFunction):
    """Explicit value table for k = 1..len(values); evaluation beyond it errors."""

    values: tuple[float, ...]

    def __post_init__(self):
        if not self.values:
            raise WeightError("table weight needs at least one value")

    def __call__(self, k: int) -> float:
        self._check_k(k)
        if k > len(self.values):
            raise WeightError(
                f"table weight covers k = 1..{len(self.values)}, got k={k}"
            )
        return self.values[k - 1]

    @property
    def description(self) -> str:
        return "table:" + ",".join(repr(v) for v in self.values)


def classify_monotonicity(h: WeightFunction, max_distance: int) -> Monotonicity:
    """Exact monotonicity class of h on the finite domain 1..max_distance."""
    if max_distance < 2:
        raise WeightError(f"need max_distance >= 2 to classify, got {max_distance}")
    values = [h(k) for k in range(1, max_distance + 1)]
    if all(a < b for a, b in zip(values, values[1:])):
        return Monotonicity.STRICTLY_INCREASING
    if all(a > b for a, b in zip(values, values[1:])):
        return Monotonicity.STRICTLY_DECREASING
    return Monotonicity.NEITHER


def _parse_number(text: str) -> Union[int, float]:
    """Parse a decimal literal, preserving int-ness ('2' -> 2, '2.0' -> 2.0)."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise WeightError(f"bad numeric literal {text!r}") from None


def parse_weight_spec(spec: str) -> WeightFunction:
    """Parse a CLI weight spec.

    Grammar: ``power:E``, ``q1:Q``, ``q2:Q`` (diameter filled per graph),
    ``q2:Q:L`` (explicit diameter), ``q3:Q``, ``table:v1,v2,...``.
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise WeightError(f"weight spec {spec!r} needs a ':', e.g. 'power:1'")
    if kind == "power":
        return PowerWeight(_parse_number(rest))
    if kind in ("q1", "q2", "q3"):
        variant = int(kind[1])
        parts = rest.split(":")
        q = float(_parse_number(parts[0]))
        if len(parts) == 1:
            return QWienerWeight(q, variant)
        if len(parts) == 2 and variant == 2:
            return QWienerWeight(q, 2, int(parts[1]))
        raise WeightError(f"bad q-weight spec {spec!r}")
    if kind == "table":
        try:
            values = tuple(float(v) for v in rest.split(","))
        except ValueError:
            raise WeightError(f"bad table values in {spec!r}") from None
        return TableWeight(values)
    raise WeightError(
        f"unknown weight kind {kind!r}; expected power, q1, q2, q3 or table"
    )
