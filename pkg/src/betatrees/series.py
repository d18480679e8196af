"""Exact truncated bivariate power series and the census identities.

Series carry exact integers, truncated at a fixed maximal x-degree with all
y-degrees kept.  Censuses of trees and of fixed trees (refined by root
label) feed four identity checks: the classical quadratic for the tree
census, the equation linking the two censuses, the algebraic equations
satisfied by the fixed-tree census, and the link to ternary trees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .fixed_points import iter_fixed
from .tree import GENERATION_BUDGET, iter_trees


@dataclass(frozen=True)
class SeriesConvention:
    """Bookkeeping for the tree census: where the single-node tree is tallied.

    The one-node tree counts once at y-degree 0 (and not at its root label
    1), which makes the census identities below come out without case splits.
    """

    single_node_y_degree: int = 0


DEFAULT_CONVENTION = SeriesConvention()


@dataclass(frozen=True)
class TruncatedBiSeries:
    """A polynomial in x and y, exact in y, truncated beyond ``order`` in x."""

    order: int
    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {
            key: value
            for key, value in self.coeffs.items()
            if value != 0 and key[0] <= self.order
        }
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "TruncatedBiSeries":
        return TruncatedBiSeries(order, {})

    @staticmethod
    def one(order: int) -> "TruncatedBiSeries":
        return TruncatedBiSeries(order, {(0, 0): 1})

    @staticmethod
    def x(order: int) -> "TruncatedBiSeries":
        return TruncatedBiSeries(order, {(1, 0): 1})

    @staticmethod
    def y(order: int) -> "TruncatedBiSeries":
        return TruncatedBiSeries(order, {(0, 1): 1})

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "TruncatedBiSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        self._check(other)
        total = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total[key] = total.get(key, 0) + value
        return TruncatedBiSeries(self.order, total)

    def __sub__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedBiSeries":
        return TruncatedBiSeries(self.order, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        self._check(other)
        total: dict[tuple[int, int], int] = {}
        for (n1, k1), c1 in self.coeffs.items():
            for (n2, k2), c2 in other.coeffs.items():
                n = n1 + n2
                if n > self.order:
                    continue
                key = (n, k1 + k2)
                total[key] = total.get(key, 0) + c1 * c2
        return TruncatedBiSeries(self.order, total)

    def scale(self, factor: int) -> "TruncatedBiSeries":
        return TruncatedBiSeries(
            self.order, {k: factor * v for k, v in self.coeffs.items()}
        )

    def substitute_y1(self) -> "TruncatedBiSeries":
        """Set y = 1, collapsing each x-degree to a single coefficient."""
        total: dict[tuple[int, int], int] = {}
        for (n, _), value in self.coeffs.items():
            key = (n, 0)
            total[key] = total.get(key, 0) + value
        return TruncatedBiSeries(self.order, total)

    def inverse(self) -> "TruncatedBiSeries":
        """Multiplicative inverse for series with constant term +-1.

        Every other term must carry a positive x-degree, so the geometric
        expansion terminates at the truncation order.
        """
        constant = self.coeffs.get((0, 0), 0)
        if constant not in (1, -1):
            raise ValueError("inverse requires constant term +1 or -1")
        if any(n == 0 and k != 0 for (n, k) in self.coeffs):
            raise ValueError("inverse requires x-degree >= 1 beyond the constant")
        tail = TruncatedBiSeries(self.order, dict(self.coeffs)) - TruncatedBiSeries(
            self.order, {(0, 0): constant}
        )
        minus_ratio = tail.scale(-constant)
        result = TruncatedBiSeries.one(self.order)
        power = TruncatedBiSeries.one(self.order)
        for _ in range(self.order):
            power = power * minus_ratio
            if not power.coeffs:
                break
            result = result + power
        return result.scale(constant)

    # -- queries -----------------------------------------------------------

    def coefficient(self, n: int, k: int = 0) -> int:
        return self.coeffs.get((n, k), 0)

    def is_zero(self) -> bool:
        return not self.coeffs


def first_nonzero(series: TruncatedBiSeries) -> tuple[tuple[int, int], int] | None:
    """The lexicographically first nonzero coefficient, or ``None``."""
    if series.is_zero():
        return None
    key = min(series.coeffs)
    return key, series.coeffs[key]


# ---------------------------------------------------------------------------
# Censuses and reference series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def tree_census(
    order: int, convention: SeriesConvention = DEFAULT_CONVENTION
) -> TruncatedBiSeries:
    """Coefficient of x^n y^k counts valid trees with n nodes and root label k.

    The single-node tree is tallied at the convention's y-degree.
    """
    if order > GENERATION_BUDGET:
        raise ValueError(
            f"census order {order} exceeds the generation budget {GENERATION_BUDGET}"
        )
    counts: dict[tuple[int, int], int] = {}
    for n in range(1, order + 1):
        for tree in iter_trees(n):
            k = convention.single_node_y_degree if n == 1 else tree.label
            counts[(n, k)] = counts.get((n, k), 0) + 1
    return TruncatedBiSeries(order, counts)


#: Largest order of the fixed-tree census (fixed trees up to 20 nodes).
FIXED_CENSUS_BUDGET = 10


@lru_cache(maxsize=None)
def fixed_point_census(order: int) -> TruncatedBiSeries:
    """Coefficient of x^n y^k counts fixed trees with 2n nodes and root label k."""
    if order > FIXED_CENSUS_BUDGET:
        raise ValueError(
            f"fixed census order {order} exceeds the budget {FIXED_CENSUS_BUDGET}"
        )
    counts: dict[tuple[int, int], int] = {}
    for n in range(1, order + 1):
        for tree in iter_fixed(2 * n):
            key = (n, tree.label)
            counts[key] = counts.get(key, 0) + 1
    return TruncatedBiSeries(order, counts)


def fixed_point_series(order: int) -> TruncatedBiSeries:
    """Closed-form counting series: coefficient of x^n is comb(3n-2, n-1)/n.

    This is the Lagrange-inversion solution of w(1 - w)^2 = x.
    """
    coeffs = {}
    for n in range(1, order + 1):
        numerator = math.comb(3 * n - 2, n - 1)
        assert numerator % n == 0
        coeffs[(n, 0)] = numerator // n
    return TruncatedBiSeries(order, coeffs)


def ternary_tree_series(order: int) -> TruncatedBiSeries:
    """Counting series of ternary trees: the solution of T = 1 + x T^3."""
    x = TruncatedBiSeries.x(order)
    one = TruncatedBiSeries.one(order)
    t = one
    for _ in range(order + 1):
        t = one + x * t * t * t
    return t


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

def _tilde_b_bivariate(order: int) -> TruncatedBiSeries:
    """(tree census - x) * y: drops the single-node term, shifts y by one."""
    census = tree_census(order)
    return (census - TruncatedBiSeries.x(order)) * TruncatedBiSeries.y(order)


def _tilde_b_univariate(order: int) -> TruncatedBiSeries:
    """w^2 (1 - 2w) with w the closed-form counting series."""
    w = fixed_point_series(order)
    one = TruncatedBiSeries.one(order)
    return w * w * (one - w.scale(2))


def b_quadratic_residual(order: int) -> TruncatedBiSeries:
    """Residual of the quadratic functional equation for the tree census."""
    x = TruncatedBiSeries.x(order)
    y = TruncatedBiSeries.y(order)
    one = TruncatedBiSeries.one(order)
    bt = _tilde_b_bivariate(order)
    bt1 = _tilde_b_univariate(order)
    linear = one - y + x * y * y - y * bt1
    constant = x * y * y * (bt1 + x * (one - y))
    return bt * bt + linear * bt - constant


def verify_b_quadratic(order: int) -> bool:
    return b_quadratic_residual(order).is_zero()


def _shifted_geometric(series: TruncatedBiSeries, low: int = 2) -> TruncatedBiSeries:
    """Replace each x^n y^k term by x^n (y^low + ... + y^(k + low - 1)).

    This is the divided difference (f(x,y) - f(x,1)) / (y - 1) times y^low,
    computed combinatorially so no division at y = 1 is involved.
    """
    total: dict[tuple[int, int], int] = {}
    for (n, k), value in series.coeffs.items():
        for j in range(low, k + low):
            key = (n, j)
            total[key] = total.get(key, 0) + value
    return TruncatedBiSeries(series.order, total)


def ab_link_residual(order: int) -> TruncatedBiSeries:
    """Residual of the equation linking the fixed census to the tree census."""
    a = fixed_point_census(order)
    b = tree_census(order)
    y = TruncatedBiSeries.y(order)
    return a - (y * b + b * _shifted_geometric(a))


def verify_ab_link(order: int) -> bool:
    return ab_link_residual(order).is_zero()


def a_quadratic_residual(order: int) -> TruncatedBiSeries:
    """Residual of the quadratic equation satisfied by the fixed census."""
    a2 = fixed_point_census(order)
    a1 = a2.substitute_y1()
    y = TruncatedBiSeries.y(order)
    one = TruncatedBiSeries.one(order)
    lead = y * a1.scale(2) - one
    mid = y * a1 * a1.scale(3) - y * a1.scale(3) + one
    tail = y * a1 * a1 * a1 - y * a1 * a1.scale(2) + y * a1
    return lead * a2 * a2 - mid * a2 + tail


def a_cubic_residual(order: int) -> TruncatedBiSeries:
    """Residual of w(1 - w)^2 = x for the fixed census at y = 1."""
    a1 = fixed_point_census(order).substitute_y1()
    one = TruncatedBiSeries.one(order)
    return a1 * (one - a1) * (one - a1) - TruncatedBiSeries.x(order)


def verify_a_algebraic(order: int) -> bool:
    """Quadratic refined equation, cubic at y = 1, and the closed form agree."""
    closed = fixed_point_series(order)
    a1 = fixed_point_census(order).substitute_y1()
    return (
        a_quadratic_residual(order).is_zero()
        and a_cubic_residual(order).is_zero()
        and a1 == closed
    )


def ternary_link_residual(order: int) -> TruncatedBiSeries:
    """Residual of (closed-form series) = x * T(x)^2."""
    t = ternary_tree_series(order)
    x = TruncatedBiSeries.x(order)
    return fixed_point_series(order) - x * t * t


def verify_ternary_link(order: int) -> bool:
    return ternary_link_residual(order).is_zero()
