"""Closed-form resistances on straight and bent linear 2-trees.

Conventions: the straight strip on n = m+2 vertices has m triangles; the
pair (j, j+k) needs 1 <= j and j+k <= n. All values are exact Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .fib import fib, lucas


@dataclass(frozen=True)
class StraightParams:
    """Strip size and terminal pair: m triangles, terminals j and j+k."""

    m: int
    j: int
    k: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.j < 1:
            raise ValueError(f"j must be >= 1, got {self.j}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.j + self.k > self.m + 2:
            raise ValueError(
                f"j+k must be <= n = {self.m + 2}, got j={self.j}, k={self.k}"
            )

    @property
    def n(self):
        return self.m + 2

    @property
    def pair(self):
        return (self.j, self.j + self.k)


def r_sum(m: int, j: int, k: int) -> Fraction:
    """r(j, j+k) on the straight strip, summation form."""
    StraightParams(m, j, k)
    total = 0
    for i in range(1, k + 1):
        coeff = fib(i) * fib(i + 2 * j - 2) - fib(i - 1) * fib(i + 2 * j - 3)
        total += coeff * fib(2 * m - 2 * i - 2 * j + 5)
    return Fraction(total, fib(2 * m + 2))


def _closed_numerator(m, j, k):
    bracket = fib(m - k) * (k * lucas(k) - fib(k)) + fib(m - k + 1) * (
        (k - 5) * fib(k + 1) + (2 * k + 2) * fib(k)
    )
    fifth = fib(m + 1) * bracket
    if fifth % 5 != 0:
        raise AssertionError(
            f"closed-form bracket not divisible by 5 at (m={m}, j={j}, k={k})"
        )
    return fib(m + 1) ** 2 + fib(k) ** 2 * fib(m - 2 * j - k + 3) ** 2 + fifth // 5


def r_closed(m: int, j: int, k: int) -> Fraction:
    """r(j, j+k) on the straight strip, closed form (no summation)."""
    StraightParams(m, j, k)
    return Fraction(_closed_numerator(m, j, k), fib(2 * m + 2))


def r_endpoints(m: int) -> Fraction:
    """r(1, n) on the straight strip, asserting both printed forms agree."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    total = Fraction(2 * fib(m + 1) ** 2, lucas(m + 1) * lucas(m))
    for i in range(1, m):
        total += Fraction(fib(i) * fib(i + 1), lucas(i) * lucas(i + 1))
    closed = Fraction(m + 1, 5) + Fraction(4 * fib(m + 1), 5 * lucas(m + 1))
    if total != closed:
        raise AssertionError(f"endpoint forms disagree at m={m}: {total} vs {closed}")
    return closed


class StripWeights(NamedTuple):
    s: Fraction
    b: Fraction
    t: Fraction


def sbt(i: int, p: int) -> StripWeights:
    """Star weights after step i of reducing a strip whose first side
    carries F_{2p+1}/F_{2p+2} (p = 0 is the plain unit strip)."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    den = fib(2 * i + 2 * p + 2)
    s = Fraction(fib(i) * fib(i + 2 * p), den)
    b = Fraction(fib(i + 1) * fib(i + 2 * p + 1), den)
    t = Fraction(
        fib(i) * fib(i + 1) * fib(i + 2 * p) * fib(i + 2 * p + 1),
        fib(2 * i + 2 * p) * den,
    )
    return StripWeights(s, b, t)


def r_diff(m: int, j: int, k: int) -> Fraction:
    """r(j, j+k+1) - r(j, j+k) on the straight strip, closed form."""
    StraightParams(m, j, k)
    StraightParams(m, j, k + 1)
    coeff = fib(k + 1) * fib(2 * j + k - 1) - fib(k) * fib(2 * j + k - 2)
    return Fraction(coeff * fib(2 * m - 2 * j - 2 * k + 3), fib(2 * m + 2))


def spanning_closed(m: int) -> int:
    """Spanning trees of the straight strip with m triangles: F_{2m+2}."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return fib(2 * m + 2)


def forest_closed(m: int, j: int, k: int) -> int:
    """Spanning 2-forests separating j from j+k on the straight strip.

    Computes the summation form and the closed form and asserts they agree.
    """
    StraightParams(m, j, k)
    total = 0
    for i in range(1, k + 1):
        coeff = fib(i) * fib(i + 2 * j - 2) - fib(i - 1) * fib(i + 2 * j - 3)
        total += coeff * fib(2 * m - 2 * i - 2 * j + 5)
    closed = _closed_numerator(m, j, k)
    if total != closed:
        raise AssertionError(
            f"forest count forms disagree at (m={m}, j={j}, k={k}): {total} vs {closed}"
        )
    return closed


def min_resistance(n: int):
    """Minimum resistance over edges of the straight strip on n vertices.

    Returns (value, edges): the central edge for even n, the two tied
    central edges for odd n. The value tends to 1/sqrt(5).
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if n % 2 == 0:
        j = n // 2
        value = Fraction(fib(n - 1), lucas(n - 1))
        return value, ((j, j + 1),)
    value = Fraction(fib(n - 1) ** 2 + 1, fib(2 * n - 2))
    lo = (n - 1) // 2
    return value, ((lo, lo + 1), (lo + 1, lo + 2))


# === Bent strip endpoint formula ===
#
# The source expression juxtaposes two fractions with no operator between
# them. Interpreted as a dropped "+", it matches the determinant oracle on
# every bent strip with 5..15 triangles and every bend position; interpreted
# as a product it matches none of them. bent_reading_evidence() regenerates
# that comparison; the verify suite prints it.

BENT_READING = "additive"


def _bent_correction(m, k):
    total = 0
    for j in range(3, k + 1):
        total += (-1) ** j * fib(m - 2 * j + 3) * (
            fib(m + 2) + fib(j - 2) * fib(m - j + 1)
        )
    return Fraction(total, fib(2 * m + 2))


def r_bent(m: int, bend_k: int, reading: str = None) -> Fraction:
    """r(1, n) on the bent strip with m triangles and bend at bend_k."""
    if m < 4:
        raise ValueError(f"bent strip needs m >= 4, got {m}")
    if not (3 <= bend_k <= m - 1):
        raise ValueError(f"bend_k must be in [3, {m - 1}], got {bend_k}")
    reading = BENT_READING if reading is None else reading
    head = Fraction(m + 1, 5)
    tail = Fraction(4 * fib(m + 1), 5 * lucas(m + 1))
    corr = _bent_correction(m, bend_k)
    if reading == "additive":
        return head + tail + corr
    if reading == "product":
        return head + tail * corr
    raise ValueError(f"unknown reading {reading!r}")


def bent_reading_evidence(m_lo: int = 5, m_hi: int = 15):
    """Compare both readings of the bent endpoint formula against the
    determinant oracle. Returns rows of
    (m, bend_k, oracle, additive, product, additive_ok, product_ok)."""
    from .engine import resistance_det
    from .graphs import bent_linear_2tree

    rows = []
    for m in range(m_lo, m_hi + 1):
        n = m + 2
        for k in range(3, n - 2):
            oracle = resistance_det(bent_linear_2tree(n, k), 1, n).value
            add = r_bent(m, k, reading="additive")
            prod = r_bent(m, k, reading="product")
            rows.append((m, k, oracle, add, prod, add == oracle, prod == oracle))
    return rows
