import re
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Literal, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from utils.logs import logger

from .errors import MonomialError
from .params import CurveParams

Dominant = Literal["x", "y"]

_MONOMIAL_RE = re.compile(r"^(?:x(\d*))?(?:y(\d*))?$")


class Monomial(NamedTuple):
    """x^a y^b"""

    a: int
    b: int

    def __str__(self) -> str:
        if self.a == 0 and self.b == 0:
            return "1"
        return (f"x{self.a}" if self.a else "") + (f"y{self.b}" if self.b else "")

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text == "1":
            return cls(0, 0)
        match = _MONOMIAL_RE.match(text)
        if not text or match is None:
            raise MonomialError(f"bad monomial {text!r}")
        a, b = match.groups()
        return cls(_exponent(a), _exponent(b))

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b


def _exponent(group: Optional[str]) -> int:
    if group is None:
        return 0
    return int(group) if group else 1


class Order(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def weight(m: Monomial, params: CurveParams) -> int:
    return params.weight(m.a, m.b)


def order_key(m: Monomial, params: CurveParams) -> Tuple[int, int]:
    """Sort key of the weighted degree lexicographic order."""
    return params.weight(m.a, m.b), m.b


def order_compare(m1: Monomial, m2: Monomial, params: CurveParams) -> Order:
    k1, k2 = order_key(m1, params), order_key(m2, params)
    if k1 == k2:
        return Order.EQ
    return Order.LT if k1 < k2 else Order.GT


def in_box(m: Monomial, params: CurveParams) -> bool:
    return 0 <= m.a <= params.x_max and 0 <= m.b < params.y_bound


@dataclass(frozen=True)
class MonomialSet:
    """A finite set of monomials attached to a curve's (q, s, u).

    Iteration follows the weighted order, which is the canonical order used
    for generator rows and witness tie-breaking.
    """

    members: FrozenSet[Monomial]
    params: CurveParams

    @classmethod
    def of(cls, params: CurveParams, monomials: Iterable[Sequence[int]]) -> "MonomialSet":
        return cls(frozenset(Monomial(int(a), int(b)) for a, b in monomials), params)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.ordered)

    def __contains__(self, m: object) -> bool:
        return m in self.members

    @cached_property
    def ordered(self) -> List[Monomial]:
        return sorted(self.members, key=lambda m: order_key(m, self.params))

    @cached_property
    def is_decreasing(self) -> bool:
        return all(Monomial(a, b) in self.members for m in self.members for a in range(m.a + 1) for b in range(m.b + 1))

    @cached_property
    def in_box(self) -> bool:
        return all(in_box(m, self.params) for m in self.members)

    def check_box(self) -> None:
        outside = [str(m) for m in self.ordered if not in_box(m, self.params)]
        if outside:
            raise MonomialError(f"monomials outside the box for {self.params}: {', '.join(outside)}")

    def check_decreasing(self) -> None:
        if not self.is_decreasing:
            raise MonomialError("monomial set is not closed under divisibility")

    def shift(self, a: int) -> "MonomialSet":
        return MonomialSet(frozenset(Monomial(m.a + a, m.b) for m in self.members), self.params)

    def union(self, other: "MonomialSet") -> "MonomialSet":
        return MonomialSet(self.members | other.members, self.params)

    def difference(self, other: "MonomialSet") -> "MonomialSet":
        return MonomialSet(self.members - other.members, self.params)

    def issubset(self, other: "MonomialSet") -> bool:
        return self.members <= other.members

    @property
    def min_a(self) -> int:
        return min(m.a for m in self.members)

    def labels(self) -> List[str]:
        return [str(m) for m in self.ordered]

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def is_decreasing(M: MonomialSet) -> bool:
    return M.is_decreasing


def build_box(params: CurveParams) -> MonomialSet:
    return MonomialSet.of(params, ((a, b) for a in range(params.x_max + 1) for b in range(params.y_bound)))


def build_degree_set(params: CurveParams, d: int) -> MonomialSet:
    """Box monomials of total degree at most d."""
    if d < 0:
        raise MonomialError(f"degree {d} is negative")
    return MonomialSet.of(params, ((a, b) for a, b in build_box(params).members if a + b <= d))


def build_onepoint_set(params: CurveParams, lam: int) -> MonomialSet:
    """Box monomials of weight at most lam."""
    if lam < 0:
        raise MonomialError(f"weight bound {lam} is negative")
    return MonomialSet.of(params, ((a, b) for a, b in build_box(params).members if params.weight(a, b) <= lam))


def top_monomial(params: CurveParams) -> Monomial:
    return Monomial(params.x_max, params.y_bound - 1)


def complement_set(M: MonomialSet) -> MonomialSet:
    """{top / m : m in box minus M}."""
    M.check_box()
    top = top_monomial(M.params)
    rest = build_box(M.params).members - M.members
    return MonomialSet(frozenset(Monomial(top.a - m.a, top.b - m.b) for m in rest), M.params)


def footprint_count(
    generators: Iterable[Sequence[int]], params: CurveParams, with_members: bool = False
):
    """Count box monomials divisible by none of the generators.

    Args:
        generators (Iterable[Sequence[int]]): exponent pairs, possibly outside the box
        params (CurveParams): curve parameters fixing the box
        with_members (bool): also return the footprint monomials

    Returns:
        int, or (int, List[Monomial]) when with_members is set
    """
    a_grid, b_grid = np.meshgrid(np.arange(params.x_max + 1), np.arange(params.y_bound), indexing="ij")
    free = np.ones(a_grid.shape, dtype=bool)
    for ga, gb in generators:
        free &= ~((a_grid >= ga) & (b_grid >= gb))
    count = int(free.sum())
    if not with_members:
        return count
    members = sorted((Monomial(int(a), int(b)) for a, b in zip(a_grid[free], b_grid[free])), key=lambda m: order_key(m, params))
    return count, members


def delta_star(N: Iterable[Sequence[int]], params: CurveParams) -> int:
    """Footprint of N together with y^(q^(s-1)) and x^min(a1+u, u(q-1)+1).

    Counted column by column: the a1 columns left of N are full, and column a
    in [a1, v) keeps the cells below the lowest member with x-exponent <= a.
    """
    corners = sorted((int(a), int(b)) for a, b in N)
    if not corners:
        raise MonomialError("delta_star needs a nonempty set")
    height = params.y_bound
    for a, b in corners:
        if not (0 <= a <= params.x_max and 0 <= b < height):
            raise MonomialError(f"{Monomial(a, b)} is outside the box for {params}")
    a1 = corners[0][0]
    v = min(a1 + params.u, params.x_max + 1)
    total = a1 * height
    lowest = height
    i = 0
    for col in range(a1, v):
        while i < len(corners) and corners[i][0] <= col:
            lowest = min(lowest, corners[i][1])
            i += 1
        total += lowest
    return total


@dataclass(frozen=True)
class StaircaseProfile:
    """Corners (a_i, b_i) with a strictly increasing and b strictly decreasing."""

    corners: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.corners:
            raise MonomialError("empty staircase")
        for (a0, b0), (a1, b1) in zip(self.corners, self.corners[1:]):
            if not (a0 < a1 and b0 > b1):
                raise MonomialError(f"corners {self.corners} are not a staircase")

    @classmethod
    def from_monomials(cls, monomials: Iterable[Sequence[int]]) -> "StaircaseProfile":
        return cls(tuple(sorted((int(a), int(b)) for a, b in monomials)))

    def v(self, params: CurveParams) -> int:
        return min(self.corners[0][0] + params.u, params.x_max + 1)


def delta_star_closed_form(profile: StaircaseProfile, params: CurveParams) -> int:
    corners = profile.corners
    a1, a_r, b_r = corners[0][0], corners[-1][0], corners[-1][1]
    if a_r - a1 >= params.u:
        raise MonomialError(f"staircase spans {a_r - a1} >= u={params.u} columns")
    v = profile.v(params)
    total = a1 * params.y_bound + b_r * (v - a1)
    for (a_i, b_i), (a_next, _) in zip(corners, corners[1:]):
        total += (a_next - a_i) * (b_i - b_r)
    return total


def lex_key(m: Monomial, dominant: Dominant) -> Tuple[int, int]:
    """Descending lex key with the dominant variable compared first."""
    return (-m.a, -m.b) if dominant == "x" else (-m.b, -m.a)


def lex_prefix(S: MonomialSet, r: int, dominant: Dominant = "x") -> MonomialSet:
    if not 0 <= r <= len(S):
        raise MonomialError(f"prefix length {r} outside 0..{len(S)}")
    ordered = sorted(S.members, key=lambda m: lex_key(m, dominant))
    return MonomialSet(frozenset(ordered[:r]), S.params)


def shifted_region(params: CurveParams, d: int, a1: int) -> MonomialSet:
    """Degree <= d - a1 part of Delta(y^(q^(s-1)), x^u), cut to the box after shifting by a1."""
    width = min(params.u, params.x_max + 1 - a1)
    return MonomialSet.of(
        params, ((a, b) for a in range(width) for b in range(params.y_bound) if a + b <= d - a1)
    )


def tail_set(params: CurveParams, d: int, a1: int) -> MonomialSet:
    """Box monomials x^a y^b with a1 + u <= a <= d and b <= d - a."""
    return MonomialSet.of(
        params,
        (
            (a, b)
            for a in range(a1 + params.u, min(d, params.x_max) + 1)
            for b in range(min(params.y_bound - 1, d - a) + 1)
        ),
    )


def maxcase_candidate(params: CurveParams, d: int, r: int, a1: int) -> Optional[MonomialSet]:
    """Candidate maximizer with least x-exponent a1 for maximal u.

    Returns None when neither branch applies (d >= a1 + u with r below the
    admissibility threshold).
    """
    if not params.is_maximal:
        raise MonomialError(f"u={params.u} is not maximal for {params}")
    if not 0 <= a1 <= min(d, params.x_max):
        raise MonomialError(f"a1={a1} outside 0..{min(d, params.x_max)}")
    region = shifted_region(params, d, a1)
    if d < a1 + params.u:
        if r > len(region):
            raise MonomialError(f"r={r} exceeds the {len(region)} shifted monomials")
        return lex_prefix(region, r, "y").shift(a1)
    tail = tail_set(params, d, a1)
    formula = (d - a1 - params.u) * (d - a1 - params.u + 1) // 2
    if formula != len(tail):
        logger.debug(f"|T| for a1={a1}, d={d}: enumerated {len(tail)}, closed form {formula}")
    threshold = len(tail) + d - params.y_bound - a1 + 2
    if r < threshold:
        return None
    if r - len(tail) > len(region):
        raise MonomialError(f"r - |T| = {r - len(tail)} exceeds the {len(region)} shifted monomials")
    return lex_prefix(region, r - len(tail), "y").shift(a1).union(tail)
