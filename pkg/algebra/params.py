from dataclasses import dataclass

import galois

from utils.logs import logger

from .errors import CurveError


@dataclass(frozen=True)
class CurveParams:
    """The triple (q, s, u) of an extended norm-trace curve x^u = Tr(y)."""

    q: int
    s: int
    u: int

    def __post_init__(self):
        if self.q < 2 or not galois.is_prime_power(self.q):
            raise CurveError(f"q={self.q} is not a prime power")
        if self.s < 2:
            raise CurveError(f"s={self.s} must be at least 2")
        if self.u < 1 or self.u_max % self.u:
            logger.error(f"u={self.u} does not divide {self.u_max}")
            raise CurveError(f"u={self.u} does not divide (q^s-1)/(q-1)={self.u_max}")

    @property
    def u_max(self) -> int:
        return (self.q**self.s - 1) // (self.q - 1)

    @property
    def is_maximal(self) -> bool:
        return self.u == self.u_max

    @property
    def y_bound(self) -> int:
        """q^(s-1): y-exponents stay below it."""
        return self.q ** (self.s - 1)

    @property
    def x_max(self) -> int:
        """u(q-1): largest x-exponent in the box."""
        return self.u * (self.q - 1)

    @property
    def n(self) -> int:
        return self.x_max * self.y_bound + self.y_bound

    @property
    def genus(self) -> int:
        return (self.u - 1) * (self.q**self.s - 1) // 2

    @property
    def max_degree(self) -> int:
        return self.x_max + self.y_bound - 1

    def weight(self, a: int, b: int) -> int:
        return a * self.y_bound + self.u * b

    def __str__(self) -> str:
        return f"q{self.q}s{self.s}u{self.u}"
