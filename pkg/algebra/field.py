from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Any, Dict, Literal, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from utils.logs import logger

from .errors import FieldError

FieldElement = galois.FieldArray
ArithOp = Literal["add", "sub", "mul", "div", "pow"]


@lru_cache(maxsize=None)
def default_modulus(p: int, degree: int) -> Tuple[int, ...]:
    """Smallest monic irreducible of the given degree over GF(p).

    Coefficients are compared low-degree-first, so candidates are scanned with
    the constant term as the most significant digit.
    """
    prime_field = galois.GF(p)
    for j in range(p**degree):
        low = [(j // p ** (degree - 1 - i)) % p for i in range(degree)]
        if low[0] == 0:
            continue
        poly = galois.Poly([1] + low[::-1], field=prime_field)
        if poly.is_irreducible():
            return tuple(low) + (1,)
    raise FieldError(f"no irreducible polynomial of degree {degree} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """GF(q^s) with q = p^a, represented as GF(p)[z]/(modulus).

    Elements are ``galois.FieldArray`` values whose integer code is the
    little-endian coefficient tuple read in base p.
    """

    p: int
    a: int
    s: int
    modulus: Tuple[int, ...]
    gf: Any = dc_field(compare=False, repr=False, hash=False)

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def order(self) -> int:
        return self.q**self.s

    @property
    def degree(self) -> int:
        return self.a * self.s

    @property
    def norm_exponent(self) -> int:
        return (self.order - 1) // (self.q - 1)

    def elements(self) -> FieldElement:
        """All q^s elements in canonical (ascending code) order."""
        return self.gf.elements

    def element(self, code: Union[int, Sequence[int]]) -> FieldElement:
        return self.gf(code)

    def from_coefficients(self, coefficients: Sequence[int]) -> FieldElement:
        if len(coefficients) != self.degree or any(not 0 <= c < self.p for c in coefficients):
            raise FieldError(f"expected {self.degree} residues mod {self.p}, got {tuple(coefficients)}")
        return self.gf(sum(c * self.p**i for i, c in enumerate(coefficients)))

    def coefficients(self, x: FieldElement) -> Tuple[int, ...]:
        code = int(x)
        return tuple((code // self.p**i) % self.p for i in range(self.degree))

    def embed_int(self, value: int) -> FieldElement:
        """Image of an integer in the prime subfield."""
        return self.gf(value % self.p)

    def codes(self, x: FieldElement) -> np.ndarray:
        return np.asarray(x.view(np.ndarray), dtype=np.int64)

    @cached_property
    def subfield(self) -> FieldElement:
        """GF(q), the fixed field of the q-power Frobenius."""
        els = self.elements()
        return els[els**self.q == els]

    @cached_property
    def trace_table(self) -> np.ndarray:
        return self.codes(trace(self, self.elements()))

    @cached_property
    def norm_table(self) -> np.ndarray:
        return self.codes(norm(self, self.elements()))

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "a": self.a, "s": self.s, "modulus": list(self.modulus)}


def build_extension(p: int, a: int, s: int, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build GF(p^(a*s)).

    Args:
        p (int): characteristic
        a (int): q = p^a
        s (int): extension degree over GF(q), at least 2
        modulus (Optional[Sequence[int]]): little-endian coefficients of a monic
            irreducible of degree a*s over GF(p); the default is the smallest one

    Returns:
        FieldSpec: the field description
    """
    if not galois.is_prime(p):
        logger.error(f"characteristic {p} is not prime")
        raise FieldError(f"p={p} is not prime")
    if a < 1 or s < 2:
        raise FieldError(f"need a >= 1 and s >= 2, got a={a}, s={s}")
    degree = a * s
    if modulus is None:
        coeffs = default_modulus(p, degree)
    else:
        coeffs = tuple(int(c) for c in modulus)
        if len(coeffs) != degree + 1 or coeffs[-1] != 1 or any(not 0 <= c < p for c in coeffs):
            raise FieldError(f"modulus {coeffs} is not monic of degree {degree} over GF({p})")
    poly = galois.Poly(list(coeffs[::-1]), field=galois.GF(p))
    if not poly.is_irreducible():
        logger.error(f"modulus {poly} is reducible over GF({p})")
        raise FieldError(f"modulus {coeffs} is reducible over GF({p})")
    gf = galois.GF(p**degree, irreducible_poly=poly)
    return FieldSpec(p=p, a=a, s=s, modulus=coeffs, gf=gf)


def field_arith(x: FieldElement, y: Union[FieldElement, int], op: ArithOp) -> FieldElement:
    if not isinstance(x, galois.FieldArray):
        raise FieldError(f"left operand {x!r} is not a field element")
    if op == "pow":
        exponent = int(y)
        if exponent < 0:
            if np.any(x == 0):
                raise FieldError("negative power of zero")
            return (type(x).Ones(x.shape) / x) ** (-exponent)
        return x**exponent
    if not isinstance(y, galois.FieldArray) or type(x) is not type(y):
        raise FieldError("operands belong to different fields")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if np.any(y == 0):
            raise FieldError("division by zero")
        return x / y
    raise FieldError(f"unknown operation {op}")


def frobenius(field: FieldSpec, x: FieldElement, times: int = 1) -> FieldElement:
    return x ** (field.q ** (times % field.s))


def trace(field: FieldSpec, beta: FieldElement) -> FieldElement:
    """Relative trace GF(q^s) -> GF(q): sum of the s Frobenius conjugates."""
    total = beta.copy()
    conj = beta
    for _ in range(field.s - 1):
        conj = conj**field.q
        total = total + conj
    return total


def norm(field: FieldSpec, alpha: FieldElement) -> FieldElement:
    return alpha**field.norm_exponent


def split_prime_power(q: int) -> Tuple[int, int]:
    """(p, a) with q = p^a."""
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"q={q} is not a prime power")
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])
