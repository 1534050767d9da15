from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.logs import logger

from .curve import CurveInstance
from .errors import BudgetExceededError, CodeError
from .field import FieldElement, FieldSpec
from .monomial import Monomial, MonomialSet, build_degree_set, complement_set, order_key
from .params import CurveParams

MESSAGE_CHUNK = 1 << 15


def _powers(values: FieldElement, count: int) -> FieldElement:
    """Matrix of values[i] ** e for e < count."""
    out = type(values).Ones((len(values), count))
    for e in range(1, count):
        out[:, e] = out[:, e - 1] * values
    return out


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Bivariate polynomial stored as a dense grid, coeffs[a, b] for x^a y^b."""

    field: FieldSpec
    coeffs: FieldElement

    @classmethod
    def constant(cls, field: FieldSpec, value: int = 1) -> "Polynomial":
        return cls(field, field.gf([[value]]))

    @classmethod
    def monomial(cls, field: FieldSpec, m: Monomial, value: int = 1) -> "Polynomial":
        coeffs = field.gf.Zeros((m.a + 1, m.b + 1))
        coeffs[m.a, m.b] = value
        return cls(field, coeffs)

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: Dict[Monomial, int]) -> "Polynomial":
        if not terms:
            return cls.constant(field, 0)
        coeffs = field.gf.Zeros((max(m.a for m in terms) + 1, max(m.b for m in terms) + 1))
        for m, c in terms.items():
            coeffs[m.a, m.b] = c
        return cls(field, coeffs)

    @classmethod
    def x_minus(cls, field: FieldSpec, alpha: int) -> "Polynomial":
        coeffs = field.gf.Zeros((2, 1))
        coeffs[0, 0] = -field.gf(alpha)
        coeffs[1, 0] = 1
        return cls(field, coeffs)

    @classmethod
    def y_minus(cls, field: FieldSpec, beta: int) -> "Polynomial":
        coeffs = field.gf.Zeros((1, 2))
        coeffs[0, 0] = -field.gf(beta)
        coeffs[0, 1] = 1
        return cls(field, coeffs)

    @property
    def terms(self) -> Dict[Monomial, int]:
        a_idx, b_idx = np.nonzero(self.coeffs.view(np.ndarray))
        return {Monomial(int(a), int(b)): int(self.coeffs[a, b]) for a, b in zip(a_idx, b_idx)}

    def is_zero(self) -> bool:
        return not np.any(self.coeffs.view(np.ndarray))

    def _padded(self, shape: Tuple[int, int]) -> FieldElement:
        out = self.field.gf.Zeros(shape)
        out[: self.coeffs.shape[0], : self.coeffs.shape[1]] = self.coeffs
        return out

    def __add__(self, other: "Polynomial") -> "Polynomial":
        shape = tuple(max(i, j) for i, j in zip(self.coeffs.shape, other.coeffs.shape))
        return Polynomial(self.field, self._padded(shape) + other._padded(shape))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, -self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(self.field, self.coeffs * self.field.gf(other))
        rows, cols = self.coeffs.shape
        out = self.field.gf.Zeros((rows + other.coeffs.shape[0] - 1, cols + other.coeffs.shape[1] - 1))
        for m, c in other.terms.items():
            window = out[m.a : m.a + rows, m.b : m.b + cols]
            out[m.a : m.a + rows, m.b : m.b + cols] = window + self.coeffs * self.field.gf(c)
        return Polynomial(self.field, out)

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, curve: CurveInstance) -> FieldElement:
        rows, cols = self.coeffs.shape
        partial = _powers(curve.x, rows) @ self.coeffs
        return (partial * _powers(curve.y, cols)) @ self.field.gf.Ones(cols)

    def initial(self, params: CurveParams) -> Monomial:
        """Greatest term under the weighted order."""
        if self.is_zero():
            raise CodeError("the zero polynomial has no initial monomial")
        return max(self.terms, key=lambda m: order_key(m, params))


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Linear code over GF(q^s) given by generator rows."""

    field: FieldSpec
    generator: FieldElement
    monomial_basis: Optional[MonomialSet] = None
    twist: Optional[FieldElement] = None

    @property
    def length(self) -> int:
        return self.generator.shape[1]

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    def to_json(self) -> List[List[int]]:
        return self.field.codes(self.generator).tolist()


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, field.gf.Zeros((0, n)))


def evaluate_monomials(field: FieldSpec, xs: FieldElement, ys: FieldElement, monomials: Sequence[Monomial]) -> FieldElement:
    x_pows = _powers(xs, max(m.a for m in monomials) + 1)
    y_pows = _powers(ys, max(m.b for m in monomials) + 1)
    return x_pows[:, [m.a for m in monomials]].T * y_pows[:, [m.b for m in monomials]].T


def evaluate_code(curve: CurveInstance, M: MonomialSet) -> LinearCode:
    """ev(L(M)): one row per monomial, in the weighted order."""
    if not len(M):
        raise CodeError("cannot evaluate an empty monomial set")
    M.check_box()
    generator = evaluate_monomials(curve.field, curve.x, curve.y, M.ordered)
    return LinearCode(curve.field, generator, monomial_basis=M)


def code_rank(C: Union[LinearCode, FieldElement]) -> int:
    matrix = C.generator if isinstance(C, LinearCode) else C
    if matrix.shape[0] == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def row_space(C: Union[LinearCode, FieldElement]) -> np.ndarray:
    """Nonzero rows of the reduced row echelon form, as element codes."""
    matrix = C.generator if isinstance(C, LinearCode) else C
    if matrix.shape[0] == 0:
        return np.zeros((0, matrix.shape[1]), dtype=np.int64)
    reduced = matrix.row_reduce().view(np.ndarray)
    return np.asarray(reduced[np.any(reduced != 0, axis=1)], dtype=np.int64)


def row_space_equal(C1: LinearCode, C2: LinearCode) -> bool:
    r1, r2 = row_space(C1), row_space(C2)
    return r1.shape == r2.shape and bool(np.array_equal(r1, r2))


def min_weight_bruteforce(C: LinearCode, budget: int = 2**27, threads: int = 1) -> int:
    """Minimum weight over all nonzero codewords.

    Messages are enumerated up to scalars (leading nonzero entry equal to 1),
    in chunks that may run on several threads.
    """
    k, _ = C.generator.shape
    if k == 0:
        raise CodeError("the zero code has no nonzero codeword")
    Q = C.field.order
    if Q**k > budget:
        logger.warning(f"min weight of a dimension-{k} code over GF({Q}) exceeds budget {budget}")
        raise BudgetExceededError("codewords", Q**k, budget)

    tasks = []
    for lead in range(k):
        count = Q ** (k - 1 - lead)
        tasks.extend((lead, start, min(count, start + MESSAGE_CHUNK)) for start in range(0, count, MESSAGE_CHUNK))

    def chunk_min(task: Tuple[int, int, int]) -> int:
        lead, start, stop = task
        index = np.arange(start, stop, dtype=np.int64)
        messages = np.zeros((len(index), k), dtype=np.int64)
        messages[:, lead] = 1
        for j in range(k - 1 - lead):
            messages[:, lead + 1 + j] = (index // Q**j) % Q
        words = C.field.gf(messages) @ C.generator
        return int(np.min(np.count_nonzero(words.view(np.ndarray), axis=1)))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return min(pool.map(chunk_min, tasks))
    return min(map(chunk_min, tasks))


def dual_twist(curve: CurveInstance) -> FieldElement:
    """u^-1 where the x-coordinate is nonzero, 1 elsewhere."""
    twist = curve.field.gf.Ones(curve.n)
    twist[curve.x != 0] = curve.field.gf(1) / curve.field.embed_int(curve.u)
    return twist


def dual_structural(curve: CurveInstance, M: MonomialSet) -> LinearCode:
    """ev(M)^perp as the twisted evaluation code of the complement set."""
    M.check_decreasing()
    complement = complement_set(M)
    if not len(complement):
        return zero_code(curve.field, curve.n)
    twist = dual_twist(curve)
    generator = evaluate_code(curve, complement).generator * twist
    return LinearCode(curve.field, generator, monomial_basis=complement, twist=twist)


def dual_nullspace(C: LinearCode) -> LinearCode:
    n = C.length
    rank = code_rank(C)
    if rank == 0:
        return LinearCode(C.field, C.field.gf.Identity(n))
    if rank == n:
        return zero_code(C.field, n)
    return LinearCode(C.field, C.generator.null_space())


def cartesian_code(field: FieldSpec, params: CurveParams, d: int) -> LinearCode:
    """Affine Cartesian code of degree d on Z1 x Z2 (canonical element prefixes)."""
    width, height = params.x_max + 1, params.y_bound
    if width > field.order or height > field.order:
        raise CodeError(f"grid {width}x{height} does not fit in GF({field.order})")
    xs = field.gf(np.repeat(np.arange(width), height))
    ys = field.gf(np.tile(np.arange(height), width))
    M = build_degree_set(params, d)
    return LinearCode(field, evaluate_monomials(field, xs, ys, M.ordered), monomial_basis=M)
