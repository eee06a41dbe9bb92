"""
Exact linear algebra for the oracle.

Over F_p the elimination runs on dense ``numpy.int64`` arrays reduced mod p
after every row operation (p < 2^31 keeps products inside 63 bits). Over QQ
the forward pass is fraction-free on Python integers with content removal
after each row update, followed by an exact back substitution into reduced
echelon form. Pivots are chosen by position: the first nonzero entry in the
column.
"""

import math
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from qinv.algebra.coeff_ring import (
    CoefficientRing,
    PrimeField,
    PrimeFieldElement,
    RationalField,
    Scalar,
    ff_inv,
)
from qinv.core.exceptions import ContractViolationError, UnsupportedOperationError


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form: one row per pivot, pivot entries equal to 1."""

    rows: list[list[Scalar]]
    pivots: list[int]
    n_cols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def free_columns(self) -> list[int]:
        taken = set(self.pivots)
        return [c for c in range(self.n_cols) if c not in taken]


def _rref_mod_p(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.mod(matrix, p).astype(np.int64)
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = ff_inv(PrimeFieldElement(int(a[r, c]), p)).value
        a[r, c:] = (a[r, c:] * inv) % p
        column = a[:, c].copy()
        column[r] = 0
        hit = np.flatnonzero(column)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(column[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _echelon_mod_p(matrix: np.ndarray, ring: PrimeField) -> Echelon:
    reduced, pivots = _rref_mod_p(matrix, ring.p)
    return Echelon(reduced.tolist(), pivots, matrix.shape[1])


def _integer_row(row: Sequence[Scalar]) -> list[int]:
    scale = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
    ints = [int(Fraction(x) * scale) for x in row]
    g = math.gcd(*ints)
    return [x // g for x in ints] if g > 1 else ints


def _rref_rational(
    rows: list[list[Scalar]], n_cols: int
) -> tuple[list[list[Scalar]], list[int]]:
    work = [_integer_row(row) for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pick = next((k for k in range(r, len(work)) if work[k][c] != 0), None)
        if pick is None:
            continue
        work[r], work[pick] = work[pick], work[r]
        a = work[r][c]
        for k in range(r + 1, len(work)):
            b = work[k][c]
            if b:
                updated = [a * x - b * y for x, y in zip(work[k], work[r], strict=True)]
                g = math.gcd(*updated)
                work[k] = [x // g for x in updated] if g > 1 else updated
        pivots.append(c)
        r += 1

    result: list[list[Scalar]] = [[Fraction(x) for x in row] for row in work[:r]]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        lead = result[i][c]
        result[i] = [x / lead for x in result[i]]
        for k in range(i):
            f = result[k][c]
            if f:
                result[k] = [
                    x - f * y for x, y in zip(result[k], result[i], strict=True)
                ]
    return result, pivots


def row_reduce(
    rows: Sequence[Sequence[Scalar]], ring: CoefficientRing, n_cols: int
) -> Echelon:
    """
    Reduced row echelon form of a dense matrix over a field.

    Args:
        rows: Matrix rows, each of length ``n_cols``.
        ring: A prime field or the rationals.
        n_cols: Column count (needed when there are no rows).

    Returns:
        Echelon: Nonzero reduced rows with their pivot columns.
    """
    if isinstance(ring, PrimeField):
        matrix = (
            np.array(rows, dtype=np.int64).reshape(len(rows), n_cols)
            if rows
            else np.zeros((0, n_cols), dtype=np.int64)
        )
        return _echelon_mod_p(matrix, ring)
    if isinstance(ring, RationalField):
        reduced_rows, pivots = _rref_rational([list(r) for r in rows], n_cols)
        return Echelon(reduced_rows, pivots, n_cols)
    raise UnsupportedOperationError(f"linear algebra needs a field, got {ring}")


def kernel_from_echelon(ech: Echelon, ring: CoefficientRing) -> list[list[Scalar]]:
    """
    Kernel basis in reduced echelon form.

    Each vector is first built with a 1 on its free column, then the set is
    row reduced so the basis is canonical for the column order.
    """
    n = ech.n_cols
    free = ech.free_columns
    raw: list[list[Scalar]] = []
    for f in free:
        vector: list[Scalar] = [ring.zero] * n
        vector[f] = ring.one
        for row, pc in zip(ech.rows, ech.pivots, strict=True):
            vector[pc] = ring.neg(row[f])
        raw.append(vector)
    basis = row_reduce(raw, ring, n) if raw else Echelon([], [], n)
    if ech.rank + basis.rank != n:
        raise ContractViolationError(
            f"rank {ech.rank} + nullity {basis.rank} != {n} columns"
        )
    return basis.rows


class LinearSystem:
    """
    Linear equations over a field with labelled columns.

    Rows are kept sparse (column index -> value) while the system is being
    assembled; solving densifies once.
    """

    def __init__(self, ring: CoefficientRing, columns: Sequence[Hashable]) -> None:
        self.ring = ring
        self.columns = list(columns)
        self.index = {label: i for i, label in enumerate(self.columns)}
        self.rows: list[dict[int, Scalar]] = []

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def add_row(self, entries: Mapping[Hashable, Scalar]) -> None:
        """Add one equation as {label: coefficient}; all-zero rows are skipped."""
        row: dict[int, Scalar] = {}
        for label, value in entries.items():
            value = self.ring.normalize(value)
            if value != 0:
                i = self.index[label]
                row[i] = self.ring.add(row.get(i, self.ring.zero), value)
        row = {i: v for i, v in row.items() if v != 0}
        if row:
            self.rows.append(row)

    def _dense(self, extra: Mapping[int, Scalar] | None = None) -> list[list[Scalar]]:
        width = self.n_cols + (1 if extra is not None else 0)
        dense: list[list[Scalar]] = []
        for r, row in enumerate(self.rows):
            line: list[Scalar] = [self.ring.zero] * width
            for i, v in row.items():
                line[i] = v
            if extra is not None:
                line[-1] = extra.get(r, self.ring.zero)
            dense.append(line)
        return dense

    def echelon(self) -> Echelon:
        if isinstance(self.ring, PrimeField):
            matrix = np.zeros((self.n_rows, self.n_cols), dtype=np.int64)
            for r, row in enumerate(self.rows):
                matrix[r, list(row)] = list(row.values())
            return _echelon_mod_p(matrix, self.ring)
        return row_reduce(self._dense(), self.ring, self.n_cols)

    def rank(self) -> int:
        return self.echelon().rank

    def nullity(self) -> int:
        return self.n_cols - self.rank()

    def kernel(self) -> list[list[Scalar]]:
        return kernel_from_echelon(self.echelon(), self.ring)

    def solve(self, rhs: Sequence[Scalar]) -> list[Scalar] | None:
        """
        One solution of A x = rhs, or None when the system is inconsistent.

        Free variables are set to zero, which makes the returned solution
        the unique one vanishing on every non-pivot column.
        """
        if len(rhs) != self.n_rows:
            raise ContractViolationError(
                f"right-hand side has {len(rhs)} entries for {self.n_rows} rows"
            )
        extra = {r: self.ring.normalize(v) for r, v in enumerate(rhs)}
        ech = row_reduce(self._dense(extra), self.ring, self.n_cols + 1)
        if ech.pivots and ech.pivots[-1] == self.n_cols:
            return None
        solution: list[Scalar] = [self.ring.zero] * self.n_cols
        for row, pc in zip(ech.rows, ech.pivots, strict=True):
            solution[pc] = row[self.n_cols]
        return solution


def rank_of(
    vectors: Sequence[Sequence[Scalar]], ring: CoefficientRing, n_cols: int
) -> int:
    return row_reduce(vectors, ring, n_cols).rank


def left_kernel(
    vectors: Sequence[Sequence[Scalar]], ring: CoefficientRing, n_cols: int
) -> list[list[Scalar]]:
    """Echelon basis of the coefficient tuples c with sum c_i * vectors[i] = 0."""
    system = LinearSystem(ring, range(len(vectors)))
    for col in range(n_cols):
        system.add_row({i: vec[col] for i, vec in enumerate(vectors) if vec[col] != 0})
    return system.kernel()


def express_in_span(
    vectors: Sequence[Sequence[Scalar]],
    target: Sequence[Scalar],
    ring: CoefficientRing,
) -> list[Scalar] | None:
    """Coefficients c with sum c_i * vectors[i] = target, or None."""
    n_cols = len(target)
    system = LinearSystem(ring, range(len(vectors)))
    rhs: list[Scalar] = []
    for col in range(n_cols):
        entries = {i: vec[col] for i, vec in enumerate(vectors) if vec[col] != 0}
        if not entries:
            if ring.normalize(target[col]) != 0:
                return None
            continue
        system.add_row(entries)
        rhs.append(target[col])
    if not system.rows:
        return [ring.zero] * len(vectors)
    return system.solve(rhs)
