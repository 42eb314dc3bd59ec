"""
Exact integer linear algebra:
- IntegerMatrix (numpy object arrays of Python ints, immutable)
- Smith normal form with unimodular transforms U·A·V = D
- Relation matrices and abelianization of presentations
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from errors import DimensionError, ParseError

logger = logging.getLogger(__name__)


class IntegerMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    __slots__ = ("_a",)

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        rows = [list(row) for row in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        arr = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"Row {i} has {len(row)} entries, expected {cols}")
            for j, value in enumerate(row):
                if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                    raise DimensionError(f"Entry ({i}, {j}) is not an integer: {value!r}")
                arr[i, j] = int(value)
        arr.flags.writeable = False
        self._a = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "IntegerMatrix":
        return cls(arr.tolist(), cols=arr.shape[1])

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    # ── Protocol ──

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self._a.tolist())

    def array(self) -> np.ndarray:
        """Writable object-dtype copy."""
        return self._a.copy()

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerMatrix) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"IntegerMatrix({[list(r) for r in self.entries]})"

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        return IntegerMatrix._wrap(self._a.dot(other._a))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self._a.T.tolist(), cols=self.rows)

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def is_diagonal(self) -> bool:
        return all(self._a[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> list[int]:
        return [self._a[i, i] for i in range(min(self.shape))]

    def determinant(self) -> int:
        """Fraction-free (Bareiss) determinant."""
        if self.rows != self.cols:
            raise DimensionError(f"Determinant of a non-square {self.shape} matrix")
        n = self.rows
        M = self.array()
        sign, prev = 1, 1
        for k in range(n - 1):
            if M[k, k] == 0:
                swap = next((i for i in range(k + 1, n) if M[i, k] != 0), None)
                if swap is None:
                    return 0
                M[[k, swap]] = M[[swap, k]]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i, j] = (M[i, j] * M[k, k] - M[i, k] * M[k, j]) // prev
            prev = M[k, k]
        return sign * M[n - 1, n - 1] if n else 1

    # ── Serialization ──

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "IntegerMatrix":
        try:
            rows, cols, entries = int(data["rows"]), int(data["cols"]), data["entries"]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed matrix JSON: {e}") from None
        if len(entries) != rows:
            raise DimensionError(f"Matrix JSON declares {rows} rows but has {len(entries)}")
        return cls(entries, cols=cols)


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank ⊕ Z/d1 ⊕ … ⊕ Z/dk with d1 | d2 | … | dk, all di ≥ 2."""

    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"Torsion coefficients must be ≥ 2: {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"Torsion coefficients break the divisibility chain: {self.torsion}")
        if self.free_rank < 0:
            raise ValueError(f"Negative free rank: {self.free_rank}")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}


# ─── Smith normal form ───────────────────────────────────────────────

def _identity_array(n: int) -> np.ndarray:
    arr = np.zeros((n, n), dtype=object)
    for i in range(n):
        arr[i, i] = 1
    return arr


def _min_nonzero(D: np.ndarray, t: int):
    """Position of the smallest-magnitude nonzero entry of D[t:, t:], or None."""
    best = None
    for i in range(t, D.shape[0]):
        for j in range(t, D.shape[1]):
            v = D[i, j]
            if v != 0 and (best is None or abs(v) < abs(D[best])):
                best = (i, j)
    return best


def smith_normal_form(A: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """
    Smith normal form D = U·A·V.

    Pivots are chosen as the smallest nonzero entry of the remaining block;
    row and column reductions repeat until the pivot divides its whole block.

    Returns:
        (D, U, V) with U, V unimodular and D diagonal, nonnegative, with
        d1 | d2 | … on its nonzero entries (zeros last).
    """
    m, n = A.shape
    D = A.array()
    U = _identity_array(m)
    V = _identity_array(n)

    def swap_rows(i, k):
        D[[i, k]] = D[[k, i]]
        U[[i, k]] = U[[k, i]]

    def swap_cols(j, k):
        D[:, [j, k]] = D[:, [k, j]]
        V[:, [j, k]] = V[:, [k, j]]

    def add_row(dst, src, q):
        D[dst] += q * D[src]
        U[dst] += q * U[src]

    def add_col(dst, src, q):
        D[:, dst] += q * D[:, src]
        V[:, dst] += q * V[:, src]

    for t in range(min(m, n)):
        pivot = _min_nonzero(D, t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            p = D[t, t]
            for i in range(t + 1, m):
                if D[i, t]:
                    add_row(i, t, -(D[i, t] // p))
            for j in range(t + 1, n):
                if D[t, j]:
                    add_col(j, t, -(D[t, j] // p))

            rest = [(i, t) for i in range(t + 1, m) if D[i, t]] + [(t, j) for j in range(t + 1, n) if D[t, j]]
            if rest:
                i, j = min(rest, key=lambda pos: abs(D[pos]))
                swap_rows(t, i)
                swap_cols(t, j)
                continue

            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i, j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)

        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]

    result = IntegerMatrix._wrap(D), IntegerMatrix._wrap(U), IntegerMatrix._wrap(V)
    if result[1] @ A @ result[2] != result[0]:
        raise AssertionError("Smith normal form check U·A·V = D failed")
    logger.debug(f"SNF of {m}x{n} matrix: diagonal {result[0].diagonal()}")
    return result


def invariant_factors(A: IntegerMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    D, _, _ = smith_normal_form(A)
    return [d for d in D.diagonal() if d]


# ─── Presentations ───────────────────────────────────────────────────

def relation_matrix(p) -> IntegerMatrix:
    """One row per relator, one column per generator, entries are exponent sums."""
    names = p.alphabet.names
    index = {name: k for k, name in enumerate(names)}
    rows = []
    for rel in p.relators:
        row = [0] * len(names)
        for symbol, exponent in rel.word.letters:
            row[index[symbol.name]] += exponent
        rows.append(row)
    return IntegerMatrix(rows, cols=len(names))


def abelianize(p) -> AbelianInvariants:
    """Abelian invariants of the group presented by p."""
    R = relation_matrix(p)
    factors = invariant_factors(R)
    result = AbelianInvariants(
        torsion=tuple(d for d in factors if d > 1),
        free_rank=R.cols - len(factors),
    )
    logger.info(f"📊 H1 of {p.family} (g={p.g}, r={p.r}): {result}")
    return result
