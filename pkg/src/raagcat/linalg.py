"""Exact sparse linear algebra over Z, Q and F_p.

Matrices are stored column-wise as ``{row: value}`` dictionaries holding only
nonzero Python integers, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from raagcat.errors import InputError, ResourceLimitError

DEFAULT_MAX_BITS = 4096


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    columns: tuple[dict[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.columns) != self.cols:
            raise InputError("column count mismatch")
        for col in self.columns:
            for r, v in col.items():
                if not 0 <= r < self.rows:
                    raise InputError(f"row index {r} out of range")
                if v == 0:
                    raise InputError("stored entries must be nonzero")

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        columns = tuple({i: int(dense[i][j]) for i in range(rows) if dense[i][j]} for j in range(cols))
        return cls(rows, cols, columns)

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple({} for _ in range(cols)))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def transpose(self) -> IntegerMatrix:
        cols: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                cols[i][j] = v
        return IntegerMatrix(self.cols, self.rows, tuple(cols))

    def matmul(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise InputError("shape mismatch in matmul")
        out = []
        for col in other.columns:
            acc: dict[int, int] = {}
            for k, b in col.items():
                for i, a in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out.append({i: v for i, v in acc.items() if v})
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.columns)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix."""

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _divisibility_chain(diag: Iterable[int]) -> tuple[int, ...]:
    """Rewrite a diagonal into Smith form: equal up to unimodular equivalence, each entry dividing the next."""
    units = 0
    rest = []
    for d in diag:
        d = abs(d)
        if d == 1:
            units += 1
        elif d:
            rest.append(d)
    rest.sort()
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            if b % a:
                g = gcd(a, b)
                rest[i], rest[j] = g, a // g * b
    rest.sort()
    ones = [d for d in rest if d == 1]
    return (1,) * (units + len(ones)) + tuple(d for d in rest if d != 1)


class _SparseWork:
    """Mutable working copy: columns plus a row -> columns index."""

    def __init__(self, m: IntegerMatrix, max_bits: int):
        self.cols = [dict(c) for c in m.columns]
        self.rows: dict[int, set[int]] = {}
        for j, col in enumerate(self.cols):
            for i in col:
                self.rows.setdefault(i, set()).add(j)
        self.max_bits = max_bits

    def _check(self, v: int) -> None:
        if v.bit_length() > self.max_bits:
            raise ResourceLimitError(
                f"matrix entry grew to {v.bit_length()} bits, over limit {self.max_bits}", self.max_bits
            )

    def _set(self, i: int, j: int, v: int) -> None:
        col = self.cols[j]
        if v:
            if i not in col:
                self.rows.setdefault(i, set()).add(j)
            col[i] = v
            self._check(v)
        elif i in col:
            del col[i]
            self.rows[i].discard(j)

    def col_axpy(self, target: int, q: int, source: int) -> None:
        """column[target] -= q * column[source]"""
        tcol = self.cols[target]
        for i, v in list(self.cols[source].items()):
            self._set(i, target, tcol.get(i, 0) - q * v)

    def row_axpy(self, target: int, q: int, source: int) -> None:
        """row[target] -= q * row[source]"""
        for j in list(self.rows.get(source, ())):
            col = self.cols[j]
            self._set(target, j, col.get(target, 0) - q * col[source])

    def drop(self, i: int, j: int) -> None:
        for r in self.cols[j]:
            if r != i:
                self.rows[r].discard(j)
        self.cols[j] = {}
        for c in self.rows.pop(i, ()):
            self.cols[c].pop(i, None)


def smith_normal_form(m: IntegerMatrix, max_bits: int = DEFAULT_MAX_BITS) -> SNFResult:
    """Invariant factors of ``m`` by sparse unimodular elimination.

    Pivots are nonzero entries of smallest absolute value.  While unit entries
    remain, columns are swept shortest first and pivot on their unit entry in
    the sparsest row; otherwise the global minimum is taken.
    """
    w = _SparseWork(m, max_bits)
    diag: list[int] = []
    active = [j for j in range(m.cols) if w.cols[j]]

    while True:
        active = [j for j in active if w.cols[j]]
        if not active:
            break
        progressed = False
        for j in sorted(active, key=lambda c: len(w.cols[c])):
            col = w.cols[j]
            best = None
            for i, v in col.items():
                if v == 1 or v == -1:
                    key = (len(w.rows[i]), i)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            i, j = _eliminate(w, best[1], j)
            diag.append(1)
            w.drop(i, j)
            progressed = True
        if progressed:
            continue
        best = None
        for j in active:
            for i, v in w.cols[j].items():
                key = (abs(v), len(w.cols[j]) * len(w.rows[i]), j, i)
                if best is None or key < best:
                    best = key
        _, _, j, i = best
        i, j = _eliminate(w, i, j)
        diag.append(w.cols[j][i])
        w.drop(i, j)
    return SNFResult(_divisibility_chain(diag))


def _eliminate(w: _SparseWork, i: int, j: int) -> tuple[int, int]:
    """Clear the pivot's row and column, moving the pivot to a smaller remainder when division is inexact.

    Returns the final pivot position, which is then the only nonzero in its row and column.
    """
    while True:
        a = w.cols[j][i]
        for c in list(w.rows[i]):
            if c != j:
                q = w.cols[c][i] // a
                if q:
                    w.col_axpy(c, q, j)
        for r in list(w.cols[j]):
            if r != i:
                q = w.cols[j][r] // a
                if q:
                    w.row_axpy(r, q, i)
        leftovers = [(abs(w.cols[c][i]), i, c) for c in w.rows[i] if c != j]
        leftovers += [(abs(v), r, j) for r, v in w.cols[j].items() if r != i]
        if not leftovers:
            return i, j
        _, i, j = min(leftovers)


def _field_rank(columns: Sequence[dict[int, object]], inverse, reduce) -> int:
    """Rank by sparse column elimination with pivot rows recorded in a dict."""
    pivots: dict[int, dict[int, object]] = {}
    rank = 0
    for col in columns:
        v = {i: x for i, x in col.items() if x}
        while v:
            r = min(v)
            p = pivots.get(r)
            if p is None:
                inv = inverse(v[r])
                pivots[r] = {i: reduce(x * inv) for i, x in v.items()}
                rank += 1
                break
            f = v[r]
            for i, x in p.items():
                y = reduce(v.get(i, 0) - f * x)
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
    return rank


def rank_mod_p(m: IntegerMatrix, p: int) -> int:
    """Rank over F_p."""
    cols = [{i: x % p for i, x in c.items()} for c in m.columns]
    return _field_rank(cols, lambda x: pow(x, -1, p), lambda x: x % p)


def rank_q(m: IntegerMatrix) -> int:
    """Rank over Q, by exact rational elimination."""
    cols = [{i: Fraction(x) for i, x in c.items()} for c in m.columns]
    return _field_rank(cols, lambda x: 1 / x, lambda x: x)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True
