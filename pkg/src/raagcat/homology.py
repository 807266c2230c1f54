"""Reduced simplicial homology and cohomology with Z, Q and F_p coefficients.

Chain complexes are augmented: degree -1 carries a single generator (the
empty simplex) and ``boundary[0]`` is the row of ones ``C_0 -> C_{-1}``.  With
this convention the empty complex has reduced homology ``Z`` in degree -1.

Integral cohomology is never computed directly.  By the universal coefficient
theorem ``H^k(L; Z)`` is nonzero exactly when ``H_k`` has positive rank or
``H_{k-1}`` has torsion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from raagcat.complex import SimplicialComplex, Simplex
from raagcat.errors import InputError
from raagcat.linalg import IntegerMatrix, SNFResult, is_prime, rank_mod_p, rank_q, smith_normal_form


@dataclass(frozen=True)
class Integers:
    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class Rationals:
    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InputError(f"{self.p!r} is not a prime")

    def __str__(self) -> str:
        return f"F_{self.p}"


CoeffSpec = Union[Integers, Rationals, PrimeField]
ZZ = Integers()
QQ = Rationals()


def parse_coeffs(text: str) -> CoeffSpec:
    """``z``, ``q`` or ``fp:<p>`` (case-insensitive)."""
    t = text.strip().lower()
    if t == "z":
        return ZZ
    if t == "q":
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise InputError(f"bad prime in coefficient spec {text!r}") from None
        return PrimeField(p)
    raise InputError(f"unknown coefficient spec {text!r} (expected z, q or fp:<p>)")


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^rank + sum Z/t`` (or a vector space of dimension ``rank``)."""

    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        return f"rank {self.rank}, torsion {list(self.torsion)}"


@dataclass(frozen=True)
class ChainComplex:
    """Augmented simplicial chain complex.

    ``basis[k + 1]`` lists the ``k``-simplices (``basis[0] == [()]``) and
    ``boundary[k]`` is the matrix of ``C_k -> C_{k-1}`` for ``k = 0..dim+1``.
    """

    basis: tuple[tuple[Simplex, ...], ...]
    boundary: tuple[IntegerMatrix, ...]

    @property
    def top(self) -> int:
        return len(self.boundary) - 2

    def rank_of(self, k: int) -> int:
        """Number of ``k``-cells, ``k >= -1``."""
        if -1 <= k <= self.top:
            return len(self.basis[k + 1])
        return 0

    def matrix(self, k: int) -> IntegerMatrix | None:
        """``boundary_k`` or ``None`` when it is a map from or to the zero group."""
        if 0 <= k < len(self.boundary):
            return self.boundary[k]
        return None


def boundary_matrices(L: SimplicialComplex) -> ChainComplex:
    basis = (((),),) + L.simplices
    n0 = len(L.simplices[0]) if L.simplices else 0
    mats = [IntegerMatrix(1, n0, tuple({0: 1} for _ in range(n0)))]
    for k in range(1, L.dim + 1):
        index = {s: i for i, s in enumerate(L.simplices[k - 1])}
        cols = []
        for s in L.simplices[k]:
            col = {}
            sign = 1
            for i in range(len(s)):
                col[index[s[:i] + s[i + 1:]]] = sign
                sign = -sign
            cols.append(col)
        mats.append(IntegerMatrix(len(L.simplices[k - 1]), len(L.simplices[k]), tuple(cols)))
    if L.simplices:
        mats.append(IntegerMatrix.zero(len(L.simplices[-1]), 0))
    return ChainComplex(basis, tuple(mats))


def _rank(m: IntegerMatrix | None, c: CoeffSpec) -> int:
    if m is None or not m.cols or not m.rows:
        return 0
    if isinstance(c, PrimeField):
        return rank_mod_p(m, c.p)
    if isinstance(c, Rationals):
        return rank_q(m)
    return smith_normal_form(m).rank


def _snf(m: IntegerMatrix | None) -> SNFResult:
    if m is None or not m.cols or not m.rows:
        return SNFResult(())
    return smith_normal_form(m)


def _check_coeffs(c: object) -> CoeffSpec:
    if not isinstance(c, (Integers, Rationals, PrimeField)):
        raise InputError(f"invalid coefficient spec {c!r}")
    return c


def reduced_homology(L: SimplicialComplex, k: int, c: CoeffSpec = ZZ) -> HomologyGroup:
    c = _check_coeffs(c)
    if k < -1:
        raise InputError("degree must be at least -1")
    if k > L.dim:
        return HomologyGroup(0)
    cc = boundary_matrices(L)
    return _homology_from_chain(cc, k, c)


def _homology_from_chain(cc: ChainComplex, k: int, c: CoeffSpec) -> HomologyGroup:
    n = cc.rank_of(k)
    if isinstance(c, Integers):
        out = _snf(cc.matrix(k + 1))
        return HomologyGroup(n - _snf(cc.matrix(k)).rank - out.rank, out.torsion)
    return HomologyGroup(n - _rank(cc.matrix(k), c) - _rank(cc.matrix(k + 1), c))


def integral_homology(L: SimplicialComplex) -> list[HomologyGroup]:
    """``[H~_{-1}, H~_0, ..., H~_dim]`` over Z, one SNF per boundary map."""
    cc = boundary_matrices(L)
    snfs = [_snf(m) for m in cc.boundary]
    out = []
    for k in range(-1, L.dim + 1):
        outgoing = snfs[k].rank if k >= 0 else 0
        incoming = snfs[k + 1]
        out.append(HomologyGroup(cc.rank_of(k) - outgoing - incoming.rank, incoming.torsion))
    return out


def betti_numbers(L: SimplicialComplex, c: CoeffSpec = QQ) -> list[int]:
    """Reduced Betti numbers ``[b~_{-1}, ..., b~_dim]``."""
    c = _check_coeffs(c)
    if isinstance(c, Integers):
        return [h.rank for h in integral_homology(L)]
    cc = boundary_matrices(L)
    ranks = [_rank(m, c) for m in cc.boundary]
    return [cc.rank_of(k) - (ranks[k] if k >= 0 else 0) - ranks[k + 1] for k in range(-1, L.dim + 1)]


def cohomology_nonzero_degrees(groups: list[HomologyGroup]) -> list[int]:
    """Degrees ``k`` with ``H~^k(-; Z) != 0`` given ``[H~_{-1}, ..., H~_d]`` (universal coefficients)."""
    out = []
    for idx, h in enumerate(groups):
        k = idx - 1
        prev_torsion = groups[idx - 1].torsion if idx > 0 else ()
        if h.rank > 0 or prev_torsion:
            out.append(k)
    # torsion in the top group would contribute to degree d+1; top homology is free
    return out


def reduced_cohomology_nonzero(L: SimplicialComplex, k: int) -> bool:
    if k < -1:
        raise InputError("degree must be at least -1")
    if k > L.dim + 1:
        return False
    return k in cohomology_nonzero_degrees(integral_homology(L))


def reduced_betti(L: SimplicialComplex, k: int, c: CoeffSpec = QQ) -> int:
    return reduced_homology(L, k, c).rank


def euler_characteristic(L: SimplicialComplex) -> int:
    return sum((-1) ** k * f for k, f in enumerate(L.f_vector))
