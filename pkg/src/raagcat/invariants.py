"""Group invariants of the right-angled Artin group A_L and Coxeter group W_L.

Everything reduces to the virtual cohomological dimension

    vcd(W_L) = max{ n : H~^{n-1}(L - sigma; Z) != 0, sigma a simplex of L or empty }

where ``L - sigma`` is the full subcomplex on the vertices outside ``sigma``.
The amenable category of A_L, its spherical category, the finite category of
W_L and cd of the commutator subgroup A_L' all equal this number.

The scan visits sigma by dimension then lexicographically (sigma = empty
first); the witness is the first sigma reaching the maximum.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from raagcat.complex import (
    DEFAULT_BUDGET,
    Simplex,
    SimplicialComplex,
    bits_to_simplex,
    delete_simplex,
    induced_flag_complex,
    iter_bits,
    maximal_clique_masks,
    simplex_to_bits,
)
from raagcat.errors import InputError
from raagcat.homology import (
    PrimeField,
    betti_numbers,
    cohomology_nonzero_degrees,
    integral_homology,
    reduced_betti,
    reduced_cohomology_nonzero,
)

DEFAULT_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class Witness:
    """A simplex ``sigma`` with ``H~^degree(L - sigma; Z) != 0``."""

    sigma: Simplex
    degree: int
    detail: str = ""


def require_flag(L: SimplicialComplex) -> None:
    if not L.is_flag:
        raise InputError("group invariants need a flag complex given by its graph")
    if L.truncated:
        raise InputError("complex was truncated by a dimension cap; invariants would be wrong")


def dominated_core(adjacency: Sequence[int], mask: int) -> int:
    """Strip dominated vertices from the flag complex on ``mask``.

    ``v`` is dominated by a neighbour ``w`` when ``N[v]`` lies in ``N[w]``; then
    the link of ``v`` is a cone on ``w`` and removing ``v`` does not change the
    homotopy type.  The smallest dominated vertex is removed first.
    """
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            nv = (adjacency[v] & mask) | (1 << v)
            for w in iter_bits(adjacency[v] & mask):
                if not nv & ~((adjacency[w] & mask) | (1 << w)):
                    mask &= ~(1 << v)
                    changed = True
                    break
    return mask


def top_cohomology_degree(K: SimplicialComplex) -> int | None:
    """Largest ``k`` with ``H~^k(K; Z) != 0``, or ``None`` when ``K`` is acyclic."""
    degrees = cohomology_nonzero_degrees(integral_homology(K))
    return degrees[-1] if degrees else None


class _TopDegreeCache:
    def __init__(self, L: SimplicialComplex, reduce: bool, budget: int):
        self.L = L
        self.reduce = reduce
        self.budget = budget
        self.cache: dict[int, int | None] = {}

    def __call__(self, sigma: Simplex) -> int | None:
        L = self.L
        if not self.reduce:
            return top_cohomology_degree(delete_simplex(L, sigma))
        adj = L.adjacency
        mask = L.vertex_mask & ~simplex_to_bits(sigma)
        if mask and any(not mask & ~(adj[v] | (1 << v)) for v in iter_bits(mask)):
            return None  # cone
        mask = dominated_core(adj, mask)
        if mask in self.cache:
            return self.cache[mask]
        if not mask:
            result: int | None = -1
        elif mask & (mask - 1) == 0:
            result = None
        else:
            result = top_cohomology_degree(induced_flag_complex(L, mask, self.budget))
        self.cache[mask] = result
        return result


def _scan_chunk(args: tuple[SimplicialComplex, list[Simplex], bool, int]) -> list[int | None]:
    L, sigmas, reduce, budget = args
    top = _TopDegreeCache(L, reduce, budget)
    return [top(s) for s in sigmas]


def default_workers() -> int:
    """Worker count from ``RAAGCAT_WORKERS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("RAAGCAT_WORKERS", "1")))
    except ValueError:
        return 1


def vcd_racg(
    L: SimplicialComplex, *, reduce: bool = True, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> tuple[int, Witness]:
    """vcd(W_L) with the first scanned (sigma, degree) achieving it.

    ``reduce`` enables dominated-vertex stripping and skipping of sigma that
    cannot beat the current best; ``reduce=False`` evaluates every deletion
    directly.  ``workers > 1`` evaluates all sigma in a process pool and
    reduces afterwards, giving the same witness.
    """
    require_flag(L)
    if L.is_empty:
        return 0, Witness((), -1, "L is empty, H~^-1(empty) = Z")

    sigmas = list(L.iter_simplices(include_empty=True))
    best_n, best_sigma = -1, None

    if workers > 1:
        chunks = [sigmas[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, [(L, c, reduce, budget) for c in chunks]))
        tops: list[int | None] = [None] * len(sigmas)
        for i, part in enumerate(parts):
            tops[i::workers] = part
        for sigma, t in zip(sigmas, tops):
            if t is not None and t + 1 > best_n:
                best_n, best_sigma = t + 1, sigma
    else:
        top = _TopDegreeCache(L, reduce, budget)
        n_vertices = len(L.vertices)
        for sigma in sigmas:
            # L - sigma has at most |V| - |sigma| vertices, so n <= that count
            if reduce and n_vertices - len(sigma) <= best_n:
                continue
            t = top(sigma)
            if t is not None and t + 1 > best_n:
                best_n, best_sigma = t + 1, sigma

    if best_sigma is None:
        return 0, Witness((), -1, "degenerate baseline, no nonvanishing degree found")
    degree = best_n - 1
    where = "L" if not best_sigma else f"L minus {list(L.labels_of(best_sigma))}"
    detail = f"H~^{degree}({where}; Z) != 0"
    return best_n, Witness(best_sigma, degree, detail)


def cd_raag(L: SimplicialComplex) -> int:
    """cd(A_L) = dim(L) + 1; 0 for the trivial group."""
    require_flag(L)
    return L.dim + 1


def amenable_category_raag(L: SimplicialComplex) -> int:
    return vcd_racg(L)[0]


def cat_spherical_raag(L: SimplicialComplex) -> int:
    return vcd_racg(L)[0]


def cat_fin_racg(L: SimplicialComplex) -> int:
    return vcd_racg(L)[0]


def cd_commutator_raag(L: SimplicialComplex) -> int:
    return vcd_racg(L)[0]


def tc_raag(L: SimplicialComplex) -> tuple[int, tuple[Simplex, Simplex]]:
    """TC(A_L) = max |V1 u V2| over simplices V1, V2, using maximal cliques only."""
    require_flag(L)
    if L.is_empty:
        return 0, ((), ())
    cliques = sorted(bits_to_simplex(m) for m in maximal_clique_masks(L.adjacency, L.vertex_mask))
    masks = [simplex_to_bits(c) for c in cliques]
    best, pair = -1, (0, 0)
    for i, a in enumerate(masks):
        for j in range(i, len(masks)):
            size = (a | masks[j]).bit_count()
            if size > best:
                best, pair = size, (i, j)
    return best, (cliques[pair[0]], cliques[pair[1]])


def minvolent_positive(L: SimplicialComplex) -> bool:
    """Whether the minimal volume entropy of A_L is positive: H~^dim(L)(L; Z) != 0."""
    require_flag(L)
    if L.is_empty:
        raise InputError("minimal volume entropy is not considered for the trivial group")
    return reduced_cohomology_nonzero(L, L.dim)


def fp_homology_gradient(L: SimplicialComplex, k: int, p: int) -> int:
    """Limit of the F_p-homology gradient of A_L in degree ``k``: b~_{k-1}(L; F_p)."""
    require_flag(L)
    if k < 1:
        raise InputError("homology gradients are defined for degrees k > 0")
    return reduced_betti(L, k - 1, PrimeField(p))


@dataclass
class InvariantReport:
    dim_L: int
    cd_raag: int
    vcd_racg: int
    vcd_witness: Witness
    cat_ame: int
    cat_spherical: int
    cat_fin_racg: int
    cd_commutator: int
    tc: int
    tc_witness: tuple[Simplex, Simplex]
    minvolent_positive: bool
    gradients: dict[tuple[int, int], int] = field(default_factory=dict)

    def check(self) -> None:
        """Assert the identities and bounds every report must satisfy."""
        v = self.vcd_racg
        assert self.cat_ame == self.cat_spherical == self.cat_fin_racg == self.cd_commutator == v
        assert self.cat_ame <= self.cd_raag
        for (k, _), g in self.gradients.items():
            assert k <= self.cat_ame or g == 0, f"gradient in degree {k} above cat_AME"
        if self.dim_L >= 0:
            assert self.minvolent_positive == (v == self.dim_L + 1)
            assert 2 * v <= self.tc


def full_report(
    L: SimplicialComplex,
    primes: Iterable[int] = DEFAULT_PRIMES,
    max_degree: int | None = None,
    workers: int = 1,
) -> InvariantReport:
    """All invariants; gradients for ``k = 1..max_degree`` (default ``dim(L) + 2``)."""
    require_flag(L)
    primes = tuple(primes)
    for p in primes:
        PrimeField(p)
    if max_degree is None:
        max_degree = L.dim + 2
    vcd, witness = vcd_racg(L, workers=workers)
    tc, tc_pair = tc_raag(L)
    gradients = {}
    for p in primes:
        b = betti_numbers(L, PrimeField(p))
        for k in range(1, max_degree + 1):
            # b[0] is degree -1, so b~_{k-1} sits at index k
            gradients[(k, p)] = b[k] if k < len(b) else 0
    report = InvariantReport(
        dim_L=L.dim,
        cd_raag=cd_raag(L),
        vcd_racg=vcd,
        vcd_witness=witness,
        cat_ame=vcd,
        cat_spherical=vcd,
        cat_fin_racg=vcd,
        cd_commutator=vcd,
        tc=tc,
        tc_witness=tc_pair,
        minvolent_positive=False if L.is_empty else minvolent_positive(L),
        gradients=gradients,
    )
    report.check()
    return report
