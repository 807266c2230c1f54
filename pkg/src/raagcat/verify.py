"""Verification harness: random instances, per-instance inequality checks,
the strict-subadditivity search, and brute-force oracles for the test suite.

Random graphs come from numpy's ``SeedSequence``: trial ``i`` of a run with
seed ``s`` uses ``derive_seed(s, i)``, so serial and parallel runs see the
same instances.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Any, Sequence

import numpy as np

from raagcat.complex import DEFAULT_BUDGET, Graph, SimplicialComplex, flag_complex, join
from raagcat.errors import InputError, ResourceLimitError
from raagcat.homology import CoeffSpec, HomologyGroup, Integers, PrimeField, Rationals
from raagcat.invariants import require_flag, tc_raag, vcd_racg
from raagcat.io import format_graph, parse_graph

MASK64 = (1 << 64) - 1

# --------------------------------------------------------------------------
# random instances


def derive_seed(seed: int, *path: int) -> int:
    """Child seed for ``path`` under ``seed``; independent of evaluation order."""
    ss = np.random.SeedSequence(seed & MASK64, spawn_key=tuple(path))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def random_flag_graph(n: int, edge_prob: float | Fraction, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs ``(i, j)``, ``i < j``, are drawn in lexicographic order."""
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    p = float(edge_prob)
    if not 0.0 <= p <= 1.0:
        raise InputError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed & MASK64)
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, (e for e, x in zip(pairs, draws) if x < p))


CORPUS_SEED = 20240917
CORPUS_PROBS = tuple(Fraction(k, 8) for k in range(1, 8))


def random_corpus(count: int = 200, max_vertices: int = 9, seed: int = CORPUS_SEED) -> list[Graph]:
    """Fixed test corpus: vertex counts ``1..max_vertices``, edge probabilities in eighths."""
    out = []
    for i in range(count):
        rng = np.random.default_rng(derive_seed(seed, i))
        n = int(rng.integers(1, max_vertices + 1))
        p = CORPUS_PROBS[int(rng.integers(0, len(CORPUS_PROBS)))]
        out.append(random_flag_graph(n, p, derive_seed(seed, i, 1)))
    return out


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int
    relation: str

    @property
    def passed(self) -> bool:
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == "<":
            return self.lhs < self.rhs
        if self.relation == "==":
            return self.lhs == self.rhs
        raise ValueError(f"unknown relation {self.relation!r}")


@dataclass
class VerificationReport:
    instance: str
    checks: list[Check]
    params: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "params": self.params,
            "passed": self.passed,
            "checks": [{**asdict(c), "passed": c.passed} for c in self.checks],
        }


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def check_q81(L: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """cat_AME(A_L x A_L) <= 2 vcd(W_L) <= TC(A_L) on one instance.

    A_L x A_L is the RAAG of the join L * L, so its amenable category is
    vcd of that join.
    """
    require_flag(L)
    lhs, _ = vcd_racg(join(L, L, budget=budget), budget=budget)
    mid = 2 * vcd_racg(L, budget=budget)[0]
    rhs, _ = tc_raag(L)
    return VerificationReport(
        instance=format_graph(L.one_skeleton()),
        checks=[
            Check("cat_AME(A_L x A_L) <= 2 vcd(W_L)", lhs, mid, "<="),
            Check("2 vcd(W_L) <= TC(A_L)", mid, rhs, "<="),
            Check("cat_AME(A_L x A_L) <= TC(A_L)", lhs, rhs, "<="),
        ],
    )


def recheck_q81(report: VerificationReport, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    return check_q81(flag_complex(parse_graph(report.instance)), budget=budget)


@dataclass
class SubadditivityReport:
    params: dict[str, Any]
    tested: int
    skipped: list[dict[str, Any]]
    witnesses: list[dict[str, Any]]
    sum_gap_histogram: dict[int, int]

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params,
            "tested": self.tested,
            "skipped": self.skipped,
            "witnesses": self.witnesses,
            "witness_count": len(self.witnesses),
            "sum_gap_histogram": {str(k): v for k, v in sorted(self.sum_gap_histogram.items())},
        }

    def canonical(self) -> str:
        return canonical_json(self.to_dict())


def subadditivity_values(
    L1: SimplicialComplex, L2: SimplicialComplex, budget: int = DEFAULT_BUDGET
) -> tuple[int, int, int]:
    """``(vcd(W_L1), vcd(W_L2), vcd(W_{L1*L2}))``; a strict witness has the last below the sum."""
    v1, v2 = vcd_racg(L1, budget=budget)[0], vcd_racg(L2, budget=budget)[0]
    return v1, v2, vcd_racg(join(L1, L2, budget=budget), budget=budget)[0]


def _subadditive_trial(args: tuple[int, int, int, int]) -> dict[str, Any]:
    seed, trial, max_vertices, budget = args
    rng = np.random.default_rng(derive_seed(seed, trial))
    n1, n2 = (int(x) for x in rng.integers(1, max_vertices + 1, size=2))
    p1, p2 = (Fraction(int(x), 8) for x in rng.integers(0, 9, size=2))
    g1 = random_flag_graph(n1, p1, derive_seed(seed, trial, 1))
    g2 = random_flag_graph(n2, p2, derive_seed(seed, trial, 2))
    record: dict[str, Any] = {
        "trial": trial,
        "L1": format_graph(g1),
        "L2": format_graph(g2),
        "p1": str(p1),
        "p2": str(p2),
    }
    try:
        v1, v2, vj = subadditivity_values(flag_complex(g1, budget=budget), flag_complex(g2, budget=budget), budget)
    except ResourceLimitError as exc:
        record["error"] = str(exc)
        return record
    record.update(vcd1=v1, vcd2=v2, vcd_join=vj)
    return record


def search_subadditive(
    max_vertices: int, trials: int, seed: int, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> SubadditivityReport:
    """Sample pairs (L1, L2) and collect those with vcd(W_{L1*L2}) < vcd(W_L1) + vcd(W_L2).

    By the amenable-category identity these are exactly the pairs with
    cat_AME(A_L1 x A_L2) < cat_AME(A_L1) + cat_AME(A_L2).
    """
    if max_vertices < 1 or trials < 0:
        raise InputError("need max_vertices >= 1 and trials >= 0")
    jobs = [(seed, t, max_vertices, budget) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_subadditive_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        records = [_subadditive_trial(j) for j in jobs]
    skipped, witnesses, hist = [], [], {}
    for r in records:
        if "error" in r:
            skipped.append({"trial": r["trial"], "error": r["error"]})
            continue
        gap = r["vcd1"] + r["vcd2"] - r["vcd_join"]
        hist[gap] = hist.get(gap, 0) + 1
        if gap > 0:
            witnesses.append(r)
    return SubadditivityReport(
        params={"max_vertices": max_vertices, "trials": trials, "seed": seed, "budget": budget},
        tested=len(records) - len(skipped),
        skipped=skipped,
        witnesses=witnesses,
        sum_gap_histogram=hist,
    )


# --------------------------------------------------------------------------
# oracles (deliberately independent of raagcat.linalg and raagcat.homology)

ORACLE_MAX_CELLS = 512
ORACLE_MAX_MINORS = 20_000


def dense_boundary(L: SimplicialComplex, k: int) -> list[list[int]]:
    """Dense augmented boundary ``C_k -> C_{k-1}``, built from scratch."""
    def cells(d: int) -> list[tuple[int, ...]]:
        if d == -1:
            return [()]
        if 0 <= d <= L.dim:
            return list(L.simplices[d])
        return []

    src, dst = cells(k), cells(k - 1)
    pos = {s: i for i, s in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for j, s in enumerate(src):
        for i in range(len(s)):
            mat[pos[s[:i] + s[i + 1:]]][j] = (-1) ** i
    return mat


def dense_rank(mat: list[list[int]], p: int | None = None) -> int:
    """Gaussian elimination over Q (``p is None``) or F_p."""
    if not mat or not mat[0]:
        return 0
    if p is None:
        a = [[Fraction(x) for x in row] for row in mat]
    else:
        a = [[x % p for x in row] for row in mat]
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][c] if p is None else pow(a[rank][c], -1, p)
        for r in range(rows):
            if r != rank and a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
                if p is not None:
                    a[r] = [x % p for x in a[r]]
        rank += 1
    return rank


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def elementary_divisors_by_minors(mat: list[list[int]], max_minors: int = ORACLE_MAX_MINORS) -> tuple[int, ...]:
    """Invariant factors from determinantal divisors: ``d_1...d_k = gcd of k x k minors``.

    The gcd for size ``k`` stops early once it reaches 1.  Raises
    :class:`ResourceLimitError` when more than ``max_minors`` minors would be
    evaluated.
    """
    if not mat or not mat[0]:
        return ()
    r = dense_rank(mat)
    rows, cols = len(mat), len(mat[0])
    budget = max_minors
    divisors = [1]
    for k in range(1, r + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                budget -= 1
                if budget < 0:
                    raise ResourceLimitError("minor enumeration over oracle budget", max_minors)
                g = gcd(g, bareiss_det([[mat[i][j] for j in cs] for i in rs]))
                if g == 1:
                    break
            if g == 1:
                break
        divisors.append(g)
    return tuple(divisors[k] // divisors[k - 1] for k in range(1, r + 1))


def oracle_homology(L: SimplicialComplex, k: int, c: CoeffSpec) -> HomologyGroup:
    """Reduced homology by dense elimination (fields) or minor gcds (Z), small inputs only."""
    if k < -1:
        raise InputError("degree must be at least -1")
    sizes = [len(L.simplices[d]) if 0 <= d <= L.dim else (1 if d == -1 else 0) for d in (k - 1, k, k + 1)]
    if max(sizes) > ORACLE_MAX_CELLS:
        raise ResourceLimitError(f"oracle limited to {ORACLE_MAX_CELLS} cells per degree", ORACLE_MAX_CELLS)
    n = sizes[1]
    d_in, d_out = dense_boundary(L, k), dense_boundary(L, k + 1)
    if isinstance(c, PrimeField):
        return HomologyGroup(n - dense_rank(d_in, c.p) - dense_rank(d_out, c.p))
    if isinstance(c, Rationals):
        return HomologyGroup(n - dense_rank(d_in) - dense_rank(d_out))
    if isinstance(c, Integers):
        factors = elementary_divisors_by_minors(d_out)
        return HomologyGroup(n - dense_rank(d_in) - len(factors), tuple(d for d in factors if d > 1))
    raise InputError(f"invalid coefficient spec {c!r}")


def tc_bruteforce(L: SimplicialComplex) -> int:
    """max |V1 u V2| over all pairs of simplices, cliques found by subset enumeration."""
    require_flag(L)
    verts = L.vertices
    if not verts:
        return 0
    edges = set(L.simplices[1]) if L.dim >= 1 else set()
    cliques = []
    for size in range(1, len(verts) + 1):
        for sub in combinations(verts, size):
            if all(pair in edges for pair in combinations(sub, 2)):
                cliques.append(frozenset(sub))
    return max(len(a | b) for a in cliques for b in cliques)
