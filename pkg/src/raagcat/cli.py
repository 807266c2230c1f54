"""Command-line front end.

Exit status: 0 success, 1 a verification check failed, 2 input or usage
error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Sequence

from raagcat.complex import DEFAULT_BUDGET, SimplicialComplex, flag_complex
from raagcat.errors import InputError, ResourceLimitError
from raagcat.homology import PrimeField, parse_coeffs, reduced_homology
from raagcat.invariants import (
    DEFAULT_PRIMES,
    InvariantReport,
    Witness,
    default_workers,
    fp_homology_gradient,
    full_report,
    tc_raag,
    vcd_racg,
)
from raagcat.io import parse_facets, parse_graph
from raagcat.verify import check_q81, search_subadditive

log = logging.getLogger("raagcat")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _primes(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    for p in out:
        try:
            PrimeField(p)
        except InputError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return out


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    g = p.add_argument_group("global options")
    g.add_argument("--json", action="store_true", default=d(False), help="emit one JSON object")
    g.add_argument("--max-dim", type=int, default=d(None), metavar="D", help="cap stored simplex dimension")
    g.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET), metavar="B", help="simplex-count budget")
    g.add_argument("--primes", type=_primes, default=d(DEFAULT_PRIMES), metavar="P,..", help="primes for gradients")
    g.add_argument(
        "--format", choices=("auto", "graph", "facets"), default=d("auto"),
        help="input format (auto: *.facets is a facet list, anything else a graph)",
    )
    g.add_argument(
        "--assert-flag", action="store_true", default=d(False),
        help="accept a facet complex in invariant commands after checking it is flag",
    )
    g.add_argument("--workers", type=int, default=d(None), metavar="W", help="worker processes (env RAAGCAT_WORKERS)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="raagcat", description="Invariants of right-angled Artin and Coxeter groups of flag complexes.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_common(p, suppress=True)
        return p

    p = cmd("invariants", "all invariants of A_L and W_L")
    p.add_argument("input")
    p.add_argument("--max-degree", type=int, default=None, help="largest gradient degree (default dim+2)")

    p = cmd("homology", "reduced homology of L")
    p.add_argument("input")
    p.add_argument("--coeffs", default="z", help="z, q or fp:<p>")
    p.add_argument("--degree", type=int, default=None)

    p = cmd("tc", "topological complexity of A_L")
    p.add_argument("input")

    p = cmd("vcd", "virtual cohomological dimension of W_L")
    p.add_argument("input")

    p = cmd("gradient", "F_p-homology gradient of A_L")
    p.add_argument("input")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = cmd("verify", "per-instance inequality checks")
    vsub = p.add_subparsers(dest="check", required=True, parser_class=_Parser)
    q = vsub.add_parser("q81", help="cat_AME(A_L x A_L) <= 2 vcd(W_L) <= TC(A_L)")
    _add_common(q, suppress=True)
    q.add_argument("input")

    p = cmd("search", "randomized searches")
    ssub = p.add_subparsers(dest="target", required=True, parser_class=_Parser)
    s = ssub.add_parser("subadditive", help="look for cat_AME(A_L1 x A_L2) < cat_AME(A_L1) + cat_AME(A_L2)")
    _add_common(s, suppress=True)
    s.add_argument("--max-vertices", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    return parser


# --------------------------------------------------------------------------
# input


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_input(args: argparse.Namespace, need_flag: bool) -> SimplicialComplex:
    text = _read(args.input)
    kind = args.format
    if kind == "auto":
        kind = "facets" if args.input.endswith(".facets") else "graph"
    if kind == "graph":
        L = flag_complex(parse_graph(text), max_dim=args.max_dim, budget=args.budget)
        if L.truncated:
            log.warning("flag complex truncated at dimension %d", args.max_dim)
        return L
    L = parse_facets(text, budget=args.budget)
    if not need_flag:
        return L
    if not args.assert_flag:
        raise InputError("invariant commands need a graph input; pass --assert-flag to accept a flag facet complex")
    if not L.check_flag():
        raise InputError("--assert-flag: the facet complex is not flag")
    return flag_complex(L.one_skeleton(), budget=args.budget)


# --------------------------------------------------------------------------
# output


def _simplex_text(L: SimplicialComplex, s: Sequence[int]) -> str:
    return "∅" if not s else "{" + ",".join(L.labels_of(s)) + "}"


def _witness_text(L: SimplicialComplex, w: Witness) -> str:
    return f"witness σ={_simplex_text(L, w.sigma)} in degree {w.degree}"


def _witness_json(L: SimplicialComplex, w: Witness) -> dict[str, Any]:
    return {"sigma": L.labels_of(w.sigma), "degree": w.degree, "detail": w.detail}


def report_json(L: SimplicialComplex, r: InvariantReport) -> dict[str, Any]:
    return {
        "vertices": [L.vertex_labels[v] for v in L.vertices],
        "f_vector": list(L.f_vector),
        "dim_L": r.dim_L,
        "cd_raag": r.cd_raag,
        "cd": r.cd_raag,
        "vcd_racg": r.vcd_racg,
        "vcd_witness": _witness_json(L, r.vcd_witness),
        "cat_ame": r.cat_ame,
        "cat_spherical": r.cat_spherical,
        "cat_fin_racg": r.cat_fin_racg,
        "cd_commutator": r.cd_commutator,
        "tc": r.tc,
        "tc_witness": [L.labels_of(r.tc_witness[0]), L.labels_of(r.tc_witness[1])],
        "minvolent_positive": r.minvolent_positive,
        "minvolent": r.minvolent_positive,
        "gradients": [
            {"degree": k, "prime": p, "value": v} for (k, p), v in sorted(r.gradients.items())
        ],
    }


def report_text(L: SimplicialComplex, r: InvariantReport) -> str:
    w = _witness_text(L, r.vcd_witness)
    v = r.vcd_racg
    t1, t2 = r.tc_witness
    lines = [
        f"L: {len(L.vertices)} vertices, f-vector {list(L.f_vector)}, dim(L) = {r.dim_L}",
        f"cd(A_L) = dim(L)+1 = {r.cd_raag}",
        f"vcd(W_L) = {v}, {w}",
        f"cat_AME(A_L) = vcd(W_L) = {r.cat_ame}, {w}",
        f"cat_F<S>(A_L) = vcd(W_L) = {r.cat_spherical}",
        f"cat_FIN(W_L) = vcd(W_L) = {r.cat_fin_racg}",
        f"cd(A_L') = vcd(W_L) = {r.cd_commutator}",
        f"TC(A_L) = max |V1 ∪ V2| = {r.tc}, witness V1={_simplex_text(L, t1)}, V2={_simplex_text(L, t2)}",
    ]
    if r.dim_L >= 0:
        verdict = "yes" if r.minvolent_positive else "no"
        lines.append(f"ω(A_L) > 0 iff H~^{r.dim_L}(L;Z) != 0 iff vcd(W_L) = dim(L)+1: {verdict}")
    else:
        lines.append("ω(A_L) > 0: no (trivial group)")
    lines.append("F_p-homology gradients of A_L, degree k -> b~_{k-1}(L;F_p):")
    primes = sorted({p for _, p in r.gradients})
    for p in primes:
        vals = " ".join(f"k={k}:{g}" for (k, q), g in sorted(r.gradients.items()) if q == p)
        lines.append(f"  p={p}: {vals}")
    lines.append(
        "note: cat_F(G_L) = vcd(W_L) also holds for graph products of any nontrivial residually "
        "finite amenable group G of type F"
    )
    return "\n".join(lines)


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(text)


# --------------------------------------------------------------------------
# commands


def _workers(args: argparse.Namespace) -> int:
    return args.workers if args.workers else default_workers()


def cmd_invariants(args: argparse.Namespace) -> int:
    L = load_input(args, need_flag=True)
    r = full_report(L, primes=args.primes, max_degree=args.max_degree, workers=_workers(args))
    _emit(args, {"command": "invariants", **report_json(L, r)}, report_text(L, r))
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    L = load_input(args, need_flag=False)
    c = parse_coeffs(args.coeffs)
    degrees = [args.degree] if args.degree is not None else list(range(-1, L.dim + 1))
    groups = [(k, reduced_homology(L, k, c)) for k in degrees]
    payload = {
        "command": "homology",
        "coeffs": str(c),
        "f_vector": list(L.f_vector),
        "truncated": L.truncated,
        "groups": [{"degree": k, "rank": h.rank, "torsion": list(h.torsion)} for k, h in groups],
    }
    if args.degree is not None:
        text = str(groups[0][1])
    else:
        text = "\n".join(f"H~_{k}(L;{c}): {h}" for k, h in groups)
    _emit(args, payload, text)
    return 0


def cmd_tc(args: argparse.Namespace) -> int:
    L = load_input(args, need_flag=True)
    tc, (a, b) = tc_raag(L)
    _emit(
        args,
        {"command": "tc", "tc": tc, "tc_witness": [L.labels_of(a), L.labels_of(b)]},
        f"TC(A_L) = max |V1 ∪ V2| = {tc}, witness V1={_simplex_text(L, a)}, V2={_simplex_text(L, b)}",
    )
    return 0


def cmd_vcd(args: argparse.Namespace) -> int:
    L = load_input(args, need_flag=True)
    v, w = vcd_racg(L, workers=_workers(args), budget=args.budget)
    _emit(
        args,
        {"command": "vcd", "vcd_racg": v, "cat_ame": v, "vcd_witness": _witness_json(L, w)},
        f"cat_AME(A_L) = vcd(W_L) = {v}, {_witness_text(L, w)} ({w.detail})",
    )
    return 0


def cmd_gradient(args: argparse.Namespace) -> int:
    L = load_input(args, need_flag=True)
    g = fp_homology_gradient(L, args.degree, args.prime)
    _emit(
        args,
        {"command": "gradient", "degree": args.degree, "prime": args.prime, "value": g},
        f"lim b_{args.degree}(Γ_i;F_{args.prime})/[A_L:Γ_i] = b~_{args.degree - 1}(L;F_{args.prime}) = {g}",
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    L = load_input(args, need_flag=True)
    rep = check_q81(L, budget=args.budget)
    lines = [
        f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.lhs} {c.relation} {c.rhs}" for c in rep.checks
    ]
    _emit(args, {"command": "verify q81", **rep.to_dict()}, "\n".join(lines))
    return 0 if rep.passed else 1


def cmd_search(args: argparse.Namespace) -> int:
    rep = search_subadditive(args.max_vertices, args.trials, args.seed, workers=_workers(args), budget=args.budget)
    d = rep.to_dict()
    lines = [
        f"tested {rep.tested} pairs (seed {args.seed}, up to {args.max_vertices} vertices each), "
        f"{len(rep.skipped)} skipped over budget",
        f"strict subadditivity witnesses: {len(rep.witnesses)}",
        "gap vcd(L1)+vcd(L2)-vcd(L1*L2) histogram: "
        + ", ".join(f"{k}:{v}" for k, v in d["sum_gap_histogram"].items()),
    ]
    for w in rep.witnesses:
        lines.append(f"  trial {w['trial']}: {w['vcd_join']} < {w['vcd1']} + {w['vcd2']}")
    for s in rep.skipped:
        lines.append(f"  skipped trial {s['trial']}: {s['error']}")
    _emit(args, {"command": "search subadditive", **d}, "\n".join(lines))
    return 0


COMMANDS = {
    "invariants": cmd_invariants,
    "homology": cmd_homology,
    "tc": cmd_tc,
    "vcd": cmd_vcd,
    "gradient": cmd_gradient,
    "verify": cmd_verify,
    "search": cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="raagcat: %(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"raagcat: error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"raagcat: resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
