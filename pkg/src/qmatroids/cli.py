"""Command-line interface: one verb per library operation.

Output is JSON on stdout (CSV for tables with ``--format csv``); diagnostics
go to stderr.  Exit status is 0 on success, 1 on domain errors (invalid
input objects, size ceilings), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds
from .cdc import (ConstantDimensionCode, cdc_to_paving, has_min_distance, lifted_mrd,
                  min_subspace_distance_cdc)
from .codes import GeneratorMatrix, qmatroid_from_generator, random_generator, search_representation
from .errors import QMatroidError
from .io import FORMAT_TAG, SearchResult, SweepReport, dumps, from_json, to_json
from .lattice import enumerate_grassmannian, gaussian_binomial, lattice_index
from .qmatroid import (RankTable, check_axioms, derived_structure, dualize, enumerate_qmatroids,
                       paving_from_collection, uniform)
from .zeropattern import det_system, pattern_bound_for, pattern_of_qmatroid, sweep_patterns

__all__ = ["main", "run", "build_parser"]


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        flags = [("-" if len(m) == 1 else "--") + m.replace("_", "-") for m in missing]
        raise UsageError("missing required flag(s): " + ", ".join(flags))


def _read(args, expected=None):
    _need(args, "in")
    try:
        with open(args.__dict__["in"], encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise QMatroidError(f"cannot read {args.__dict__['in']}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise QMatroidError(f"{args.__dict__['in']} is not valid JSON: {exc}") from exc
    obj = from_json(data)
    if expected is not None and not isinstance(obj, expected):
        names = " or ".join(t.__name__ for t in (expected if isinstance(expected, tuple) else (expected,)))
        raise QMatroidError(f"expected a {names} document, got {data.get('type')!r}")
    return obj


def _doc(kind, **fields):
    return {"format": FORMAT_TAG, "type": kind, **fields}


def _basis_list(subspaces):
    return [to_json(s)["basis"] for s in subspaces]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _no_csv(args):
    if args.format == "csv":
        raise UsageError(f"verb {args.verb!r} has no CSV form")


# verbs: each returns the text to emit


def cmd_qbinom(args):
    _need(args, "n", "k", "q")
    _no_csv(args)
    return json.dumps(gaussian_binomial(args.n, args.k, args.q)) + "\n"


def cmd_enumerate_subspaces(args):
    _need(args, "q", "n")
    subs = enumerate_grassmannian(args.q, args.n, args.k) if args.k is not None \
        else list(lattice_index(args.q, args.n))
    if args.format == "csv":
        f = subs[0].field
        return _csv(["index", "dim", "basis"], [
            (i, s.dim, ";".join(",".join(f.format(x) for x in r) for r in s.basis))
            for i, s in enumerate(subs)])
    return dumps(_doc("subspace-list", q=args.q, n=args.n, k=args.k, count=len(subs),
                      subspaces=_basis_list(subs)))


def cmd_uniform(args):
    _need(args, "q", "n", "k")
    _no_csv(args)
    return dumps(uniform(args.q, args.n, args.k))


def cmd_paving(args):
    _no_csv(args)
    code = _read(args, ConstantDimensionCode)
    k = code.k if args.k is None else args.k
    return dumps(paving_from_collection(code.codewords, k, code.q, code.n))


def cmd_check(args):
    _no_csv(args)
    return dumps(check_axioms(_read(args, RankTable)))


def cmd_dual(args):
    _no_csv(args)
    return dumps(dualize(_read(args, RankTable)))


def cmd_structure(args):
    _no_csv(args)
    t = _read(args, RankTable)
    check = check_axioms(t)
    if not check.ok:
        raise QMatroidError(f"not a q-matroid: axiom {check.axiom} fails")
    s = derived_structure(t)
    return dumps(_doc(
        "structure", q=t.q, n=t.n, rank=s.rank, is_paving=s.is_paving,
        independents=len(s.independents), bases=_basis_list(s.bases),
        circuits=_basis_list(s.circuits), loops=_basis_list(s.loops),
        loop_space=to_json(s.loop_space)["basis"],
    ))


def cmd_from_generator(args):
    _no_csv(args)
    if args.__dict__["in"] is not None:
        g = _read(args, GeneratorMatrix)
    else:
        _need(args, "q", "m", "k", "n", "seed")
        g = random_generator(args.q, args.m, args.k, args.n, seed=args.seed)
    return dumps(qmatroid_from_generator(g))


def cmd_search_rep(args):
    _need(args, "m_max")
    _no_csv(args)
    t = _read(args, RankTable)
    check = check_axioms(t)
    if not check.ok:
        raise QMatroidError(f"not a q-matroid: axiom {check.axiom} fails")
    return dumps(SearchResult(search_representation(t, args.m_max), args.m_max))


def cmd_lifted_mrd(args):
    _need(args, "q", "n", "k", "d")
    _no_csv(args)
    return dumps(lifted_mrd(args.q, args.n, args.k, args.d))


def cmd_cdc_distance(args):
    _no_csv(args)
    code = _read(args, ConstantDimensionCode)
    if args.d is not None:
        return dumps(_doc("cdc-distance", size=len(code), d=args.d,
                          holds=has_min_distance(code, args.d)))
    return dumps(_doc("cdc-distance", size=len(code), min_distance=min_subspace_distance_cdc(code)))


def cmd_cdc_to_paving(args):
    _no_csv(args)
    return dumps(cdc_to_paving(_read(args, ConstantDimensionCode)))


def cmd_zero_sweep(args):
    _need(args, "q", "n", "k", "m")
    _no_csv(args)
    pats = sweep_patterns(det_system(args.q, args.n, args.k), args.m, workers=args.threads)
    return dumps(SweepReport(args.q, args.n, args.k, args.m, len(pats),
                             pattern_bound_for(args.q, args.n, args.k),
                             pats if args.list else None))


def cmd_pattern_of(args):
    _no_csv(args)
    return dumps(pattern_of_qmatroid(_read(args, RankTable)))


def cmd_bounds_table(args):
    _need(args, "q", "n_from", "n_to")
    rows = bounds.asymptotic_table(args.q, args.n_from, args.n_to,
                                   printed=args.printed, sum_over_k=args.sum_over_k)
    if args.format == "csv":
        return bounds.table_csv(rows)
    doc = bounds.table_json(rows, args.q)
    doc["crossover"] = bounds.crossover(rows)
    return dumps(doc)


def cmd_rank1_census(args):
    _need(args, "q", "n")
    _no_csv(args)
    tables = [t for t in enumerate_qmatroids(args.q, args.n, 1) if t.rank == 1]
    out = {"count": len(tables), "formula": bounds.rank1_census_formula(args.n, args.q)}
    if args.m_max is not None:
        out["m_max"] = args.m_max
        out["representable"] = sum(
            search_representation(t, args.m_max) is not None for t in tables)
    return dumps(_doc("rank1-census", q=args.q, n=args.n, **out))


def cmd_enumerate_qmatroids(args):
    _need(args, "q", "n", "k")
    tables = enumerate_qmatroids(args.q, args.n, args.k)
    if args.format == "csv":
        return _csv(["index", "rank", "ranks"],
                    [(i, t.rank, " ".join(map(str, t.ranks))) for i, t in enumerate(tables)])
    return dumps(_doc("qmatroid-list", q=args.q, n=args.n, k_max=args.k, count=len(tables),
                      ordering="canonical-v1", ranks=[list(t.ranks) for t in tables]))


VERBS = {
    "qbinom": (cmd_qbinom, "Gaussian binomial [n choose k]_q"),
    "enumerate-subspaces": (cmd_enumerate_subspaces, "subspaces of F_q^n in canonical order"),
    "uniform": (cmd_uniform, "uniform q-matroid U_{k,n}"),
    "paving": (cmd_paving, "paving q-matroid from a collection of k-spaces"),
    "check": (cmd_check, "check the rank axioms"),
    "dual": (cmd_dual, "dual q-matroid"),
    "structure": (cmd_structure, "bases, circuits, loops, paving flag"),
    "from-generator": (cmd_from_generator, "q-matroid represented by a generator matrix"),
    "search-rep": (cmd_search_rep, "bounded search for a representation"),
    "lifted-mrd": (cmd_lifted_mrd, "lifted Gabidulin constant dimension code"),
    "cdc-distance": (cmd_cdc_distance, "minimum subspace distance of a code"),
    "cdc-to-paving": (cmd_cdc_to_paving, "paving q-matroid from a code of distance >= 4"),
    "zero-sweep": (cmd_zero_sweep, "zero patterns of the determinant system over F_{q^m}"),
    "pattern-of": (cmd_pattern_of, "target zero pattern of a q-matroid"),
    "bounds-table": (cmd_bounds_table, "lower vs upper counting bound table"),
    "rank1-census": (cmd_rank1_census, "count rank-1 q-matroids by enumeration"),
    "enumerate-qmatroids": (cmd_enumerate_qmatroids, "all q-matroids of rank <= k"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", type=int)
    common.add_argument("-n", type=int)
    common.add_argument("-k", type=int)
    common.add_argument("-m", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--m-max", type=int)
    common.add_argument("--n-from", type=int)
    common.add_argument("--n-to", type=int)
    common.add_argument("--in", metavar="FILE")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int)
    common.add_argument("--list", action="store_true", help="include pattern lists in sweep reports")
    common.add_argument("--printed", action="store_true",
                        help="use the n^2/4 form of the uniform bound")
    common.add_argument("--sum-over-k", action="store_true",
                        help="sum the rank-k bounds instead of n/2 times the uniform one")
    parser = argparse.ArgumentParser(prog="qmatroids", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True
    for name, (_, help_text) in VERBS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        parser.print_usage(stderr)
        print("error: --threads must be >= 1", file=stderr)
        return 2
    try:
        text = VERBS[args.verb][0](args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"error: {exc}", file=stderr)
        return 2
    except QMatroidError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
