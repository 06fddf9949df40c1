"""Command-line interface: ``hyperpebble <subcommand> [options] FILE``.

Input files use the text format of :mod:`hyperpebble.hypercore`; ``-`` reads
standard input. ``--k``/``--l`` override the parameters in the file header.
Exit codes: 0 success, 1 negative answer (dependent input, failed check or
verification), 2 usage or input errors, always reported as one ``error:`` line.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import decomposition as dec
from . import generators as gen
from . import oracle
from .components import decide_with_components
from .errors import HypergraphError
from .hypercore import Hypergraph, SparsityParams, parse_oriented, serialize_hypergraph
from .pebble import Verdict, optimize, play
from .representation import representation_map


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args) -> tuple:
    G, tails = parse_oriented(_read(args.file))
    return G, tails, _params(args, G.params)


def _params(args, header: Optional[SparsityParams]) -> SparsityParams:
    k = args.k if args.k is not None else (header.k if header else None)
    l = args.l if args.l is not None else (header.l if header else None)
    if k is None or l is None:
        raise UsageError("parameters unknown: give --k/--l or a header with k >= 1")
    return SparsityParams(k, l)


def _emit(out, pairs, machine: bool, text: str):
    if machine:
        for key, value in pairs:
            print(f"{key}={value}", file=out)
    else:
        print(text, file=out)


def _join(items) -> str:
    return ",".join(map(str, items))


def _trace(game, stream=None):
    stream = stream or sys.stderr
    for move in game.moves or ():
        if move[0] == "add":
            print(f"add e={_join(move[1])} t={move[2]}", file=stream)
        else:
            print(f"shift e={move[1]} t={move[2]}", file=stream)


# -- subcommands -----------------------------------------------------------------


def cmd_decide(args, out) -> int:
    G, _, params = _load(args)
    verdict = play(G, params, record=args.trace)
    if args.trace and verdict.game is not None:
        _trace(verdict.game)
    _emit(out, [("verdict", verdict.kind), ("accepted", _join(verdict.accepted)),
                ("rejected", _join(verdict.rejected))], args.machine, str(verdict.kind))
    return 1 if verdict.kind is Verdict.DEPENDENT else 0


def cmd_extract(args, out) -> int:
    G, _, params = _load(args)
    verdict = play(G, params, record=args.trace)
    if args.trace and verdict.game is not None:
        _trace(verdict.game)
    out.write(serialize_hypergraph(G.sub(verdict.accepted), params=params))
    return 0


def cmd_optimize(args, out) -> int:
    G, _, params = _load(args)
    if G.weights is None or any(w is None for w in G.weights):
        raise UsageError("optimize needs a w= weight on every edge")
    out.write(serialize_hypergraph(optimize(G, params, G.weights), params=params))
    return 0


def cmd_components(args, out) -> int:
    G, _, params = _load(args)
    verdict, comps = decide_with_components(G, params, record=args.trace)
    if args.trace and verdict.game is not None:
        _trace(verdict.game)
    for c in comps:
        if args.machine:
            print(f"component={' '.join(map(str, sorted(c.vertices)))};edges={_join(c.edge_indices)}",
                  file=out)
        else:
            print(str(c), file=out)
    return 0


def cmd_represent(args, out) -> int:
    G, _, params = _load(args)
    rm = representation_map(G, params, record=args.trace)
    if args.trace:
        _trace(rm.game)
    R = Hypergraph(G.n, rm.r, G.weights, params)
    comments = [f"represents {args.file}"]
    comments += [f"e{i} {' '.join(map(str, e))} -> {' '.join(map(str, r))}"
                 for i, (e, r) in enumerate(zip(G.edges, rm.r))]
    out.write(serialize_hypergraph(R, params=params, comments=comments))
    return 0


def cmd_critical(args, out) -> int:
    G, _, params = _load(args)
    critical = representation_map(G, params).r == G.edges
    _emit(out, [("critical", str(critical).lower())], args.machine,
          "critical" if critical else "not-critical")
    return 0


def cmd_decompose(args, out) -> int:
    G = parse_oriented(_read(args.file))[0]
    d = dec.k_map_decompose(G, args.maps)
    for i, (e, a, t) in enumerate(zip(G.edges, d.assignment, d.tails)):
        if args.machine:
            print(f"e{i}=map{a},t{t}", file=out)
        else:
            print(f"e{i} {' '.join(map(str, e))} map={a} tail={t}", file=out)
    return 0


def _parse_parts(text: str) -> dec.MixedDecomposition:
    trees, maps = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, *rest = line.split()
        try:
            indices = tuple(int(x) for x in rest)
        except ValueError:
            raise UsageError(f"parts line {lineno}: edge indices must be integers") from None
        if kind == "tree":
            trees.append(indices)
        elif kind == "map":
            maps.append(indices)
        else:
            raise UsageError(f"parts line {lineno}: expected 'tree' or 'map', got {kind!r}")
    return dec.MixedDecomposition(tuple(trees), tuple(maps))


def cmd_verify_mt(args, out) -> int:
    G, _, params = _load(args)
    d = _parse_parts(_read(args.parts))
    ok = dec.verify_maps_and_trees(G, params.k, params.l, d)
    _emit(out, [("valid", str(ok).lower())], args.machine, "valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_check(args, out) -> int:
    G, _, params = _load(args)
    fn = {"lovasz-recski": dec.check_lovasz_recski,
          "maps-adding": dec.check_maps_after_adding}[args.theorem]
    kwargs = {"mode": args.mode, "trials": args.trials, "seed": args.seed}
    if args.cap is not None:
        kwargs["cap"] = args.cap
    report = fn(G, params, **kwargs)
    lines = report.lines()
    if args.machine:
        print("\n".join(lines), file=out)
    else:
        print(f"{'pass' if report.passed else 'FAIL'}: {report.tested} augmentations, "
              f"{report.failures} counterexamples", file=out)
        for line in lines[7:]:
            print(line, file=out)
    return 0 if report.passed else 1


def cmd_generate(args, out) -> int:
    if args.k is None or args.l is None:
        raise UsageError("generate needs --k and --l")
    dims = [int(x) for x in args.dims.split(",")] if args.dims else [args.s]
    if args.family == "complete":
        G = gen.complete_hypergraph(args.n, args.k, args.l, dims)
    elif args.family == "tight":
        G = gen.generate_tight(args.n, args.s, args.k, args.l, args.seed)
    else:
        G = gen.random_hypergraph(args.n, args.m, dims, args.seed)
    out.write(serialize_hypergraph(G, params=SparsityParams(args.k, args.l)))
    return 0


def cmd_oracle(args, out) -> int:
    G, _, params = _load(args)
    capped = {"cap": args.cap} if args.cap else {}
    if args.check == "sparse":
        result = oracle.is_sparse_bruteforce(G, params, **capped)
        _emit(out, [("sparse", str(result).lower())], args.machine, str(result).lower())
    elif args.check == "tight":
        result = oracle.is_tight_bruteforce(G, params, **capped)
        _emit(out, [("tight", str(result).lower())], args.machine, str(result).lower())
    elif args.check == "components":
        for c in oracle.components_bruteforce(G, params, **capped):
            print(str(c), file=out)
    elif args.check == "partconn":
        result = oracle.is_partition_connected_bruteforce(G, params.k, **capped)
        _emit(out, [("partition_connected", str(result).lower())], args.machine,
              str(result).lower())
    elif args.check == "maxsubgraph":
        best = oracle.max_sparse_subgraph_bruteforce(G, params, G.weights, **capped)
        if args.machine:
            print(f"size={len(best)}", file=out)
            print(f"edges={_join(best)}", file=out)
        else:
            out.write(serialize_hypergraph(G.sub(best), params=params))
    else:
        if not args.other:
            raise UsageError("--check exchange needs --other FILE")
        B2 = parse_oriented(_read(args.other))[0]
        result = oracle.basis_exchange_check(G, B2, params, **capped)
        _emit(out, [("exchange", str(result).lower())], args.machine, str(result).lower())
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--k", type=int, help="override k from the file header")
    common.add_argument("--l", type=int, help="override l from the file header")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, help="size cap for exhaustive work")
    common.add_argument("--trace", action="store_true", help="print pebble moves to stderr")
    common.add_argument("--machine", action="store_true", help="key=value output")

    parser = _Parser(prog="hyperpebble", description="(k,l)-sparse hypergraph pebble games")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, with_file=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if with_file:
            p.add_argument("file", help="hypergraph file, or - for stdin")
        p.set_defaults(func=fn)
        return p

    add("decide", cmd_decide, "sparse / tight / dependent verdict")
    add("extract", cmd_extract, "maximum sparse subgraph")
    add("optimize", cmd_optimize, "minimum-weight maximum sparse subgraph")
    add("components", cmd_components, "components of the accepted subgraph")
    add("represent", cmd_represent, "lower-dimensional representation")
    add("critical", cmd_critical, "is the graph its own representation?")
    p = add("decompose", cmd_decompose, "split a (k,0)-tight graph into k maps")
    p.add_argument("--maps", type=int, required=True, metavar="K")
    p = add("verify-mt", cmd_verify_mt, "verify a maps-and-trees decomposition")
    p.add_argument("--parts", required=True, help="file of 'tree i j ...' / 'map i j ...' lines")
    p = add("check", cmd_check, "augmentation checks on a tight graph")
    p.add_argument("--theorem", required=True, choices=["lovasz-recski", "maps-adding"])
    p.add_argument("--mode", default="exhaustive", choices=["exhaustive", "sampled"])
    p.add_argument("--trials", type=int, default=200)
    p = add("generate", cmd_generate, "generate a hypergraph", with_file=False)
    p.add_argument("--family", required=True, choices=["complete", "tight", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=2, help="edge dimension (tight family)")
    p.add_argument("--m", type=int, default=0, help="edge count (random family)")
    p.add_argument("--dims", help="comma-separated dimensions (complete / random)")
    p = add("oracle", cmd_oracle, "brute-force checks for small inputs")
    p.add_argument("--check", required=True,
                   choices=["sparse", "tight", "components", "partconn", "maxsubgraph", "exchange"])
    p.add_argument("--other", help="second basis for --check exchange")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, HypergraphError, OSError) as exc:
        msg = str(exc).replace("\n", " ")
        if isinstance(exc, OSError) and exc.filename:
            msg = f"{exc.strerror}: {exc.filename}"
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
