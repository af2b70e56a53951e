"""Command-line interface.

Every command prints one JSON document on stdout.  Exit status is 0 on
success, 1 when an input graph is not quasi-chain (the witness is printed),
and 2 on malformed input or an exceeded oracle budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .encoding import Encoding, decompose, encode_enhanced
from .generators import GeneratorSpec, SamplingError, generate
from .graph import BipartiteGraph, VertexRef
from .implicit import VertexLabel, adjacent_from_labels, assign_labels, contiguity_layout, unpack_label
from .optimize import balanced_biclique, ids_to_dict, independent_dominating_set, max_edge_biclique
from .oracles import (
    OracleBudgetError,
    brute_biclique,
    brute_independent_dominating,
    brute_independent_sets,
    brute_quasi_chain,
)
from .permutations import (
    NotQuasiPermutationGraphError,
    format_permutation,
    parse_permutation,
    pattern_contains,
    qp_graph,
    qp_graph_star,
    recover_permutation,
    star_gadget,
)
from .recognition import NotQuasiChainError, Unbalanced2P3, is_quasi_chain

EXIT_OK, EXIT_NOT_QUASI_CHAIN, EXIT_BAD_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _graph(path: str) -> BipartiteGraph:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a graph object")
    return BipartiteGraph.from_dict(data)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# commands ------------------------------------------------------------------------


def cmd_recognize(args) -> int:
    res = is_quasi_chain(_graph(args.graph))
    if isinstance(res, Unbalanced2P3):
        _emit({"quasiChain": False, "witness": res.to_dict()})
        return EXIT_NOT_QUASI_CHAIN
    _emit({"quasiChain": True, "certificate": res.to_dict()})
    return EXIT_OK


def cmd_encode(args) -> int:
    _emit(encode_enhanced(_graph(args.graph)).to_dict())
    return EXIT_OK


def cmd_decode(args) -> int:
    data = _load_json(args.word)
    if not isinstance(data, dict):
        raise InputError("expected an enhanced-word object")
    _emit(Encoding.from_dict(data).graph().to_dict())
    return EXIT_OK


def cmd_decompose(args) -> int:
    _emit(decompose(_graph(args.graph)).to_dict())
    return EXIT_OK


def cmd_labels(args) -> int:
    labels = assign_labels(_graph(args.graph))
    if args.dump:
        sys.stdout.write(labels.dump())
        return EXIT_OK
    _emit(
        {
            "width": labels.width,
            "labels": [
                {"label": lab.dump(), "packed": labels.packed(VertexRef(lab.side, lab.id))}
                for lab in (*labels.a, *labels.b)
            ],
        }
    )
    return EXIT_OK


def _label(text: str) -> VertexLabel:
    if text and set(text) <= {"0", "1"}:
        return unpack_label(text)
    return VertexLabel.parse(text)


def cmd_adjacent(args) -> int:
    _emit({"adjacent": adjacent_from_labels(_label(args.label1), _label(args.label2))})
    return EXIT_OK


def cmd_contiguity(args) -> int:
    _emit(contiguity_layout(_graph(args.graph)).to_dict())
    return EXIT_OK


def cmd_biclique(args) -> int:
    g = _graph(args.graph)
    sol = max_edge_biclique(g) if args.objective == "edges" else balanced_biclique(g)
    _emit(sol.to_dict(args.objective))
    return EXIT_OK


def cmd_ids(args) -> int:
    _emit(ids_to_dict(independent_dominating_set(_graph(args.graph))))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "random" and args.seed is None:
        raise InputError("gen random requires --seed")
    spec = GeneratorSpec(args.family, args.n, args.seed or 0, args.density)
    _emit(generate(spec).to_dict())
    return EXIT_OK


def cmd_perm(args) -> int:
    if args.action == "encode":
        _emit(qp_graph(parse_permutation(args.perm)).to_dict())
    elif args.action == "encode-star":
        _emit(qp_graph_star(parse_permutation(args.perm)).to_dict())
    elif args.action == "recover":
        _emit({"permutation": format_permutation(recover_permutation(_graph(args.graph)))})
    else:
        rho, pi = parse_permutation(args.rho), parse_permutation(args.pi)
        _emit({"contains": pattern_contains(rho, pi)})
    return EXIT_OK


def cmd_gadget(args) -> int:
    g, h = _graph(args.g), _graph(args.h)
    g_star, h_star = star_gadget(g, h)
    _emit({"p": g.max_degree() + 1, "g": g_star.to_dict(), "h": h_star.to_dict()})
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _graph(args.graph)
    if args.name == "quasi-chain":
        _emit({"oracle": args.name, "quasiChain": brute_quasi_chain(g)})
    elif args.name == "biclique":
        _emit(brute_biclique(g, args.objective).to_dict(args.objective))
    elif args.name == "ids":
        _emit(ids_to_dict(brute_independent_dominating(g)))
    else:
        sets = brute_independent_sets(g)
        _emit({"oracle": args.name, "count": len(sets), "sets": [[list(v) for v in sorted(s)] for s in sets]})
    return EXIT_OK


# parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quasichain", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, func, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph JSON file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("recognize", cmd_recognize, "decide quasi-chain membership with a certificate")
    graph_cmd("encode", cmd_encode, "enhanced word of a quasi-chain graph")
    sp = sub.add_parser("decode", help="graph of an enhanced word")
    sp.add_argument("word", help="enhanced-word JSON file, or - for stdin")
    sp.set_defaults(func=cmd_decode)
    graph_cmd("decompose", cmd_decompose, "chain graph plus top and bottom matchings")
    sp = graph_cmd("labels", cmd_labels, "adjacency labels")
    sp.add_argument("--dump", action="store_true", help="one side:id:zKey:top:bottom line per vertex")
    sp = sub.add_parser("adjacent", help="adjacency from two labels alone")
    sp.add_argument("label1")
    sp.add_argument("label2")
    sp.set_defaults(func=cmd_adjacent)
    graph_cmd("contiguity", cmd_contiguity, "vertex order with at most three ranges per neighbourhood")
    sp = graph_cmd("biclique", cmd_biclique, "maximum edge or balanced biclique")
    sp.add_argument("--objective", choices=("edges", "balanced"), default="edges")
    graph_cmd("ids", cmd_ids, "minimum independent dominating set")

    sp = sub.add_parser("gen", help="generate a graph")
    sp.add_argument("family", choices=("zn", "qn", "dn", "random"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--density", type=float, default=0.2, help="mark density for random graphs")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("perm", help="permutations and quasi-permutation graphs")
    psub = sp.add_subparsers(dest="action", required=True)
    for name in ("encode", "encode-star"):
        q = psub.add_parser(name)
        q.add_argument("perm", help="one-line notation, e.g. 2,1,3")
    q = psub.add_parser("recover")
    q.add_argument("graph")
    q = psub.add_parser("contains")
    q.add_argument("rho")
    q.add_argument("pi")
    sp.set_defaults(func=cmd_perm)

    sp = sub.add_parser("gadget", help="star gadgets of two connected graphs")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.set_defaults(func=cmd_gadget)

    sp = sub.add_parser("oracle", help="run a brute-force oracle")
    sp.add_argument("name", choices=("quasi-chain", "biclique", "ids", "independent-sets"))
    sp.add_argument("graph")
    sp.add_argument("--objective", choices=("edges", "balanced"), default="edges")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NotQuasiChainError as exc:
        _emit({"quasiChain": False, "witness": exc.witness.to_dict()})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_QUASI_CHAIN
    except (InputError, OracleBudgetError, NotQuasiPermutationGraphError, SamplingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
