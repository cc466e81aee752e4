"""Command-line interface.

Every subcommand reads a Cayley file or a generator file (``-`` for
standard input).  Exit codes: 0 success, 2 parse error, 3 validation
error, 4 size cap, 5 inconclusive finding.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .algebra import SemigroupTable, green_relations
from .engine import (
    MAGNITUDE,
    ORBIT,
    decide_nobility,
    represent,
    verify_representation,
    wagner_preston,
)
from .errors import NobleError
from .filters import enumerate_filters, magnitude_classes
from .formats import (
    certificate_document,
    dumps,
    emit_generators,
    ids_from_text,
    load_representation,
    load_semigroup,
    representation_document,
)
from .oracle.search import brute_force_noble


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def hasse_edges(S: SemigroupTable) -> list[list[int]]:
    """Covering pairs ``[s, t]`` of the natural order."""
    edges = []
    for s in range(S.n):
        above = S.up[s] & ~(1 << s)
        for t in range(S.n):
            if above >> t & 1 and not any(
                above >> u & 1 and u != t and S.up[u] >> t & 1 for u in range(S.n)
            ):
                edges.append([s, t])
    return edges


def _text(doc, indent="") -> str:
    """A plain rendering of a JSON-like document."""
    if isinstance(doc, dict):
        lines = []
        for key in sorted(doc):
            val = doc[key]
            if isinstance(val, (dict, list)) and val and any(isinstance(v, (dict, list)) for v in (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{indent}{key}:")
                lines.append(_text(val, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_flat(val)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(
            _text(v, indent + "  ") if isinstance(v, dict) else f"{indent}- {_flat(v)}" for v in doc
        )
    return f"{indent}{_flat(doc)}"


def _flat(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_flat(v) for v in val) + "]"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_flat(val[k])}" for k in sorted(val)) + "}"
    if val is None:
        return "-"
    return str(val)


def cmd_validate(S, args, source):
    return {
        "valid": True,
        "order": S.n,
        "idempotents": list(S.idempotents.ids()),
        "zero": S.zero,
        "identity": S.identity,
    }


def cmd_analyze(S, args, source):
    g = green_relations(S)
    return {
        "order": S.n,
        "idempotents": list(S.idempotents.ids()),
        "zero": S.zero,
        "identity": S.identity,
        "inverses": list(S.inv),
        "hasse": hasse_edges(S),
        "green": {"L": [list(b) for b in g.L], "R": [list(b) for b in g.R], "D": [list(b) for b in g.D]},
    }


def cmd_filters(S, args, source):
    fs = enumerate_filters(S)
    classes = magnitude_classes(S, fs, s1=args.s1)
    index = {F.mask: i for i, F in enumerate(fs)}
    return {
        "filters": [list(F.ids()) for F in fs],
        "magnitude_classes": [[index[F.mask] for F in cls] for cls in classes],
        "s1": args.s1,
    }


def cmd_nobility(S, args, source):
    return certificate_document(decide_nobility(S, oracle_bound=args.oracle_bound), source)


def cmd_represent(S, args, source):
    rep = represent(S, S.element_set(ids_from_text(args.H)), args.family)
    return representation_document(rep)


def cmd_verify(S, args, source):
    import json

    try:
        doc = json.loads(_read(args.rep))
    except ValueError as exc:
        from .errors import ParseError

        raise ParseError(exc.lineno if hasattr(exc, "lineno") else 0, f"representation is not JSON: {exc}") from None
    if isinstance(doc, dict) and "witness" in doc and "action" not in doc:
        doc = doc["witness"] or {}
    rep = verify_representation(S, load_representation(S, doc))
    return {"degree": rep.degree, **rep.flags()}


def cmd_embed_wp(S, args, source):
    F, images = wagner_preston(S)
    if args.format == "text":
        return emit_generators(F.m, images)
    return {"points": F.m, "maps": [[None if x < 0 else x for x in phi.map] for phi in images]}


def cmd_oracle(S, args, source):
    w = brute_force_noble(S, args.max_degree)
    if w is None:
        return {"found": False, "bound": args.max_degree}
    return {
        "found": True,
        "bound": args.max_degree,
        "degree": w.degree,
        "transitive": w.transitive,
        "assignment": [[None if x < 0 else x for x in phi.map] for phi in w.assignment],
    }


COMMANDS = {
    "validate": (cmd_validate, "check the inverse semigroup axioms"),
    "analyze": (cmd_analyze, "idempotents, zero, order Hasse edges, Green partitions"),
    "filters": (cmd_filters, "all filters and their magnitude classes"),
    "nobility": (cmd_nobility, "decide nobility and print a certificate"),
    "represent": (cmd_represent, "build and verify the action on a filter family"),
    "verify": (cmd_verify, "re-verify a stored representation"),
    "embed-wp": (cmd_embed_wp, "the right regular embedding as a generator file"),
    "oracle": (cmd_oracle, "bounded brute-force search for a transitive embedding"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--s1", action="store_true", help="allow the adjoined identity in magnitude tests")
    common.add_argument("--seed-order", choices=("fixed",), default="fixed",
                        help="candidate scan order (only the ascending-mask order is available)")
    parser = argparse.ArgumentParser(prog="noble", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"noble {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input", help="Cayley or generator file, '-' for stdin")
        if name == "nobility":
            p.add_argument("--oracle-bound", type=int, default=0,
                           help="cross-check a negative verdict up to this degree")
        elif name == "represent":
            p.add_argument("--H", required=True, help="element ids of H, e.g. '1,5'")
            p.add_argument("--family", choices=(ORBIT, MAGNITUDE), default=ORBIT)
        elif name == "verify":
            p.add_argument("--rep", required=True, help="representation or certificate JSON")
        elif name == "oracle":
            p.add_argument("--max-degree", type=int, required=True)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    func, _ = COMMANDS[args.command]
    try:
        source = _read(args.input)
        S = load_semigroup(source)
        out = func(S, args, source)
    except NobleError as exc:
        print(f"noble: {type(exc).__name__}: {exc}", file=stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"noble: {exc}", file=stderr)
        return 2
    if isinstance(out, str):
        stdout.write(out)
    elif args.format == "json":
        stdout.write(dumps(out))
    else:
        stdout.write(_text(out) + "\n")
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
