"""Command-line interface: ``icosa5 <command> ...``.

Exit status: 0 on success, 1 when verification has fail entries, 2 on
usage, parse or membership errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .group import format_word
from .icosa import ICO_DOMAIN, classify_rotation
from .iso import A5_DOMAIN, full_correspondence
from .perm import CycleParseError, Permutation, format_cycles, parse_cycles
from .tables import render_text, reproduce_table
from .verify import get_model, verify_all, verify_table

DOMAINS = {"ico": ICO_DOMAIN, "a5": A5_DOMAIN}


class UsageError(Exception):
    pass


def infer_domain(text: str, choice: str | None) -> str:
    """Primed or plus labels mean the icosahedron; bare digits follow ``choice`` (default a5)."""
    if re.search(r"['+]", text):
        if choice == "a5":
            raise UsageError(f"{text!r} uses icosahedron labels but --domain a5 was given")
        return "ico"
    return choice or "a5"


def _parse(text: str, domain_name: str) -> Permutation:
    try:
        return parse_cycles(text, DOMAINS[domain_name])
    except CycleParseError as exc:
        raise UsageError(f"cannot parse permutation over the {domain_name} domain: {exc}") from None


def _rotation_for(text: str, domain_name: str) -> tuple[Permutation, Permutation]:
    """Return (rotation, A5 image) for input in either domain."""
    m = get_model()
    p = _parse(text, domain_name)
    if domain_name == "ico":
        if p not in m.ico:
            raise UsageError(f"{format_cycles(p) or '()'} is not one of the 60 icosahedron rotations")
        return p, m.hom(p)
    if p not in m.a5:
        raise UsageError(f"{format_cycles(p) or '()'} is not in A5 (parity {p.parity()})")
    return m.hom.preimage(p), p


def _emit(data, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_verify(args) -> int:
    report = verify_table(args.table) if args.table else verify_all()
    _emit(report.to_dict(), args.json, report.to_text())
    return 0 if report.passed else 1


def cmd_tables(args) -> int:
    tables = [reproduce_table(n) for n in ([args.table] if args.table else range(1, 8))]
    data = tables[0] if args.table else {"tables": tables}
    _emit(data, args.json, "\n\n".join(render_text(t) for t in tables))
    return 0


def cmd_classify(args) -> int:
    m = get_model()
    rot, image = _rotation_for(args.perm, infer_domain(args.perm, args.domain))
    cls = classify_rotation(rot, m.graph)
    data = {
        "rotation_cycles": format_cycles(rot),
        "class": cls.kind,
        "axis": [list(a) for a in cls.axis],
        "order": rot.order(),
        "a5_cycles": format_cycles(image),
        "a5_class": str(image.cycle_type()),
    }
    text = "\n".join([
        f"rotation: {format_cycles(rot) or '()'}",
        f"class:    {cls.kind}",
        f"axis:     {cls.axis_text() or '-'}",
        f"order:    {rot.order()}",
        f"A5 image: {format_cycles(image) or '()'}  [{image.cycle_type()}]",
    ])
    _emit(data, args.json, text)
    return 0


def cmd_word(args) -> int:
    m = get_model()
    name = infer_domain(args.perm, args.domain)
    p = _parse(args.perm, name)
    group = m.ico if name == "ico" else m.a5
    if p not in group:
        raise UsageError(f"{format_cycles(p) or '()'} is not in the {name} group")
    print(format_word(group.word(p)))
    return 0


def cmd_map(args) -> int:
    if args.source == "a5" and re.search(r"['+]", args.perm):
        raise UsageError(f"{args.perm!r} uses icosahedron labels but --from a5 was given")
    rot, image = _rotation_for(args.perm, args.source)
    print(format_cycles(image if args.source == "ico" else rot) or "()")
    return 0


def cmd_graph(args) -> int:
    g = get_model().graph
    data = g.to_dict()
    text = "\n".join([
        "vertices: " + " ".join(data["vertices"]),
        "edges:    " + " ".join("{" + ",".join(e) + "}" for e in data["edges"]),
        "faces:    " + " ".join("{" + ",".join(f) + "}" for f in data["faces"]),
        "antipodes: " + " ".join("{" + ",".join(p) + "}" for p in data["antipodal_pairs"]),
    ])
    _emit(data, args.json, text)
    return 0


def cmd_correspondence(args) -> int:
    m = get_model()
    corr = full_correspondence(m.hom, m.graph)
    _emit(corr.to_list(), args.json, corr.to_text())
    return 0


def _table_number(text: str) -> int:
    n = int(text)
    if not 1 <= n <= 7:
        raise argparse.ArgumentTypeError(f"table must be 1..7, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icosa5", description="Icosahedral rotations and A5, checked table by table.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--table", type=_table_number)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="print the tables rebuilt from computation")
    p.add_argument("--table", type=_table_number)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_tables)

    for name, func, help_ in (
        ("classify", cmd_classify, "rotation class, axis, order and A5 image"),
        ("word", cmd_word, "shortest word in D, Y, T"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("perm", help="permutation in cycle notation, e.g. \"(1,4,5)\"")
        p.add_argument("--domain", choices=sorted(DOMAINS), help="domain for bare digit labels (default a5)")
        if name == "classify":
            p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("map", help="image under the isomorphism, either direction")
    p.add_argument("perm")
    p.add_argument("--from", dest="source", choices=sorted(DOMAINS), required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("graph", help="derived icosahedron structure")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("correspondence", help="the 60-row bijection")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_correspondence)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"icosa5 {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
