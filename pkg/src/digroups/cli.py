"""Command line interface: ``digroups <command> ...``.

Exit codes: 0 ok, 1 invalid algebra, 2 parse/format error, 3 not isomorphic,
4 failed verification or violated structural claim, 5 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core
from .cayley import embed
from .core import Digroup
from .enumeration import (
    BRUTE_GUARD,
    CONSTRUCTIVE_GUARD,
    Catalog,
    brute_enumerate,
    canonical_key,
    constructive_enumerate,
    cross_check,
)
from .errors import (
    GuardError,
    InvalidDigroupError,
    InvariantViolation,
    NotAHomomorphismError,
    StructureError,
    VerificationError,
)
from .formats import format_dgt, format_tds, load_spec, parse_dgt
from .transform import build

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_NOT_ISO, EXIT_VERIFY, EXIT_GUARD = range(6)


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _read_digroup(path: str) -> Digroup:
    try:
        left, right = parse_dgt(Path(path).read_text())
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc}")
    except StructureError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}")
    try:
        return Digroup(left, right)
    except InvalidDigroupError as exc:
        lines = [f"{path}: invalid digroup"] + [_violation_line(v) for v in exc.report.violations[:20]]
        if len(exc.report.violations) > 20:
            lines.append(f"... {len(exc.report.violations) - 20} more")
        raise _Exit(EXIT_INVALID, "\n".join(lines))


def _violation_line(v) -> str:
    law, witness = v
    if isinstance(witness, tuple):
        return f"violation {law} at ({', '.join(map(str, witness))})"
    if witness is None:
        return f"violation {law}"
    return f"violation {law} at element {witness}"


def analysis_report(D: Digroup) -> dict:
    e = D.bar_unit
    c = core.centers(D)
    inv = [core.inverses(D, x, e) for x in range(D.n)]
    return {
        "valid": True,
        "violations": [],
        "order": D.n,
        "halo": list(D.halo),
        "identities": list(core.identities(D)),
        "target_center": list(c.target),
        "source_center": list(c.source),
        "bar_unit": e,
        "inverse_table": [[x, p.left_inv, p.right_inv] for x, p in enumerate(inv)],
    }


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if key == "inverse_table":
            print("inverse_table: (x, left, right)")
            for row in value:
                print("  " + " ".join(map(str, row)))
        elif isinstance(value, list):
            print(f"{key}: {' '.join(map(str, value)) if value else '-'}")
        else:
            print(f"{key}: {value}")


def cmd_verify(args) -> int:
    D = _read_digroup(args.path)
    print(f"valid digroup of order {D.n}; halo: {' '.join(map(str, D.halo))}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    _emit(analysis_report(_read_digroup(args.path)), args.format)
    return EXIT_OK


def _load_spec(path: str, cycles: bool):
    try:
        return load_spec(path, cycles)
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc}")
    except NotAHomomorphismError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: theta is not a homomorphism: {exc}")
    except StructureError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}")


def cmd_construct(args) -> int:
    spec = _load_spec(args.spec, args.cycles)
    B = build(spec)
    comments = ["transformation digroup, element index = l[s; f]"]
    comments += [f"{k} = {l}" for k, l in enumerate(B.lmaps)]
    text = format_dgt(B.digroup, comments)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_embed(args) -> int:
    D = _read_digroup(args.path)
    try:
        E = embed(D, args.bar_unit)
    except (VerificationError, InvariantViolation) as exc:
        raise _Exit(EXIT_VERIFY, f"embedding verification failed: {exc}")
    except core.NotABarUnitError as exc:
        raise _Exit(EXIT_PARSE, str(exc))
    prefix = Path(args.output)
    tds = format_tds(E.spec, [
        f"target of the embedding of {Path(args.path).name} (bar-unit {E.bar_unit})",
        "delta point k = bar-unit " + ", ".join(f"{k}:{a}" for k, a in enumerate(E.halo_order)),
    ])
    mapping = ["# element -> index in the construction of the .tds file"]
    mapping += [f"# {x} -> {l}" for x, l in enumerate(E.map)]
    mapping += [f"{x} {E.target_index(x)}" for x in range(D.n)]
    paths = {
        "tds": prefix.with_suffix(".tds"),
        "map": prefix.with_suffix(".map"),
        "evidence": prefix.with_suffix(".json"),
    }
    paths["tds"].write_text(tds)
    paths["map"].write_text("\n".join(mapping) + "\n")
    paths["evidence"].write_text(json.dumps(E.evidence, indent=2) + "\n")
    print(f"embedded order {D.n}: |halo| = {len(D.halo)}, |translations| = {len(E.translations.group)}; "
          f"wrote {paths['tds']}, {paths['map']}, {paths['evidence']}")
    return EXIT_OK


def cmd_iso(args) -> int:
    A, B = _read_digroup(args.a), _read_digroup(args.b)
    phi = core.find_isomorphism(A, B)
    if phi is None:
        print("not isomorphic")
        return EXIT_NOT_ISO
    print("isomorphic")
    for x, y in enumerate(phi):
        print(f"{x} {y}")
    return EXIT_OK


def _catalog_section(cat: Catalog) -> dict:
    classes = []
    for k, D in enumerate(cat.classes):
        entry = {"index": k, **canonical_key(D).summary()}
        prov = cat.provenance[k]
        if "group" in prov:
            entry["construction"] = {"delta": prov["delta"], "group": prov["group"],
                                     "theta_images": prov["theta_images"]}
        classes.append(entry)
    return {"method": cat.method, "count": len(cat), "classes": classes}


def cmd_classify(args) -> int:
    n = args.order
    report: dict = {"order": n}
    cats = {}
    if args.method in ("brute", "both"):
        cats["brute"] = brute_enumerate(n, guard=args.brute_guard)
    if args.method in ("constructive", "both"):
        cats["constructive"] = constructive_enumerate(n, guard=args.constructive_guard)
    for name, cat in cats.items():
        report[name] = _catalog_section(cat)
    status = EXIT_OK
    if args.method == "both":
        cc = cross_check(n, cats["brute"], cats["constructive"])
        report["cross_check"] = {
            "matched": cc.matched,
            "brute_count": cc.brute_count,
            "constructive_count": cc.constructive_count,
            "matching": [list(p) for p in cc.matching],
            "unmatched_brute": cc.unmatched_brute,
            "unmatched_constructive": cc.unmatched_constructive,
        }
        if not cc.matched:
            status = EXIT_VERIFY
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for name, cat in cats.items():
            print(f"{name}: {len(cat)} classes of order {n}")
            for c in report[name]["classes"]:
                line = (f"  [{c['index']}] halo {c['halo']}, identities {c['identities']}, "
                        f"target center {c['target_center']}, source center {c['source_center']}")
                if "construction" in c:
                    k = c["construction"]
                    line += f"  <- delta {k['delta']} x {k['group']}, theta {k['theta_images']}"
                print(line)
        if "cross_check" in report:
            cc = report["cross_check"]
            print(f"cross-check: {'match' if cc['matched'] else 'MISMATCH'} "
                  f"({cc['brute_count']} brute, {cc['constructive_count']} constructive)")
            for i, j in cc["matching"]:
                print(f"  brute {i} <-> constructive {j}")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="digroups", description="Finite digroup toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check the digroup axioms on a .dgt file")
    s.add_argument("path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("analyze", help="halo, identities, centers and inverses")
    s.add_argument("path")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("construct", help="materialize a .tds spec as a .dgt file")
    s.add_argument("spec")
    s.add_argument("-o", "--output")
    s.add_argument("--cycles", action="store_true", help="permutations in cycle notation")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("embed", help="represent a digroup as a transformation digroup")
    s.add_argument("path")
    s.add_argument("-o", "--output", required=True, help="output prefix for .tds/.map/.json")
    s.add_argument("--bar-unit", type=int, default=None)
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("iso", help="test two digroups for isomorphism")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("classify", help="digroups of a given order up to isomorphism")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--method", choices=("brute", "constructive", "both"), default="constructive")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--brute-guard", type=int, default=BRUTE_GUARD)
    s.add_argument("--constructive-guard", type=int, default=CONSTRUCTIVE_GUARD)
    s.set_defaults(func=cmd_classify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if exc.message:
            print(exc.message, file=sys.stderr if exc.code != EXIT_INVALID else sys.stdout)
        return exc.code
    except GuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (VerificationError, InvariantViolation) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
