"""Text formats.

``.dgt`` (digroup tables)::

    # comment lines start with '#'
    digroup 2
    0 1
    1 0
    ;
    0 1
    1 0

The ``n`` rows before ``;`` are the left product table, the ``n`` rows after
it the right product table.

``.tds`` (transformation digroup spec)::

    gamma 2
    delta 2
    base 0
    gen 1 0
    theta 1 0

Each ``gen`` line (a permutation of Γ in one-line form) is followed by the
``theta`` line giving its image in Sym(Δ). ``base`` is optional (default 0).
With ``cycles=True`` both kinds of line use cycle notation, e.g. ``gen (0 1)``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import Digroup
from .errors import ParseError, StructureError
from .perms import Permutation
from .transform import TransDigroupSpec, spec_from_generators

__all__ = [
    "parse_dgt",
    "format_dgt",
    "load_digroup",
    "parse_tds",
    "format_tds",
    "load_spec",
    "parse_permutation",
]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno) from None


def parse_dgt(text: str) -> tuple[list[list[int]], list[list[int]]]:
    """Parse ``.dgt`` text into ``(left, right)`` tables.

    Only the format is checked here (shape, entry range); whether the tables
    form a digroup is left to the caller.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty file")
    lineno, head = lines[0]
    m = re.fullmatch(r"digroup\s+(\d+)", head)
    if not m:
        raise ParseError(f"expected 'digroup <n>', got {head!r}", lineno)
    n = int(m.group(1))
    if n < 1:
        raise ParseError("carrier must be nonempty", lineno)
    body = lines[1:]
    if len(body) != 2 * n + 1:
        raise ParseError(f"expected {2 * n + 1} table lines after the header, got {len(body)}")
    sep_no, sep = body[n]
    if sep != ";":
        raise ParseError(f"expected ';' separator, got {sep!r}", sep_no)
    tables = []
    for rows in (body[:n], body[n + 1:]):
        t = []
        for ln, line in rows:
            row = _ints(line, ln)
            if len(row) != n:
                raise ParseError(f"row has {len(row)} entries, expected {n}", ln)
            if any(not 0 <= v < n for v in row):
                raise ParseError(f"entry out of range 0..{n - 1}", ln)
            t.append(row)
        tables.append(t)
    return tables[0], tables[1]


def _table_lines(t) -> list[str]:
    return [" ".join(str(int(v)) for v in row) for row in t]


def format_dgt(tables, comments: list[str] | None = None) -> str:
    """Serialize a Digroup or a ``(left, right)`` pair."""
    if isinstance(tables, Digroup):
        left, right = tables.left.tolist(), tables.right.tolist()
    else:
        left, right = tables
    out = [f"# {c}" if c else "#" for c in (comments or [])]
    out.append(f"digroup {len(left)}")
    out += _table_lines(left)
    out.append(";")
    out += _table_lines(right)
    return "\n".join(out) + "\n"


def load_digroup(path: str | Path) -> Digroup:
    return Digroup(*parse_dgt(Path(path).read_text()))


def parse_permutation(text: str, degree: int, cycles: bool = False, lineno: int | None = None) -> Permutation:
    try:
        if cycles:
            return Permutation.from_cycles(degree, text)
        p = Permutation(tuple(_ints(text, lineno)))
    except ParseError:
        raise
    except StructureError as exc:
        raise ParseError(str(exc), lineno) from None
    if p.degree != degree:
        raise ParseError(f"permutation {text!r} has degree {p.degree}, expected {degree}", lineno)
    return p


def parse_tds(text: str, cycles: bool = False) -> TransDigroupSpec:
    """Parse ``.tds`` text. The homomorphism check on θ happens here, so an
    inconsistent theta raises NotAHomomorphismError."""
    fields: dict[str, int] = {}
    gens: list[tuple[int, str]] = []
    thetas: list[tuple[int, str]] = []
    for lineno, line in _content_lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in ("gamma", "delta", "base"):
            if key in fields:
                raise ParseError(f"duplicate {key!r}", lineno)
            if not re.fullmatch(r"\d+", rest):
                raise ParseError(f"{key} expects a nonnegative integer", lineno)
            fields[key] = int(rest)
        elif key == "gen":
            if len(thetas) != len(gens):
                raise ParseError("'gen' must be followed by its 'theta' line", lineno)
            gens.append((lineno, rest))
        elif key == "theta":
            if len(thetas) != len(gens) - 1:
                raise ParseError("'theta' without a preceding 'gen'", lineno)
            thetas.append((lineno, rest))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if "gamma" not in fields or "delta" not in fields:
        raise ParseError("'gamma' and 'delta' are required")
    if len(thetas) != len(gens):
        raise ParseError("last 'gen' has no 'theta' line")
    gamma, delta, base = fields["gamma"], fields["delta"], fields.get("base", 0)
    if gamma < 1 or delta < 1:
        raise ParseError("gamma and delta must be >= 1")
    if base >= delta:
        raise ParseError(f"base {base} outside delta")
    g = [parse_permutation(t, gamma, cycles, ln) for ln, t in gens]
    th = [parse_permutation(t, delta, cycles, ln) for ln, t in thetas]
    return spec_from_generators(gamma, delta, g, th, base)


def format_tds(spec: TransDigroupSpec, comments: list[str] | None = None, cycles: bool = False) -> str:
    def perm(p: Permutation) -> str:
        return p.cycle_string() if cycles else p.one_line()

    out = [f"# {c}" if c else "#" for c in (comments or [])]
    out += [f"gamma {spec.gamma_size}", f"delta {spec.delta_size}", f"base {spec.base_point}"]
    for g in spec.G.generators:
        out.append(f"gen {perm(g)}")
        out.append(f"theta {perm(spec.theta(g))}")
    return "\n".join(out) + "\n"


def load_spec(path: str | Path, cycles: bool = False) -> TransDigroupSpec:
    return parse_tds(Path(path).read_text(), cycles)
