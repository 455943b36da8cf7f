"""The ".grp" group text format.

A file is a `degree: <n>` line followed by one `gen: <cycles>` line per
generator.  Lines starting with `#` and blank lines are ignored.  Round
trips are bit-exact on the parsed generators: parse -> serialize -> parse
yields identical generator permutations in identical order.
"""

from __future__ import annotations

from .group import Group
from .perm import Permutation, format_cycles, parse_permutation


def parse_group_text(text: str) -> Group:
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("degree:"):
            if degree is not None:
                raise ValueError(f"line {lineno}: duplicate degree line")
            try:
                degree = int(line[len("degree:"):].strip())
            except ValueError:
                raise ValueError(f"line {lineno}: bad degree") from None
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be positive")
        elif line.startswith("gen:"):
            if degree is None:
                raise ValueError(f"line {lineno}: gen before degree")
            gens.append(parse_permutation(line[len("gen:"):].strip(), degree))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if degree is None:
        raise ValueError("missing degree line")
    return Group(gens, degree)


def serialize_group(G: Group, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"degree: {G.degree}")
    lines.extend(f"gen: {format_cycles(g)}" for g in G.generators)
    return "\n".join(lines) + "\n"


def load_group_file(path: str) -> Group:
    with open(path, encoding="utf-8") as fh:
        return parse_group_text(fh.read())


def save_group_file(path: str, G: Group, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_group(G, comment))
