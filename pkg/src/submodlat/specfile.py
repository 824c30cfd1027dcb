"""The group-spec file format.

Line-oriented, 0-based points::

    # comment
    name S3
    degree 3
    gen (0 1 2)
    gen (0 1)

``degree`` must appear before any ``gen`` line. Parse errors carry 1-based
line numbers.
"""

from __future__ import annotations

from .errors import SpecParseError
from .groups import GroupSpec
from .perms import Permutation, format_cycles, parse_cycles


def parse_spec_text(text: str, default_name: str = "group") -> GroupSpec:
    name = None
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            if not rest:
                raise SpecParseError("name directive needs a value", lineno)
            name = rest
        elif head == "degree":
            try:
                degree = int(rest)
            except ValueError:
                raise SpecParseError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise SpecParseError(f"degree must be >= 1, got {degree}", lineno)
        elif head == "gen":
            if degree is None:
                raise SpecParseError("gen before degree", lineno)
            gens.append(parse_cycles(rest, degree, line=lineno))
        else:
            raise SpecParseError(f"unknown directive {head!r}", lineno)
    if degree is None:
        raise SpecParseError("missing degree directive")
    return GroupSpec(name if name is not None else default_name, degree, tuple(gens))


def parse_spec_file(path) -> GroupSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec_text(fh.read())


def format_spec(spec: GroupSpec) -> str:
    lines = [f"name {spec.name}", f"degree {spec.degree}"]
    lines += [f"gen {format_cycles(g)}" for g in spec.generators]
    return "\n".join(lines) + "\n"
