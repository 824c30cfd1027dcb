"""Permutations as image tuples on points 0..n-1.

A permutation of degree n is a tuple ``p`` with ``p[x]`` the image of x.
Composition follows function application: ``compose(a, b)`` maps x to
``a[b[x]]`` ("apply b, then a").
"""

from __future__ import annotations

from .errors import SpecParseError

Permutation = tuple[int, ...]


def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a after b: x -> a[b[x]]."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_permutation(p: tuple[int, ...]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Cycle decomposition; nontrivial cycles only, each starting at its
    smallest point, ordered by that point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        out.append(tuple(cyc))
    return out


def order_of(p: Permutation) -> int:
    """Multiplicative order = lcm of cycle lengths."""
    from .numth import lcm

    lengths = [len(c) for c in cycles(p)]
    return lcm(*lengths) if lengths else 1


def format_cycles(p: Permutation) -> str:
    """Cycle notation; the identity renders as "()"."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cs)


def parse_cycles(text: str, degree: int, line: int | None = None) -> Permutation:
    """Parse cycle notation like "(0 1 2)(3 4)" into an image tuple.

    Points are 0-based and must be < degree; "()" is the identity.
    Raises SpecParseError (with the given line number) on malformed input.
    """
    images = list(range(degree))
    touched = [False] * degree
    s = text.strip()
    if not s:
        raise SpecParseError("empty permutation", line)
    pos = 0
    saw_cycle = False
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] != "(":
            raise SpecParseError(f"expected '(' at column {pos + 1} in {s!r}", line)
        end = s.find(")", pos)
        if end < 0:
            raise SpecParseError(f"unclosed cycle in {s!r}", line)
        body = s[pos + 1 : end].replace(",", " ").split()
        pos = end + 1
        saw_cycle = True
        if not body:
            continue  # "()" = identity cycle
        points = []
        for tok in body:
            try:
                x = int(tok)
            except ValueError:
                raise SpecParseError(f"bad point {tok!r} in {s!r}", line) from None
            if not 0 <= x < degree:
                raise SpecParseError(
                    f"point {x} out of range for degree {degree}", line
                )
            if touched[x]:
                raise SpecParseError(f"point {x} repeated in {s!r}", line)
            touched[x] = True
            points.append(x)
        for i, x in enumerate(points):
            images[x] = points[(i + 1) % len(points)]
    if not saw_cycle:
        raise SpecParseError(f"no cycles found in {s!r}", line)
    return tuple(images)
