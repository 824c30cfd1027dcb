"""Built-in group catalog: named GroupSpecs, deterministic order.

Dihedral and quaternion names use the group ORDER (D8 = dihedral of order 8,
Q16 = generalized quaternion of order 16). Affine entries are named
AGL(1,p)d<d> for the subgroup of index (p-1)/d in the point stabilizer.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import GroupSpec, affine_group, product_spec
from .perms import Permutation, identity


def cyclic_spec(n: int, name: str | None = None) -> GroupSpec:
    gens: tuple[Permutation, ...]
    gens = () if n == 1 else (tuple((x + 1) % n for x in range(n)),)
    return GroupSpec(name or f"Z{n}", max(n, 1), gens)


def _transpositions_spec(name: str, pieces: list[int]) -> GroupSpec:
    """Direct sum of disjoint cycles, one generator per piece."""
    degree = sum(pieces)
    gens = []
    start = 0
    for length in pieces:
        img = list(range(degree))
        for i in range(length):
            img[start + i] = start + (i + 1) % length
        gens.append(tuple(img))
        start += length
    return GroupSpec(name, degree, tuple(gens))


def dihedral_spec(order: int) -> GroupSpec:
    """Dihedral group of the given (even, >= 4) order on order/2 points."""
    if order % 2 or order < 4:
        raise ValueError(f"dihedral order must be even and >= 4, got {order}")
    n = order // 2
    rot = tuple((x + 1) % n for x in range(n))
    flip = tuple((n - x) % n for x in range(n))
    return GroupSpec(f"D{order}", n, (rot, flip))


def dicyclic_spec(order: int) -> GroupSpec:
    """Dicyclic group of order 4n in its left regular representation.

    For n a power of 2 this is the generalized quaternion group (Q8, Q16).
    Element (i, j) = a^i b^j sits at point i + 2n*j.
    """
    if order % 4:
        raise ValueError(f"dicyclic order must be divisible by 4, got {order}")
    n2 = order // 2  # = 2n, the order of a

    def idx(i: int, j: int) -> int:
        return i % n2 + n2 * j

    # a*(k,l) = (k+1, l);  b*(k,l) = (-k, 1) if l == 0 else (-k + n, 0)
    perm_a = [0] * order
    perm_b = [0] * order
    for l in (0, 1):
        for k in range(n2):
            perm_a[idx(k, l)] = idx(k + 1, l)
            if l == 0:
                perm_b[idx(k, l)] = idx(-k, 1)
            else:
                perm_b[idx(k, l)] = idx(-k + n2 // 2, 0)
    return GroupSpec(f"Q{order}", order, (tuple(perm_a), tuple(perm_b)))


def symmetric_spec(n: int) -> GroupSpec:
    cyc = tuple((x + 1) % n for x in range(n))
    swap = tuple([1, 0] + list(range(2, n)))
    return GroupSpec(f"S{n}", n, (cyc, swap))


def alternating_spec(n: int) -> GroupSpec:
    """A_n from (0 1 2) plus an n-cycle (n odd) or (0 1)(2 3) (n = 4)."""
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2:
        other = tuple((x + 1) % n for x in range(n))
    else:
        img = list(range(n))
        img[0], img[1], img[2], img[3] = 1, 0, 3, 2
        other = tuple(img)
    return GroupSpec(f"A{n}", n, (three, other))


@lru_cache(maxsize=1)
def builtin_catalog() -> tuple[GroupSpec, ...]:
    specs: list[GroupSpec] = []

    for n in list(range(1, 17)) + [20, 24]:
        specs.append(cyclic_spec(n))

    specs.append(_transpositions_spec("E4", [2, 2]))
    specs.append(_transpositions_spec("E8", [2, 2, 2]))
    specs.append(_transpositions_spec("E9", [3, 3]))
    specs.append(_transpositions_spec("E25", [5, 5]))
    specs.append(_transpositions_spec("E27", [3, 3, 3]))

    specs.append(product_spec(cyclic_spec(4), cyclic_spec(2), "Z4xZ2"))
    specs.append(product_spec(cyclic_spec(9), cyclic_spec(3), "Z9xZ3"))

    for order in range(8, 33, 2):
        specs.append(dihedral_spec(order))

    specs.append(dicyclic_spec(8))
    specs.append(dicyclic_spec(16))

    specs.append(symmetric_spec(3))
    specs.append(symmetric_spec(4))
    specs.append(alternating_spec(4))
    specs.append(alternating_spec(5))
    specs.append(product_spec(symmetric_spec(3), cyclic_spec(5), "S3xZ5"))
    specs.append(product_spec(symmetric_spec(3), symmetric_spec(3), "S3xS3"))

    for p in (3, 5, 7, 11, 13, 17):
        for d in range(1, p):
            if (p - 1) % d == 0:
                specs.append(affine_group(p, d))

    specs.append(product_spec(alternating_spec(4), cyclic_spec(5), "A4xZ5"))
    specs.append(product_spec(dicyclic_spec(8), cyclic_spec(3), "Q8xZ3"))
    specs.append(product_spec(dihedral_spec(8), cyclic_spec(3), "D8xZ3"))

    names = [s.name for s in specs]
    assert len(names) == len(set(names)), "catalog names must be unique"
    return tuple(specs)


def catalog_names() -> list[str]:
    return [s.name for s in builtin_catalog()]


def catalog_spec(name: str) -> GroupSpec:
    for s in builtin_catalog():
        if s.name == name:
            return s
    raise KeyError(f"no catalog group named {name!r}")
