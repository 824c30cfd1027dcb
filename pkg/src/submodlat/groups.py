"""Finite permutation groups with fully enumerated, canonically ordered elements.

A Group stores every element as an image tuple, sorted lexicographically.
The identity is lexicographically minimal, so it always gets element id 0;
all downstream ids (subgroups, lattice tables) inherit this reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceLimitError
from .numth import lcm
from .perms import (
    Permutation,
    compose,
    identity,
    inverse,
    is_permutation,
    order_of,
)

DEFAULT_ELEMENT_CAP = 100_000


@dataclass(frozen=True)
class GroupSpec:
    """A named generating set: what a catalog entry or a spec file provides."""

    name: str
    degree: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        for g in self.generators:
            if len(g) != self.degree:
                raise ValueError(
                    f"generator {g} has degree {len(g)}, spec says {self.degree}"
                )
            if not is_permutation(g):
                raise ValueError(f"not a permutation: {g}")


class Group:
    """A closed, canonically ordered permutation group.

    Construct through closure()/quotient()/direct_product(), not directly,
    unless the element list is already closed and sorted.
    """

    def __init__(self, name: str, degree: int, elements: list[Permutation],
                 generator_ids: list[int]):
        self.name = name
        self.degree = degree
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.generator_ids = generator_ids
        self._mult = None
        self._inv = None
        self._orders = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"

    @property
    def mult(self) -> np.ndarray:
        """Multiplication table: mult[a, b] = id of elements[a] after elements[b]."""
        if self._mult is None:
            n = self.order
            arr = np.array(self.elements, dtype=np.int32).reshape(n, self.degree)
            byrow = {arr[i].tobytes(): i for i in range(n)}
            table = np.empty((n, n), dtype=np.int32)
            for a in range(n):
                prods = arr[a][arr]  # row b = images of compose(elements[a], elements[b])
                table[a] = [byrow[prods[b].tobytes()] for b in range(n)]
            self._mult = table
        return self._mult

    @property
    def inv(self) -> list[int]:
        if self._inv is None:
            self._inv = [self.index[inverse(e)] for e in self.elements]
        return self._inv

    @property
    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [order_of(e) for e in self.elements]
        return self._orders

    def element_order(self, x: int) -> int:
        return self.element_orders[x]

    @property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    def generators(self) -> list[Permutation]:
        return [self.elements[i] for i in self.generator_ids]

    def conj_element(self, a: int, x: int) -> int:
        """x^-1 * a * x as an element id."""
        m = self.mult
        return int(m[int(m[self.inv[x], a]), x])


def closure(spec: GroupSpec, element_cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Close the generating set; canonical element order; cap enforced."""
    gens = []
    for g in spec.generators:
        if g not in gens:
            gens.append(g)
    e = identity(spec.degree)
    found = {e}
    work = [e]
    i = 0
    while i < len(work):
        x = work[i]
        i += 1
        for g in gens:
            y = compose(x, g)
            if y not in found:
                found.add(y)
                if len(found) > element_cap:
                    raise ResourceLimitError(
                        f"closure of {spec.name!r} exceeded element cap {element_cap}"
                    )
                work.append(y)
    elements = sorted(found)
    index = {el: i for i, el in enumerate(elements)}
    gen_ids = []
    for g in spec.generators:
        gid = index[g]
        if gid not in gen_ids:
            gen_ids.append(gid)
    return Group(spec.name, spec.degree, elements, gen_ids)


def closure_ids(group: Group, seed_ids) -> list[int]:
    """Subgroup generated by the given element ids, as a sorted id list."""
    mult = group.mult
    n = group.order
    member = bytearray(n)
    member[0] = 1
    out = [0]
    work = []
    for s in seed_ids:
        if not member[s]:
            member[s] = 1
            out.append(s)
            work.append(s)
    i = 0
    while i < len(work):
        x = work[i]
        i += 1
        row = mult[x]
        for y in list(out):
            for z in (int(row[y]), int(mult[y, x])):
                if not member[z]:
                    member[z] = 1
                    out.append(z)
                    work.append(z)
    out.sort()
    return out


def generating_ids(group: Group, member_ids: list[int]) -> list[int]:
    """Greedy small generating set (ascending id scan) for a subgroup."""
    have = {0}
    gens: list[int] = []
    for x in member_ids:
        if x not in have:
            gens.append(x)
            have = set(closure_ids(group, gens))
            if len(have) == len(member_ids):
                break
    return gens


@dataclass
class Epimorphism:
    """A surjection source -> target with its element map and kernel."""

    source: Group
    target: Group
    element_map: list[int]
    kernel: frozenset[int] = field(repr=False)

    def image_ids(self, ids) -> list[int]:
        return sorted({self.element_map[x] for x in ids})


def quotient(g: Group, n_ids, name: str | None = None) -> Epimorphism:
    """Quotient by the normal subgroup with the given element ids.

    Built from the left-coset action of g, which is faithful on cosets
    exactly because n is normal. Raises ValueError if n is not a subgroup
    or not normal.
    """
    n_list = sorted(set(n_ids))
    mult = g.mult
    if not n_list or n_list[0] != 0 or n_list[-1] >= g.order:
        raise ValueError("kernel candidate must contain the identity (id 0)")
    n_set = set(n_list)
    for a in n_list:
        for b in n_list:
            if int(mult[a, b]) not in n_set:
                raise ValueError("kernel candidate is not a subgroup")
    for x in range(g.order):
        for a in n_list:
            if g.conj_element(a, x) not in n_set:
                raise ValueError("kernel candidate is not normal")

    coset = [-1] * g.order
    reps = []
    for x in range(g.order):
        if coset[x] < 0:
            label = len(reps)
            reps.append(x)
            for k in n_list:
                coset[int(mult[x, k])] = label
    m = len(reps)

    perms = [tuple(coset[int(mult[x, r])] for r in reps) for x in range(g.order)]
    target_elems = sorted(set(perms))
    tindex = {e: i for i, e in enumerate(target_elems)}
    element_map = [tindex[p] for p in perms]
    gen_ids = []
    for gid in g.generator_ids:
        tid = element_map[gid]
        if tid not in gen_ids:
            gen_ids.append(tid)
    if not gen_ids and m > 1:
        gen_ids = [element_map[reps[1]]]
    qname = name if name is not None else f"{g.name}/{len(n_list)}"
    target = Group(qname, m, target_elems, gen_ids)
    kernel = frozenset(x for x in range(g.order) if element_map[x] == 0)
    if kernel != n_set:
        raise AssertionError("coset action kernel differs from the given subgroup")
    return Epimorphism(g, target, element_map, frozenset(n_set))


def direct_product(a: Group, b: Group, name: str | None = None,
                   element_cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """External direct product on degree(a) + degree(b) points."""
    if a.order * b.order > element_cap:
        raise ResourceLimitError(
            f"direct product order {a.order * b.order} exceeds element cap {element_cap}"
        )
    da = a.degree
    shift = [tuple(x + da for x in e) for e in b.elements]
    # a-major cartesian order is already lexicographic: the first da images
    # decide before any of b's do.
    elements = [x + y for x in a.elements for y in shift]
    pname = name if name is not None else f"{a.name}x{b.name}"
    g = Group(pname, da + b.degree, elements, [])
    idb = shift[0]
    ida = a.elements[0]
    gen_ids = []
    for i in a.generator_ids:
        gen_ids.append(g.index[a.elements[i] + idb])
    for j in b.generator_ids:
        gen_ids.append(g.index[ida + shift[j]])
    g.generator_ids = gen_ids
    return g


def product_spec(a: GroupSpec, b: GroupSpec, name: str | None = None) -> GroupSpec:
    """GroupSpec for the direct product of two specs (generators embedded)."""
    da, db = a.degree, b.degree
    ida = identity(da)
    idb = tuple(range(da, da + db))
    gens = [g + idb for g in a.generators]
    gens += [ida + tuple(x + da for x in g) for g in b.generators]
    pname = name if name is not None else f"{a.name}x{b.name}"
    return GroupSpec(pname, da + db, tuple(gens))


def affine_group(p: int, d: int) -> GroupSpec:
    """x -> x+1 together with x -> r^((p-1)/d) * x on 0..p-1 (r the smallest
    primitive root mod p). Closes to the group of maps x -> ax+b with a in
    the order-d subgroup of the units, so the order is p*d."""
    from .numth import is_prime, smallest_primitive_root

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d < 1 or (p - 1) % d != 0:
        raise ValueError(f"d must divide p-1={p - 1}, got {d}")
    gens: list[Permutation] = [tuple((x + 1) % p for x in range(p))]
    if d > 1:
        r = smallest_primitive_root(p)
        a = pow(r, (p - 1) // d, p)
        gens.append(tuple(a * x % p for x in range(p)))
    return GroupSpec(f"AGL(1,{p})d{d}", p, tuple(gens))
