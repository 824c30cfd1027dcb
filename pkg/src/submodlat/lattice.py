"""Complete subgroup lattices of small permutation groups.

Subgroups are element-id bitsets (Python ints). Enumeration seeds with all
cyclic subgroups and saturates under pairwise joins; every subgroup is the
join of its cyclic subgroups, so the fixpoint is the full lattice.

Canonical subgroup order: by order, then lexicographically by the sorted
element-id tuple. The trivial subgroup is id 0 and the whole group is the
last id, so meets/joins/ids are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ResourceLimitError
from .groups import Group, closure_ids
from .numth import divisors, lcm, p_part, p_prime_part, prime_factors

DEFAULT_SUBGROUP_CAP = 5_000


def mask_from_ids(ids, n: int) -> int:
    bits = np.zeros(n, dtype=np.uint8)
    bits[list(ids)] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def ids_from_mask(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class SubgroupLattice:
    """All subgroups of a group plus precomputed order-theoretic tables."""

    def __init__(self, group: Group, masks: list[int], join_memo: dict):
        self.group = group
        n = group.order
        order_key = []
        for m in masks:
            ids = ids_from_mask(m)
            order_key.append((len(ids), tuple(ids)))
        ranked = sorted(range(len(masks)), key=lambda i: order_key[i])
        self.masks = [masks[i] for i in ranked]
        self.members = [list(order_key[i][1]) for i in ranked]
        self.orders = [order_key[i][0] for i in ranked]
        self.by_mask = {m: i for i, m in enumerate(self.masks)}
        s = len(self.masks)
        self.size = s
        self.top = s - 1
        self.bottom = 0
        self.full_mask = self.masks[self.top]

        leq = np.zeros((s, s), dtype=bool)
        for a in range(s):
            ma = self.masks[a]
            for b in range(s):
                if self.orders[b] % self.orders[a] == 0 and ma & self.masks[b] == ma:
                    leq[a, b] = True
        self.leq = leq

        meet_t = np.empty((s, s), dtype=np.int32)
        for a in range(s):
            for b in range(a, s):
                mid = self.by_mask[self.masks[a] & self.masks[b]]
                meet_t[a, b] = meet_t[b, a] = mid
        self.meet_t = meet_t

        join_t = np.empty((s, s), dtype=np.int32)
        for a in range(s):
            for b in range(a, s):
                if leq[a, b]:
                    jid = b
                elif leq[b, a]:
                    jid = a
                else:
                    key = (self.masks[a] | self.masks[b])
                    jm = join_memo.get(key)
                    if jm is None:
                        jm = self._join_mask_scan(self.masks[a], self.masks[b])
                    jid = self.by_mask[jm]
                join_t[a, b] = join_t[b, a] = jid
        self.join_t = join_t

        mult = group.mult
        inv = group.inv
        conj = np.empty((s, n), dtype=np.int32)
        norm_mask = [0] * s
        for a in range(s):
            ids = np.array(self.members[a], dtype=np.int32)
            ma = self.masks[a]
            nm = 0
            for x in range(n):
                cm = mask_from_ids(mult[mult[inv[x], ids], x], n)
                cid = self.by_mask.get(cm)
                if cid is None:
                    raise ConsistencyError("conjugate of a subgroup missing from lattice")
                conj[a, x] = cid
                if cm == ma:
                    nm |= 1 << x
            norm_mask[a] = nm
        self.conj = conj
        self.norm_mask = norm_mask
        self.normalizer_ids = [self.by_mask[m] for m in norm_mask]
        self.normal = np.array(
            [norm_mask[a] == self.full_mask for a in range(s)], dtype=bool
        )

        normal_in = np.zeros((s, s), dtype=bool)
        for a in range(s):
            nm = norm_mask[a]
            for b in range(s):
                if leq[a, b] and self.masks[b] & nm == self.masks[b]:
                    normal_in[a, b] = True
        self.normal_in = normal_in

        strict = leq & ~np.eye(s, dtype=bool)
        via = (strict.astype(np.int16) @ strict.astype(np.int16)) > 0
        self.covers = strict & ~via

        self.cache: dict = {}

    def _join_mask_scan(self, ma: int, mb: int) -> int:
        union = ma | mb
        for i in range(self.size):
            if self.masks[i] & union == union:
                return self.masks[i]
        raise ConsistencyError("join not found in lattice")

    # -- basic queries ----------------------------------------------------

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_t[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self.join_t[a, b])

    def subs_of(self, b: int) -> np.ndarray:
        return np.flatnonzero(self.leq[:, b])

    def order_of(self, a: int) -> int:
        return self.orders[a]

    def is_normal(self, a: int, b: int | None = None) -> bool:
        if b is None:
            return bool(self.normal[a])
        return bool(self.normal_in[a, b])

    def primes_of(self, b: int) -> list[int]:
        return prime_factors(self.orders[b])

    # -- classical subgroups ----------------------------------------------

    def core(self, m: int, b: int | None = None) -> int:
        """Largest subgroup of m normal in b (default: in the whole group)."""
        xs = self.members[self.top if b is None else b]
        out = m
        seen = {m}
        for x in xs:
            c = int(self.conj[m, x])
            if c not in seen:
                seen.add(c)
                out = int(self.meet_t[out, c])
        return out

    def normalizer(self, h: int) -> int:
        return self.normalizer_ids[h]

    def maximal_subgroups(self, b: int | None = None) -> list[int]:
        b = self.top if b is None else b
        return [int(a) for a in np.flatnonzero(self.covers[:, b])]

    def normal_subgroup_ids(self, b: int | None = None) -> list[int]:
        if b is None:
            return [int(a) for a in np.flatnonzero(self.normal)]
        return [int(a) for a in np.flatnonzero(self.normal_in[:, b])]

    def minimal_normal_subgroups(self, b: int | None = None) -> list[int]:
        b = self.top if b is None else b
        normals = [a for a in self.normal_subgroup_ids(b) if a != self.bottom]
        out = []
        for a in normals:
            if not any(c != a and self.leq[c, a] for c in normals):
                out.append(a)
        return out

    def frattini(self, b: int | None = None) -> int:
        b = self.top if b is None else b
        maxes = self.maximal_subgroups(b)
        if not maxes:
            return b
        out = maxes[0]
        for m in maxes[1:]:
            out = int(self.meet_t[out, m])
        return out

    def sylow(self, p: int, b: int | None = None) -> int:
        """Lowest-id Sylow p-subgroup (of the ambient subgroup b)."""
        b = self.top if b is None else b
        target = p_part(self.orders[b], p)
        for a in self.subs_of(b):
            if self.orders[a] == target:
                return int(a)
        raise ConsistencyError(f"no subgroup of order {target} under id {b}")

    def sylow_all(self, p: int, b: int | None = None) -> list[int]:
        b = self.top if b is None else b
        target = p_part(self.orders[b], p)
        return [int(a) for a in self.subs_of(b) if self.orders[a] == target]

    # -- nilpotency-flavoured helpers (lattice-only definitions) ----------

    def nilpotent_in(self, a: int) -> bool:
        """Every Sylow of the subgroup a is normal in a."""
        for p in prime_factors(self.orders[a]):
            if not self.normal_in[self.sylow(p, a), a]:
                return False
        return True

    def p_nilpotent_in(self, a: int, p: int) -> bool:
        """a has a normal subgroup of order equal to a's p'-part."""
        target = p_prime_part(self.orders[a], p)
        return any(
            self.orders[t] == target
            for t in np.flatnonzero(self.normal_in[:, a])
        )

    def fitting(self, b: int | None = None) -> int:
        b = self.top if b is None else b
        out = self.bottom
        for a in self.normal_subgroup_ids(b):
            if self.nilpotent_in(a):
                out = int(self.join_t[out, a])
        if not self.nilpotent_in(out):
            raise ConsistencyError("Fitting subgroup is not nilpotent")
        return out

    def p_nilpotent_radical(self, p: int, b: int | None = None) -> int:
        b = self.top if b is None else b
        out = self.bottom
        for a in self.normal_subgroup_ids(b):
            if self.p_nilpotent_in(a, p):
                out = int(self.join_t[out, a])
        if not self.p_nilpotent_in(out, p):
            raise ConsistencyError("p-nilpotent radical is not p-nilpotent")
        return out

    # -- chief series ------------------------------------------------------

    def chief_chain_ids(self, b: int | None = None, tie: str = "low") -> list[int]:
        """Maximal chain in the poset of subgroups normal in b, greedy by id."""
        b = self.top if b is None else b
        normals = self.normal_subgroup_ids(b)
        chain = [self.bottom]
        current = self.bottom
        while current != b:
            cands = [
                t for t in normals
                if t != current and self.leq[current, t]
            ]
            minimal = [
                t for t in cands
                if not any(
                    u != t and u != current and self.leq[current, u] and self.leq[u, t]
                    for u in cands
                )
            ]
            current = min(minimal) if tie == "low" else max(minimal)
            chain.append(current)
        return chain

    def derived_id(self, b: int | None = None) -> int:
        """Commutator subgroup [b, b] as a lattice id (memoized)."""
        b = self.top if b is None else b
        hit = self.cache.get(("derived", b))
        if hit is not None:
            return hit
        g = self.group
        mult = g.mult
        inv = np.array(g.inv, dtype=np.int32)
        ids = np.array(self.members[b], dtype=np.int32)
        comms: set[int] = set()
        for x in self.members[b]:
            a1 = mult[inv[x], inv[ids]]
            a2 = mult[a1, x]
            comms.update(int(v) for v in mult[a2, ids])
        from .groups import closure_ids

        did = self.by_mask.get(mask_from_ids(closure_ids(g, sorted(comms)), g.order))
        if did is None:
            raise ConsistencyError("derived subgroup missing from lattice")
        self.cache[("derived", b)] = did
        return did

    def centralizer_of_factor(self, h: int, k: int) -> int:
        """C_G(h/k) = {g : g^-1 x^-1 g x in k for all x in h}; contains k."""
        g = self.group
        mult = g.mult
        inv = np.array(g.inv, dtype=np.int32)
        h_ids = np.array(self.members[h], dtype=np.int32)
        in_k = np.zeros(g.order, dtype=bool)
        in_k[self.members[k]] = True
        members = []
        for x in range(g.order):
            a1 = mult[inv[x], inv[h_ids]]
            a2 = mult[a1, x]
            comms = mult[a2, h_ids]
            if in_k[comms].all():
                members.append(x)
        cid = self.by_mask.get(mask_from_ids(members, g.order))
        if cid is None:
            raise ConsistencyError("factor centralizer missing from lattice")
        return cid


@dataclass
class ChiefFactor:
    lower: int
    upper: int
    order: int
    prime: int | None
    is_prime_order: bool
    centralizer_id: int | None = None


@dataclass
class ChiefSeries:
    ids: list[int]
    factors: list[ChiefFactor]


def chief_series(lat: SubgroupLattice, with_centralizers: bool = True,
                 tie: str = "low") -> ChiefSeries:
    from .numth import is_prime, is_prime_power

    chain = lat.chief_chain_ids(tie=tie)
    factors = []
    for k, h in zip(chain, chain[1:]):
        order = lat.orders[h] // lat.orders[k]
        factors.append(ChiefFactor(
            lower=k,
            upper=h,
            order=order,
            prime=is_prime_power(order),
            is_prime_order=is_prime(order),
            centralizer_id=lat.centralizer_of_factor(h, k) if with_centralizers else None,
        ))
    return ChiefSeries(ids=chain, factors=factors)


def enumerate_subgroups(group: Group,
                        subgroup_cap: int = DEFAULT_SUBGROUP_CAP) -> SubgroupLattice:
    n = group.order
    mult = group.mult
    order_divs = divisors(n)
    full_mask = (1 << n) - 1

    masks: list[int] = []
    seen: set[int] = set()

    def add(mask: int):
        if mask not in seen:
            seen.add(mask)
            masks.append(mask)
            if len(masks) > subgroup_cap:
                raise ResourceLimitError(
                    f"subgroup count for {group.name!r} exceeded cap {subgroup_cap}"
                )

    add(1)  # trivial subgroup: the identity bit
    for x in range(1, n):
        ids = [0]
        y = x
        while y != 0:
            ids.append(y)
            y = int(mult[y, x])
        add(mask_from_ids(ids, n))

    popcounts = {m: m.bit_count() for m in masks}
    join_memo: dict[int, int] = {}

    def join_masks(ma: int, mb: int) -> int:
        union = ma | mb
        if union == ma:
            return ma
        if union == mb:
            return mb
        hit = join_memo.get(union)
        if hit is not None:
            return hit
        need = lcm(popcounts.get(ma) or ma.bit_count(),
                   popcounts.get(mb) or mb.bit_count())
        floor = union.bit_count()
        cands = [d for d in order_divs if d % need == 0 and d >= floor]
        if cands == [n]:
            out = full_mask
        else:
            out = mask_from_ids(closure_ids(group, ids_from_mask(union)), n)
        join_memo[union] = out
        return out

    i = 0
    while i < len(masks):
        mi = masks[i]
        for j in range(i):
            jm = join_masks(mi, masks[j])
            if jm not in seen:
                add(jm)
                popcounts[jm] = jm.bit_count()
        i += 1

    lat = SubgroupLattice(group, masks, join_memo)
    if lat.masks[lat.bottom] != 1 or lat.masks[lat.top] != full_mask:
        raise ConsistencyError("lattice bottom/top malformed")
    return lat


def dot_export(lat: SubgroupLattice, modular: set[int] | None = None) -> str:
    """Hasse diagram in DOT: order labels, normal nodes double-circled,
    modular nodes (when the caller supplies the set) shaded. Deterministic."""
    lines = ["digraph subgroup_lattice {", "  rankdir=BT;"]
    for a in range(lat.size):
        attrs = [f'label="order={lat.orders[a]}"']
        if lat.normal[a]:
            attrs.append("peripheries=2")
        if modular is not None and a in modular:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgrey")
        lines.append(f"  n{a} [{', '.join(attrs)}];")
    for a in range(lat.size):
        for b in np.flatnonzero(lat.covers[a]):
            lines.append(f"  n{a} -> n{int(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
