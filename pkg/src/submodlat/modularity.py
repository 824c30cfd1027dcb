"""Modularity and submodularity of subgroups, Kurosh-style.

A subgroup m is modular in an ambient subgroup b when both hold inside b:

  1. <X, m ^ Z> = <X, m> ^ Z   for all X <= Z <= b
  2. <m, Y ^ Z> = <m, Y> ^ Z   for all Y <= b and all Z with m <= Z <= b

(^ = meet, <,> = join; joins and meets of subgroups of b stay inside b, so
the whole-lattice tables apply unchanged.)

m is submodular in b when some ascending chain m = h0 <= h1 <= ... <= hk = b
has each h_i modular in h_{i+1}. The modular-in relation over all pairs is
the dominant cost and is computed once per lattice, vectorized over the
meet/join tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError
from .lattice import SubgroupLattice
from .numth import factorization, is_prime


@dataclass
class ModularityVerdict:
    modular: bool
    # ("condition1", x, z) or ("condition2", y, z): the first failing pair
    # in scan order (condition 1 before condition 2, lowest ids first).
    witness: tuple | None = None


class ModularRelation:
    """The modular-in relation for every pair a <= b of one lattice."""

    def __init__(self, lat: SubgroupLattice):
        self.lat = lat
        s = lat.size
        leq = lat.leq
        meet_t = lat.meet_t
        join_t = lat.join_t

        pairs = np.argwhere(leq)  # (X, Z) with X <= Z, sorted by (X, Z)
        px, pz = pairs[:, 0], pairs[:, 1]

        mod = np.zeros((s, s), dtype=bool)
        for b in range(s):
            sel = leq[pz, b]
            x1, z1 = px[sel], pz[sel]
            subs_b = np.flatnonzero(leq[:, b])
            for m in subs_b:
                lhs = join_t[x1, meet_t[m, z1]]
                rhs = meet_t[join_t[x1, m], z1]
                if not np.array_equal(lhs, rhs):
                    continue
                zc = subs_b[leq[m, subs_b]]
                meet_yz = meet_t[np.ix_(subs_b, zc)]
                lhs2 = join_t[m][meet_yz]
                rhs2 = meet_t[join_t[m, subs_b][:, None], zc[None, :]]
                if np.array_equal(lhs2, rhs2):
                    mod[m, b] = True
        self.mod = mod

        prime_index = np.zeros((s, s), dtype=bool)
        orders = lat.orders
        for a in range(s):
            for b in range(s):
                if leq[a, b] and a != b and is_prime(orders[b] // orders[a]):
                    prime_index[a, b] = True
        self.prime_index = prime_index
        self._reach: dict[tuple[str, int], np.ndarray] = {}

    # -- reachability ------------------------------------------------------

    def _edges(self, kind: str) -> np.ndarray:
        if kind == "mod":
            return self.mod
        if kind == "kp":
            return self.lat.normal_in | self.prime_index
        if kind == "p":
            return self.prime_index
        raise ValueError(kind)

    def reach_down(self, b: int, kind: str = "mod") -> np.ndarray:
        """Bool array over subgroup ids: chain of `kind` steps up to b exists."""
        key = (kind, b)
        hit = self._reach.get(key)
        if hit is not None:
            return hit
        edges = self._edges(kind)
        leq = self.lat.leq
        reach = np.zeros(self.lat.size, dtype=bool)
        reach[b] = True
        stack = [b]
        while stack:
            z = stack.pop()
            new = np.flatnonzero(leq[:, z] & edges[:, z] & ~reach)
            for a in new:
                reach[a] = True
                stack.append(int(a))
        self._reach[key] = reach
        return reach


def modular_relation(lat: SubgroupLattice) -> ModularRelation:
    rel = lat.cache.get("modrel")
    if rel is None:
        rel = ModularRelation(lat)
        lat.cache["modrel"] = rel
    return rel


def _require_leq(lat: SubgroupLattice, a: int, b: int):
    if not lat.leq[a, b]:
        raise ValueError(f"subgroup {a} is not contained in {b}")


def is_modular(lat: SubgroupLattice, m: int, b: int | None = None) -> ModularityVerdict:
    """Verdict for m modular-in-b, with the first failing pair as witness."""
    b = lat.top if b is None else b
    _require_leq(lat, m, b)
    rel = modular_relation(lat)
    if rel.mod[m, b]:
        return ModularityVerdict(True)
    meet_t, join_t, leq = lat.meet_t, lat.join_t, lat.leq
    subs_b = [int(v) for v in np.flatnonzero(leq[:, b])]
    for x in subs_b:
        for z in subs_b:
            if leq[x, z] and join_t[x, meet_t[m, z]] != meet_t[join_t[x, m], z]:
                return ModularityVerdict(False, ("condition1", x, z))
    for y in subs_b:
        for z in subs_b:
            if leq[m, z] and join_t[m, meet_t[y, z]] != meet_t[join_t[m, y], z]:
                return ModularityVerdict(False, ("condition2", y, z))
    raise ConsistencyError("cached modular relation disagrees with direct scan")


def is_submodular(lat: SubgroupLattice, h: int, b: int | None = None) -> bool:
    b = lat.top if b is None else b
    _require_leq(lat, h, b)
    return bool(modular_relation(lat).reach_down(b, "mod")[h])


def submodular_chain(lat: SubgroupLattice, h: int,
                     b: int | None = None) -> list[int] | None:
    """Shortest modular chain h = c0 <= ... <= ck = b, BFS with ascending-id
    tie-break; None when h is not submodular in b."""
    b = lat.top if b is None else b
    _require_leq(lat, h, b)
    rel = modular_relation(lat)
    if not rel.reach_down(b, "mod")[h]:
        return None
    if h == b:
        return [h]
    leq, mod = lat.leq, rel.mod
    parent = {h: None}
    frontier = [h]
    while frontier:
        nxt = []
        for a in frontier:
            for c in np.flatnonzero(leq[a] & mod[a] & leq[:, b]):
                c = int(c)
                if c not in parent:
                    parent[c] = a
                    if c == b:
                        chain = [c]
                        while parent[chain[-1]] is not None:
                            chain.append(parent[chain[-1]])
                        return chain[::-1]
                    nxt.append(c)
        frontier = nxt
    raise ConsistencyError("reachability said submodular but BFS found no chain")


def compact_submodular_chain(lat: SubgroupLattice, h: int,
                             b: int | None = None) -> list[int] | None:
    """Chain through maximal modular subgroups (each step maximal modular in
    the next), greedy lowest id. None when h is not submodular in b."""
    b = lat.top if b is None else b
    if not is_submodular(lat, h, b):
        return None
    rel = modular_relation(lat)
    chain = [b]
    cur = b
    while cur != h:
        cands = [
            m for m in maximal_modular_subgroups(lat, cur)
            if lat.leq[h, m] and rel.reach_down(m, "mod")[h]
        ]
        if not cands:
            raise ConsistencyError("compaction stuck: no maximal modular step")
        cur = min(cands)
        chain.append(cur)
    return chain[::-1]


def maximal_modular_subgroups(lat: SubgroupLattice, b: int | None = None) -> list[int]:
    """Proper subgroups of b modular in b and maximal among those."""
    b = lat.top if b is None else b
    rel = modular_relation(lat)
    mods = [int(m) for m in np.flatnonzero(lat.leq[:, b] & rel.mod[:, b]) if m != b]
    mod_set = set(mods)
    return [
        m for m in mods
        if not any(c != m and lat.leq[m, c] for c in mod_set)
    ]


def lemma12_predict(lat: SubgroupLattice, b: int | None = None) -> list[int]:
    """Predicted maximal modular subgroups of b from normal-structure data
    only: maximal normal subgroups, plus subgroups maximal among those whose
    core-quotient b/core_b(m) is nonabelian of order pq (p, q distinct
    primes). No modularity scan involved; cross-checked against
    maximal_modular_subgroups by the verification suites."""
    b = lat.top if b is None else b
    normals_b = lat.normal_subgroup_ids(b)
    max_normal = [
        a for a in normals_b
        if a != b and not any(
            c != a and c != b and lat.leq[a, c] for c in normals_b
        )
    ]
    derived_b = lat.derived_id(b)
    pq_cands = []
    for m in (int(v) for v in np.flatnonzero(lat.leq[:, b])):
        if m == b:
            continue
        cr = lat.core(m, b)
        q = lat.orders[b] // lat.orders[cr]
        fac = factorization(q)
        if len(fac) == 2 and all(e == 1 for e in fac.values()) \
                and not lat.leq[derived_b, cr]:
            pq_cands.append(m)
    cand_set = set(pq_cands)
    pq_max = [
        m for m in pq_cands
        if not any(c != m and lat.leq[m, c] for c in cand_set)
    ]
    return sorted(set(max_normal) | set(pq_max))


# -- prime-index subnormality ---------------------------------------------


def is_kp_subnormal(lat: SubgroupLattice, h: int, b: int | None = None) -> bool:
    """Chain from h to b where each step is normal OR of prime index."""
    b = lat.top if b is None else b
    _require_leq(lat, h, b)
    return bool(modular_relation(lat).reach_down(b, "kp")[h])


def is_p_subnormal(lat: SubgroupLattice, h: int, b: int | None = None) -> bool:
    """Chain from h to b with every index prime (h == b qualifies)."""
    b = lat.top if b is None else b
    _require_leq(lat, h, b)
    return bool(modular_relation(lat).reach_down(b, "p")[h])
