"""Group-class predicates over subgroup lattices.

Ambient-parameterized forms (`*_in(lat, b)`) evaluate a predicate for the
subgroup with lattice id b as a group in its own right, reusing the parent
lattice's tables; the conjugation/normality/modularity data all restrict
correctly to any ambient subgroup. Group-level wrappers take a Context and
run every independent evaluation route the statement theory provides,
raising RouteDisagreementError when routes differ (always a bug, never a
property of the group).

Class glossary used throughout:
  B    abelian with squarefree exponent
  A(k) abelian with exponent dividing k        (used as A(p-1))
  sU   supersoluble with every Sylow submodular ("strongly supersoluble")
  smU  every Sylow submodular
  wU   every Sylow P-subnormal
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .context import Context
from .errors import ConsistencyError, RouteDisagreementError
from .groups import Epimorphism, Group, closure_ids, generating_ids
from .lattice import SubgroupLattice, chief_series
from .modularity import modular_relation, submodular_chain
from .numth import is_squarefree, lcm, p_part, prime_factors
from .perms import format_cycles

# Above this order we trust conjugation-equivariance and check one Sylow
# representative; at or below it every conjugate is checked independently.
EQUIVARIANCE_SWEEP_MAX = 60


# -- raw-group helpers (no lattice required) -------------------------------

def subset_abelian(g: Group, ids: list[int]) -> bool:
    m = g.mult[np.ix_(ids, ids)]
    return bool((m == m.T).all())


def subset_exponent(g: Group, ids: list[int]) -> int:
    orders = g.element_orders
    return lcm(*(orders[i] for i in ids))


def subset_in_B(g: Group, ids: list[int]) -> bool:
    return subset_abelian(g, ids) and is_squarefree(subset_exponent(g, ids))


def subset_in_A(g: Group, ids: list[int], p: int) -> bool:
    return subset_abelian(g, ids) and (p - 1) % subset_exponent(g, ids) == 0


def group_abelian(g: Group) -> bool:
    return subset_abelian(g, list(range(g.order)))


def group_in_B(g: Group) -> bool:
    return group_abelian(g) and is_squarefree(g.exponent)


def group_in_A(g: Group, p: int) -> bool:
    return group_abelian(g) and (p - 1) % g.exponent == 0


def subset_derived_ids(g: Group, ids: list[int]) -> list[int]:
    """Element ids of the commutator subgroup of the given closed subset."""
    mult = g.mult
    inv = np.array(g.inv, dtype=np.int32)
    arr = np.array(ids, dtype=np.int32)
    comms: set[int] = set()
    for x in ids:
        a1 = mult[inv[x], inv[arr]]
        a2 = mult[a1, x]
        comms.update(int(v) for v in mult[a2, arr])
    return closure_ids(g, sorted(comms))


def group_soluble(g: Group) -> bool:
    cur = list(range(g.order))
    while True:
        nxt = subset_derived_ids(g, cur)
        if len(nxt) == len(cur):
            return len(cur) == 1
        cur = nxt


# -- ambient predicates on lattice ids -------------------------------------

def _memo(lat: SubgroupLattice, key, fn):
    hit = lat.cache.get(key)
    if hit is None:
        hit = fn()
        lat.cache[key] = hit
    return hit


def abelian_in(lat: SubgroupLattice, b: int) -> bool:
    return _memo(lat, ("abelian", b),
                 lambda: subset_abelian(lat.group, lat.members[b]))


def exponent_in(lat: SubgroupLattice, b: int) -> int:
    return _memo(lat, ("exponent", b),
                 lambda: subset_exponent(lat.group, lat.members[b]))


def in_B_in(lat: SubgroupLattice, b: int) -> bool:
    return abelian_in(lat, b) and is_squarefree(exponent_in(lat, b))


def in_A_in(lat: SubgroupLattice, b: int, p: int) -> bool:
    return abelian_in(lat, b) and (p - 1) % exponent_in(lat, b) == 0


def soluble_in(lat: SubgroupLattice, b: int) -> bool:
    def compute():
        cur = b
        while True:
            nxt = lat.derived_id(cur)
            if nxt == cur:
                return cur == lat.bottom
            cur = nxt
    return _memo(lat, ("soluble", b), compute)


def nilpotent_in(lat: SubgroupLattice, b: int) -> bool:
    return _memo(lat, ("nilpotent", b), lambda: lat.nilpotent_in(b))


def metanilpotent_in(lat: SubgroupLattice, b: int) -> bool:
    """b/F(b) nilpotent, read off normal subgroups between F(b) and b."""
    def compute():
        f = lat.fitting(b)
        idx = lat.orders[b] // lat.orders[f]
        for p in prime_factors(idx):
            want = lat.orders[f] * p_part(idx, p)
            if not any(
                lat.orders[t] == want and lat.leq[f, t]
                for t in np.flatnonzero(lat.normal_in[:, b])
            ):
                return False
        return True
    return _memo(lat, ("metanilpotent", b), compute)


def chief_factor_orders_in(lat: SubgroupLattice, b: int) -> list[int]:
    def compute():
        chain = lat.chief_chain_ids(b)
        return [lat.orders[h] // lat.orders[k] for k, h in zip(chain, chain[1:])]
    return _memo(lat, ("chief_orders", b), compute)


def supersoluble_in(lat: SubgroupLattice, b: int) -> bool:
    from .numth import is_prime
    return _memo(lat, ("supersoluble", b),
                 lambda: all(is_prime(o) for o in chief_factor_orders_in(lat, b)))


def ore_chain_in(lat: SubgroupLattice, b: int) -> list[int] | None:
    """Normal-subgroup chain realizing descending-prime prefix orders, or None."""
    def compute():
        chain = [lat.bottom]
        prefix = 1
        for p in sorted(prime_factors(lat.orders[b]), reverse=True):
            prefix *= p_part(lat.orders[b], p)
            cands = [
                int(t) for t in np.flatnonzero(lat.normal_in[:, b])
                if lat.orders[t] == prefix
            ]
            if not cands:
                return None
            t = min(cands)
            if not lat.leq[chain[-1], t]:
                raise ConsistencyError("Ore tower steps failed to nest")
            chain.append(t)
        return chain
    hit = lat.cache.get(("ore", b), "missing")
    if hit == "missing":
        hit = compute()
        lat.cache[("ore", b)] = hit
    return hit


def ore_dispersive_in(lat: SubgroupLattice, b: int) -> bool:
    return ore_chain_in(lat, b) is not None


def biprimary_in(lat: SubgroupLattice, b: int) -> bool:
    return len(prime_factors(lat.orders[b])) == 2


def sylow_reach_in(lat: SubgroupLattice, b: int, p: int, kind: str) -> bool:
    """Does the Sylow p of b have a `kind` chain to b? One representative,
    plus an independent sweep over its conjugates for small ambients."""
    rel = modular_relation(lat)
    reach = rel.reach_down(b, kind)
    rep = lat.sylow(p, b)
    ok = bool(reach[rep])
    if lat.orders[b] <= EQUIVARIANCE_SWEEP_MAX:
        for x in lat.members[b]:
            if bool(reach[int(lat.conj[rep, x])]) != ok:
                raise ConsistencyError(
                    f"conjugate Sylow {p}-subgroups disagree in {lat.group.name}"
                )
    return ok


def smU_in(lat: SubgroupLattice, b: int) -> bool:
    def compute():
        return all(sylow_reach_in(lat, b, p, "mod")
                   for p in prime_factors(lat.orders[b]))
    return _memo(lat, ("smU", b), compute)


def wU_in(lat: SubgroupLattice, b: int) -> bool:
    def compute():
        return all(sylow_reach_in(lat, b, p, "p")
                   for p in prime_factors(lat.orders[b]))
    return _memo(lat, ("wU", b), compute)


def ssU_in(lat: SubgroupLattice, b: int) -> bool:
    """Definitional strongly-supersoluble: supersoluble + Sylows submodular."""
    return supersoluble_in(lat, b) and smU_in(lat, b)


def p_nilpotent_in(lat: SubgroupLattice, b: int, p: int) -> bool:
    return lat.p_nilpotent_in(b, p)


# -- quotient-class predicates (screen routes, residuals) ------------------

def quotient_sylow_image_ids(ctx: Context, epi: Epimorphism) -> list[tuple[int, list[int]]]:
    """(q, element ids in the target) for one Sylow q-image per prime q of
    the quotient order. Images of source Sylows are Sylows of the target."""
    lat = ctx.lattice(epi.source)
    return [
        (q, epi.image_ids(lat.members[lat.sylow(q)]))
        for q in prime_factors(epi.target.order)
    ]


def qpred_in_B(ctx: Context, epi: Epimorphism) -> bool:
    return group_in_B(epi.target)


def qpred_in_A(p: int):
    def pred(ctx: Context, epi: Epimorphism) -> bool:
        return group_in_A(epi.target, p)
    return pred


def qpred_syl_in_B(ctx: Context, epi: Epimorphism) -> bool:
    """Soluble with every Sylow in B (i.e. elementary abelian Sylows)."""
    if not group_soluble(epi.target):
        return False
    return all(subset_in_B(epi.target, ids)
               for _, ids in quotient_sylow_image_ids(ctx, epi))


def qpred_syl_in_ApB(p: int):
    def pred(ctx: Context, epi: Epimorphism) -> bool:
        if not group_soluble(epi.target):
            return False
        t = epi.target
        return all(
            subset_in_B(t, ids) and subset_in_A(t, ids, p)
            for _, ids in quotient_sylow_image_ids(ctx, epi)
        )
    return pred


def class_residual(ctx: Context, g: Group, qpred, lat: SubgroupLattice | None = None) -> int:
    """Meet of all normal n with g/n in the class; asserts the meet itself
    qualifies (instance-level formation test)."""
    lat = ctx.lattice(g) if lat is None else lat
    quals = [
        n for n in lat.normal_subgroup_ids()
        if qpred(ctx, ctx.quotient_by(g, lat, n))
    ]
    if lat.top not in quals:
        raise ValueError("class predicate rejects the trivial quotient")
    out = quals[0]
    for n in quals[1:]:
        out = lat.meet(out, n)
    if not qpred(ctx, ctx.quotient_by(g, lat, out)):
        raise ConsistencyError(
            f"residual intersection leaves the class in {g.name} (not a formation?)"
        )
    return out


# -- multi-route group-level predicates ------------------------------------

def _p_radical_quotients(ctx: Context, g: Group, lat: SubgroupLattice):
    for p in prime_factors(g.order):
        yield p, ctx.quotient_by(g, lat, lat.p_nilpotent_radical(p))


def is_supersoluble(g: Group, ctx: Context | None = None) -> bool:
    """Two routes: prime chief factors; soluble + G/F_p(G) in A(p-1) for all p."""
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    r1 = supersoluble_in(lat, lat.top)
    r2 = soluble_in(lat, lat.top) and all(
        group_in_A(epi.target, p) for p, epi in _p_radical_quotients(ctx, g, lat)
    )
    if r1 != r2:
        raise RouteDisagreementError(
            f"supersoluble routes disagree on {g.name}: chief={r1} local-screen={r2}"
        )
    return r1


def is_strongly_supersoluble(g: Group, ctx: Context | None = None) -> bool:
    """Three routes: definitional; supersoluble + G/F(G) in B; local screen
    with f(p) = A(p-1) ^ B."""
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    r1 = ssU_in(lat, lat.top)
    r2 = supersoluble_in(lat, lat.top) and group_in_B(
        ctx.quotient_by(g, lat, lat.fitting()).target
    )
    r3 = all(
        group_in_B(epi.target) and group_in_A(epi.target, p)
        for p, epi in _p_radical_quotients(ctx, g, lat)
    )
    if not r1 == r2 == r3:
        raise RouteDisagreementError(
            f"strongly-supersoluble routes disagree on {g.name}: "
            f"definitional={r1} fitting-quotient={r2} local-screen={r3}"
        )
    return r1


def is_smU(g: Group, ctx: Context | None = None) -> bool:
    """Two routes: Sylows submodular; local screen with f(p) = soluble
    groups whose Sylows lie in A(p-1) ^ B."""
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    r1 = smU_in(lat, lat.top)
    r2 = all(
        qpred_syl_in_ApB(p)(ctx, epi)
        for p, epi in _p_radical_quotients(ctx, g, lat)
    )
    if r1 != r2:
        raise RouteDisagreementError(
            f"smU routes disagree on {g.name}: definitional={r1} local-screen={r2}"
        )
    return r1


def is_wU(g: Group, ctx: Context | None = None) -> bool:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    return wU_in(lat, lat.top)


def is_abelian(g: Group, ctx: Context | None = None) -> bool:
    return group_abelian(g)


def is_in_B(g: Group, ctx: Context | None = None) -> bool:
    return group_in_B(g)


def is_in_A(g: Group, p: int, ctx: Context | None = None) -> bool:
    return group_in_A(g, p)


def is_nilpotent(g: Group, ctx: Context | None = None) -> bool:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    return nilpotent_in(lat, lat.top)


def is_soluble(g: Group, ctx: Context | None = None) -> bool:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    return soluble_in(lat, lat.top)


def is_metanilpotent(g: Group, ctx: Context | None = None) -> bool:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    return metanilpotent_in(lat, lat.top)


def is_p_nilpotent(g: Group, p: int, ctx: Context | None = None) -> bool:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    return lat.p_nilpotent_in(lat.top, p)


def is_ore_dispersive(g: Group, ctx: Context | None = None) -> bool:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    return ore_dispersive_in(lat, lat.top)


# -- report ----------------------------------------------------------------

def subgroup_generator_cycles(lat: SubgroupLattice, b: int) -> list[str]:
    def compute():
        gids = generating_ids(lat.group, lat.members[b])
        return [format_cycles(lat.group.elements[i]) for i in gids]
    return _memo(lat, ("gens", b), compute)


@dataclass
class ClassReport:
    name: str
    order: int
    degree: int
    primes: list[int]
    flags: dict[str, bool]
    p_nilpotent: dict[int, bool]
    ore_chain_orders: list[int] | None
    chief_factors: list[dict]
    sylows: list[dict]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "degree": self.degree,
            "primes": self.primes,
            "flags": self.flags,
            "p_nilpotent": {str(p): v for p, v in self.p_nilpotent.items()},
            "ore_chain_orders": self.ore_chain_orders,
            "chief_factors": self.chief_factors,
            "sylows": self.sylows,
        }


def analyze(g: Group, ctx: Context | None = None) -> ClassReport:
    ctx = ctx or Context()
    lat = ctx.lattice(g)
    top = lat.top
    primes = prime_factors(g.order)

    flags = {
        "abelian": group_abelian(g),
        "in_B": group_in_B(g),
        "nilpotent": nilpotent_in(lat, top),
        "soluble": soluble_in(lat, top),
        "metanilpotent": metanilpotent_in(lat, top),
        "supersoluble": is_supersoluble(g, ctx),
        "strongly_supersoluble": is_strongly_supersoluble(g, ctx),
        "smU": is_smU(g, ctx),
        "wU": wU_in(lat, top),
        "ore_dispersive": ore_dispersive_in(lat, top),
    }

    ore_chain = ore_chain_in(lat, top)
    series = chief_series(lat)
    chief = [
        {
            "order": f.order,
            "prime": f.prime,
            "is_prime_order": f.is_prime_order,
            "centralizer_order": lat.orders[f.centralizer_id],
        }
        for f in series.factors
    ]

    sylows = []
    for p in primes:
        rep = lat.sylow(p)
        sub = sylow_reach_in(lat, top, p, "mod")
        chain = submodular_chain(lat, rep) if sub else None
        sylows.append({
            "p": p,
            "order": lat.orders[rep],
            "submodular": sub,
            "p_subnormal": sylow_reach_in(lat, top, p, "p"),
            "chain": None if chain is None else [
                {
                    "order": lat.orders[c],
                    "generators": subgroup_generator_cycles(lat, c),
                }
                for c in chain
            ],
        })

    return ClassReport(
        name=g.name,
        order=g.order,
        degree=g.degree,
        primes=primes,
        flags=flags,
        p_nilpotent={p: lat.p_nilpotent_in(top, p) for p in primes},
        ore_chain_orders=None if ore_chain is None else
        [lat.orders[c] for c in ore_chain],
        chief_factors=chief,
        sylows=sylows,
    )
