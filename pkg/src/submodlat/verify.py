"""Named verification suites: each statement from the theory is re-checked
instance by instance over the group catalog (plus any user-supplied groups).

Every suite function takes (ctx, group) and returns (passed, witness); the
witness is a JSON-ready payload describing the first counterexample found
(or, for the worked-example suite, the full expected/observed profile).
Suites are deterministic: subgroups are scanned in canonical id order, so
reports are byte-stable across runs and across worker counts.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .catalog import builtin_catalog
from .classes import (
    biprimary_in,
    class_residual,
    group_in_A,
    group_in_B,
    in_B_in,
    metanilpotent_in,
    ore_dispersive_in,
    qpred_syl_in_ApB,
    qpred_syl_in_B,
    smU_in,
    soluble_in,
    ssU_in,
    subset_in_A,
    subset_in_B,
    supersoluble_in,
    wU_in,
)
from .context import Context
from .groups import Group, GroupSpec
from .lattice import chief_series, mask_from_ids
from .modularity import (
    is_modular,
    is_submodular,
    lemma12_predict,
    maximal_modular_subgroups,
    modular_relation,
    submodular_chain,
)
from .numth import is_prime_power, prime_factors

# Advisory wall-clock budget per suite; overruns warn on stderr but never
# alter the report (determinism outranks the budget).
SUITE_BUDGET_S = 120.0

# The basic-properties suite quantifies over all subgroup pairs and all
# quotients, so its universe is capped by group order.
SMALL_ORDER_MAX = 60

WORKED_EXAMPLE_GROUP = "AGL(1,17)d16"


def _img_id(epi, qlat, member_ids):
    """Lattice id (in the quotient lattice) of the image of a subgroup."""
    img = sorted({epi.element_map[i] for i in member_ids})
    return qlat.by_mask[mask_from_ids(img, epi.target.order)]


def _orders(lat, ids):
    return [int(lat.orders[i]) for i in ids]


# -- suites ----------------------------------------------------------------

def _suite_submodular_basic(ctx: Context, g: Group):
    """Six closure properties of submodularity: meets with subgroups,
    quotient transfer both ways, conjugates, pairwise meets, normal joins."""
    lat = ctx.lattice(g)
    rel = modular_relation(lat)
    sub = rel.reach_down(lat.top, "mod")
    sub_ids = [int(i) for i in np.flatnonzero(sub)]
    normals = lat.normal_subgroup_ids()

    for t in sub_ids:
        # 4) closed under conjugation
        for x in lat.members[lat.top]:
            if not sub[int(lat.conj[t, x])]:
                return False, {"statement": 4, "t_order": int(lat.orders[t])}
        # 1) T cap U submodular in U
        for u in range(lat.size):
            m = lat.meet(u, t)
            if not rel.reach_down(u, "mod")[m]:
                return False, {"statement": 1, "t_order": int(lat.orders[t]),
                               "u_order": int(lat.orders[u])}
        # 5) pairwise meets stay submodular
        for t2 in sub_ids:
            if t2 >= t:
                break
            if not sub[lat.meet(t, t2)]:
                return False, {"statement": 5, "t_order": int(lat.orders[t]),
                               "t2_order": int(lat.orders[t2])}
        # 6) joins with normal subgroups stay submodular
        for n in normals:
            if not sub[lat.join(t, n)]:
                return False, {"statement": 6, "t_order": int(lat.orders[t]),
                               "n_order": int(lat.orders[n])}

    # 2)+3) quotient transfer is an equivalence for subgroups above the kernel
    for n in normals:
        epi, qlat = ctx.quotient_lattice(g, lat, n)
        qsub = modular_relation(qlat).reach_down(qlat.top, "mod")
        for t in np.flatnonzero(lat.leq[:, lat.top] & lat.leq[n, :]):
            t = int(t)
            down = bool(sub[t])
            up = bool(qsub[_img_id(epi, qlat, lat.members[t])])
            if down != up:
                return False, {"statement": 2 if down else 3,
                               "t_order": int(lat.orders[t]),
                               "n_order": int(lat.orders[n])}
    return True, None


def _suite_maximal_modular(ctx: Context, g: Group):
    """Maximal modular subgroups coincide with the predicted family:
    maximal normals plus maximal cores-of-nonabelian-pq-quotient members."""
    lat = ctx.lattice(g)
    got = sorted(maximal_modular_subgroups(lat))
    want = sorted(lemma12_predict(lat))
    if got == want:
        return True, None
    return False, {"computed_orders": _orders(lat, got),
                   "predicted_orders": _orders(lat, want)}


def _suite_nilpotent_factorizations(ctx: Context, g: Group):
    """When a self-centralizing minimal normal subgroup exists, every
    factorization G = AB into nilpotent parts has trivial intersection,
    covers N, and splits into a p-part and a p'-part."""
    lat = ctx.lattice(g)
    n_id = None
    for n in lat.minimal_normal_subgroups():
        if n != lat.top and lat.centralizer_of_factor(n, lat.bottom) == n:
            n_id = n
            break
    if n_id is None:
        return True, None
    nset = set(lat.members[n_id])
    nilp = [i for i in range(lat.size) if lat.nilpotent_in(i)]
    for ai, a in enumerate(nilp):
        for b in nilp[ai:]:
            oa, ob = lat.orders[a], lat.orders[b]
            if oa * ob < g.order:
                continue
            m = lat.meet(a, b)
            if oa * ob != g.order * lat.orders[m]:
                continue
            pair = {"a_order": int(oa), "b_order": int(ob),
                    "n_order": int(lat.orders[n_id])}
            if m != lat.bottom:
                return False, {"statement": 1, **pair}
            aset, bset = set(lat.members[a]), set(lat.members[b])
            if not nset <= (aset | bset):
                return False, {"statement": 2, **pair}
            big, small = (a, b) if nset <= aset else (b, a)
            p = is_prime_power(lat.orders[big]) if lat.orders[big] > 1 else None
            if p is None or lat.orders[small] % p == 0:
                return False, {"statement": 3, **pair}
    return True, None


def _suite_chief_centralizers(ctx: Context, g: Group):
    """For each chief factor: the automizer has no nontrivial normal
    p-subgroup for p dividing the factor, and F_p(G) centralizes it."""
    lat = ctx.lattice(g)
    for f in chief_series(lat).factors:
        c = f.centralizer_id
        for p in prime_factors(f.order):
            if not lat.leq[lat.p_nilpotent_radical(p), c]:
                return False, {"part": "radical_not_central",
                               "factor_order": int(f.order), "p": int(p)}
        epi, qlat = ctx.quotient_lattice(g, lat, c)
        for p in prime_factors(f.order):
            for n in qlat.normal_subgroup_ids():
                o = int(qlat.orders[n])
                if o > 1 and is_prime_power(o) == p:
                    return False, {"part": "normal_p_subgroup_in_automizer",
                                   "factor_order": int(f.order), "p": int(p),
                                   "offender_order": o}
    return True, None


def _suite_prime_factor_automizer(ctx: Context, g: Group):
    """A p-chief factor has order exactly p iff its automizer is abelian of
    exponent dividing p-1."""
    lat = ctx.lattice(g)
    for f in chief_series(lat).factors:
        if f.prime is None:
            continue
        epi = ctx.quotient_by(g, lat, f.centralizer_id)
        both = group_in_A(epi.target, f.prime)
        if (f.order == f.prime) != both:
            return False, {"factor_order": int(f.order), "p": int(f.prime),
                           "automizer_abelian_exp_ok": bool(both)}
    return True, None


def _suite_supersoluble_screen(ctx: Context, g: Group):
    """Supersolubility matches the per-prime screen G/F_p(G) in A(p-1)."""
    lat = ctx.lattice(g)
    left = supersoluble_in(lat, lat.top)
    right = all(
        group_in_A(ctx.quotient_by(g, lat, lat.p_nilpotent_radical(p)).target, p)
        for p in prime_factors(g.order)
    )
    if left == right:
        return True, None
    return False, {"chief_route": bool(left), "screen_route": bool(right)}


def _suite_largest_prime_sylow(ctx: Context, g: Group):
    """A submodular Sylow subgroup for the largest prime is normal."""
    if g.order == 1:
        return True, None
    lat = ctx.lattice(g)
    p = prime_factors(g.order)[-1]
    syl = lat.sylow(p)
    if is_submodular(lat, syl) and not lat.is_normal(syl):
        return False, {"p": int(p), "sylow_order": int(lat.orders[syl])}
    return True, None


def _suite_ore_dispersive(ctx: Context, g: Group):
    lat = ctx.lattice(g)
    if smU_in(lat, lat.top) and not ore_dispersive_in(lat, lat.top):
        return False, {"order": g.order}
    return True, None


def _suite_fitting_quotient(ctx: Context, g: Group):
    """Strong supersolubility = supersoluble + G/F(G) abelian of squarefree
    exponent, both sides computed independently."""
    lat = ctx.lattice(g)
    left = ssU_in(lat, lat.top)
    right = supersoluble_in(lat, lat.top) and group_in_B(
        ctx.quotient_by(g, lat, lat.fitting()).target)
    if left == right:
        return True, None
    return False, {"definitional": bool(left), "fitting_route": bool(right)}


def _suite_B_formation(ctx: Context, g: Group):
    """The squarefree-exponent abelian class is closed under subgroups,
    quotients, and subdirect reduction of normal pairs."""
    lat = ctx.lattice(g)
    normals = lat.normal_subgroup_ids()
    qb = {n: group_in_B(ctx.quotient_by(g, lat, n).target) for n in normals}
    if group_in_B(g):
        for h in range(lat.size):
            if not in_B_in(lat, h):
                return False, {"part": "hereditary", "sub_order": int(lat.orders[h])}
        for n in normals:
            if not qb[n]:
                return False, {"part": "quotient", "kernel_order": int(lat.orders[n])}
    for i, n1 in enumerate(normals):
        for n2 in normals[i + 1:]:
            if qb[n1] and qb[n2] and not qb[lat.meet(n1, n2)]:
                return False, {"part": "intersection",
                               "n1_order": int(lat.orders[n1]),
                               "n2_order": int(lat.orders[n2])}
    return True, None


def _closure_suite(ctx: Context, g: Group, pred_in, quotient_pred_in):
    """Shared engine for the two closure theorems: heredity, quotients,
    normal-pair intersections, internal direct products, Frattini lifting."""
    lat = ctx.lattice(g)
    holds = pred_in(lat, lat.top)
    normals = lat.normal_subgroup_ids()
    qhold = {}
    for n in normals:
        epi, qlat = ctx.quotient_lattice(g, lat, n)
        qhold[n] = quotient_pred_in(qlat)
    if holds:
        for h in range(lat.size):
            if not pred_in(lat, h):
                return False, {"statement": 1, "sub_order": int(lat.orders[h])}
        for n in normals:
            if not qhold[n]:
                return False, {"statement": 2, "kernel_order": int(lat.orders[n])}
    for i, n1 in enumerate(normals):
        for n2 in normals[i + 1:]:
            if qhold[n1] and qhold[n2] and not qhold[lat.meet(n1, n2)]:
                return False, {"statement": 3,
                               "n1_order": int(lat.orders[n1]),
                               "n2_order": int(lat.orders[n2])}
            if (lat.meet(n1, n2) == lat.bottom
                    and pred_in(lat, n1) and pred_in(lat, n2)
                    and not pred_in(lat, lat.join(n1, n2))):
                return False, {"statement": 4,
                               "h1_order": int(lat.orders[n1]),
                               "h2_order": int(lat.orders[n2])}
    if qhold[lat.frattini()] and not holds:
        return False, {"statement": 5,
                       "frattini_order": int(lat.orders[lat.frattini()])}
    return True, None


def _suite_ssU_closure(ctx: Context, g: Group):
    return _closure_suite(ctx, g, ssU_in, lambda q: ssU_in(q, q.top))


def _suite_smU_closure(ctx: Context, g: Group):
    return _closure_suite(ctx, g, smU_in, lambda q: smU_in(q, q.top))


def _suite_ssU_local_screen(ctx: Context, g: Group):
    """Strong supersolubility matches the screen G/F_p(G) in A(p-1)^B."""
    lat = ctx.lattice(g)
    left = ssU_in(lat, lat.top)
    right = True
    for p in prime_factors(g.order):
        t = ctx.quotient_by(g, lat, lat.p_nilpotent_radical(p)).target
        if not (group_in_B(t) and group_in_A(t, p)):
            right = False
            break
    if left == right:
        return True, None
    return False, {"definitional": bool(left), "screen": bool(right)}


def _suite_submodular_product(ctx: Context, g: Group):
    """A product of two nilpotent submodular subgroups is strongly
    supersoluble."""
    lat = ctx.lattice(g)
    if ssU_in(lat, lat.top):
        return True, None
    rel = modular_relation(lat)
    sub = rel.reach_down(lat.top, "mod")
    cands = [i for i in range(lat.size) if sub[i] and lat.nilpotent_in(i)]
    for ai, a in enumerate(cands):
        for b in cands[ai:]:
            if lat.orders[a] * lat.orders[b] == g.order * lat.orders[lat.meet(a, b)]:
                return False, {"a_order": int(lat.orders[a]),
                               "b_order": int(lat.orders[b])}
    return True, None


def _suite_worked_example(ctx: Context, g: Group):
    """The order-272 affine group: its Sylow 17-subgroup is submodular with
    an explicit chain, its Sylow 2-subgroup is not (though prime-index
    subnormal), and the group is supersoluble but not strongly so --
    separating all three Sylow-condition classes."""
    lat = ctx.lattice(g)
    a = lat.sylow(17)
    b = lat.sylow(2)
    chain = submodular_chain(lat, a)
    vb = is_modular(lat, b)
    rel = modular_relation(lat)
    profile = {
        "A_order": int(lat.orders[a]),
        "A_submodular": bool(is_submodular(lat, a)),
        "A_chain_orders": None if chain is None else _orders(lat, chain),
        "B_order": int(lat.orders[b]),
        "B_submodular": bool(is_submodular(lat, b)),
        "B_modularity_witness": None if vb.modular else {
            "condition": vb.witness[0],
            "x_order": int(lat.orders[vb.witness[1]]),
            "z_order": int(lat.orders[vb.witness[2]]),
        },
        "B_prime_index_subnormal": bool(rel.reach_down(lat.top, "p")[b]),
        "supersoluble": bool(supersoluble_in(lat, lat.top)),
        "strongly_supersoluble": bool(ssU_in(lat, lat.top)),
        "all_sylows_submodular": bool(smU_in(lat, lat.top)),
        "all_sylows_prime_index_subnormal": bool(wU_in(lat, lat.top)),
    }
    ok = (profile["A_submodular"]
          and profile["A_chain_orders"] is not None
          and not profile["B_submodular"]
          and profile["B_modularity_witness"] is not None
          and profile["B_prime_index_subnormal"]
          and profile["supersoluble"]
          and not profile["strongly_supersoluble"]
          and not profile["all_sylows_submodular"]
          and profile["all_sylows_prime_index_subnormal"])
    return ok, profile


def _suite_metanilpotent_criterion(ctx: Context, g: Group):
    """Strongly supersoluble = metanilpotent with all Sylows submodular."""
    lat = ctx.lattice(g)
    left = ssU_in(lat, lat.top)
    right = metanilpotent_in(lat, lat.top) and smU_in(lat, lat.top)
    if left == right:
        return True, None
    return False, {"definitional": bool(left), "metanilpotent_route": bool(right)}


def _sylB_in(lat, h) -> bool:
    if not soluble_in(lat, h):
        return False
    return all(subset_in_B(lat.group, lat.members[lat.sylow(q, h)])
               for q in lat.primes_of(h))


def _sylApB_in(lat, h, p) -> bool:
    if not soluble_in(lat, h):
        return False
    for q in lat.primes_of(h):
        ids = lat.members[lat.sylow(q, h)]
        if not (subset_in_B(lat.group, ids) and subset_in_A(lat.group, ids, p)):
            return False
    return True


def _suite_sylow_restricted_formations(ctx: Context, g: Group):
    """Soluble groups with all Sylows in B (resp. in A(p-1)^B) form
    hereditary formations; checked instance-wise like the B suite."""
    lat = ctx.lattice(g)
    normals = lat.normal_subgroup_ids()
    variants = [("B", lambda lt, h: _sylB_in(lt, h), qpred_syl_in_B)]
    for p in prime_factors(g.order):
        variants.append((f"ApB@{p}",
                         lambda lt, h, p=p: _sylApB_in(lt, h, p),
                         qpred_syl_in_ApB(p)))
    for label, member_in, qpred in variants:
        qm = {n: qpred(ctx, ctx.quotient_by(g, lat, n)) for n in normals}
        if member_in(lat, lat.top):
            for h in range(lat.size):
                if not member_in(lat, h):
                    return False, {"class": label, "part": "hereditary",
                                   "sub_order": int(lat.orders[h])}
            for n in normals:
                if not qm[n]:
                    return False, {"class": label, "part": "quotient",
                                   "kernel_order": int(lat.orders[n])}
        for i, n1 in enumerate(normals):
            for n2 in normals[i + 1:]:
                if qm[n1] and qm[n2] and not qm[lat.meet(n1, n2)]:
                    return False, {"class": label, "part": "intersection",
                                   "n1_order": int(lat.orders[n1]),
                                   "n2_order": int(lat.orders[n2])}
    return True, None


def minimal_non_in(lat, pred_in) -> bool:
    """True when the whole group fails pred but every proper subgroup
    satisfies it."""
    if pred_in(lat, lat.top):
        return False
    return all(pred_in(lat, h) for h in range(lat.size) if h != lat.top)


def _suite_minimal_non(ctx: Context, g: Group):
    """A minimal group outside the all-Sylows-submodular class is biprimary
    and is minimal outside the strongly supersoluble class."""
    lat = ctx.lattice(g)
    if not minimal_non_in(lat, smU_in):
        return True, None
    if not biprimary_in(lat, lat.top):
        return False, {"part": "not_biprimary",
                       "primes": [int(p) for p in prime_factors(g.order)]}
    if not minimal_non_in(lat, ssU_in):
        return False, {"part": "not_minimal_non_ssU"}
    return True, None


def _suite_subnormal_implications(ctx: Context, g: Group):
    """Submodular subgroups have a normal-or-prime-index chain to the top;
    in soluble groups the chain can be made all-prime-index."""
    lat = ctx.lattice(g)
    rel = modular_relation(lat)
    sub = rel.reach_down(lat.top, "mod")
    kp = rel.reach_down(lat.top, "kp")
    pr = rel.reach_down(lat.top, "p")
    soluble = soluble_in(lat, lat.top)
    for h in range(lat.size):
        if not sub[h]:
            continue
        if not kp[h]:
            return False, {"statement": 1, "sub_order": int(lat.orders[h])}
        if soluble and not pr[h]:
            return False, {"statement": 2, "sub_order": int(lat.orders[h])}
    return True, None


def _suite_smU_local_screen(ctx: Context, g: Group):
    """All-Sylows-submodular matches the screen: every G/F_p(G) is soluble
    with Sylows in A(p-1)^B."""
    lat = ctx.lattice(g)
    left = smU_in(lat, lat.top)
    right = all(
        qpred_syl_in_ApB(p)(ctx, ctx.quotient_by(g, lat, lat.p_nilpotent_radical(p)))
        for p in prime_factors(g.order)
    )
    if left == right:
        return True, None
    return False, {"definitional": bool(left), "screen": bool(right)}


def _suite_smU_structure(ctx: Context, g: Group):
    """Inside an all-Sylows-submodular group: metanilpotent and biprimary
    subgroups are strongly supersoluble, and the elementary-abelian-Sylows
    residual is nilpotent."""
    lat = ctx.lattice(g)
    if not smU_in(lat, lat.top):
        return True, None
    for h in range(lat.size):
        if metanilpotent_in(lat, h) and not ssU_in(lat, h):
            return False, {"statement": 1, "sub_order": int(lat.orders[h])}
        if biprimary_in(lat, h) and not ssU_in(lat, h):
            return False, {"statement": 2, "sub_order": int(lat.orders[h])}
    res = class_residual(ctx, g, qpred_syl_in_B, lat)
    if not lat.nilpotent_in(res):
        return False, {"statement": 3, "residual_order": int(lat.orders[res])}
    return True, None


def _suite_biprimary_criterion(ctx: Context, g: Group):
    """All Sylows submodular iff the group is Ore dispersive and every
    biprimary subgroup is strongly supersoluble."""
    lat = ctx.lattice(g)
    left = smU_in(lat, lat.top)
    right = ore_dispersive_in(lat, lat.top) and all(
        ssU_in(lat, h) for h in range(lat.size) if biprimary_in(lat, h)
    )
    if left == right:
        return True, None
    return False, {"sylow_route": bool(left), "biprimary_route": bool(right)}


SUITES = {
    "lemma-1.1": _suite_submodular_basic,
    "lemma-1.2": _suite_maximal_modular,
    "lemma-1.3": _suite_nilpotent_factorizations,
    "lemma-1.4": _suite_chief_centralizers,
    "thm-1.5": _suite_prime_factor_automizer,
    "lemma-1.8": _suite_supersoluble_screen,
    "lemma-2.1": _suite_largest_prime_sylow,
    "cor-2.1.1": _suite_ore_dispersive,
    "prop-2.3": _suite_fitting_quotient,
    "lemma-2.4": _suite_B_formation,
    "thm-2.5": _suite_ssU_closure,
    "thm-2.6": _suite_ssU_local_screen,
    "thm-2.7": _suite_submodular_product,
    "example-2.8": _suite_worked_example,
    "thm-2.9": _suite_metanilpotent_criterion,
    "thm-3.1": _suite_smU_closure,
    "lemma-3.2": _suite_sylow_restricted_formations,
    "thm-3.4": _suite_minimal_non,
    "lemma-3.5": _suite_subnormal_implications,
    "thm-3.6": _suite_smU_local_screen,
    "thm-3.7": _suite_smU_structure,
    "thm-3.8": _suite_biprimary_criterion,
}

ALL_SUITE_IDS = list(SUITES)


@dataclass
class SuiteResult:
    suite_id: str
    universe: list[str]
    instances: list[dict]
    passed: bool
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "universe": self.universe,
            "instances": self.instances,
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }


def _applicable(suite_id: str, g: Group) -> bool:
    if suite_id == "lemma-1.1":
        return g.order <= SMALL_ORDER_MAX
    if suite_id == "example-2.8":
        return g.name == WORKED_EXAMPLE_GROUP
    return True


def resolve_suite_ids(suite_ids) -> list[str]:
    if isinstance(suite_ids, str):
        suite_ids = [suite_ids]
    out: list[str] = []
    for sid in suite_ids:
        if sid == "all":
            out.extend(s for s in ALL_SUITE_IDS if s not in out)
            continue
        if sid not in SUITES:
            raise ValueError(f"unknown suite id: {sid}")
        if sid not in out:
            out.append(sid)
    return out


def _group_instances(ctx: Context, spec: GroupSpec, suite_ids) -> dict[str, dict]:
    g = ctx.group(spec)
    out = {}
    for sid in suite_ids:
        if not _applicable(sid, g):
            continue
        ok, witness = SUITES[sid](ctx, g)
        out[sid] = {"group": g.name, "pass": bool(ok), "witness": witness}
    return out


def _worker(payload):
    spec, suite_ids = payload
    return _group_instances(Context(), spec, suite_ids)


def run_suites(suite_ids, specs=None, ctx: Context | None = None,
               jobs: int = 1, progress: bool = False) -> dict:
    """Run the requested suites over the given specs (default: the builtin
    catalog); returns the canonical report {"suites": [...], "pass": bool}."""
    ids = resolve_suite_ids(suite_ids)
    specs = list(builtin_catalog()) if specs is None else list(specs)
    results: list[SuiteResult] = []

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            per_group = list(ex.map(_worker, [(s, ids) for s in specs]))
        for sid in ids:
            insts = [pg[sid] for pg in per_group if sid in pg]
            results.append(SuiteResult(
                suite_id=sid,
                universe=[inst["group"] for inst in insts],
                instances=insts,
                passed=all(inst["pass"] for inst in insts),
            ))
            if progress:
                _progress_line(results[-1], None)
    else:
        ctx = ctx or Context()
        groups = [ctx.group(s) for s in specs]
        for sid in ids:
            t0 = time.perf_counter()
            insts = []
            for g in groups:
                if not _applicable(sid, g):
                    continue
                ok, witness = SUITES[sid](ctx, g)
                insts.append({"group": g.name, "pass": bool(ok), "witness": witness})
            elapsed = time.perf_counter() - t0
            results.append(SuiteResult(
                suite_id=sid,
                universe=[inst["group"] for inst in insts],
                instances=insts,
                passed=all(inst["pass"] for inst in insts),
            ))
            if progress:
                _progress_line(results[-1], elapsed)
            if elapsed > SUITE_BUDGET_S:
                print(f"[verify] warning: suite {sid} exceeded the "
                      f"{SUITE_BUDGET_S:.0f}s budget ({elapsed:.1f}s)",
                      file=sys.stderr)

    return {"suites": [r.to_dict() for r in results],
            "pass": all(r.passed for r in results)}


def _progress_line(result: SuiteResult, elapsed: float | None):
    timing = "" if elapsed is None else f" ({elapsed:.1f}s)"
    status = "ok" if result.passed else "FAIL"
    print(f"[verify] {result.suite_id}: {len(result.instances)} instances "
          f"{status}{timing}", file=sys.stderr)


def run_suite(suite_id: str, specs=None, ctx: Context | None = None,
              jobs: int = 1) -> SuiteResult:
    """Single-suite entry point; "all" returns a roll-up across every suite."""
    report = run_suites(suite_id, specs=specs, ctx=ctx, jobs=jobs)
    suites = report["suites"]
    if len(suites) == 1:
        s = suites[0]
        return SuiteResult(s["suite_id"], s["universe"], s["instances"],
                           s["pass"], s["elapsed_ms"])
    insts = [inst for s in suites for inst in s["instances"]]
    names: list[str] = []
    for s in suites:
        for n in s["universe"]:
            if n not in names:
                names.append(n)
    return SuiteResult("all", names, insts, report["pass"])


def find_minimal_non(specs, pred_in, ctx: Context | None = None) -> list[str]:
    """Catalog members outside the class whose proper subgroups all lie
    inside it; pred_in takes (lattice, ambient id)."""
    ctx = ctx or Context()
    out = []
    for spec in specs:
        g = ctx.group(spec)
        lat = ctx.lattice(g)
        if minimal_non_in(lat, pred_in):
            out.append(g.name)
    return out
