"""Modularity relation tests.

The heart of this file is an independent oracle: subgroups are re-enumerated
as plain frozensets (closures of all subsets of size <= 2, which suffices for
the sample groups, whose subgroups are all 2-generated), and the two
modularity conditions are evaluated with raw set arithmetic.  The result is
compared against the vectorized table-based relation for every pair m <= b.
"""

import numpy as np
import pytest

from submodlat import (
    compact_submodular_chain,
    is_kp_subnormal,
    is_modular,
    is_p_subnormal,
    is_submodular,
    lemma12_predict,
    maximal_modular_subgroups,
    modular_relation,
    submodular_chain,
)

ORACLE_GROUPS = ["S3", "Z6", "Q8", "D8", "A4", "D12", "Z12"]


def brute_subgroups(g):
    """Every subgroup of g as a frozenset of element ids."""
    mult = g.mult

    def close(seed):
        cur = frozenset({0} | set(seed))
        while True:
            nxt = set(cur)
            for a in cur:
                for b in cur:
                    nxt.add(int(mult[a, b]))
            if len(nxt) == len(cur):
                return frozenset(nxt)
            cur = frozenset(nxt)

    out = {close(())}
    for x in range(g.order):
        out.add(close((x,)))
        for y in range(x + 1, g.order):
            out.add(close((x, y)))
    return out


def set_modularity_oracle(g, subs):
    """(m, b) -> modular?, straight from the definition on frozensets."""
    mult = g.mult
    join_memo = {}

    def join(a, b):
        if a <= b:
            return b
        if b <= a:
            return a
        key = (a, b) if len(a) <= len(b) else (b, a)
        hit = join_memo.get(key)
        if hit is None:
            hit = min(
                (s for s in subs if a <= s and b <= s),
                key=len,
            )
            join_memo[key] = hit
        return hit

    def modular(m, b):
        subs_b = [s for s in subs if s <= b]
        for z in subs_b:
            for x in subs_b:
                if x <= z and join(x, m & z) != join(x, m) & z:
                    return False
            if m <= z:
                for y in subs_b:
                    if join(m, y & z) != join(m, y) & z:
                        return False
        return True

    return modular


@pytest.mark.parametrize("name", ORACLE_GROUPS)
def test_modular_relation_matches_set_oracle(ctx, name):
    g = ctx.catalog_group(name)
    lat = ctx.lattice(g)
    subs = brute_subgroups(g)
    assert len(subs) == lat.size
    assert subs == {frozenset(m) for m in lat.members}

    oracle = set_modularity_oracle(g, subs)
    rel = modular_relation(lat)
    sets = [frozenset(m) for m in lat.members]
    for b in range(lat.size):
        for m in np.flatnonzero(lat.leq[:, b]):
            m = int(m)
            assert rel.mod[m, b] == oracle(sets[m], sets[b]), (name, m, b)


@pytest.mark.parametrize("name", ["S4", "D12", "Q16", "A4", "A5"])
def test_normal_subgroups_are_modular(ctx, name):
    lat = ctx.lattice(ctx.catalog_group(name))
    rel = modular_relation(lat)
    assert rel.mod[lat.normal_in].all()
    # and every subgroup is modular in itself
    idx = np.arange(lat.size)
    assert rel.mod[idx, idx].all()


def test_a5_sylow2_is_not_modular_and_witness_replays(ctx):
    lat = ctx.lattice(ctx.catalog_group("A5"))
    v4 = lat.sylow(2)
    assert lat.orders[v4] == 4
    verdict = is_modular(lat, v4)
    assert not verdict.modular
    kind, first, second = verdict.witness
    if kind == "condition1":
        x, z = first, second
        lhs = lat.join_t[x, lat.meet_t[v4, z]]
        rhs = lat.meet_t[lat.join_t[x, v4], z]
    else:
        y, z = first, second
        lhs = lat.join_t[v4, lat.meet_t[y, z]]
        rhs = lat.meet_t[lat.join_t[v4, y], z]
    assert lhs != rhs
    assert lat.orders[int(lhs)] != lat.orders[int(rhs)]


def test_a5_only_trivial_subgroups_are_submodular(ctx):
    lat = ctx.lattice(ctx.catalog_group("A5"))
    sub = [a for a in range(lat.size) if is_submodular(lat, a)]
    assert sub == [lat.bottom, lat.top]
    assert submodular_chain(lat, lat.sylow(2)) is None
    assert compact_submodular_chain(lat, lat.sylow(2)) is None


def test_s4_sylow3_is_not_prime_chain_subnormal(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    syl3 = lat.sylow(3)
    assert not is_kp_subnormal(lat, syl3)
    assert not is_p_subnormal(lat, syl3)
    syl2 = lat.sylow(2)
    assert is_kp_subnormal(lat, syl2)
    assert is_p_subnormal(lat, syl2)


def test_agl17_submodular_census(ctx):
    g = ctx.catalog_group("AGL(1,17)d16")
    lat = ctx.lattice(g)
    sub = [a for a in range(lat.size) if is_submodular(lat, a)]
    assert len(sub) == 23
    orders = sorted(lat.orders[a] for a in sub)
    assert orders == [1] + [2] * 17 + [17, 34, 68, 136, 272]


def test_agl17_sylow17_chains(ctx):
    g = ctx.catalog_group("AGL(1,17)d16")
    lat = ctx.lattice(g)
    syl17 = lat.sylow(17)
    chain = submodular_chain(lat, syl17)
    assert [lat.orders[c] for c in chain] == [17, 272]
    compact = compact_submodular_chain(lat, syl17)
    assert [lat.orders[c] for c in compact] == [17, 34, 68, 136, 272]
    for small, big in zip(compact, compact[1:]):
        assert lat.leq[small, big]
        assert is_modular(lat, small, big).modular


@pytest.mark.parametrize("name", ["S3", "S4", "A4", "D12", "Q16", "S3xS3", "A5"])
def test_maximal_modular_matches_index_prediction(ctx, name):
    lat = ctx.lattice(ctx.catalog_group(name))
    for b in range(lat.size):
        assert sorted(maximal_modular_subgroups(lat, b)) == sorted(
            lemma12_predict(lat, b)
        ), (name, b)


def test_chain_endpoints_and_steps_are_valid(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    for h in range(lat.size):
        chain = submodular_chain(lat, h)
        if chain is None:
            assert not is_submodular(lat, h)
            continue
        assert chain[0] == h and chain[-1] == lat.top
        for small, big in zip(chain, chain[1:]):
            assert lat.leq[small, big]
            assert is_modular(lat, small, big).modular


def test_containment_is_checked(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    a, b = 1, 2  # two distinct minimal subgroups, neither inside the other
    assert not lat.leq[a, b]
    with pytest.raises(ValueError):
        is_modular(lat, a, b)
    with pytest.raises(ValueError):
        is_p_subnormal(lat, a, b)
    with pytest.raises(ValueError):
        submodular_chain(lat, a, b)
