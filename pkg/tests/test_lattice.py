"""Subgroup enumeration and lattice-table tests.

Counts for the named groups were computed once by the enumerator and
cross-checked by hand against the standard subgroup tallies for these
orders; they are frozen here to catch regressions.
"""

import numpy as np
import pytest

from submodlat import (
    Context,
    Limits,
    ResourceLimitError,
    chief_series,
    dot_export,
)

# (catalog name, subgroup count, covering-edge count)
FROZEN_COUNTS = [
    ("S3", 6, 8),
    ("S4", 30, 66),
    ("A4", 10, 15),
    ("A5", 59, 168),
    ("Q8", 6, 7),
    ("Q16", 11, 16),
    ("D12", 16, 33),
    ("Z12", 6, 7),
    ("S3xS3", 60, 186),
]


@pytest.mark.parametrize("name,subs,covers", FROZEN_COUNTS)
def test_frozen_subgroup_and_cover_counts(ctx, name, subs, covers):
    lat = ctx.lattice(ctx.catalog_group(name))
    assert lat.size == subs
    assert int(lat.covers.sum()) == covers


def test_prime_order_groups_have_two_subgroups(ctx):
    for name in ["Z2", "Z3", "Z5", "Z7", "Z11", "Z13"]:
        lat = ctx.lattice(ctx.catalog_group(name))
        assert lat.size == 2
        assert lat.orders == [1, lat.group.order]


def test_bottom_and_top_are_extremes(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    assert lat.orders[lat.bottom] == 1
    assert lat.orders[lat.top] == lat.group.order
    assert lat.leq[lat.bottom].all()
    assert lat.leq[:, lat.top].all()


@pytest.mark.parametrize("name", ["S3", "S4", "D12", "Q16", "A4"])
def test_meet_join_tables_satisfy_lattice_axioms(ctx, name):
    lat = ctx.lattice(ctx.catalog_group(name))
    s = lat.size
    meet, join = lat.meet_t, lat.join_t
    idx = np.arange(s)

    # commutativity
    assert (meet == meet.T).all()
    assert (join == join.T).all()
    # idempotence
    assert (meet[idx, idx] == idx).all()
    assert (join[idx, idx] == idx).all()
    # absorption: a ∧ (a ∨ b) = a and a ∨ (a ∧ b) = a
    assert (meet[idx[:, None], join] == idx[:, None]).all()
    assert (join[idx[:, None], meet] == idx[:, None]).all()
    # associativity over every triple
    assert (meet[meet, :] == meet[:, meet]).all()
    assert (join[join, :] == join[:, join]).all()
    # compatibility with the order: a ≤ b iff a ∧ b = a iff a ∨ b = b
    assert ((meet == idx[:, None]) == lat.leq).all()
    assert ((join == idx[None, :]) == lat.leq).all()


def test_meet_is_intersection_and_join_is_generated(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    for a in range(lat.size):
        for b in range(lat.size):
            m = int(lat.meet_t[a, b])
            assert lat.masks[m] == lat.masks[a] & lat.masks[b]
            j = int(lat.join_t[a, b])
            assert lat.masks[j] & lat.masks[a] == lat.masks[a]
            assert lat.masks[j] & lat.masks[b] == lat.masks[b]
            # nothing strictly between the union and the join contains both
            both = lat.leq[a] & lat.leq[b]
            assert j == min(np.flatnonzero(both), key=lambda t: lat.orders[t])


def test_conjugation_table_is_an_action(ctx):
    g = ctx.catalog_group("S4")
    lat = ctx.lattice(g)
    assert (lat.conj[:, 0] == np.arange(lat.size)).all()
    for a in [0, 3, lat.size // 2, lat.size - 1]:
        for x in range(g.order):
            for y in range(g.order):
                xy = g.mult[x, y]
                assert lat.conj[lat.conj[a, x], y] == lat.conj[a, int(xy)]
    # conjugates preserve order
    for a in range(lat.size):
        for x in range(g.order):
            assert lat.orders[int(lat.conj[a, x])] == lat.orders[a]


def test_normal_subgroups_of_s4(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    orders = sorted(lat.orders[a] for a in lat.normal_subgroup_ids())
    assert orders == [1, 4, 12, 24]


def test_normal_flag_matches_norm_mask(ctx):
    lat = ctx.lattice(ctx.catalog_group("D12"))
    for a in range(lat.size):
        whole = lat.norm_mask[a] == lat.full_mask
        assert bool(lat.normal[a]) == whole
        # the normalizer is the stabilizer recorded in norm_mask
        nz = lat.normalizer(a)
        assert lat.masks[nz] == lat.norm_mask[a]
        assert lat.leq[a, nz]


def test_core_of_sylow2_in_s4_is_the_klein_group(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    syl2 = lat.sylow(2)
    assert lat.orders[syl2] == 8
    c = lat.core(syl2)
    assert lat.orders[c] == 4
    assert lat.normal[c]
    # V4 inside S4 consists of the identity and the three double transpositions
    assert all(lat.group.element_orders[i] in (1, 2) for i in lat.members[c])


def test_frattini_subgroups(ctx):
    for name, expected in [("Z4", 2), ("S3", 1), ("Q8", 2), ("Z12", 2)]:
        lat = ctx.lattice(ctx.catalog_group(name))
        assert lat.orders[lat.frattini()] == expected, name


def test_q8_every_subgroup_normal(ctx):
    lat = ctx.lattice(ctx.catalog_group("Q8"))
    assert lat.normal.all()


@pytest.mark.parametrize("name", ["S4", "D12", "A4", "Z12", "AGL(1,5)d4"])
def test_sylow_subgroups_have_the_right_order(ctx, name):
    g = ctx.catalog_group(name)
    lat = ctx.lattice(g)
    for p in lat.primes_of(lat.top):
        target = 1
        n = g.order
        while n % p == 0:
            target *= p
            n //= p
        sid = lat.sylow(p)
        assert lat.orders[sid] == target
        alls = lat.sylow_all(p)
        assert sid == min(alls)
        assert all(lat.orders[t] == target for t in alls)
        # all Sylow p-subgroups are conjugate
        orbit = {int(lat.conj[sid, x]) for x in range(g.order)}
        assert orbit == set(alls)


def test_sylow_in_a_proper_ambient_subgroup(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    a4 = next(a for a in range(lat.size) if lat.orders[a] == 12)
    s = lat.sylow(2, a4)
    assert lat.orders[s] == 4
    assert lat.leq[s, a4]


def test_chief_series_s4(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    cs = chief_series(lat)
    assert [lat.orders[i] for i in cs.ids] == [1, 4, 12, 24]
    assert [f.order for f in cs.factors] == [4, 3, 2]
    assert [f.prime for f in cs.factors] == [2, 3, 2]
    assert [f.is_prime_order for f in cs.factors] == [False, True, True]


def test_chief_series_a5_is_one_simple_factor(ctx):
    lat = ctx.lattice(ctx.catalog_group("A5"))
    cs = chief_series(lat)
    assert len(cs.factors) == 1
    f = cs.factors[0]
    assert (f.order, f.prime, f.is_prime_order) == (60, None, False)


@pytest.mark.parametrize("name", ["S4", "D12", "S3xS3", "Q16", "A4", "Z12"])
def test_chief_factor_orders_do_not_depend_on_tie_breaking(ctx, name):
    lat = ctx.lattice(ctx.catalog_group(name))
    low = sorted(f.order for f in chief_series(lat, tie="low").factors)
    high = sorted(f.order for f in chief_series(lat, tie="high").factors)
    assert low == high


def test_chief_factor_centralizers_contain_the_lower_term(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    for f in chief_series(lat).factors:
        assert lat.leq[f.lower, f.centralizer_id]
        assert lat.normal[f.centralizer_id]


def test_centralizer_of_factor_s3(ctx):
    lat = ctx.lattice(ctx.catalog_group("S3"))
    a3 = next(a for a in range(lat.size) if lat.orders[a] == 3)
    # C_S3(A3 / 1) = A3 itself: the 3-cycles commute only with rotations
    assert lat.centralizer_of_factor(a3, lat.bottom) == a3
    # the factor S3/A3 is central, so the whole group centralizes it
    assert lat.centralizer_of_factor(lat.top, a3) == lat.top


def test_fitting_subgroup(ctx):
    cases = [("S4", 4), ("S3", 3), ("A5", 1), ("Q8", 8), ("D12", 6)]
    for name, expected in cases:
        lat = ctx.lattice(ctx.catalog_group(name))
        fid = lat.fitting()
        assert lat.orders[fid] == expected, name
        assert lat.nilpotent_in(fid)
        assert lat.normal[fid]


def test_derived_subgroup(ctx):
    cases = [("S4", 12), ("S3", 3), ("A5", 60), ("Q8", 2), ("Z12", 1)]
    for name, expected in cases:
        lat = ctx.lattice(ctx.catalog_group(name))
        assert lat.orders[lat.derived_id()] == expected, name


def test_minimal_normal_subgroups_s4(ctx):
    lat = ctx.lattice(ctx.catalog_group("S4"))
    mins = lat.minimal_normal_subgroups()
    assert [lat.orders[a] for a in mins] == [4]


def test_dot_export_is_deterministic(ctx):
    lat = ctx.lattice(ctx.catalog_group("S3"))
    one = dot_export(lat)
    two = dot_export(lat)
    assert one == two
    assert one.count("->") == 8
    assert one.startswith("digraph subgroup_lattice {")


def test_dot_export_marks_normal_and_modular_nodes(ctx):
    lat = ctx.lattice(ctx.catalog_group("Q8"))
    plain = dot_export(lat)
    assert plain.count("peripheries=2") == 6  # every subgroup of Q8 is normal
    assert "style=filled" not in plain
    shaded = dot_export(lat, modular={lat.bottom, lat.top})
    assert shaded.count("style=filled") == 2


def test_subgroup_cap_is_enforced():
    small = Context(Limits(subgroup_cap=5))
    with pytest.raises(ResourceLimitError):
        small.lattice(small.catalog_group("S4"))
