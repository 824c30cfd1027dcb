import pytest

from submodlat.catalog import (
    alternating_spec,
    builtin_catalog,
    catalog_names,
    catalog_spec,
    dicyclic_spec,
    dihedral_spec,
)
from submodlat.classes import group_abelian, group_soluble


def test_catalog_size_and_unique_names():
    specs = builtin_catalog()
    assert len(specs) == 73
    names = [s.name for s in specs]
    assert len(set(names)) == len(names)
    assert catalog_names() == names


def test_catalog_orders(ctx):
    expected = {
        "Z1": 1, "Z16": 16, "Z24": 24,
        "E4": 4, "E8": 8, "E9": 9, "E25": 25, "E27": 27,
        "Z4xZ2": 8, "Z9xZ3": 27,
        "D8": 8, "D32": 32,
        "Q8": 8, "Q16": 16,
        "S3": 6, "S4": 24, "A4": 12, "A5": 60,
        "S3xZ5": 30, "S3xS3": 36,
        "AGL(1,3)d2": 6, "AGL(1,5)d4": 20, "AGL(1,7)d6": 42,
        "AGL(1,11)d10": 110, "AGL(1,13)d12": 156, "AGL(1,17)d16": 272,
        "A4xZ5": 60, "Q8xZ3": 24, "D8xZ3": 24,
    }
    for name, order in expected.items():
        assert ctx.catalog_group(name).order == order, name


def test_max_catalog_order(ctx):
    assert max(ctx.group(s).order for s in builtin_catalog()) == 272


def test_dihedral_series_all_even_orders(ctx):
    names = [n for n in catalog_names() if n.startswith("D") and "x" not in n]
    orders = sorted(ctx.catalog_group(n).order for n in names)
    assert orders == list(range(8, 34, 2))
    for n in names:
        g = ctx.catalog_group(n)
        assert not group_abelian(g)


def test_dicyclic_groups_have_unique_involution(ctx):
    for name in ["Q8", "Q16"]:
        g = ctx.catalog_group(name)
        involutions = [i for i in range(g.order) if g.element_orders[i] == 2]
        assert len(involutions) == 1, name
        assert not group_abelian(g)


def test_dicyclic_spec_rejects_bad_order():
    with pytest.raises(ValueError):
        dicyclic_spec(6)
    with pytest.raises(ValueError):
        dicyclic_spec(10)


def test_dicyclic_spec_handles_non_power_of_two(ctx):
    # order 12 gives the dicyclic group Dic3: unique involution, not abelian
    g = ctx.group(dicyclic_spec(12))
    assert g.order == 12
    involutions = [i for i in range(g.order) if g.element_orders[i] == 2]
    assert len(involutions) == 1
    assert not group_abelian(g)


def test_dihedral_spec_rejects_odd():
    with pytest.raises(ValueError):
        dihedral_spec(7)


def test_affine_groups_are_frobenius_sized(ctx):
    for p, d in [(3, 2), (5, 2), (5, 4), (7, 3), (11, 5), (13, 4), (17, 16)]:
        g = ctx.catalog_group(f"AGL(1,{p})d{d}")
        assert g.order == p * d
        assert g.degree == p


def test_alternating_group_insoluble(ctx):
    g = ctx.group(alternating_spec(5))
    assert g.order == 60
    assert not group_soluble(g)


def test_alternating_small(ctx):
    assert ctx.group(alternating_spec(3)).order == 3
    assert ctx.group(alternating_spec(4)).order == 12


def test_catalog_spec_lookup_matches_position():
    specs = builtin_catalog()
    assert catalog_spec("Q16") is specs[[s.name for s in specs].index("Q16")]
