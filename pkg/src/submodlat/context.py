"""Shared computation cache: specs -> groups -> lattices -> quotients.

Everything downstream (class predicates, verification suites, the service)
funnels group construction through a Context so lattices and quotient
groups are computed once per run. All caches key on immutable inputs, so
results are deterministic across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import catalog_spec
from .groups import (
    DEFAULT_ELEMENT_CAP,
    Epimorphism,
    Group,
    GroupSpec,
    closure,
    quotient,
)
from .lattice import DEFAULT_SUBGROUP_CAP, SubgroupLattice, enumerate_subgroups
from .modularity import ModularRelation, modular_relation


@dataclass(frozen=True)
class Limits:
    element_cap: int = DEFAULT_ELEMENT_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP


class Context:
    def __init__(self, limits: Limits | None = None):
        self.limits = limits or Limits()
        self._groups: dict[GroupSpec, Group] = {}
        self._lattices: dict[int, tuple[Group, SubgroupLattice]] = {}
        self._quotients: dict[tuple[int, int], tuple[Epimorphism, Group]] = {}
        self._qlattices: dict[tuple[int, int], SubgroupLattice] = {}

    def group(self, spec: GroupSpec) -> Group:
        g = self._groups.get(spec)
        if g is None:
            g = closure(spec, element_cap=self.limits.element_cap)
            self._groups[spec] = g
        return g

    def catalog_group(self, name: str) -> Group:
        return self.group(catalog_spec(name))

    def lattice(self, g: Group) -> SubgroupLattice:
        hit = self._lattices.get(id(g))
        if hit is None:
            lat = enumerate_subgroups(g, subgroup_cap=self.limits.subgroup_cap)
            self._lattices[id(g)] = (g, lat)
            return lat
        return hit[1]

    def relation(self, lat: SubgroupLattice) -> ModularRelation:
        return modular_relation(lat)

    def quotient_by(self, g: Group, lat: SubgroupLattice, n_id: int) -> Epimorphism:
        """Quotient of g by the normal subgroup with lattice id n_id (cached).

        The trivial kernel maps to g itself through the identity, so callers
        downstream never pay for a regular-representation rebuild of g.
        """
        key = (id(g), n_id)
        hit = self._quotients.get(key)
        if hit is None:
            if n_id == lat.bottom:
                epi = Epimorphism(source=g, target=g,
                                  element_map=list(range(g.order)),
                                  kernel=frozenset({0}))
            else:
                epi = quotient(g, lat.members[n_id],
                               name=f"{g.name}/n{n_id}(o{lat.orders[n_id]})")
            self._quotients[key] = (epi, epi.target)
            return epi
        return hit[0]

    def quotient_lattice(self, g: Group, lat: SubgroupLattice,
                         n_id: int) -> tuple[Epimorphism, SubgroupLattice]:
        epi = self.quotient_by(g, lat, n_id)
        key = (id(g), n_id)
        qlat = self._qlattices.get(key)
        if qlat is None:
            qlat = self.lattice(epi.target)
            self._qlattices[key] = qlat
        return epi, qlat
