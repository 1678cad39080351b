"""Structural existence criteria for nowhere-identity flows, checked against
exhaustive search where the criteria stop."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import GroupContext, commutator_subgroup_order
from .embedded import EmbeddedGraph, _split, bridges, delete_edge
from .errors import ComplexityGuard
from .flows import count_flows

MAX_BRIDGE_SUBSETS = 2**20


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool | None         # None: unknown
    reason: str                 # NoPlaneSidedBridge, PlaneSidedBridge, Bridgeless, ...
    detail: tuple = ()

    def __str__(self) -> str:
        word = {True: "yes", False: "no", None: "unknown"}[self.exists]
        arg = ",".join(str(x) for x in self.detail)
        reason = f"{self.reason}({arg})" if self.detail else self.reason
        return f"exists={word} reason={reason}"


def plane_sided_bridges(g: EmbeddedGraph) -> set[int]:
    """Bridges whose deletion leaves a component of genus 0."""
    out = set()
    for e in sorted(bridges(g)):
        if any(c.genus == 0 for c in delete_edge(g, e)):
            out.add(e)
    return out


def _is_odd_bridge_set(g: EmbeddedGraph, subset: tuple[int, ...]) -> bool:
    """Each ``e`` in the set is a plane-sided bridge of ``g`` minus the rest.

    Deleting all of ``subset`` leaves exactly the two pieces that deleting
    ``e`` splits its own component into, so one cut serves every member.
    """
    drop = set(subset)
    rots = [[d for d in r if (d >> 1) not in drop] for r in g.rotations]
    comps = _split(rots)
    genus_of = {}
    for c in comps:
        for v in c.parent_vertices:
            genus_of[v] = c.genus
    return all(genus_of[g.tail(e)] == 0 or genus_of[g.head(e)] == 0 for e in subset)


def odd_bridge_sets(g: EmbeddedGraph, limit: int = MAX_BRIDGE_SUBSETS):
    """Odd-sized bridge sets ``B`` with every member plane-sided in ``g``
    minus the other members, smallest first."""
    bs = sorted(bridges(g))
    if 2 ** len(bs) > limit:
        raise ComplexityGuard(f"{len(bs)} bridges give more than {limit} subsets")
    for k in range(1, len(bs) + 1, 2):
        for subset in itertools.combinations(bs, k):
            if _is_odd_bridge_set(g, subset):
                yield subset


def find_odd_bridge_set(g: EmbeddedGraph) -> tuple[int, ...] | None:
    return next(iter(odd_bridge_sets(g)), None)


def devos_verdict(g: EmbeddedGraph, n: int, *, search: bool = True,
                  budget: int | None = None) -> ExistenceVerdict:
    """Decide whether a nowhere-identity D_2n flow exists.

    The commutator subgroup of D_2n has ``n`` elements for odd ``n`` and
    ``n/2`` for even ``n``. Above two the plane-sided bridge criterion is
    exact; D_8 without bridges always has a flow. D_4 is abelian and D_8
    with bridges are left to exhaustive search.
    """
    psb = plane_sided_bridges(g)
    if psb:
        return ExistenceVerdict(False, "PlaneSidedBridge", (min(psb),))
    order = commutator_subgroup_order(n)
    if n >= 3 and order > 2:
        return ExistenceVerdict(True, "NoPlaneSidedBridge")
    if n == 4 and not bridges(g):
        return ExistenceVerdict(True, "Bridgeless")
    if not search:
        return ExistenceVerdict(None, "Undecided")
    try:
        count = count_flows(g, GroupContext.mod(n), budget=budget)
    except ComplexityGuard:
        return ExistenceVerdict(None, "SearchBudgetExceeded")
    return ExistenceVerdict(count > 0, "SearchResult", (count,))


def obstrd6_check(g: EmbeddedGraph, *, confirm: bool = True,
                  budget: int | None = None) -> bool:
    """True iff ``g`` has no plane-sided bridge but has an odd bridge set
    as above, so that D_6 flows exist while bounded 3- and 4-flows do not.

    With ``confirm`` the three claims are also checked by search whenever
    the search fits the budget; a disagreement raises ``AssertionError``.
    """
    if plane_sided_bridges(g):
        return False
    if find_odd_bridge_set(g) is None:
        return False
    if confirm:
        checks = ((GroupContext.mod(3), True), (GroupContext.bounded(3), False),
                  (GroupContext.bounded(4), False))
        for ctx, expected in checks:
            try:
                found = count_flows(g, ctx, budget=budget) > 0
            except ComplexityGuard:
                continue
            assert found == expected, f"search disagrees for {ctx}"
    return True
