"""Closed-form non-admissibility predicates and the census pipeline.

The two predicates correspond to the Hopf-link and trefoil tangles:

    hopf:     exists (x, y) with x <| y == x and y <| x != y
    trefoil:  exists (x, y) with (x <| y) <| x == y and (y <| x) <| y != x

Either witness certifies non-admissibility; absence of a hopf (resp.
trefoil) witness is exactly Hopf-link (resp. trefoil) admissibility.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from . import _kernels
from .errors import OrderTooLarge
from .groups import automorphisms, census_catalog
from .presentation import Presentation
from .quandles import FiniteQuandle, galex, invariant_profile, isomorphic


@dataclass(frozen=True)
class Witness:
    x: int
    y: int
    kind: str    # "hopf" | "trefoil"

    def holds_in(self, q: FiniteQuandle):
        x, y = self.x, self.y
        if self.kind == "hopf":
            return q.op(x, y) == x and q.op(y, x) != y
        if self.kind == "trefoil":
            return (q.op(q.op(x, y), x) == y
                    and q.op(q.op(y, x), y) != x)
        raise ValueError(f"unknown witness kind {self.kind!r}")


@dataclass(frozen=True)
class CensusRecord:
    group_name: str
    group_order: int
    automorphism_index: int
    quandle_order: int
    isomorphism_class_representative: bool
    hopf_admissible: bool
    trefoil_admissible: bool


def hopf_witness(q: FiniteQuandle):
    """First (x, y) in lexicographic order with x <| y = x, y <| x != y;
    None exactly when q is Hopf-link admissible."""
    x, y = _kernels.hopf_witness_scan(q.table)
    if x == -1:
        return None
    return Witness(int(x), int(y), "hopf")


def trefoil_witness(q: FiniteQuandle):
    """First (x, y) in lexicographic order with (x <| y) <| x = y and
    (y <| x) <| y != x; None exactly when q is trefoil admissible."""
    x, y = _kernels.trefoil_witness_scan(q.table)
    if x == -1:
        return None
    return Witness(int(x), int(y), "trefoil")


def associated_group_presentation(q: FiniteQuandle):
    """Generators g0..g(n-1); for each ordered pair (x, y) the relation
    g_y^-1 g_x g_y = g_{x <| y}.  No simplification."""
    n = q.order
    gens = tuple(f"g{i}" for i in range(n))
    rels = []
    for x in range(n):
        for y in range(n):
            rels.append((f"g{y}^-1 g{x} g{y}", f"g{q.op(x, y)}"))
    return Presentation(generators=gens, relations=tuple(rels),
                        kind="associated_group")


# -- census over generalized Alexander quandles ------------------------------

CENSUS_MAX_ORDER = 64


def census_galex(max_group_order, dedup=False):
    """One record per (catalog group, automorphism) pair with group order
    <= max_group_order, in (group order, group name, automorphism index)
    order.  With dedup, only the first representative of each quandle
    isomorphism class is kept (flagged as such).

    Returns (records, quandles) aligned lists.
    """
    if max_group_order > CENSUS_MAX_ORDER:
        raise OrderTooLarge(
            f"census limited to group order {CENSUS_MAX_ORDER}")
    records, quandles = [], []
    for grp in census_catalog(max_group_order):
        for ai, sigma in enumerate(automorphisms(grp)):
            q = galex(grp, sigma)
            records.append(CensusRecord(
                group_name=grp.name,
                group_order=grp.order,
                automorphism_index=ai,
                quandle_order=q.order,
                isomorphism_class_representative=False,
                hopf_admissible=hopf_witness(q) is None,
                trefoil_admissible=trefoil_witness(q) is None,
            ))
            quandles.append(q)
    if not dedup:
        return records, quandles
    kept_r, kept_q = dedup_by_isomorphism(records, quandles)
    kept_r = [
        CensusRecord(r.group_name, r.group_order, r.automorphism_index,
                     r.quandle_order, True, r.hopf_admissible,
                     r.trefoil_admissible)
        for r in kept_r
    ]
    return kept_r, kept_q


def dedup_by_isomorphism(records, quandles):
    """Keep the first record of each quandle isomorphism class.  Quandles
    are bucketed by (order, invariant-profile multiset) before the full
    isomorphism search is attempted."""
    buckets = defaultdict(list)   # key -> list of kept quandle indices
    kept_r, kept_q = [], []
    for rec, q in zip(records, quandles):
        key = (q.order, tuple(sorted(invariant_profile(q))))
        new = True
        for ki in buckets[key]:
            if isomorphic(kept_q[ki], q) is not None:
                new = False
                break
        if new:
            buckets[key].append(len(kept_q))
            kept_r.append(rec)
            kept_q.append(q)
    return kept_r, kept_q


CENSUS_FIELDS = ("group_name", "group_order", "automorphism_index",
                 "quandle_order", "isomorphism_class_representative",
                 "hopf_admissible", "trefoil_admissible")


def format_census(records):
    """Tab-separated census table with a #-prefixed header."""
    out = ["#" + "\t".join(CENSUS_FIELDS)]
    for r in records:
        out.append("\t".join(str(getattr(r, f)) for f in CENSUS_FIELDS))
    return "\n".join(out) + "\n"
