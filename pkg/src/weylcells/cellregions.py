"""Cells as unions of arrangement regions, and their automata.

A stabilized cell decomposition assigns each ball element to a class.
Mapping a class through `region_of` gives a set of regions; when no
other interior element of the ball lands in that set, the class is a
union of regions as far as the ball can see, and restricting the
region automaton's accepting states to the set yields a machine for
the reduced words of the class.  Reversal gives the mirror-side class
of the inverses, and unions give two-sided classes.

Exactness is always verified, never assumed, and the verdict is only
as strong as the ball: elements in the outer two length shells are
excluded as witnesses because their class membership is provisional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .rootsystem import RootSystem
from .arrangement import (
    ArrangementSpec,
    Strips,
    StarReport,
    region_of,
    verify_star,
)
from .automaton import Automaton, from_arrangement, restrict_accepting, reverse_language, union
from .kl import CellDecomposition, cells_stabilized


@dataclass(frozen=True)
class CellRegionReport:
    """One cell fragment held against the regions of one arrangement.

    `regions` collects the strip vectors of all fragment members.
    `exact_on_ball` records whether every interior ball element inside
    those regions belongs to the fragment; `violations` lists the
    witness words of interior outsiders that land in the region set.
    """

    cell_label: str
    spec: ArrangementSpec
    regions: FrozenSet[Strips]
    exact_on_ball: bool
    ball_radius: int
    stable: bool
    size_in_ball: int
    violations: Tuple[str, ...] = ()


def cell_regions(
    dec: CellDecomposition, c: int, spec: ArrangementSpec
) -> CellRegionReport:
    """Realize class c of the decomposition as a set of regions.

    The region set comes from every member of the class.  The exactness
    check asks that no other element of the ball lands in the set, with
    the outer two length shells excluded as witnesses on both sides:
    their class membership could still change at a larger radius.
    """
    b = dec.ball
    regions = frozenset(
        region_of(spec, b.elements[i]).strips for i in dec.classes[c]
    )
    cut = dec.radius - 2
    violations = tuple(
        " ".join(str(x) for x in b.elements[i].word)
        for i in range(dec.n)
        if dec.labels[i] != c
        and b.lengths[i] <= cut
        and region_of(spec, b.elements[i]).strips in regions
    )
    stable = bool(dec.stable[c]) if dec.stable is not None else False
    return CellRegionReport(
        cell_label=dec.class_name(c),
        spec=spec,
        regions=regions,
        exact_on_ball=not violations,
        ball_radius=dec.radius,
        stable=stable,
        size_in_ball=len(dec.classes[c]),
        violations=violations,
    )


def stable_cell_reports(
    dec: CellDecomposition, spec: ArrangementSpec
) -> List[CellRegionReport]:
    """Region reports for the stable classes, in label order."""
    if dec.stable is None:
        raise ValueError("decomposition carries no stability verdicts")
    return [
        cell_regions(dec, c, spec)
        for c in range(len(dec.classes))
        if dec.stable[c]
    ]


def minimal_uniform_level(
    dec: CellDecomposition, max_level: int = 3
) -> Optional[int]:
    """Least uniform bound making every stable class exact, or None.

    Searches N = 0, 1, ... up to max_level.  A verdict of None means
    no bound up to the cap worked on this ball; it is not a proof that
    none exists.
    """
    rs = dec.ball.rs
    for n in range(max_level + 1):
        spec = ArrangementSpec.uniform(rs, n)
        if all(r.exact_on_ball for r in stable_cell_reports(dec, spec)):
            return n
    return None


def build_cell_automaton(
    dec: CellDecomposition,
    c: int,
    spec: ArrangementSpec,
    base: Optional[Automaton] = None,
) -> Automaton:
    """Automaton for the reduced words of class c.

    Restricts the accepting states of the region automaton to the
    class's regions.  Refuses when the class is not an exact union of
    regions on the ball: the restriction would accept words of other
    elements, so either the bounds are too small for this cell or the
    fragment is not trustworthy yet.
    """
    report = cell_regions(dec, c, spec)
    if not report.exact_on_ball:
        raise ValueError(
            f"class {report.cell_label!r} is not a union of regions on this "
            f"ball ({len(report.violations)} witnesses); raise the strip "
            "bounds or the ball radius"
        )
    if base is None:
        base = from_arrangement(spec)
    keep = frozenset(
        q for q, strips in enumerate(base.states) if strips in report.regions
    )
    return restrict_accepting(base, keep)


def right_cell_automaton(left_aut: Automaton) -> Automaton:
    """Machine for the mirror class of inverses: reverse the language.

    Reduced words of inverses are the reversals of reduced words, and
    inversion swaps the two sides of the cell decomposition, so the
    reversal automaton of a left-class machine accepts the words of the
    corresponding right class.
    """
    return reverse_language(left_aut)


def two_sided_automaton(cell_auts: Sequence[Automaton]) -> Automaton:
    """Union machine over the classes forming one two-sided class."""
    if not cell_auts:
        raise ValueError("need at least one class automaton")
    return union(cell_auts)


@dataclass(frozen=True)
class PresetCheckReport:
    """Outcome of checking stable cells against one arrangement preset."""

    spec: ArrangementSpec
    decomposition: CellDecomposition
    star: StarReport
    reports: Tuple[CellRegionReport, ...]

    @property
    def all_exact(self) -> bool:
        return self.star.ok and all(r.exact_on_ball for r in self.reports)


def check_short_long_preset(
    root_system: RootSystem,
    max_len: int,
    check_len: int,
    star_len: int = 10,
) -> PresetCheckReport:
    """Are the stable left cells unions of regions at bound 0/1 by length?

    Uses the arrangement with strip bound 0 on short roots and 1 on
    long roots (all 0 when there is a single root length).  First
    verifies the one-step region property that the automaton
    construction relies on, then checks every stable left cell of the
    stabilized decomposition for exactness.
    """
    spec = ArrangementSpec.short_zero_long_one(root_system)
    star = verify_star(spec, star_len)
    dec = cells_stabilized(root_system, max_len, check_len)
    reports = tuple(stable_cell_reports(dec, spec))
    return PresetCheckReport(
        spec=spec, decomposition=dec, star=star, reports=reports
    )


def report_document(
    dec: CellDecomposition, spec: ArrangementSpec
) -> Dict[str, object]:
    """The cells report as a JSON-ready mapping.

    Covers every class of the decomposition, stable or not, so nothing
    is hidden; consumers filter on the per-cell `stable` flag.
    """
    rs = dec.ball.rs
    cells_out = []
    for c in range(len(dec.classes)):
        rep = cell_regions(dec, c, spec)
        cells_out.append(
            {
                "label": rep.cell_label,
                "size_in_ball": rep.size_in_ball,
                "regions": sorted(list(s) for s in rep.regions),
                "exact": rep.exact_on_ball,
                "stable": rep.stable,
            }
        )
    return {
        "type": rs.family,
        "rank": rs.rank,
        "N_or_nu": spec.describe_nu(),
        "ball_radius": dec.radius,
        "cells": cells_out,
    }


def report_json(dec: CellDecomposition, spec: ArrangementSpec) -> str:
    return json.dumps(report_document(dec, spec), indent=2, sort_keys=True)
