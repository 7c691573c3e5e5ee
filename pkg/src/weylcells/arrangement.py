"""Extended Shi arrangements and their regions.

For a nonnegative bound nu(b) per positive root b, the arrangement
consists of the hyperplanes <b, v> = k for -nu(b) <= k <= nu(b)+1.
A region of the complement is recorded by one integer per positive
root: the index of the strip (or outer half-space) cut out for that
root, which is the alcove strip number clamped to
[-nu(b)-1, nu(b)+1].

When nu is constant on each root-length class, right multiplication by
a generator induces a well-defined successor region for every region
on the fundamental side of the generator's hyperplane; regions then
form the states of a deterministic automaton recognising reduced
words.  `verify_star` checks that single-valuedness empirically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .alcoves import Ball, Element, ball, identity_element, length, right_multiply
from .rootsystem import RootSystem

Strips = Tuple[int, ...]


@dataclass(frozen=True)
class ArrangementSpec:
    """A root system together with one strip bound per positive root."""

    root_system: RootSystem
    nu: Tuple[int, ...]

    @classmethod
    def uniform(cls, rs: RootSystem, n: int) -> "ArrangementSpec":
        """The bound N on every root: hyperplanes <b,v> = -N .. N+1."""
        if n < 0:
            raise ValueError("N must be nonnegative")
        return cls(rs, (n,) * rs.n_positive)

    @classmethod
    def short_zero_long_one(cls, rs: RootSystem) -> "ArrangementSpec":
        """Bound 0 on short roots and 1 on long roots."""
        return cls(
            rs,
            tuple(
                1 if tag == "long" else 0 for tag in rs.long_short
            ),
        )

    def __post_init__(self):
        if len(self.nu) != self.root_system.n_positive:
            raise ValueError("nu must assign a bound to every positive root")
        if any(x < 0 for x in self.nu):
            raise ValueError("nu bounds must be nonnegative")

    def is_length_constant(self) -> bool:
        """Whether nu depends only on the root-length class."""
        seen: Dict[str, int] = {}
        for tag, x in zip(self.root_system.long_short, self.nu):
            if seen.setdefault(tag, x) != x:
                return False
        return True

    def describe_nu(self) -> Union[int, str]:
        """An int for a uniform bound, else a compact class description."""
        if len(set(self.nu)) == 1:
            return self.nu[0]
        if self == ArrangementSpec.short_zero_long_one(self.root_system):
            return "short0long1"
        pairs = sorted(
            {(tag, x) for tag, x in zip(self.root_system.long_short, self.nu)}
        )
        return ",".join(f"{tag}:{x}" for tag, x in pairs)


@dataclass(frozen=True)
class Region:
    """A region of the arrangement complement, with one witness alcove."""

    strips: Strips
    witness: Element = field(compare=False)


def region_of(spec: ArrangementSpec, elem: Element) -> Region:
    """The region containing the alcove of elem: clamp each strip number."""
    strips = tuple(
        min(max(b, -n - 1), n + 1) for b, n in zip(elem.b, spec.nu)
    )
    return Region(strips, elem)


def same_side_as_A0(spec: ArrangementSpec, region: Region, g: int) -> bool:
    """Whether the region lies weakly on the fundamental side of generator g.

    Every alcove of such a region ascends under g, so the whole region
    moves to one successor region when the arrangement satisfies the
    length-class condition.
    """
    rs = spec.root_system
    if g < rs.rank:
        return region.strips[rs.simple_indices[g]] >= 0
    if g == rs.rank:
        return region.strips[rs.highest_root_index] <= 0
    raise ValueError(f"no generator {g} for rank {rs.rank}")


def transition(spec: ArrangementSpec, region: Region, g: int) -> Optional[Region]:
    """Successor region under generator g, or None when inadmissible."""
    if not same_side_as_A0(spec, region, g):
        return None
    return region_of(spec, right_multiply(spec.root_system, region.witness, g))


def enumerate_regions(spec: ArrangementSpec) -> List[Region]:
    """All regions of the complement, breadth-first from the base region.

    Every region contains an alcove and every alcove is reached by a
    reduced word, so the admissible-transition closure of the identity
    region visits the whole complement.  Discovery order (generators in
    id order) fixes the numbering.
    """
    rs = spec.root_system
    start = region_of(spec, identity_element(rs))
    out = [start]
    seen = {start.strips: 0}
    queue = [start]
    while queue:
        nxt: List[Region] = []
        for reg in queue:
            for g in range(rs.rank + 1):
                img = transition(spec, reg, g)
                if img is not None and img.strips not in seen:
                    seen[img.strips] = len(out)
                    out.append(img)
                    nxt.append(img)
        queue = nxt
    return out


@dataclass(frozen=True)
class StarViolation:
    strips: Strips
    generator: int
    images: Tuple[Strips, ...]


@dataclass(frozen=True)
class StarReport:
    ok: bool
    violations: Tuple[StarViolation, ...]
    regions_checked: int
    witnesses_used: int


def verify_star(spec: ArrangementSpec, max_len: int) -> StarReport:
    """Empirically verify single-valued region transitions.

    Groups all alcoves of length <= max_len by region; for every region
    on the fundamental side of a generator, the images of its alcoves
    must land in a single region.
    """
    rs = spec.root_system
    B = ball(rs, max_len)
    groups: Dict[Strips, List[Element]] = {}
    for w in B.elements:
        groups.setdefault(region_of(spec, w).strips, []).append(w)
    violations: List[StarViolation] = []
    for strips in sorted(groups):
        reg = Region(strips, groups[strips][0])
        for g in range(rs.rank + 1):
            if not same_side_as_A0(spec, reg, g):
                continue
            images = sorted(
                {
                    region_of(spec, right_multiply(rs, w, g)).strips
                    for w in groups[strips]
                }
            )
            if len(images) > 1:
                violations.append(StarViolation(strips, g, tuple(images)))
    return StarReport(
        ok=not violations,
        violations=tuple(violations),
        regions_checked=len(groups),
        witnesses_used=len(B),
    )


def regions_to_json(regions: Sequence[Region]) -> str:
    """Region table as JSON: strip vector and witness word per region."""
    rows = [
        {
            "strips": list(reg.strips),
            "witness_word": list(reg.witness.word or ()),
        }
        for reg in regions
    ]
    return json.dumps(rows, indent=2)
