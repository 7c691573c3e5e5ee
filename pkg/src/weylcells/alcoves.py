"""Affine Weyl group elements in alcove coordinates.

An element w corresponds to the alcove obtained by applying w to the
fundamental alcove under the right action.  The alcove is recorded by
its strip numbers: for each positive root b, the integer k with
k < <b, v> < k+1 on the alcove interior.  All strip numbers are zero
exactly for the identity, and the length of w is the total absolute
value of its strip vector.

Generators are numbered 0..rank-1 for the simple reflections and rank
for the reflection through <highest root, v> = 1.  Right
multiplication by a generator is a permutation-with-signs of the strip
vector and needs no linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .rootsystem import (
    RootSystem,
    highest_root_coefficient,
    reflect_root,
)

BVector = Tuple[int, ...]
Word = Tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """One Coxeter generator of the affine Weyl group."""

    id: int
    is_affine: bool
    root_index: int  # simple root for finite, highest root for affine


@dataclass(frozen=True)
class Element:
    """Group element as a strip vector plus an optional witness word."""

    b: BVector
    word: Optional[Word] = field(default=None, compare=False)


def generators(rs: RootSystem) -> Tuple[Generator, ...]:
    """The rank+1 generators, affine generator last.

    >>> [g.is_affine for g in generators(RootSystem("A", 2))]
    [False, False, True]
    """
    gens = [
        Generator(i, False, rs.simple_indices[i]) for i in range(rs.rank)
    ]
    gens.append(Generator(rs.rank, True, rs.highest_root_index))
    return tuple(gens)


class _Action:
    """Precomputed strip-vector update tables for one root system."""

    def __init__(self, rs: RootSystem):
        m = rs.n_positive
        self.top = rs.highest_root_index
        self.perm: List[Tuple[int, ...]] = []
        for s in range(rs.rank):
            images = []
            flips = 0
            for i in range(m):
                j, sign = reflect_root(rs, i, s)
                if sign < 0:
                    flips += 1
                    if i != rs.simple_indices[s]:
                        raise AssertionError("simple reflection negates a non-simple root")
                images.append(j)
            if flips != 1:
                raise AssertionError("simple reflection must negate exactly one positive root")
            self.perm.append(tuple(images))
        self.chrc = tuple(highest_root_coefficient(rs, i) for i in range(m))
        top_c = rs.highest_root
        partner = []
        for i in range(m):
            if self.chrc[i] == 1:
                diff = tuple(top_c[j] - rs.root_coeffs[i][j] for j in range(rs.rank))
                partner.append(rs.index[diff])
            else:
                partner.append(-1)
        self.partner = tuple(partner)
        self.simple_indices = rs.simple_indices


def _action(rs: RootSystem) -> _Action:
    act = getattr(rs, "_alcove_action", None)
    if act is None:
        act = _Action(rs)
        rs._alcove_action = act
    return act


def identity_element(rs: RootSystem) -> Element:
    return Element((0,) * rs.n_positive, ())


def right_multiply(rs: RootSystem, elem: Element, g: int) -> Element:
    """The element w*s for a generator id s.

    For a finite generator the strip of the negated simple root becomes
    -k-1 and every other strip is carried along the root permutation.
    For the affine generator the highest-root strip becomes 1-k, roots
    orthogonal to the translation direction keep their strips, and the
    remaining roots swap with their highest-root complements, negated.
    """
    act = _action(rs)
    b = elem.b
    m = len(b)
    new = [0] * m
    if g < rs.rank:
        i_s = act.simple_indices[g]
        perm = act.perm[g]
        for i in range(m):
            if i == i_s:
                new[i_s] = -b[i_s] - 1
            else:
                new[perm[i]] = b[i]
    elif g == rs.rank:
        for i in range(m):
            c = act.chrc[i]
            if c == 2:
                new[i] = 1 - b[i]
            elif c == 0:
                new[i] = b[i]
            else:
                new[i] = -b[act.partner[i]]
    else:
        raise ValueError(f"no generator {g} for rank {rs.rank}")
    word = None if elem.word is None else elem.word + (g,)
    return Element(tuple(new), word)


def length(elem: Element) -> int:
    """Coxeter length: total number of hyperplanes crossed from the origin."""
    return sum(abs(x) for x in elem.b)


def evaluate_word(rs: RootSystem, word: Sequence[int]) -> Element:
    out = identity_element(rs)
    for g in word:
        out = right_multiply(rs, out, g)
    return out


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    """True when the word's length equals its product's length."""
    return length(evaluate_word(rs, word)) == len(word)


def right_descents(rs: RootSystem, elem: Element) -> FrozenSet[int]:
    """Generators s with length(w*s) < length(w)."""
    n = length(elem)
    return frozenset(
        g for g in range(rs.rank + 1)
        if length(right_multiply(rs, elem, g)) < n
    )


def reduced_word(rs: RootSystem, elem: Element) -> Word:
    """A reduced word for elem, recovered greedily from the strip vector."""
    cur = Element(elem.b, None)
    rev: List[int] = []
    while length(cur) > 0:
        s = min(right_descents(rs, cur))
        rev.append(s)
        cur = right_multiply(rs, cur, s)
    return tuple(reversed(rev))


def inverse(rs: RootSystem, elem: Element) -> Element:
    """The inverse element, computed from a witness word run backwards."""
    word = elem.word if elem.word is not None else reduced_word(rs, elem)
    return evaluate_word(rs, tuple(reversed(word)))


def left_descents(rs: RootSystem, elem: Element) -> FrozenSet[int]:
    """Generators s with length(s*w) < length(w)."""
    return right_descents(rs, inverse(rs, elem))


def bruhat_leq(rs: RootSystem, u: Element, w: Element) -> bool:
    """Bruhat order test by the subword criterion.

    Peels the fixed reduced word of w from the right, applying the
    lifting step: for s a right descent of w, u <= w iff (us if us < u
    else u) <= ws.
    """
    word = list(w.word if w.word is not None else reduced_word(rs, w))
    cur = Element(u.b)
    while True:
        n = length(cur)
        if n == 0:
            return True
        if n > len(word):
            return False
        s = word.pop()
        nxt = right_multiply(rs, cur, s)
        if length(nxt) < n:
            cur = nxt


class Ball:
    """All elements of length <= radius, breadth-first from the identity.

    Indices are BFS discovery order with generators tried in id order,
    so element numbering is deterministic.  Alongside the elements the
    ball carries right- and left-multiplication tables (None when the
    product leaves the ball), inverse indices, and both descent sets.
    """

    def __init__(self, rs: RootSystem, radius: int):
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        self.rs = rs
        self.radius = radius
        self.elements: List[Element] = [identity_element(rs)]
        self.index: Dict[BVector, int] = {self.elements[0].b: 0}
        parent: List[int] = [-1]
        last: List[int] = [-1]
        queue = [0]
        while queue:
            nxt: List[int] = []
            for i in queue:
                w = self.elements[i]
                if length(w) == radius:
                    continue
                for g in range(rs.rank + 1):
                    v = right_multiply(rs, w, g)
                    if v.b not in self.index:
                        self.index[v.b] = len(self.elements)
                        self.elements.append(v)
                        parent.append(i)
                        last.append(g)
                        nxt.append(self.index[v.b])
            queue = nxt
        n = len(self.elements)
        ngen = rs.rank + 1
        self.parents: Tuple[int, ...] = tuple(parent)
        self.last_letters: Tuple[int, ...] = tuple(last)
        self.lengths: Tuple[int, ...] = tuple(length(w) for w in self.elements)
        self.right: List[Tuple[Optional[int], ...]] = [
            tuple(
                self.index.get(right_multiply(rs, w, g).b) for g in range(ngen)
            )
            for w in self.elements
        ]
        # s*w follows from s*parent by one right multiplication, so the
        # left table fills in BFS order without evaluating long words.
        left: List[List[Optional[int]]] = [[None] * ngen for _ in range(n)]
        inv: List[int] = [0] * n
        for g in range(ngen):
            left[0][g] = self.index.get(right_multiply(rs, self.elements[0], g).b)
        for i in range(1, n):
            p, t = parent[i], last[i]
            for g in range(ngen):
                pid = left[p][g]
                if pid is None:
                    raise AssertionError("left product of a parent left the ball")
                left[i][g] = self.index.get(
                    right_multiply(rs, self.elements[pid], t).b
                )
            inv[i] = left[inv[p]][t]  # (p t)^-1 = t * p^-1
        self.left: List[Tuple[Optional[int], ...]] = [tuple(row) for row in left]
        self.inv: Tuple[int, ...] = tuple(inv)
        self.right_descent_sets: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(
                g for g in range(ngen)
                if (j := self.right[i][g]) is not None and self.lengths[j] < self.lengths[i]
            )
            for i in range(n)
        )
        self.left_descent_sets: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(
                g for g in range(ngen)
                if (j := self.left[i][g]) is not None and self.lengths[j] < self.lengths[i]
            )
            for i in range(n)
        )

    def __len__(self) -> int:
        return len(self.elements)

    def sphere_sizes(self) -> List[int]:
        out = [0] * (self.radius + 1)
        for n in self.lengths:
            out[n] += 1
        return out


def ball(rs: RootSystem, max_len: int) -> Ball:
    """Breadth-first ball of all elements with length <= max_len.

    >>> len(ball(RootSystem("A", 2), 1))
    4
    """
    return Ball(rs, max_len)
