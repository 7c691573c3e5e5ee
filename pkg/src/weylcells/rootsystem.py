"""Crystallographic root systems with exact rational arithmetic.

Roots are stored by their integer coefficient vectors over the simple
roots.  Points of the ambient space are stored by their coordinates in
the basis of fundamental coweights, the basis dual to the simple roots
under the invariant form.  In that basis the pairing of a root with a
point is an integer dot product, so every geometric test in this
package reduces to exact integer or Fraction arithmetic.

The invariant form is normalised so that short roots have squared
length 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

Coeffs = Tuple[int, ...]
Vector = Tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


def cartan_matrix(family: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix with entries a[i][j] = 2<a_i,a_j>/<a_j,a_j>.

    Simple roots are numbered 0..rank-1.  Chains are tridiagonal; the
    doubled bond of families B, C, F and the tripled bond of G sit in
    the off-diagonal entries, and D and E carry one fork.

    >>> cartan_matrix("A", 2)
    ((2, -1), (-1, 2))
    >>> cartan_matrix("G", 2)
    ((2, -1), (-3, 2))
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")

    def chain(n: int) -> List[List[int]]:
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
            if i + 1 < n:
                a[i][i + 1] = a[i + 1][i] = -1
        return a

    if family == "A":
        if rank < 1:
            raise ValueError("family A requires rank >= 1")
        return tuple(tuple(row) for row in chain(rank))
    if family == "B":
        # a[rank-1] is the unique short simple root.
        if rank < 2:
            raise ValueError("family B requires rank >= 2")
        a = chain(rank)
        a[rank - 2][rank - 1] = -2
        return tuple(tuple(row) for row in a)
    if family == "C":
        # a[rank-1] is the unique long simple root.
        if rank < 2:
            raise ValueError("family C requires rank >= 2")
        a = chain(rank)
        a[rank - 1][rank - 2] = -2
        return tuple(tuple(row) for row in a)
    if family == "D":
        if rank < 4:
            raise ValueError("family D requires rank >= 4")
        a = chain(rank - 1)
        for row in a:
            row.append(0)
        a.append([0] * rank)
        a[rank - 1][rank - 1] = 2
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
        return tuple(tuple(row) for row in a)
    if family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("family E requires rank in {6, 7, 8}")
        # Node 1 is the fork attached to node 3 of the chain 0-2-3-4-...
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
        a = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            a[i][i] = 2
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return tuple(tuple(row) for row in a)
    if family == "F":
        if rank != 4:
            raise ValueError("family F requires rank 4")
        a = chain(4)
        a[1][2] = -2
        return tuple(tuple(row) for row in a)
    # family == "G"
    if rank != 2:
        raise ValueError("family G requires rank 2")
    return ((2, -1), (-3, 2))


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """Positive rationals d with a[i][j]*d[j] = a[j][i]*d[i], min = 1."""
    n = len(cartan)
    d: List[Fraction] = [Fraction(0)] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] == 0:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                todo.append(j)
    if any(x <= 0 for x in d):
        raise ValueError("Cartan matrix is not connected or not symmetrizable")
    lo = min(d)
    return tuple(x / lo for x in d)


class RootSystem:
    """An irreducible root system together with precomputed exact data.

    Positive roots are sorted by height and then lexicographically by
    coefficient vector, so indices are reproducible across runs.
    """

    def __init__(self, family: str, rank: int):
        self.family = family
        self.rank = rank
        self.cartan = cartan_matrix(family, rank)
        d = _symmetrizer(self.cartan)
        # <a_i,a_j> = a[i][j] * <a_j,a_j> / 2 and <a_j,a_j> = 2*d[j].
        self.simple_gram: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(self.cartan[i][j]) * d[j] for j in range(rank))
            for i in range(rank)
        )
        self.root_coeffs: Tuple[Coeffs, ...] = self._close_positive_roots()
        self.index: Dict[Coeffs, int] = {c: i for i, c in enumerate(self.root_coeffs)}
        self.simple_indices: Tuple[int, ...] = tuple(
            self.index[tuple(1 if j == i else 0 for j in range(rank))]
            for i in range(rank)
        )
        heights = [sum(c) for c in self.root_coeffs]
        self.highest_root_index: int = heights.index(max(heights))
        self.coxeter_number: int = max(heights) + 1
        if rank * self.coxeter_number != 2 * len(self.root_coeffs):
            raise AssertionError("rank * Coxeter number != 2 * number of positive roots")
        lengths = [self._norm2(c) for c in self.root_coeffs]
        top = max(lengths)
        # one length class means every root counts as short
        self.long_short: Tuple[str, ...] = tuple(
            "long" if x == top and min(lengths) < top else "short"
            for x in lengths
        )
        self.positive_roots: Tuple[Vector, ...] = tuple(
            self._coweight_coords(c) for c in self.root_coeffs
        )
        self.gram: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(self._form(a, b) for b in self.root_coeffs)
            for a in self.root_coeffs
        )

    # -- construction helpers -------------------------------------------------

    def _reflect_coeffs(self, c: Coeffs, s: int) -> Coeffs:
        out = list(c)
        out[s] -= sum(c[i] * self.cartan[i][s] for i in range(self.rank))
        return tuple(out)

    def _close_positive_roots(self) -> Tuple[Coeffs, ...]:
        simples = [
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]
        roots = set(simples)
        frontier = list(roots)
        while frontier:
            nxt = []
            for c in frontier:
                for s in range(self.rank):
                    r = self._reflect_coeffs(c, s)
                    if r not in roots and all(x >= 0 for x in r):
                        roots.add(r)
                        nxt.append(r)
            frontier = nxt
        return tuple(sorted(roots, key=lambda c: (sum(c), c)))

    def _form(self, a: Coeffs, b: Coeffs) -> Fraction:
        return sum(
            Fraction(a[i]) * self.simple_gram[i][j] * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def _norm2(self, c: Coeffs) -> Fraction:
        return self._form(c, c)

    def _coweight_coords(self, c: Coeffs) -> Vector:
        # Coordinate i of a vector x in the coweight basis is <a_i, x>.
        return tuple(
            sum(self.simple_gram[i][j] * c[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    # -- queries --------------------------------------------------------------

    @property
    def n_positive(self) -> int:
        return len(self.root_coeffs)

    @property
    def highest_root(self) -> Coeffs:
        return self.root_coeffs[self.highest_root_index]

    def root_index(self, coeffs: Sequence[int]) -> int:
        """Index of a positive root given by simple-root coefficients."""
        return self.index[tuple(coeffs)]

    def describe(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.family!r}, {self.rank})"


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct a root system, validating the (family, rank) pair.

    Instances are immutable, so repeated requests share one object.

    >>> rs = build_root_system("A", 2)
    >>> rs.n_positive
    3
    >>> rs.coxeter_number
    3
    """
    return RootSystem(family, rank)


def reflect_root(rs: RootSystem, root_index: int, s: int) -> Tuple[int, int]:
    """Image of a positive root under the simple reflection s.

    Returns (index, sign) where sign is +1 if the image is positive and
    -1 if it is the negative of the returned positive root.  The sign
    is -1 exactly when the root is the simple root of s.
    """
    c = rs._reflect_coeffs(rs.root_coeffs[root_index], s)
    if all(x >= 0 for x in c):
        return rs.index[c], 1
    neg = tuple(-x for x in c)
    return rs.index[neg], -1


def pairing(rs: RootSystem, root_index: int, vector: Sequence[Fraction]) -> Fraction:
    """<root, v> for a point v given in fundamental coweight coordinates."""
    if len(vector) != rs.rank:
        raise ValueError("vector has wrong dimension")
    c = rs.root_coeffs[root_index]
    return sum(Fraction(c[i]) * vector[i] for i in range(rs.rank))


def highest_root_coefficient(rs: RootSystem, root_index: int) -> int:
    """The integer 2<b, h>/<h, h> for the highest root h.

    Equals 2 for the highest root itself and 0 or 1 for every other
    positive root.
    """
    h = rs.highest_root_index
    val = 2 * rs.gram[root_index][h] / rs.gram[h][h]
    if val.denominator != 1:
        raise AssertionError("pairing against the highest root is not integral")
    return int(val)


def reflect_point(rs: RootSystem, s: int, v: Sequence[Fraction]) -> Vector:
    """Image of a point (coweight coordinates) under the simple reflection s."""
    t = Fraction(v[s])  # <a_s, v> reads off coordinate s
    return tuple(
        Fraction(v[i]) - t * rs.cartan[i][s] for i in range(rs.rank)
    )
