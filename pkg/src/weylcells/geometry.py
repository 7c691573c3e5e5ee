"""Exact affine geometry of alcoves.

Group elements act on the ambient space (in fundamental coweight
coordinates) through integer affine maps v -> M v + t.  The generator
for the reflection through the hyperplane <b, v> = k is

    v -> v - (<b, v> - k) * bv

where bv is the coroot of b.  Composites of generator maps recover the
alcove of any word exactly, which is what the figure renderer and the
test oracles need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .rootsystem import RootSystem

Matrix = Tuple[Tuple[int, ...], ...]
IntVec = Tuple[int, ...]
AffineMap = Tuple[Matrix, IntVec]
Hyperplane = Tuple[IntVec, int]  # functional over coweight coordinates, constant


def identity_map(rank: int) -> AffineMap:
    m = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    return m, (0,) * rank


def coroot_coordinates(rs: RootSystem, root_index: int) -> IntVec:
    """Coweight coordinates of the coroot 2b/<b,b>; always integral."""
    n2 = rs.gram[root_index][root_index]
    out = []
    for i in range(rs.rank):
        x = 2 * rs.positive_roots[root_index][i] / n2
        if x.denominator != 1:
            raise AssertionError("coroot coordinate is not integral")
        out.append(int(x))
    return tuple(out)


def generator_map(rs: RootSystem, g: int) -> AffineMap:
    """Affine map of generator g: finite for g < rank, affine for g = rank."""
    if g < rs.rank:
        root, k = rs.simple_indices[g], 0
    elif g == rs.rank:
        root, k = rs.highest_root_index, 1
    else:
        raise ValueError(f"no generator {g} for rank {rs.rank}")
    c = rs.root_coeffs[root]
    cv = coroot_coordinates(rs, root)
    m = tuple(
        tuple((1 if i == j else 0) - cv[i] * c[j] for j in range(rs.rank))
        for i in range(rs.rank)
    )
    t = tuple(k * cv[i] for i in range(rs.rank))
    return m, t


def then(first: AffineMap, second: AffineMap) -> AffineMap:
    """Composite map: apply `first`, then `second`."""
    (m1, t1), (m2, t2) = first, second
    n = len(t1)
    m = tuple(
        tuple(sum(m2[i][k] * m1[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    t = tuple(sum(m2[i][k] * t1[k] for k in range(n)) + t2[i] for i in range(n))
    return m, t


def word_map(rs: RootSystem, word: Sequence[int]) -> AffineMap:
    """Affine map of a word under the right action: letters applied in order."""
    out = identity_map(rs.rank)
    for g in word:
        out = then(out, generator_map(rs, g))
    return out


def apply_map(m: AffineMap, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    mat, t = m
    n = len(t)
    return tuple(
        sum(mat[i][j] * Fraction(v[j]) for j in range(n)) + t[i] for i in range(n)
    )


def alcove_vertices(rs: RootSystem) -> Tuple[Tuple[Fraction, ...], ...]:
    """Vertices of the fundamental alcove: the origin and w_i / m_i.

    m_i is the coefficient of the i-th simple root in the highest root,
    so the vertex on the i-th coweight axis lies on <highest, v> = 1.
    """
    marks = rs.highest_root
    verts = [tuple(Fraction(0) for _ in range(rs.rank))]
    for i in range(rs.rank):
        verts.append(
            tuple(
                Fraction(1, marks[i]) if j == i else Fraction(0)
                for j in range(rs.rank)
            )
        )
    return tuple(verts)


def barycenter(rs: RootSystem) -> Tuple[Fraction, ...]:
    """Interior point of the fundamental alcove with non-integral pairings."""
    verts = alcove_vertices(rs)
    n = len(verts)
    return tuple(
        sum((v[i] for v in verts), Fraction(0)) / n for i in range(rs.rank)
    )


def functional_value(f: IntVec, k: int, v: Sequence[Fraction]) -> Fraction:
    return sum(f[i] * Fraction(v[i]) for i in range(len(f))) - k


def transport_hyperplane(h: Hyperplane, gen: AffineMap) -> Hyperplane:
    """Image of a hyperplane under an involutive generator map.

    For an involution s, u lies on the image of {f.v = k} iff s(u) does
    on the original, giving the functional f.M and constant k - f.t.
    """
    (f, k), (mat, t) = h, gen
    n = len(f)
    f2 = tuple(sum(f[i] * mat[i][j] for i in range(n)) for j in range(n))
    k2 = k - sum(f[i] * t[i] for i in range(n))
    return f2, k2


def normalize_hyperplane(rs: RootSystem, h: Hyperplane) -> Hyperplane:
    """Flip signs so the functional is a positive root; error otherwise."""
    f, k = h
    if tuple(f) in rs.index:
        return tuple(f), k
    neg = tuple(-x for x in f)
    if neg in rs.index:
        return neg, -k
    raise ValueError(f"functional {f} is not a root of {rs.describe()}")
