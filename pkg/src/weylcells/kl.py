"""Kazhdan-Lusztig polynomials, W-graphs, and cells on bounded balls.

Polynomials are computed over a breadth-first ball by the classical
recursion: pick a left descent s of w, set v = s*w, and combine
P(s*u, v), q*P(u, v) and the mu-corrections from v.  Everything is
exact integer arithmetic on coefficient tuples (low degree first).

Cells are strongly connected components of the W-graph whose arrow
u -> w requires a join (the degree bound is attained between u and w)
and a descent not shared by w.  On a finite ball only components away
from the boundary can be trusted; `cells_stabilized` compares two
radii and flags the classes that are safe to read off.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .alcoves import Ball, Element, ball
from .rootsystem import RootSystem

Poly = Tuple[int, ...]  # coefficients, constant term first; () is zero


def _padd(a: Poly, b: Poly, shift: int = 0, scale: int = 1) -> Poly:
    """a + scale * q^shift * b, trimmed."""
    n = max(len(a), shift + len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[shift + i] += scale * x
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pdeg(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


class KLTable:
    """Kazhdan-Lusztig polynomials P(u, w) for all pairs in a ball."""

    def __init__(self, b: Ball):
        self.ball = b
        n = len(b)
        lengths = b.lengths
        # Bruhat lower intervals via the subword recursion on BFS words:
        # {u <= w} = {u <= w'} union {u*s : u <= w'} for w = w'*s.
        lower: List[FrozenSet[int]] = [frozenset()] * n
        lower[0] = frozenset((0,))
        for i in range(1, n):
            p = b.parents[i]
            t = b.last_letters[i]
            base = lower[p]
            grown = set(base)
            for u in base:
                img = b.right[u][t]
                if img is None:
                    raise AssertionError("Bruhat interval left the ball")
                grown.add(img)
            grown.add(i)
            lower[i] = frozenset(grown)
        self.lower: Tuple[FrozenSet[int], ...] = tuple(lower)

        self.polys: Dict[Tuple[int, int], Poly] = {}
        self.mu: Dict[Tuple[int, int], int] = {}
        mu_by_w: Dict[int, List[int]] = {}
        for w in range(1, n):
            s = min(b.left_descent_sets[w])
            v = b.left[w][s]
            assert v is not None and lengths[v] == lengths[w] - 1
            mu_v = [z for z in mu_by_w.get(v, ()) if _left_descends(b, z, s)]
            for u in sorted(self.lower[w]):
                if u == w:
                    continue
                su = b.left[u][s]
                assert su is not None
                c = 1 if lengths[su] < lengths[u] else 0
                p = _padd(
                    _shifted(self.poly(su, v), 1 - c),
                    self.poly(u, v),
                    shift=c,
                )
                for z in mu_v:
                    if u != z and u not in self.lower[z]:
                        continue
                    pz = (1,) if u == z else self.poly(u, z)
                    if pz:
                        p = _padd(
                            p,
                            pz,
                            shift=(lengths[w] - lengths[z]) // 2,
                            scale=-self.mu[(z, v)],
                        )
                diff = lengths[w] - lengths[u]
                if not p or p[0] != 1 or 2 * _pdeg(p) > diff - 1:
                    raise AssertionError(
                        f"recursion produced an invalid polynomial {p} for pair {u},{w}"
                    )
                self.polys[(u, w)] = p
                if diff % 2 == 1 and 2 * _pdeg(p) == diff - 1:
                    self.mu[(u, w)] = p[-1]
                    mu_by_w.setdefault(w, []).append(u)

    # -- queries --------------------------------------------------------------

    def leq(self, u: int, w: int) -> bool:
        return u in self.lower[w]

    def poly(self, u: int, w: int) -> Poly:
        """P(u, w); (1,) on the diagonal, () when u is not below w."""
        if u == w:
            return (1,)
        return self.polys.get((u, w), ())

    def poly_elements(self, u: Element, w: Element) -> Poly:
        b = self.ball
        if u.b not in b.index or w.b not in b.index:
            raise ValueError("element outside the ball of this table")
        return self.poly(b.index[u.b], b.index[w.b])

    def mu_value(self, u: int, w: int) -> int:
        return self.mu.get((u, w), 0)


def _left_descends(b: Ball, z: int, s: int) -> bool:
    return s in b.left_descent_sets[z]


def _shifted(p: Poly, k: int) -> Poly:
    if not p:
        return ()
    return (0,) * k + tuple(p)


def kl_table(root_system: RootSystem, max_len: int) -> KLTable:
    """Build the table on the breadth-first ball of the given radius.

    >>> t = kl_table(RootSystem("A", 1), 4)
    >>> all(t.poly(u, w) == (1,) for w in range(len(t.ball)) for u in t.lower[w])
    True
    """
    return KLTable(ball(root_system, max_len))


def join(table: KLTable, u: int, w: int) -> bool:
    """Whether the KL polynomial of the comparable pair attains its bound.

    False for equal, incomparable, or even length-difference pairs.
    """
    if u == w:
        return False
    if table.leq(u, w):
        lo, hi = u, w
    elif table.leq(w, u):
        lo, hi = w, u
    else:
        return False
    diff = table.ball.lengths[hi] - table.ball.lengths[lo]
    return 2 * _pdeg(table.poly(lo, hi)) == diff - 1


@dataclass(frozen=True)
class WGraph:
    """Directed graph on ball elements; arrows carry cell information."""

    ball: Ball
    side: str  # "left" or "right"
    succ: Tuple[Tuple[int, ...], ...]


def w_graph(table: KLTable, side: str = "left") -> WGraph:
    """Arrow u -> w iff join(u, w) and descents(u) not within descents(w).

    The left graph compares left descent sets; its components are the
    left cells.  Right likewise.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    b = table.ball
    dsets = b.left_descent_sets if side == "left" else b.right_descent_sets
    n = len(b)
    succ: List[List[int]] = [[] for _ in range(n)]
    for w in range(n):
        for u in sorted(table.lower[w]):
            if u == w or not join(table, u, w):
                continue
            if not dsets[u] <= dsets[w]:
                succ[u].append(w)
            if not dsets[w] <= dsets[u]:
                succ[w].append(u)
    return WGraph(b, side, tuple(tuple(sorted(s)) for s in succ))


def tarjan_scc(n: int, succ: Sequence[Sequence[int]]) -> List[List[int]]:
    """Strongly connected components, iteratively, in deterministic order."""
    num = [-1] * n
    low = [0] * n
    on = [False] * n
    stack: List[int] = []
    comps: List[List[int]] = []
    counter = 0
    for root in range(n):
        if num[root] != -1:
            continue
        work: List[Tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                num[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on[v] = True
            descended = False
            for i in range(pi, len(succ[v])):
                t = succ[v][i]
                if num[t] == -1:
                    work.append((v, i + 1))
                    work.append((t, 0))
                    descended = True
                    break
                if on[t]:
                    low[v] = min(low[v], num[t])
            if descended:
                continue
            if low[v] == num[v]:
                comp = []
                while True:
                    t = stack.pop()
                    on[t] = False
                    comp.append(t)
                    if t == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


@dataclass(frozen=True)
class CellDecomposition:
    """Cell classes of a ball, labelled deterministically.

    Classes are numbered by their least member under length-then-word
    order.  `frontier[c]` says the class touches the outer two length
    shells, where membership is provisional.  When produced by
    `cells_stabilized`, `stable[c]` marks classes whose interior part
    (members clear of those shells) was reproduced unchanged at the
    larger radius, and `mismatches` lists the classes that changed.
    """

    ball: Ball
    side: str
    radius: int
    n: int  # number of elements covered (a prefix of the ball)
    labels: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    frontier: Tuple[bool, ...]
    stable: Optional[Tuple[bool, ...]] = None
    mismatches: Tuple[str, ...] = ()

    def class_of(self, i: int) -> int:
        return self.labels[i]

    def class_name(self, c: int) -> str:
        """Canonical name: witness word of the shortest member."""
        i = self.classes[c][0]
        word = self.ball.elements[i].word
        return "e" if not word else " ".join(str(x) for x in word)

    def interior_members(self, c: int) -> Tuple[int, ...]:
        """Members clear of the outer two length shells."""
        cut = self.radius - 2
        return tuple(i for i in self.classes[c] if self.ball.lengths[i] <= cut)


def _member_key(b: Ball, i: int):
    return (b.lengths[i], b.elements[i].word)


def _decompose(
    b: Ball, side: str, succ: Sequence[Sequence[int]], n: int, radius: int
) -> CellDecomposition:
    comps = tarjan_scc(n, succ)
    comps = [sorted(c, key=lambda i: _member_key(b, i)) for c in comps]
    comps.sort(key=lambda c: _member_key(b, c[0]))
    labels = [0] * n
    for ci, comp in enumerate(comps):
        for i in comp:
            labels[i] = ci
    frontier = tuple(
        any(b.lengths[i] >= radius - 1 for i in comp) for comp in comps
    )
    return CellDecomposition(
        ball=b,
        side=side,
        radius=radius,
        n=n,
        labels=tuple(labels),
        classes=tuple(tuple(c) for c in comps),
        frontier=frontier,
    )


def cells(graph: WGraph) -> CellDecomposition:
    """Strongly connected components of the W-graph as cell classes."""
    b = graph.ball
    return _decompose(b, graph.side, graph.succ, len(b), b.radius)


def two_sided_cells(left: CellDecomposition, right: CellDecomposition) -> CellDecomposition:
    """Joint closure: same two-sided class when joined by left or right classes."""
    if left.n != right.n:
        raise ValueError("decompositions cover different balls")
    n = left.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def unite(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for dec in (left, right):
        for comp in dec.classes:
            for i in comp[1:]:
                unite(comp[0], i)
    groups: Dict[int, List[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    b = left.ball
    comps = [sorted(c, key=lambda i: _member_key(b, i)) for c in groups.values()]
    comps.sort(key=lambda c: _member_key(b, c[0]))
    labels = [0] * n
    for ci, comp in enumerate(comps):
        for i in comp:
            labels[i] = ci
    frontier = tuple(
        any(b.lengths[i] >= left.radius - 1 for i in comp) for comp in comps
    )
    return CellDecomposition(
        ball=b,
        side="two_sided",
        radius=left.radius,
        n=n,
        labels=tuple(labels),
        classes=tuple(tuple(c) for c in comps),
        frontier=frontier,
    )


def cells_stabilized(
    root_system: RootSystem, max_len: int, check_len: int, side: str = "left"
) -> CellDecomposition:
    """Cells at radius max_len, cross-checked at radius check_len.

    Both decompositions come from one table at the larger radius; the
    smaller one is the induced subgraph on the shorter elements, whose
    numbering agrees with the smaller ball.  Classes computed inside a
    ball can only be too small, never too large: every cycle of the
    truncated graph is a cycle of the full graph, so each class is a
    subset of a true cell.  Membership near the boundary is therefore
    provisional, and a class is called stable when its interior part,
    the members of length <= max_len - 2, is nonempty and is reproduced
    exactly by the larger radius: those members still form one class,
    and that class gained no new interior members.  Classes whose
    interior part changed are reported in `mismatches`, not hidden.
    """
    if check_len <= max_len:
        raise ValueError("check_len must exceed max_len")
    table = kl_table(root_system, check_len)
    graph = w_graph(table, side)
    big = cells(graph)
    b = table.ball
    n_small = sum(1 for x in b.lengths if x <= max_len)
    small_succ = [
        tuple(t for t in graph.succ[u] if t < n_small) for u in range(n_small)
    ]
    small = _decompose(b, side, small_succ, n_small, max_len)
    cut = max_len - 2
    stable: List[bool] = []
    mismatches: List[str] = []
    for ci, comp in enumerate(small.classes):
        inner = tuple(i for i in comp if b.lengths[i] <= cut)
        if not inner:
            stable.append(False)
            continue
        big_comp = big.classes[big.labels[inner[0]]]
        big_inner = tuple(i for i in big_comp if b.lengths[i] <= cut)
        if big_inner == inner:
            stable.append(True)
        else:
            stable.append(False)
            mismatches.append(
                f"class {small.class_name(ci)!r}: {len(inner)} interior members "
                f"at radius {max_len} but {len(big_inner)} at radius {check_len}"
            )
    return CellDecomposition(
        ball=b,
        side=side,
        radius=max_len,
        n=n_small,
        labels=small.labels,
        classes=small.classes,
        frontier=small.frontier,
        stable=tuple(stable),
        mismatches=tuple(mismatches),
    )


def kl_to_json(table: KLTable) -> str:
    """All stored pairs with their witness words and coefficients."""
    b = table.ball
    entries = [
        {
            "u_word": list(b.elements[u].word),
            "w_word": list(b.elements[w].word),
            "coeffs": list(table.polys[(u, w)]),
        }
        for (u, w) in sorted(table.polys)
    ]
    doc = {
        "type": b.rs.describe(),
        "radius": b.radius,
        "entries": entries,
    }
    return json.dumps(doc, indent=2)


def wgraph_to_dot(graph: WGraph) -> str:
    """Graphviz source; nodes show witness words, edges length difference."""
    b = graph.ball
    lines = ["digraph wgraph {", "  rankdir=LR;"]
    for i in range(len(graph.succ)):
        word = b.elements[i].word
        name = "e" if not word else " ".join(str(x) for x in word)
        lines.append(f'  n{i} [label="{name}"];')
    for u in range(len(graph.succ)):
        for w in graph.succ[u]:
            d = b.lengths[w] - b.lengths[u]
            lines.append(f'  n{u} -> n{w} [label="{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
