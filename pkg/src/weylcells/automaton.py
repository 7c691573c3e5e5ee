"""Deterministic finite automata with partial transition tables.

States carry opaque labels (region strip vectors when built from an
arrangement).  Transitions are partial: a missing edge kills the run.
All constructions (reversal, union, minimisation) order new states by
breadth-first discovery with letters tried in increasing order, so
exports are byte-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .arrangement import ArrangementSpec, enumerate_regions, transition

Delta = Tuple[Tuple[Optional[int], ...], ...]


@dataclass(frozen=True)
class Automaton:
    """A DFA over letters 0..alphabet_size-1 with partial transitions."""

    alphabet_size: int
    states: Tuple[object, ...]  # labels, indexed by state id
    initial: int
    accepting: FrozenSet[int]
    delta: Delta

    @property
    def n_states(self) -> int:
        return len(self.states)


def from_arrangement(spec: ArrangementSpec) -> Automaton:
    """The region automaton: all states accepting, base region initial.

    Edges follow admissible right multiplication; a word is accepted
    exactly when it is a reduced word of the underlying group.
    """
    rs = spec.root_system
    regions = enumerate_regions(spec)
    idx = {reg.strips: i for i, reg in enumerate(regions)}
    delta = tuple(
        tuple(
            (idx[img.strips] if (img := transition(spec, reg, g)) is not None else None)
            for g in range(rs.rank + 1)
        )
        for reg in regions
    )
    return Automaton(
        alphabet_size=rs.rank + 1,
        states=tuple(reg.strips for reg in regions),
        initial=0,
        accepting=frozenset(range(len(regions))),
        delta=delta,
    )


def accepts(aut: Automaton, word: Sequence[int]) -> bool:
    """Run the word; reject on a missing edge, error on a bad letter."""
    q = aut.initial
    for a in word:
        if not 0 <= a < aut.alphabet_size:
            raise ValueError(f"letter {a} outside alphabet of size {aut.alphabet_size}")
        nxt = aut.delta[q][a]
        if nxt is None:
            return False
        q = nxt
    return q in aut.accepting


def count_words(aut: Automaton, max_len: int) -> List[int]:
    """Number of accepted words of each length 0..max_len.

    Dynamic program over live path counts per state; only runs ending
    in an accepting state contribute.
    """
    vec: Dict[int, int] = {aut.initial: 1}
    out = [sum(c for q, c in vec.items() if q in aut.accepting)]
    for _ in range(max_len):
        nxt: Dict[int, int] = {}
        for q, c in vec.items():
            for a in range(aut.alphabet_size):
                t = aut.delta[q][a]
                if t is not None:
                    nxt[t] = nxt.get(t, 0) + c
        vec = nxt
        out.append(sum(c for q, c in vec.items() if q in aut.accepting))
    return out


def enumerate_words(aut: Automaton, max_len: int) -> List[Tuple[int, ...]]:
    """All accepted words of length <= max_len, sorted by length then lex."""
    out: List[Tuple[int, ...]] = []
    level: List[Tuple[int, Tuple[int, ...]]] = [(aut.initial, ())]
    for _ in range(max_len + 1):
        out.extend(word for q, word in level if q in aut.accepting)
        level = [
            (t, word + (a,))
            for q, word in level
            for a in range(aut.alphabet_size)
            if (t := aut.delta[q][a]) is not None
        ]
    return out


def restrict_accepting(aut: Automaton, states: Iterable[int]) -> Automaton:
    """Same machine, accepting set replaced by the given states."""
    keep = frozenset(states)
    bad = keep - set(range(aut.n_states))
    if bad:
        raise ValueError(f"unknown states {sorted(bad)}")
    return Automaton(aut.alphabet_size, aut.states, aut.initial, keep, aut.delta)


def reverse_language(aut: Automaton) -> Automaton:
    """DFA for the reversed language, by subset construction.

    Subset states are labelled by the sorted tuple of original states
    and discovered breadth-first, which fixes the state numbering.
    """
    rev: Dict[int, List[List[int]]] = {}  # target -> per-letter sources
    for q in range(aut.n_states):
        for a in range(aut.alphabet_size):
            t = aut.delta[q][a]
            if t is not None:
                rev.setdefault(t, [[] for _ in range(aut.alphabet_size)])[a].append(q)
    start = tuple(sorted(aut.accepting))
    subsets: Dict[Tuple[int, ...], int] = {start: 0}
    order = [start]
    delta_rows: List[List[Optional[int]]] = []
    queue = [start]
    while queue:
        nxt_queue: List[Tuple[int, ...]] = []
        for sub in queue:
            row: List[Optional[int]] = []
            for a in range(aut.alphabet_size):
                img = sorted(
                    {
                        src
                        for t in sub
                        if t in rev
                        for src in rev[t][a]
                    }
                )
                if not img:
                    row.append(None)
                    continue
                key = tuple(img)
                if key not in subsets:
                    subsets[key] = len(order)
                    order.append(key)
                    nxt_queue.append(key)
                row.append(subsets[key])
            delta_rows.append(row)
        queue = nxt_queue
    accepting = frozenset(
        i for i, sub in enumerate(order) if aut.initial in sub
    )
    return Automaton(
        aut.alphabet_size,
        tuple(order),
        0,
        accepting,
        tuple(tuple(row) for row in delta_rows),
    )


def union(auts: Sequence[Automaton]) -> Automaton:
    """DFA accepting the union of the given languages (shared alphabet).

    Product construction over tuples of states with None for a dead
    component; a tuple that is dead everywhere is dropped.
    """
    if not auts:
        raise ValueError("union of no automata")
    k = auts[0].alphabet_size
    if any(a.alphabet_size != k for a in auts):
        raise ValueError("alphabet sizes differ")
    start = tuple(a.initial for a in auts)
    index: Dict[Tuple[Optional[int], ...], int] = {start: 0}
    order = [start]
    rows: List[List[Optional[int]]] = []
    queue = [start]
    while queue:
        nxt_queue: List[Tuple[Optional[int], ...]] = []
        for state in queue:
            row: List[Optional[int]] = []
            for a in range(k):
                img = tuple(
                    None if q is None else auts[i].delta[q][a]
                    for i, q in enumerate(state)
                )
                if all(q is None for q in img):
                    row.append(None)
                    continue
                if img not in index:
                    index[img] = len(order)
                    order.append(img)
                    nxt_queue.append(img)
                row.append(index[img])
            rows.append(row)
        queue = nxt_queue
    accepting = frozenset(
        i
        for i, state in enumerate(order)
        if any(q is not None and q in auts[j].accepting for j, q in enumerate(state))
    )
    return Automaton(k, tuple(order), 0, accepting, tuple(tuple(r) for r in rows))


def _reachable(aut: Automaton) -> List[int]:
    seen = {aut.initial}
    queue = [aut.initial]
    while queue:
        q = queue.pop()
        for a in range(aut.alphabet_size):
            t = aut.delta[q][a]
            if t is not None and t not in seen:
                seen.add(t)
                queue.append(t)
    return sorted(seen)


def _live(aut: Automaton) -> FrozenSet[int]:
    """States from which an accepting state is reachable."""
    rev: Dict[int, List[int]] = {}
    for q in range(aut.n_states):
        for a in range(aut.alphabet_size):
            t = aut.delta[q][a]
            if t is not None:
                rev.setdefault(t, []).append(q)
    seen = set(aut.accepting)
    queue = list(aut.accepting)
    while queue:
        q = queue.pop()
        for src in rev.get(q, ()):
            if src not in seen:
                seen.add(src)
                queue.append(src)
    return frozenset(seen)


def minimize(aut: Automaton) -> Automaton:
    """Minimal partial DFA for the same language.

    Unreachable and dead states are removed, the rest are merged by
    Moore partition refinement, and the quotient is renumbered
    breadth-first from the initial state.
    """
    keep = [q for q in _reachable(aut) if q in _live(aut)]
    if aut.initial not in keep:
        row = (None,) * aut.alphabet_size
        return Automaton(aut.alphabet_size, ("empty",), 0, frozenset(), (row,))
    keep_set = set(keep)
    block: Dict[int, int] = {q: (0 if q in aut.accepting else 1) for q in keep}
    while True:
        sig: Dict[int, Tuple] = {}
        for q in keep:
            sig[q] = (
                block[q],
                tuple(
                    block[t] if (t := aut.delta[q][a]) in keep_set and t is not None else None
                    for a in range(aut.alphabet_size)
                ),
            )
        relabel: Dict[Tuple, int] = {}
        new_block: Dict[int, int] = {}
        for q in keep:
            new_block[q] = relabel.setdefault(sig[q], len(relabel))
        if len(set(new_block.values())) == len(set(block.values())):
            block = new_block
            break
        block = new_block
    # breadth-first renumbering of the quotient
    rep: Dict[int, List[int]] = {}
    for q in keep:
        rep.setdefault(block[q], []).append(q)
    number: Dict[int, int] = {block[aut.initial]: 0}
    order = [block[aut.initial]]
    queue = [block[aut.initial]]
    while queue:
        nxt_queue: List[int] = []
        for bl in queue:
            q = rep[bl][0]
            for a in range(aut.alphabet_size):
                t = aut.delta[q][a]
                if t is None or t not in keep_set:
                    continue
                tb = block[t]
                if tb not in number:
                    number[tb] = len(order)
                    order.append(tb)
                    nxt_queue.append(tb)
        queue = nxt_queue
    labels = tuple(range(len(order)))
    delta = []
    for bl in order:
        q = rep[bl][0]
        row = []
        for a in range(aut.alphabet_size):
            t = aut.delta[q][a]
            row.append(
                number[block[t]] if t is not None and t in keep_set else None
            )
        delta.append(tuple(row))
    accepting = frozenset(
        i for i, bl in enumerate(order) if rep[bl][0] in aut.accepting
    )
    return Automaton(aut.alphabet_size, labels, 0, accepting, tuple(delta))


def _label_str(label: object) -> str:
    if isinstance(label, (tuple, list)):
        return ",".join(_label_str(x) for x in label)
    return str(label)


def to_dot(aut: Automaton) -> str:
    """Graphviz source; accepting states drawn as double circles."""
    lines = [
        "digraph automaton {",
        "  rankdir=LR;",
        '  __start__ [shape=point, label=""];',
        f"  __start__ -> q{aut.initial};",
    ]
    for i in range(aut.n_states):
        shape = "doublecircle" if i in aut.accepting else "circle"
        lines.append(f'  q{i} [shape={shape}, label="{_label_str(aut.states[i])}"];')
    for q in range(aut.n_states):
        for a in range(aut.alphabet_size):
            t = aut.delta[q][a]
            if t is not None:
                lines.append(f'  q{q} -> q{t} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _jsonable_label(label: object) -> object:
    if isinstance(label, (tuple, list)):
        return [_jsonable_label(x) for x in label]
    if isinstance(label, (int, str)):
        return label
    return str(label)


def to_json(aut: Automaton) -> str:
    doc = {
        "alphabet_size": aut.alphabet_size,
        "states": [_jsonable_label(s) for s in aut.states],
        "initial": aut.initial,
        "accepting": sorted(aut.accepting),
        "delta": [
            [q, a, t]
            for q in range(aut.n_states)
            for a in range(aut.alphabet_size)
            if (t := aut.delta[q][a]) is not None
        ],
    }
    return json.dumps(doc, indent=2)


def _tupled_label(label: object) -> object:
    if isinstance(label, list):
        return tuple(_tupled_label(x) for x in label)
    return label


def from_json(text: str) -> Automaton:
    doc = json.loads(text)
    n = len(doc["states"])
    k = doc["alphabet_size"]
    rows: List[List[Optional[int]]] = [[None] * k for _ in range(n)]
    for q, a, t in doc["delta"]:
        rows[q][a] = t
    return Automaton(
        alphabet_size=k,
        states=tuple(_tupled_label(s) for s in doc["states"]),
        initial=doc["initial"],
        accepting=frozenset(doc["accepting"]),
        delta=tuple(tuple(r) for r in rows),
    )
