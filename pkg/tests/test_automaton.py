"""The region automaton and the language operations on it."""

from pathlib import Path

import pytest

from weylcells import (
    ArrangementSpec,
    accepts,
    build_root_system,
    count_words,
    enumerate_regions,
    enumerate_words,
    from_arrangement,
    from_json,
    minimize,
    restrict_accepting,
    reverse_language,
    to_dot,
    to_json,
    union,
)

import _reference as ref

DATA = Path(__file__).parent / "data"


def _machine(fam, rank, n):
    rs = build_root_system(fam, rank)
    return rs, from_arrangement(ArrangementSpec.uniform(rs, n))


def test_states_are_regions():
    rs, aut = _machine("A", 2, 0)
    assert aut.n_states == 16
    assert aut.alphabet_size == 3
    assert aut.accepting == frozenset(range(16))
    assert aut.states[aut.initial] == (0, 0, 0)


def test_accepted_language_is_reduced_words():
    for fam, n in [("A", 0), ("A", 1), ("C", 0), ("G", 0)]:
        rs = build_root_system(fam, 2)
        aut = from_arrangement(ArrangementSpec.uniform(rs, n))
        accepted = set(enumerate_words(aut, 7))
        expected = {w for w in ref.reduced_words_up_to(rs, 7)}
        assert accepted == expected, (fam, n)


def test_accepts_individual_words():
    rs, aut = _machine("A", 2, 0)
    assert accepts(aut, ())
    assert accepts(aut, (0, 1, 0))
    assert not accepts(aut, (0, 0))
    assert not accepts(aut, (1, 0, 1, 0))  # braid then repeat shortens
    with pytest.raises(ValueError):
        accepts(aut, (7,))


def test_infinite_dihedral_counts():
    _, aut = _machine("A", 1, 0)
    assert count_words(aut, 20) == [1] + [2] * 20


def test_a2_counts_frozen():
    _, aut = _machine("A", 2, 0)
    assert count_words(aut, 10) == [1, 3, 6, 12, 18, 30, 42, 66, 90, 138, 186]


def test_counts_independent_of_bound():
    # the language only depends on the group, not on the strip bounds
    for n in (1, 2):
        _, aut = _machine("A", 2, n)
        assert count_words(aut, 8) == [1, 3, 6, 12, 18, 30, 42, 66, 90]


def test_restrict_accepting_base_state():
    _, aut = _machine("C", 2, 0)
    only_base = restrict_accepting(aut, frozenset([aut.initial]))
    assert enumerate_words(only_base, 5) == [()]


def test_reverse_language():
    _, aut = _machine("A", 2, 0)
    some = frozenset(q for q in range(aut.n_states) if q % 3 == 0)
    sub = restrict_accepting(aut, some)
    rev = reverse_language(sub)
    words = set(enumerate_words(sub, 7))
    assert set(enumerate_words(rev, 7)) == {tuple(reversed(w)) for w in words}
    # reversing twice restores the language
    back = reverse_language(rev)
    assert set(enumerate_words(back, 7)) == words


def test_union_counts():
    _, aut = _machine("A", 2, 0)
    e_only = restrict_accepting(aut, frozenset([aut.initial]))
    rest = restrict_accepting(
        aut, frozenset(range(aut.n_states)) - frozenset([aut.initial])
    )
    u = union([e_only, rest])
    assert count_words(u, 8) == count_words(aut, 8)
    same = union([aut, aut])
    assert count_words(same, 8) == count_words(aut, 8)


def test_minimize():
    _, big = _machine("A", 2, 1)
    small = minimize(big)
    assert big.n_states == 49
    assert small.n_states == 16
    assert count_words(small, 9) == count_words(big, 9)
    again = minimize(small)
    assert again == small  # idempotent
    _, three = _machine("A", 1, 0)
    assert minimize(three).n_states == 3


def test_minimize_empty_language():
    _, aut = _machine("A", 1, 0)
    empty = restrict_accepting(aut, frozenset())
    m = minimize(empty)
    assert m.n_states == 1 and not m.accepting


def test_json_roundtrip():
    for fam, n in [("A", 0), ("G", 1)]:
        _, aut = _machine(fam, 2, n)
        back = from_json(to_json(aut))
        assert back == aut
    # round trip survives minimization labels too
    m = minimize(_machine("A", 2, 1)[1])
    assert from_json(to_json(m)) == m


def test_dot_golden():
    _, aut = _machine("A", 1, 0)
    golden = (DATA / "a1_n0.dot").read_text()
    assert to_dot(aut) == golden


def test_dot_shape():
    _, aut = _machine("A", 2, 0)
    text = to_dot(aut)
    assert text.startswith("digraph")
    assert text.count("doublecircle") == aut.n_states  # all states accepting
    assert "__start__" in text
