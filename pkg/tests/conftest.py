"""Shared builders for tests.

These construct spines by hand with plain modular arithmetic so that tests
of the generators have an independent reference, and tests of the engine do
not depend on the generators under test.
"""

from __future__ import annotations

from itertools import permutations

import pytest

from spinekit.model import FiniteMap, FiniteSet, GroupoidSpine


def shift_map(src: str, tgt: str, n: int, t: int) -> FiniteMap:
    return FiniteMap(src, tgt, {str(x): str((x + t) % n) for x in range(n)})


def translation_spine(n: int, objects: int = 3) -> GroupoidSpine:
    """Increasing pairs only; every Mor(i,j) is all n translations mod n."""
    labels = [str(i) for i in range(1, objects + 1)]
    sets = {o: FiniteSet(o, [str(x) for x in range(n)]) for o in labels}
    pairs = [
        (labels[a], labels[b])
        for a in range(objects)
        for b in range(a + 1, objects)
    ]
    morphisms = {
        (i, j): tuple(shift_map(i, j, n, t) for t in range(n)) for i, j in pairs
    }
    return GroupoidSpine(labels, sets, pairs, morphisms)


def trivial_spine() -> GroupoidSpine:
    s = FiniteSet("1", ["*"])
    return GroupoidSpine(
        ["1"], {"1": s}, [("1", "1")], {("1", "1"): (FiniteMap("1", "1", {"*": "*"}),)}
    )


def all_bijections_spine(points: int = 3, objects: int = 3) -> GroupoidSpine:
    """Symmetric spine whose morphism sets are all bijections; not regular."""
    labels = [str(i) for i in range(1, objects + 1)]
    elems = [str(x) for x in range(points)]
    sets = {o: FiniteSet(o, elems) for o in labels}
    pairs = [(i, j) for i in labels for j in labels if i != j]
    maps = list(permutations(range(points)))
    morphisms = {
        (i, j): tuple(
            FiniteMap(i, j, {str(x): str(p[x]) for x in range(points)}) for p in maps
        )
        for i, j in pairs
    }
    return GroupoidSpine(labels, sets, pairs, morphisms)


@pytest.fixture
def z3_spine() -> GroupoidSpine:
    return translation_spine(3, 3)


@pytest.fixture
def z5_spine() -> GroupoidSpine:
    return translation_spine(5, 3)
