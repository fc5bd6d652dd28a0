"""Instance generators: regular group-action spines, affine configurations
over prime fields, sharply transitive Latin-square families, and seeded
negative-path mutants.

All generators are deterministic in their parameters and seed.

Empirical note (verified by exhaustive enumeration): every sharply
transitive family of bijections at orders 2-4 is a coset of a permutation
group, so non-coset families first exist at order 5 (50 of the 56 row-set
classes there are non-cosets).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidSpine, NotPrime, SearchExhausted, TooLarge
from .groups import GroupTable
from .model import FiniteMap, FiniteSet, GroupoidSpine, validate_spine

MIN_NON_COSET_ORDER = 5  # established by brute force over orders 2-4


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one generator invocation, for provenance metadata."""

    kind: str
    group: Optional[str] = None
    prime: Optional[int] = None
    order: Optional[int] = None
    objects: Optional[int] = None
    want_coset: Optional[bool] = None
    seed: Optional[int] = None

    def meta(self) -> dict:
        fields = {
            "group": self.group,
            "prime": self.prime,
            "order": self.order,
            "objects": self.objects,
            "want_coset": self.want_coset,
            "seed": self.seed,
        }
        return {"generator": {"kind": self.kind}
                | {k: v for k, v in fields.items() if v is not None}}


def gen_group_action_spine(group: GroupTable, objects: int) -> GroupoidSpine:
    """Spine whose carriers are copies of the group and whose morphisms are
    the left translations; regular because left translation acts regularly.

    With one object the relation is the diagonal pair; otherwise it is the
    increasing pairs only, leaving the extension machinery real work.
    """
    if objects < 1:
        raise ValueError("need at least one object")
    labels = [str(i) for i in range(1, objects + 1)]
    sets = {o: FiniteSet(o, group.elements) for o in labels}

    def translations(src: str, tgt: str) -> tuple[FiniteMap, ...]:
        return tuple(
            FiniteMap(src, tgt, {x: group.op(h, x) for x in group.elements})
            for h in group.elements
        )

    if objects == 1:
        o = labels[0]
        pairs = [(o, o)]
        morphisms = {(o, o): translations(o, o)}
    else:
        pairs = [
            (labels[a], labels[b])
            for a in range(objects)
            for b in range(a + 1, objects)
        ]
        morphisms = {(i, j): translations(i, j) for i, j in pairs}
    return GroupoidSpine(labels, sets, pairs, morphisms)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def gen_affine_config(p: int) -> GroupoidSpine:
    """Three-object spine over the field with p elements: the morphisms
    from 1 to 2 are the translations x -> x + t, from 2 to 3 the
    translations x -> x + u, and from 1 to 3 their composites x -> x + t + u
    (which is again every translation)."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p > 97:
        raise TooLarge(f"affine configurations support p <= 97, got {p}")
    elems = [str(i) for i in range(p)]
    labels = ["1", "2", "3"]
    sets = {o: FiniteSet(o, elems) for o in labels}

    def shift(src: str, tgt: str, t: int) -> FiniteMap:
        return FiniteMap(src, tgt, {str(x): str((x + t) % p) for x in range(p)})

    morphisms = {
        ("1", "2"): tuple(shift("1", "2", t) for t in range(p)),
        ("2", "3"): tuple(shift("2", "3", u) for u in range(p)),
        ("1", "3"): tuple(shift("1", "3", s) for s in range(p)),
    }
    return GroupoidSpine(labels, sets, morphisms.keys(), morphisms)


def _compose_rows(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    # apply g first, then f
    return tuple(f[y] for y in g)


def _invert_row(f: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(f)
    for x, y in enumerate(f):
        inv[y] = x
    return tuple(inv)


def _xyz_closed(rows: Sequence[tuple[int, ...]]) -> bool:
    fam = set(rows)
    for x in fam:
        for y in fam:
            xi = _compose_rows(x, _invert_row(y))
            for z in fam:
                if _compose_rows(xi, z) not in fam:
                    return False
    return True


def _random_latin_square(n: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Uniformly-shuffled row-by-row completion; every Latin rectangle
    extends, so per-row backtracking always finds a next row."""
    rows: list[tuple[int, ...]] = []
    col_used: list[set[int]] = [set() for _ in range(n)]

    def complete_row(row: list[int], used: set[int]) -> bool:
        c = len(row)
        if c == n:
            return True
        candidates = [s for s in range(n) if s not in used and s not in col_used[c]]
        rng.shuffle(candidates)
        for s in candidates:
            row.append(s)
            used.add(s)
            if complete_row(row, used):
                return True
            row.pop()
            used.remove(s)
        return False

    for _ in range(n):
        row: list[int] = []
        if not complete_row(row, set()):
            raise AssertionError("Latin rectangle failed to extend")
        rows.append(tuple(row))
        for c, s in enumerate(row):
            col_used[c].add(s)
    return rows


def _rows_to_maps(rows: Sequence[tuple[int, ...]]) -> list[FiniteMap]:
    return [
        FiniteMap("1", "2", {str(x): str(y) for x, y in enumerate(row)})
        for row in rows
    ]


def gen_latin_square_family(
    order: int, want_coset: bool = True, seed: int = 0
) -> list[FiniteMap]:
    """A sharply transitive family of `order` bijections (the rows of a
    Latin square), as maps from object "1" to object "2".

    With want_coset the rows are a group table (the Klein table at order 4,
    cyclic otherwise), hence closed under (x, y, z) -> x . y^-1 . z. Without
    it, a seeded search returns a family failing that closure; such families
    do not exist below order 5, which raises SearchExhausted.
    """
    if order < 2 or order > 7:
        raise TooLarge(f"supported orders are 2..7, got {order}")
    if want_coset:
        if order == 4:
            rows = [tuple(x ^ r for x in range(4)) for r in range(4)]
        else:
            rows = [tuple((x + r) % order for x in range(order)) for r in range(order)]
        return _rows_to_maps(rows)
    if order < MIN_NON_COSET_ORDER:
        raise SearchExhausted(
            f"every sharply transitive family of order {order} is a coset family"
        )
    rng = random.Random(seed)
    for _ in range(1000):
        rows = _random_latin_square(order, rng)
        if not _xyz_closed(rows):
            return _rows_to_maps(rows)
    raise SearchExhausted(
        f"no non-coset family found at order {order} after 1000 attempts"
    )


def latin_family_spine(family: Sequence[FiniteMap]) -> GroupoidSpine:
    """The two-object spine with the given family as its only morphism set."""
    elems = sorted((x for x, _ in family[0].graph), key=int)
    sets = {"1": FiniteSet("1", elems), "2": FiniteSet("2", elems)}
    return GroupoidSpine(["1", "2"], sets, [("1", "2")], {("1", "2"): tuple(family)})


def _mutate_once(spine: GroupoidSpine, rng: random.Random) -> GroupoidSpine:
    pairs = spine.sorted_pairs()
    kinds = ["drop"]
    swap_targets = [p for p in pairs if len(spine.sets[p[0]].elements) >= 2]
    if swap_targets:
        kinds.append("swap")
    inverse_targets = [p for p in pairs if (p[1], p[0]) in spine.pairs]
    if inverse_targets:
        kinds.append("drop_inverse")
    kind = rng.choice(kinds)

    morphisms = {p: list(spine.morphisms[p]) for p in pairs}
    if kind in ("drop", "drop_inverse"):
        target_pairs = inverse_targets if kind == "drop_inverse" else pairs
        pair = rng.choice(target_pairs)
        index = rng.randrange(len(morphisms[pair]))
        del morphisms[pair][index]
    else:
        pair = rng.choice(swap_targets)
        index = rng.randrange(len(morphisms[pair]))
        f = morphisms[pair][index]
        x1, x2 = rng.sample(spine.sets[pair[0]].elements, 2)
        mapping = f.mapping
        mapping[x1], mapping[x2] = mapping[x2], mapping[x1]
        morphisms[pair][index] = FiniteMap(f.source, f.target, mapping)
    return GroupoidSpine(spine.objects, spine.sets, spine.pairs, morphisms)


def perturb_spine(spine: GroupoidSpine, seed: int = 0) -> GroupoidSpine:
    """Apply exactly one seeded mutation for negative-path testing: drop a
    morphism, swap two images inside one map, or remove a required inverse.

    The mutant is structurally well-formed but fails validation or
    regularity; the seeded choice is redrawn (deterministically) in the
    rare case a mutation of an already-irregular spine fails neither check.
    """
    from .extension import _regularity_unchecked

    report = validate_spine(spine)
    if not report.ok:
        raise InvalidSpine(report)
    rng = random.Random(seed)
    for _ in range(50):
        mutant = _mutate_once(spine, rng)
        if not validate_spine(mutant).ok:
            return mutant
        if not _regularity_unchecked(mutant).regular:
            return mutant
    raise SearchExhausted("no failing single mutation found for this spine")
