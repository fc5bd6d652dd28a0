"""Coset geometry in finite powers of a group: the five-way coset
characterization, equal-or-disjoint partition tests, fiber structure of
cosets under coordinate projections, and coset detection for set families.

Members of G^n are tuples of element labels with componentwise product.
The "infinitesimal" sets these tests shadow are infinitary; here a family
member is just a finite set, so the analogy should not be over-read.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as iproduct
from typing import Iterable, Optional, Sequence

from .errors import EmptySet, NotACoset, TheoremViolation, UnknownElement
from .groups import GroupTable

GTuple = tuple[str, ...]


@dataclass(frozen=True)
class AmbientGroup:
    """G^n with componentwise product, for subsets to live in."""

    group: GroupTable
    power: int

    def __init__(self, group: GroupTable, power: int = 1):
        if power < 1:
            raise ValueError("power must be at least 1")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "power", power)

    def op(self, a: GTuple, b: GTuple) -> GTuple:
        return tuple(self.group.op(x, y) for x, y in zip(a, b))

    def inv(self, a: GTuple) -> GTuple:
        return tuple(self.group.inv(x) for x in a)

    def identity(self) -> GTuple:
        return (self.group.identity,) * self.power

    def all_tuples(self) -> Iterable[GTuple]:
        return iproduct(*([self.group.elements] * self.power))

    def tuple_key(self, a: GTuple) -> tuple[int, ...]:
        """Lexicographic sort key, ordering components by element index."""
        idx = {e: n for n, e in enumerate(self.group.elements)}
        return tuple(idx[x] for x in a)

    def check_member(self, a: GTuple) -> GTuple:
        a = tuple(str(x) for x in a)
        if len(a) != self.power:
            raise UnknownElement(f"{a!r} does not have {self.power} components")
        known = set(self.group.elements)
        for x in a:
            if x not in known:
                raise UnknownElement(f"{x!r} is not a group element")
        return a

    def is_subgroup(self, h: frozenset[GTuple]) -> bool:
        if self.identity() not in h:
            return False
        return all(self.op(a, b) in h for a in h for b in h) and all(
            self.inv(a) in h for a in h
        )


@dataclass(frozen=True)
class CosetReport:
    """The five verdicts of the coset characterization, which provably
    coincide, plus witnessing data when they hold."""

    left_translates_partition: bool
    right_translates_partition: bool
    left_coset: bool
    right_coset: bool
    xyz_closed: bool
    subgroup: Optional[frozenset[GTuple]]
    translator: Optional[GTuple]

    @property
    def is_coset(self) -> bool:
        return self.left_coset

    def verdicts(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.left_translates_partition,
            self.right_translates_partition,
            self.left_coset,
            self.right_coset,
            self.xyz_closed,
        )


def _translates_partition(
    amb: AmbientGroup, xs: frozenset[GTuple], side: str
) -> bool:
    seen: set[frozenset[GTuple]] = set()
    for g in amb.all_tuples():
        if side == "left":
            seen.add(frozenset(amb.op(g, x) for x in xs))
        else:
            seen.add(frozenset(amb.op(x, g) for x in xs))
    return all(not (a & b) for a, b in combinations(seen, 2))


def coset_test(amb: AmbientGroup, xs: Iterable[GTuple]) -> CosetReport:
    """Evaluate the five coset conditions independently by brute force.

    When the set is a left coset, the returned subgroup is a^-1 . X for the
    least member a (the translator). A disagreement among the verdicts is
    impossible and raises TheoremViolation.
    """
    xset = frozenset(amb.check_member(x) for x in xs)
    if not xset:
        raise EmptySet("coset test needs a non-empty set")
    ordered = sorted(xset, key=amb.tuple_key)

    left_part = _translates_partition(amb, xset, "left")
    right_part = _translates_partition(amb, xset, "right")

    left_coset = False
    subgroup: Optional[frozenset[GTuple]] = None
    translator: Optional[GTuple] = None
    for a in ordered:
        h = frozenset(amb.op(amb.inv(a), x) for x in xset)
        if amb.is_subgroup(h):
            left_coset, subgroup, translator = True, h, a
            break

    right_coset = any(
        amb.is_subgroup(frozenset(amb.op(x, amb.inv(a)) for x in xset))
        for a in ordered
    )

    xyz = all(
        amb.op(amb.op(x, amb.inv(y)), z) in xset
        for x in xset
        for y in xset
        for z in xset
    )

    verdicts = (left_part, right_part, left_coset, right_coset, xyz)
    if len(set(verdicts)) != 1:
        raise TheoremViolation(
            f"coset characterization verdicts disagree: {verdicts} "
            f"on {sorted(xset)}"
        )
    return CosetReport(*verdicts, subgroup, translator)


@dataclass(frozen=True)
class PartitionReport:
    equal_or_disjoint: bool
    witness: Optional[tuple[int, int, GTuple]]  # (index, index, shared member)

    def render_lines(self) -> list[str]:
        if self.equal_or_disjoint:
            return ["partition: pass (members pairwise equal or disjoint)"]
        i, j, shared = self.witness
        return [
            "partition: fail",
            f"  sets {i} and {j} overlap at {','.join(shared)} without being equal",
        ]


def partition_check(family: Sequence[Iterable[GTuple]]) -> PartitionReport:
    """Whether every pair of member sets is equal or disjoint."""
    if not family:
        raise EmptySet("partition check needs a non-empty family")
    sets = [frozenset(tuple(str(c) for c in x) for x in member) for member in family]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] != sets[j]:
                common = sets[i] & sets[j]
                if common:
                    return PartitionReport(False, (i, j, min(common)))
    return PartitionReport(True, None)


@dataclass(frozen=True)
class FiberReport:
    """Projection fibers of a coset: all are cosets of one subgroup."""

    subgroup: frozenset[GTuple]
    fibers: tuple[tuple[GTuple, GTuple], ...]  # (projected point, translator)


def fiber_coset_structure(
    amb: AmbientGroup, xs: Iterable[GTuple], proj: Sequence[int]
) -> FiberReport:
    """Verify that every non-empty fiber of the coordinate projection is a
    left coset, all of one common subgroup, and return that subgroup.

    Fibers are treated as subsets of the full ambient power. The input must
    itself be a left coset; given that, a failure of the fiber structure is
    impossible and raises TheoremViolation.
    """
    proj = tuple(proj)
    if not proj or any(c < 0 or c >= amb.power for c in proj):
        raise ValueError(f"projection coordinates {proj} out of range")
    base = coset_test(amb, xs)
    if not base.left_coset:
        raise NotACoset("the input set is not a left coset")
    xset = frozenset(amb.check_member(x) for x in xs)
    by_image: dict[GTuple, set[GTuple]] = {}
    for x in sorted(xset, key=amb.tuple_key):
        by_image.setdefault(tuple(x[c] for c in proj), set()).add(x)

    common: Optional[frozenset[GTuple]] = None
    fibers: list[tuple[GTuple, GTuple]] = []
    for image in sorted(by_image, key=lambda t: tuple(t)):
        fiber = by_image[image]
        a = min(fiber, key=amb.tuple_key)
        h = frozenset(amb.op(amb.inv(a), x) for x in fiber)
        if not amb.is_subgroup(h):
            raise TheoremViolation(
                f"fiber over {image} of a coset is not itself a coset"
            )
        if common is None:
            common = h
        elif common != h:
            raise TheoremViolation(
                f"fiber over {image} is a coset of a different subgroup"
            )
        fibers.append((image, a))
    return FiberReport(common, tuple(fibers))


@dataclass(frozen=True)
class LinearityReport:
    """Coset verdicts for a family of sets."""

    member_cosets: tuple[bool, ...]
    subgroups: tuple[Optional[frozenset[GTuple]], ...]
    all_cosets: bool
    shared_subgroup_translates: bool

    def render_lines(self) -> list[str]:
        lines = []
        for n, verdict in enumerate(self.member_cosets):
            lines.append(f"  member {n}: {'coset' if verdict else 'not a coset'}")
        lines.append(
            "local linearity: " + ("pass" if self.all_cosets else "fail")
        )
        lines.append(
            "members sharing a subgroup are translates: "
            + ("yes" if self.shared_subgroup_translates else "no")
        )
        return lines


def family_local_linearity(
    amb: AmbientGroup, family: Sequence[Iterable[GTuple]]
) -> LinearityReport:
    """Per-member coset verdicts; passes iff every member is a left coset.

    Also reports whether members whose subgroups coincide are left
    translates of one another (verified by brute-force translate search).
    """
    if not family:
        raise EmptySet("local linearity needs a non-empty family")
    members = [frozenset(amb.check_member(x) for x in m) for m in family]
    if any(not m for m in members):
        raise EmptySet("family members must be non-empty")
    reports = [coset_test(amb, m) for m in members]
    verdicts = tuple(r.left_coset for r in reports)
    subgroups = tuple(r.subgroup for r in reports)

    translates = True
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if subgroups[i] is None or subgroups[i] != subgroups[j]:
                continue
            if not any(
                frozenset(amb.op(u, x) for x in members[i]) == members[j]
                for u in amb.all_tuples()
            ):
                translates = False
    return LinearityReport(verdicts, subgroups, all(verdicts), translates)
