"""Core carrier types: finite sets, bijections between them, and groupoid spines.

A spine is a linearly ordered family of finite sets together with bijection
families on a pair relation, relatively closed under identity, inverse, and
composition. All values are immutable; every operation is a pure function.

Soft size targets: up to 8 objects, carriers up to 64 elements, up to 4096
morphisms per pair. Larger inputs run but are untested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import TargetMismatch


@dataclass(frozen=True)
class FiniteSet:
    """A named finite set with a fixed element order."""

    id: str
    elements: tuple[str, ...]

    def __init__(self, id: str, elements: Iterable[str]):
        object.__setattr__(self, "id", str(id))
        object.__setattr__(self, "elements", tuple(str(e) for e in elements))
        if not self.elements:
            raise ValueError(f"set {self.id!r} has no elements")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"set {self.id!r} has duplicate element labels")

    def __contains__(self, label: str) -> bool:
        return label in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FiniteMap:
    """A bijection between two named sets, stored as a total mapping.

    The mapping must be injective; whether its domain and image agree with
    the named carrier sets is checked by spine validation, since a map on
    its own does not know the carriers.
    """

    source: str
    target: str
    graph: tuple[tuple[str, str], ...] = field(compare=True)

    def __init__(self, source: str, target: str, mapping: Mapping[str, str]):
        object.__setattr__(self, "source", str(source))
        object.__setattr__(self, "target", str(target))
        pairs = tuple(sorted((str(x), str(y)) for x, y in mapping.items()))
        object.__setattr__(self, "graph", pairs)
        values = [y for _, y in pairs]
        if len(set(values)) != len(values):
            raise ValueError(
                f"map {self.source!r}->{self.target!r} is not injective"
            )
        object.__setattr__(self, "_dict", dict(pairs))

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.graph)

    def __call__(self, x: str) -> str:
        return self._dict[x]

    def domain(self) -> frozenset[str]:
        return frozenset(x for x, _ in self.graph)

    def image(self) -> frozenset[str]:
        return frozenset(y for _, y in self.graph)

    def graph_key(self) -> str:
        """Canonical key: the sorted pointwise listing of the map."""
        return ",".join(f"{x}>{y}" for x, y in self.graph)

    def __repr__(self) -> str:
        return f"FiniteMap({self.source!r}->{self.target!r}, {self.graph_key()})"


def identity_map(s: FiniteSet) -> FiniteMap:
    return FiniteMap(s.id, s.id, {e: e for e in s.elements})


def compose(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """The map x -> g(f(x)): apply f first, then g."""
    if f.target != g.source:
        raise TargetMismatch(
            f"cannot compose: first map targets {f.target!r}, "
            f"second map starts at {g.source!r}"
        )
    gd = g._dict
    try:
        mapping = {x: gd[y] for x, y in f.graph}
    except KeyError as exc:
        raise ValueError(
            f"composition undefined: {exc.args[0]!r} is outside the second map's domain"
        ) from None
    return FiniteMap(f.source, g.target, mapping)


def invert(f: FiniteMap) -> FiniteMap:
    """The inverse bijection, with source and target swapped."""
    return FiniteMap(f.target, f.source, {y: x for x, y in f.graph})


@dataclass(frozen=True)
class GroupoidSpine:
    """Objects with a linear order, carrier sets, a pair relation, and
    morphism families.

    The object tuple order is the linear order. Construction checks only
    structural well-formedness (labels resolve, maps are injective);
    the groupoid axioms are checked by `validate_spine`, which reports
    violations as data.
    """

    objects: tuple[str, ...]
    sets: Mapping[str, FiniteSet]
    pairs: frozenset[tuple[str, str]]
    morphisms: Mapping[tuple[str, str], tuple[FiniteMap, ...]]

    def __init__(
        self,
        objects: Iterable[str],
        sets: Mapping[str, FiniteSet],
        pairs: Iterable[tuple[str, str]],
        morphisms: Mapping[tuple[str, str], Iterable[FiniteMap]],
    ):
        objs = tuple(str(o) for o in objects)
        if not objs:
            raise ValueError("spine has no objects")
        if len(set(objs)) != len(objs):
            raise ValueError("duplicate object labels")
        sets = dict(sets)
        if set(sets) != set(objs):
            missing = sorted(set(objs) - set(sets))
            extra = sorted(set(sets) - set(objs))
            raise ValueError(
                f"sets must be keyed by exactly the objects "
                f"(missing {missing}, extra {extra})"
            )
        prs = frozenset((str(i), str(j)) for i, j in pairs)
        for i, j in prs:
            if i not in sets or j not in sets:
                raise ValueError(f"pair ({i!r},{j!r}) names an unknown object")
        mors = {(str(k[0]), str(k[1])): tuple(v) for k, v in morphisms.items()}
        if set(mors) != prs:
            missing = sorted(prs - set(mors))
            extra = sorted(set(mors) - prs)
            raise ValueError(
                f"morphisms must be keyed by exactly the pairs "
                f"(missing {missing}, extra {extra})"
            )
        object.__setattr__(self, "objects", objs)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "pairs", prs)
        object.__setattr__(self, "morphisms", mors)

    def object_index(self, label: str) -> int:
        return self.objects.index(label)

    def sorted_pairs(self) -> list[tuple[str, str]]:
        """Pairs in the canonical order: by position of i, then of j."""
        idx = {o: n for n, o in enumerate(self.objects)}
        return sorted(self.pairs, key=lambda p: (idx[p[0]], idx[p[1]]))

    def morphism_sets_equal(self, other: GroupoidSpine) -> bool:
        """Graph-level equality: same objects, sets, pairs, and morphism
        families compared as sets of graphs."""
        if (
            self.objects != other.objects
            or self.pairs != other.pairs
            or {o: s.elements for o, s in self.sets.items()}
            != {o: s.elements for o, s in other.sets.items()}
        ):
            return False
        return all(
            set(self.morphisms[p]) == set(other.morphisms[p]) for p in self.pairs
        )


@dataclass(frozen=True)
class Violation:
    """One failed check, tagged with the axiom number (1-3) or None for
    structural checks, plus a concrete witness."""

    kind: str
    axiom: int | None
    pair: tuple[str, str] | None
    indices: tuple[int, ...]
    element: str | None
    message: str

    def render(self) -> str:
        tag = f"axiom{self.axiom}" if self.axiom else "structural"
        return f"{tag} {self.kind}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def render_lines(self) -> list[str]:
        if self.ok:
            return ["validation: pass"]
        lines = [f"validation: fail ({len(self.violations)} violations)"]
        lines += [f"  {v.render()}" for v in self.violations]
        return lines


def _structural_ok(spine: GroupoidSpine, pair: tuple[str, str], f: FiniteMap) -> bool:
    """True when f's domain and image agree with the pair's carriers."""
    i, j = pair
    return (
        f.source == i
        and f.target == j
        and f.domain() == frozenset(spine.sets[i].elements)
        and f.image() == frozenset(spine.sets[j].elements)
    )


def validate_spine(spine: GroupoidSpine) -> ValidationReport:
    """Check every spine invariant and report all violations with witnesses.

    Checks, in order: pair coverage of the linear order, endpoint and
    bijectivity agreement of each map with its carriers, non-emptiness and
    duplicate-freeness of each family, then the three closure axioms
    (identity, inverse, composition). Composition and inverse checks skip
    maps that already failed structurally.
    """
    out: list[Violation] = []
    objs = spine.objects
    idx = {o: n for n, o in enumerate(objs)}
    pairs = spine.pairs

    if not pairs:
        out.append(
            Violation(
                "EmptyRelation", None, None, (), None, "the pair relation is empty"
            )
        )
    for a in range(len(objs)):
        for b in range(a + 1, len(objs)):
            if (objs[a], objs[b]) not in pairs:
                out.append(
                    Violation(
                        "MissingPair",
                        None,
                        (objs[a], objs[b]),
                        (),
                        None,
                        f"pair ({objs[a]},{objs[b]}) with {objs[a]} < {objs[b]} "
                        "is not in the relation",
                    )
                )

    sound: dict[tuple[str, str], list[int]] = {}
    for pair in spine.sorted_pairs():
        i, j = pair
        fams = spine.morphisms[pair]
        sound[pair] = []
        if not fams:
            out.append(
                Violation(
                    "EmptyMorphisms",
                    None,
                    pair,
                    (),
                    None,
                    f"Mor({i},{j}) is empty",
                )
            )
        seen: dict[tuple, int] = {}
        for n, f in enumerate(fams):
            if f.source != i or f.target != j:
                out.append(
                    Violation(
                        "EndpointMismatch",
                        None,
                        pair,
                        (n,),
                        None,
                        f"Mor({i},{j})[{n}] is declared {f.source}->{f.target}",
                    )
                )
                continue
            if f.domain() != frozenset(spine.sets[i].elements):
                missing = sorted(frozenset(spine.sets[i].elements) - f.domain())
                extra = sorted(f.domain() - frozenset(spine.sets[i].elements))
                out.append(
                    Violation(
                        "DomainMismatch",
                        None,
                        pair,
                        (n,),
                        (missing + extra + [None])[0],
                        f"Mor({i},{j})[{n}] is not defined on exactly X_{i} "
                        f"(missing {missing}, extra {extra})",
                    )
                )
                continue
            if f.image() != frozenset(spine.sets[j].elements):
                missed = sorted(frozenset(spine.sets[j].elements) - f.image())
                out.append(
                    Violation(
                        "NotBijective",
                        None,
                        pair,
                        (n,),
                        missed[0] if missed else None,
                        f"Mor({i},{j})[{n}] does not map onto X_{j} "
                        f"(misses {missed})",
                    )
                )
                continue
            key = f.graph
            if key in seen:
                out.append(
                    Violation(
                        "DuplicateMorphism",
                        None,
                        pair,
                        (seen[key], n),
                        None,
                        f"Mor({i},{j})[{n}] repeats the graph of index {seen[key]}",
                    )
                )
                continue
            seen[key] = n
            sound[pair].append(n)

    # axiom 1: identities on diagonal pairs
    for o in objs:
        pair = (o, o)
        if pair not in pairs:
            continue
        ident = identity_map(spine.sets[o]).graph
        if not any(
            spine.morphisms[pair][n].graph == ident for n in sound[pair]
        ):
            out.append(
                Violation(
                    "MissingIdentity",
                    1,
                    pair,
                    (),
                    None,
                    f"({o},{o}) is in the relation but Mor({o},{o}) "
                    "lacks the identity map",
                )
            )

    # Index the structurally sound maps as integer image tuples for the
    # axiom sweeps (axiom 3 is quadratic in family sizes).
    elem_index = {o: {e: n for n, e in enumerate(spine.sets[o].elements)} for o in objs}
    indexed: dict[tuple[str, str], list[tuple[int, tuple[int, ...]]]] = {}
    graphs: dict[tuple[str, str], set[tuple[int, ...]]] = {}
    for pair in spine.sorted_pairs():
        i, j = pair
        src, enc = spine.sets[i].elements, elem_index[j]
        indexed[pair] = [
            (n, tuple(enc[spine.morphisms[pair][n](x)] for x in src))
            for n in sound[pair]
        ]
        graphs[pair] = {t for _, t in indexed[pair]}

    # axiom 2: inverses across symmetric pairs
    for pair in spine.sorted_pairs():
        i, j = pair
        back = (j, i)
        if back not in pairs:
            continue
        for n, t in indexed[pair]:
            inv = [0] * len(t)
            for x, y in enumerate(t):
                inv[y] = x
            if tuple(inv) not in graphs[back]:
                out.append(
                    Violation(
                        "MissingInverse",
                        2,
                        pair,
                        (n,),
                        None,
                        f"inverse of Mor({i},{j})[{n}] is absent from Mor({j},{i})",
                    )
                )

    # axiom 3: composites across composable pair triples
    pair_order = spine.sorted_pairs()
    for pa in pair_order:
        i, j = pa
        for pb in pair_order:
            if pb[0] != j:
                continue
            k = pb[1]
            pc = (i, k)
            if pc not in pairs:
                continue
            targets = graphs[pc]
            for nf, tf in indexed[pa]:
                for ng, tg in indexed[pb]:
                    if tuple(tg[y] for y in tf) not in targets:
                        out.append(
                            Violation(
                                "ClosureViolation",
                                3,
                                pc,
                                (nf, ng),
                                None,
                                f"composite of Mor({i},{j})[{nf}] then "
                                f"Mor({j},{k})[{ng}] is absent from Mor({i},{k})",
                            )
                        )

    return ValidationReport(ok=not out, violations=tuple(out))
