"""Regularity, symmetric closure, and extension to a groupoid."""

import pytest

from conftest import all_bijections_spine, shift_map, trivial_spine
from spinekit.errors import InvalidSpine, NotRegular
from spinekit.extension import (
    _extend_unchecked,
    check_regularity,
    extend_to_groupoid,
    symmetric_closure,
)
from spinekit.model import FiniteMap, FiniteSet, GroupoidSpine, invert, validate_spine


def incidence_counts(spine, pair):
    """Independent oracle: direct double loop over carrier points."""
    i, j = pair
    counts = {}
    for x in spine.sets[i].elements:
        for y in spine.sets[j].elements:
            counts[(x, y)] = sum(1 for f in spine.morphisms[pair] if f(x) == y)
    return counts


class TestRegularity:
    def test_trivial_spine(self):
        assert check_regularity(trivial_spine()).regular

    def test_translation_spine(self, z5_spine):
        assert check_regularity(z5_spine).regular
        for pair in z5_spine.pairs:
            assert set(incidence_counts(z5_spine, pair).values()) == {1}

    def test_all_bijections_not_regular(self):
        spine = all_bijections_spine(points=3, objects=2)
        report = check_regularity(spine)
        assert not report.regular
        assert all(v.count == 2 for v in report.violations)
        assert len(report.violations) == 10  # first ten only
        oracle = incidence_counts(spine, ("1", "2"))
        assert set(oracle.values()) == {2}

    def test_invalid_spine_rejected(self):
        sets = {o: FiniteSet(o, ["x"]) for o in ("1", "2")}
        spine = GroupoidSpine(["1", "2"], sets, [("1", "2")], {("1", "2"): ()})
        with pytest.raises(InvalidSpine):
            check_regularity(spine)


class TestSymmetricClosure:
    def test_already_symmetric_unchanged(self, z5_spine):
        full = extend_to_groupoid(z5_spine).extended
        again = symmetric_closure(full)
        assert again.morphism_sets_equal(full)

    def test_translation_spine_gains_inverses(self, z5_spine):
        sym = symmetric_closure(z5_spine)
        assert sym.pairs == z5_spine.pairs | {("2", "1"), ("3", "2"), ("3", "1")}
        for i, j in z5_spine.pairs:
            assert sym.morphisms[(i, j)] == z5_spine.morphisms[(i, j)]
            # oracle: pointwise inversion of each original map
            expected = {invert(f).graph for f in z5_spine.morphisms[(i, j)]}
            assert {f.graph for f in sym.morphisms[(j, i)]} == expected
        assert validate_spine(sym).ok
        assert check_regularity(sym).regular

    def test_latin_rows_order4(self):
        elems = [str(x) for x in range(4)]
        sets = {"1": FiniteSet("1", elems), "2": FiniteSet("2", elems)}
        rows = tuple(shift_map("1", "2", 4, t) for t in range(4))
        spine = GroupoidSpine(["1", "2"], sets, [("1", "2")], {("1", "2"): rows})
        sym = symmetric_closure(spine)
        assert sym.pairs == {("1", "2"), ("2", "1")}
        assert {f.graph for f in sym.morphisms[("2", "1")]} == {
            invert(f).graph for f in rows
        }

    def test_requires_regular(self):
        with pytest.raises(NotRegular):
            symmetric_closure(all_bijections_spine(points=3, objects=2))


class TestExtendToGroupoid:
    def test_translation_spine(self, z5_spine):
        result = extend_to_groupoid(z5_spine)
        assert result.conservative
        assert not result.added_morphisms
        ext = result.extended
        assert ext.pairs == {(i, j) for i in ext.objects for j in ext.objects}
        assert validate_spine(ext).ok
        assert check_regularity(ext).regular
        for o in ext.objects:
            diag = ext.morphisms[(o, o)]
            assert {f.graph for f in diag} == {
                shift_map(o, o, 5, t).graph for t in range(5)
            }

    def test_fixpoint_on_full_groupoid(self, z5_spine):
        full = extend_to_groupoid(z5_spine).extended
        again = extend_to_groupoid(full)
        assert again.iterations == 1
        assert again.conservative
        assert again.extended.morphisms == full.morphisms  # identical lists

    def test_idempotent(self, z3_spine):
        once = extend_to_groupoid(z3_spine)
        twice = extend_to_groupoid(once.extended)
        assert twice.extended.morphisms == once.extended.morphisms

    def test_order_independence(self, z5_spine):
        baseline = extend_to_groupoid(z5_spine).extended
        for perm in (tuple(reversed(range(5))), (2, 0, 3, 1, 4)):
            shuffled = GroupoidSpine(
                z5_spine.objects,
                z5_spine.sets,
                z5_spine.pairs,
                {
                    p: tuple(z5_spine.morphisms[p][k] for k in perm)
                    for p in z5_spine.pairs
                },
            )
            assert extend_to_groupoid(shuffled).extended.morphism_sets_equal(baseline)

    def test_trivial_spine(self):
        result = extend_to_groupoid(trivial_spine())
        assert result.conservative and result.iterations == 1

    def test_rejects_invalid_and_irregular(self):
        with pytest.raises(NotRegular):
            extend_to_groupoid(all_bijections_spine(points=3, objects=3))
        sets = {o: FiniteSet(o, ["x"]) for o in ("1", "2")}
        bad = GroupoidSpine(["1", "2"], sets, [("1", "2")], {("1", "2"): ()})
        with pytest.raises(InvalidSpine):
            extend_to_groupoid(bad)

    def test_extension_size_matches_group_order(self):
        from spinekit.catalog import symmetric_group
        from spinekit.generators import gen_group_action_spine

        spine = gen_group_action_spine(symmetric_group(3), 3)
        ext = extend_to_groupoid(spine).extended
        assert all(len(ext.morphisms[p]) == 6 for p in ext.pairs)


class TestTwoObjectCase:
    """No theorem covers two objects; conservativity is reported honestly."""

    def make_two_object(self, rows):
        n = len(rows[0])
        elems = [str(x) for x in range(n)]
        sets = {"1": FiniteSet("1", elems), "2": FiniteSet("2", elems)}
        maps = tuple(
            FiniteMap("1", "2", {str(x): str(r[x]) for x in range(n)}) for r in rows
        )
        return GroupoidSpine(["1", "2"], sets, [("1", "2")], {("1", "2"): maps})

    def test_coset_rows_are_conservative(self):
        rows = [tuple((x + t) % 5 for x in range(5)) for t in range(5)]
        result = extend_to_groupoid(self.make_two_object(rows))
        assert result.conservative

    def test_non_coset_rows_are_not(self):
        # the lexicographically first order-5 Latin square with identity
        # first row whose row set is not a coset family (found by the
        # exhaustive enumeration in test_generators)
        rows = [
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 3, 4, 0, 1),
            (3, 4, 1, 2, 0),
            (4, 2, 0, 1, 3),
        ]
        spine = self.make_two_object(rows)
        assert validate_spine(spine).ok
        assert check_regularity(spine).regular
        result = extend_to_groupoid(spine)
        assert not result.conservative
        assert ("1", "2") in result.added_morphisms
        assert result.added_morphisms[("1", "2")]


class TestSymmetricNonRegular:
    """A symmetric spine on three or more objects extends conservatively
    even without regularity; exercised through the internal closure."""

    def test_all_bijections_closure_is_conservative(self):
        spine = all_bijections_spine(points=3, objects=3)
        assert validate_spine(spine).ok
        assert not check_regularity(spine).regular
        result = _extend_unchecked(spine)
        assert result.conservative
        ext = result.extended
        assert validate_spine(ext).ok
        assert all(len(ext.morphisms[(o, o)]) == 6 for o in ext.objects)
