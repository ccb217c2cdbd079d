import random

import pytest

from neutro.concepts import (
    ConceptUniverse,
    LawReport,
    load_concepts,
    neut_of,
    non_of,
    verify_laws,
)
from neutro.errors import InvariantViolation

COLORS = ("white", "black", "green", "red", "blue", "yellow")


def colors_universe():
    return ConceptUniverse(
        attributes=COLORS,
        a=frozenset({"white"}),
        anti_a=frozenset({"black"}),
    )


def random_universe(rng):
    size = rng.randrange(0, 9)
    attrs = tuple(f"x{k}" for k in range(size))
    shuffled = list(attrs)
    rng.shuffle(shuffled)
    cut_a = rng.randrange(0, size + 1)
    cut_anti = rng.randrange(cut_a, size + 1)
    return ConceptUniverse(
        attributes=attrs,
        a=frozenset(shuffled[:cut_a]),
        anti_a=frozenset(shuffled[cut_a:cut_anti]),
    )


class TestConstruction:
    def test_rejects_duplicate_attributes(self):
        with pytest.raises(InvariantViolation):
            ConceptUniverse(("a", "a"), frozenset(), frozenset())

    def test_rejects_stray_a_members(self):
        with pytest.raises(InvariantViolation):
            ConceptUniverse(("a",), frozenset({"zz"}), frozenset())

    def test_rejects_stray_anti_members(self):
        with pytest.raises(InvariantViolation):
            ConceptUniverse(("a",), frozenset(), frozenset({"zz"}))

    def test_rejects_overlapping_a_and_anti(self):
        with pytest.raises(InvariantViolation):
            ConceptUniverse(("a", "b"), frozenset({"a"}), frozenset({"a"}))

    def test_empty_universe_is_allowed(self):
        u = ConceptUniverse((), frozenset(), frozenset())
        assert non_of(u) == ()
        assert verify_laws(u).all_hold


class TestRegions:
    def test_non_excludes_only_a(self):
        u = colors_universe()
        assert non_of(u) == ("black", "green", "red", "blue", "yellow")

    def test_neut_excludes_a_and_anti(self):
        u = colors_universe()
        assert neut_of(u) == ("green", "red", "blue", "yellow")

    def test_non_of_full_a_is_empty(self):
        u = ConceptUniverse(("a", "b"), frozenset({"a", "b"}), frozenset())
        assert non_of(u) == ()

    def test_non_of_empty_a_is_everything(self):
        u = ConceptUniverse(("a", "b"), frozenset(), frozenset())
        assert non_of(u) == ("a", "b")

    def test_neut_empty_when_anti_fills_the_rest(self):
        u = ConceptUniverse(("a", "b"), frozenset({"a"}), frozenset({"b"}))
        assert neut_of(u) == ()

    def test_neut_is_everything_when_both_empty(self):
        u = ConceptUniverse(("a", "b"), frozenset(), frozenset())
        assert neut_of(u) == ("a", "b")

    def test_outputs_follow_attribute_order(self):
        u = ConceptUniverse(
            ("z", "m", "a"), frozenset({"m"}), frozenset()
        )
        assert non_of(u) == ("z", "a")


class TestLaws:
    def test_colors_universe_passes_all_seven(self):
        report = verify_laws(colors_universe())
        assert isinstance(report, LawReport)
        assert len(report.checks) == 7
        assert report.all_hold
        assert {c.name for c in report.checks} == {
            "neut-swap-invariance",
            "non-contains-anti",
            "non-contains-neut",
            "a-disjoint-anti",
            "a-disjoint-non",
            "partition-pairwise-disjoint",
            "partition-covers",
        }

    def test_random_universes_pass_against_set_oracle(self):
        rng = random.Random(424242)
        for _ in range(300):
            u = random_universe(rng)
            pool = set(u.attributes)
            non_expected = pool - set(u.a)
            neut_expected = pool - set(u.a) - set(u.anti_a)
            assert set(non_of(u)) == non_expected
            assert set(neut_of(u)) == neut_expected
            assert verify_laws(u).all_hold

    def test_every_check_carries_detail_text(self):
        for check in verify_laws(colors_universe()).checks:
            assert check.detail


class TestFileFormat:
    def test_load_round_trip(self):
        u = load_concepts(
            {
                "attributes": list(COLORS),
                "A": ["white"],
                "AntiA": ["black"],
            }
        )
        assert u == colors_universe()

    def test_missing_keys_rejected(self):
        with pytest.raises(InvariantViolation):
            load_concepts({"attributes": ["a"], "A": []})

    def test_overlap_rejected_at_load(self):
        with pytest.raises(InvariantViolation):
            load_concepts({"attributes": ["a"], "A": ["a"], "AntiA": ["a"]})
