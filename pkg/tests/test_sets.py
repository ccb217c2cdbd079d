import json
import random
from fractions import Fraction

import pytest

import rational_oracle as oracle
from conftest import assert_close_triple
from neutro.errors import InvariantViolation, NotNormalized, UniverseMismatch
from neutro.sets import (
    NeutrosophicSet,
    Universe,
    dump_set,
    load_set,
    set_complement,
    set_difference,
    set_intersect,
    set_product,
    set_union,
)
from neutro.values import make_triple


def small_universe():
    return Universe(("a", "b", "c"))


def sample_set():
    u = small_universe()
    return NeutrosophicSet(
        u,
        {
            "a": make_triple(1, 0, 0),
            "b": make_triple(0, 1, 0),
            "c": make_triple(0.5, 0.3, 0.2),
        },
    )


def random_set(rng, universe):
    membership = {}
    for name in universe.elements:
        t = rng.random()
        i = rng.random() * (1 - t)
        f = 1 - t - i
        if f < 0:
            i += f
            f = 0.0
        membership[name] = make_triple(t, i, f)
    return NeutrosophicSet(universe, membership)


class TestUniverse:
    def test_preserves_order(self):
        assert Universe(("x", "a", "m")).elements == ("x", "a", "m")

    def test_rejects_empty(self):
        with pytest.raises(InvariantViolation):
            Universe(())

    def test_rejects_duplicates(self):
        with pytest.raises(InvariantViolation):
            Universe(("a", "b", "a"))

    def test_container_protocol(self):
        u = small_universe()
        assert "b" in u and "zz" not in u
        assert len(u) == 3
        assert list(u) == ["a", "b", "c"]


class TestSetConstruction:
    def test_requires_total_coverage(self):
        u = small_universe()
        with pytest.raises(InvariantViolation):
            NeutrosophicSet(u, {"a": make_triple(1, 0, 0)})

    def test_rejects_unknown_members(self):
        u = small_universe()
        membership = {
            name: make_triple(1, 0, 0) for name in ("a", "b", "c", "ghost")
        }
        with pytest.raises(InvariantViolation):
            NeutrosophicSet(u, membership)

    def test_membership_reads_back_in_universe_order(self):
        u = small_universe()
        s = NeutrosophicSet(
            u,
            {
                "c": make_triple(0.5, 0.3, 0.2),
                "a": make_triple(1, 0, 0),
                "b": make_triple(0, 1, 0),
            },
        )
        assert list(s.membership) == ["a", "b", "c"]
        assert s["c"] == make_triple(0.5, 0.3, 0.2)


class TestComplement:
    def test_full_member_becomes_balanced_absence(self):
        out = set_complement(sample_set())
        assert out["a"].as_tuple() == (0.0, 0.5, 0.5)

    def test_fully_indeterminate_member_becomes_full(self):
        out = set_complement(sample_set())
        assert out["b"].as_tuple() == (1.0, 0.0, 0.0)

    def test_matches_oracle(self):
        got = set_complement(sample_set())["c"]
        want = oracle.negate_triple(
            oracle.triple(Fraction(1, 2), Fraction(3, 10), Fraction(1, 5))
        )
        assert oracle.max_component_gap(got.as_tuple(), want) <= 1e-12


class TestBinaryOperations:
    def test_intersect_example(self):
        u = Universe(("e",))
        m = NeutrosophicSet(u, {"e": make_triple(0.5, 0.3, 0.2)})
        n = NeutrosophicSet(u, {"e": make_triple(0.4, 0.4, 0.2)})
        assert_close_triple(set_intersect(m, n)["e"], (0.2, 0.6, 0.2))

    def test_union_example(self):
        u = Universe(("e",))
        m = NeutrosophicSet(u, {"e": make_triple(0, 0.5, 0.5)})
        assert_close_triple(set_union(m, m)["e"], (0, 0.5, 0.5))

    def test_difference_self_t_component(self):
        u = Universe(("e",))
        m = NeutrosophicSet(u, {"e": make_triple(0.5, 0.2, 0.3)})
        assert abs(set_difference(m, m)["e"].t - 0.25) <= 1e-12

    def test_universe_mismatch_rejected(self):
        m = sample_set()
        n = random_set(random.Random(1), Universe(("a", "b")))
        with pytest.raises(UniverseMismatch):
            set_union(m, n)
        with pytest.raises(UniverseMismatch):
            set_intersect(m, n)
        with pytest.raises(UniverseMismatch):
            set_difference(m, n)

    def test_commutativity_is_bitwise(self):
        rng = random.Random(13)
        u = Universe(tuple("pqrs"))
        for _ in range(100):
            m, n = random_set(rng, u), random_set(rng, u)
            assert set_union(m, n) == set_union(n, m)
            assert set_intersect(m, n) == set_intersect(n, m)

    def test_difference_equals_intersect_with_complement(self):
        rng = random.Random(99)
        u = Universe(tuple("wxyz"))
        for _ in range(200):
            m, n = random_set(rng, u), random_set(rng, u)
            direct = set_difference(m, n)
            composed = set_intersect(m, set_complement(n))
            for name in u.elements:
                a = direct[name].as_tuple()
                b = composed[name].as_tuple()
                assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-12

    def test_difference_component_matches_oracle(self):
        u = Universe(("e",))
        m = NeutrosophicSet(u, {"e": make_triple(0.5, 0.2, 0.3)})
        got = set_difference(m, m)["e"]
        exact = oracle.triple(Fraction(1, 2), Fraction(1, 5), Fraction(3, 10))
        raw = tuple(
            oracle.set_difference_component(c, c) for c in exact
        )
        want = oracle.renormalize(*raw)
        assert oracle.max_component_gap(got.as_tuple(), want) <= 1e-12


class TestProduct:
    def test_all_pairs_in_universe_order(self):
        u1 = Universe(("a", "b"))
        u2 = Universe(("x", "y", "z"))
        rng = random.Random(3)
        m, n = random_set(rng, u1), random_set(rng, u2)
        pairs = set_product(m, n)
        assert len(pairs) == 6
        assert [(left[0], right[0]) for left, right in pairs] == [
            ("a", "x"), ("a", "y"), ("a", "z"),
            ("b", "x"), ("b", "y"), ("b", "z"),
        ]
        for (x, mv), (y, nv) in pairs:
            assert mv == m[x]
            assert nv == n[y]

    def test_product_allows_distinct_universes(self):
        rng = random.Random(4)
        m = random_set(rng, Universe(("only",)))
        n = random_set(rng, Universe(("p", "q")))
        assert len(set_product(m, n)) == 2


class TestFileFormat:
    def test_round_trip(self, tmp_path):
        s = sample_set()
        path = tmp_path / "set.json"
        path.write_text(json.dumps(dump_set(s)))
        loaded, warnings = load_set(json.loads(path.read_text()))
        assert warnings == []
        assert loaded == s

    def test_missing_element_defaults_to_absent_with_warning(self):
        payload = {
            "universe": ["a", "b"],
            "membership": {"a": [1, 0, 0]},
        }
        loaded, warnings = load_set(payload)
        assert loaded["b"].as_tuple() == (0.0, 0.0, 1.0)
        assert len(warnings) == 1
        assert "'b'" in warnings[0]

    def test_unknown_member_rejected(self):
        payload = {
            "universe": ["a"],
            "membership": {"a": [1, 0, 0], "zz": [1, 0, 0]},
        }
        with pytest.raises(InvariantViolation):
            load_set(payload)

    def test_bad_arity_rejected(self):
        payload = {"universe": ["a"], "membership": {"a": [1, 0]}}
        with pytest.raises(InvariantViolation):
            load_set(payload)

    def test_unnormalized_entry_rejected(self):
        payload = {"universe": ["a"], "membership": {"a": [0.5, 0.5, 0.5]}}
        with pytest.raises(NotNormalized):
            load_set(payload)

    def test_missing_universe_rejected(self):
        with pytest.raises(InvariantViolation):
            load_set({"membership": {}})
