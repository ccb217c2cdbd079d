import pytest


class TestHealth:
    def test_reports_ok(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestExpressions:
    def test_eval_round_trips_bindings_bit_exactly(self, client):
        response = client.post(
            "/expressions/eval",
            json={
                "expression": "P",
                "bindings": {"P": [0.25, 0.40, 0.35]},
            },
        )
        assert response.status_code == 200
        assert response.json() == {"t": 0.25, "i": 0.40, "f": 0.35}

    def test_eval_conjunction(self, client):
        response = client.post(
            "/expressions/eval",
            json={
                "expression": "P & Q",
                "bindings": {
                    "P": [0.5, 0.3, 0.2],
                    "Q": [0.4, 0.4, 0.2],
                },
            },
        )
        body = response.json()
        assert abs(body["t"] - 0.2) <= 1e-12
        assert abs(body["i"] - 0.6) <= 1e-12
        assert abs(body["f"] - 0.2) <= 1e-12

    def test_eval_literal_needs_no_bindings(self, client):
        response = client.post(
            "/expressions/eval", json={"expression": "!(1,0,0)"}
        )
        assert response.json() == {"t": 0.0, "i": 0.5, "f": 0.5}

    def test_eval_percent_mode(self, client):
        response = client.post(
            "/expressions/eval",
            json={"expression": "(50,20,30)", "percent": True},
        )
        assert response.json() == {"t": 0.5, "i": 0.2, "f": 0.3}

    def test_percent_applies_to_bindings_too(self, client):
        response = client.post(
            "/expressions/eval",
            json={
                "expression": "P",
                "bindings": {"P": [50, 20, 30]},
                "percent": True,
            },
        )
        assert response.json() == {"t": 0.5, "i": 0.2, "f": 0.3}

    def test_parse_error_carries_position(self, client):
        response = client.post("/expressions/eval", json={"expression": "P &"})
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["kind"] == "ParseError"
        assert detail["position"] == 3

    def test_lex_error_carries_position(self, client):
        response = client.post("/expressions/eval", json={"expression": "P ? Q"})
        detail = response.json()["detail"]
        assert response.status_code == 422
        assert detail["kind"] == "LexError"
        assert detail["position"] == 2

    def test_unbound_atom_is_domain_error(self, client):
        response = client.post("/expressions/eval", json={"expression": "P"})
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["kind"] == "UnboundAtom"
        assert "P" in detail["message"]

    def test_request_shape_errors_are_pydantic_lists(self, client):
        response = client.post("/expressions/eval", json={"expression": 7})
        assert response.status_code == 422
        assert isinstance(response.json()["detail"], list)

    def test_canonical_formats_minimal_parens(self, client):
        response = client.post(
            "/expressions/canonical", json={"expression": "((P) & (Q |w R))"}
        )
        assert response.json() == {"canonical": "P & (Q |w R)"}


class TestClassify:
    def test_builtin_table(self, client):
        response = client.post(
            "/classify", json={"s": 55.0, "i": 10.0, "u": 35.0}
        )
        assert response.json() == {
            "model": "M4",
            "distance": 5.0,
            "interval": [55.0, 65.0],
        }

    def test_custom_table_with_derived_u(self, client):
        response = client.post(
            "/classify",
            json={
                "s": 40.0,
                "i": 0.0,
                "u": 60.0,
                "table": [
                    {"name": "hi", "s": 90.0},
                    {"name": "lo", "s": 10.0},
                ],
            },
        )
        assert response.json()["model"] == "lo"

    def test_bad_assessment_is_domain_error(self, client):
        response = client.post(
            "/classify", json={"s": 50.0, "i": 10.0, "u": 50.0}
        )
        assert response.status_code == 422
        assert response.json()["detail"]["kind"] == "NotNormalized"

    def test_table_endpoint_lists_builtin_rows(self, client):
        response = client.get("/orientation/table")
        rows = response.json()["rows"]
        assert [r["name"] for r in rows] == [
            "M1", "M2", "M3", "M4", "M5", "M6", "M7",
        ]
        assert rows[3] == {"name": "M4", "s": 50.0, "u": 50.0}


SET_M = {
    "universe": ["a", "b"],
    "membership": {"a": [1, 0, 0], "b": [0.5, 0.3, 0.2]},
}
SET_N = {
    "universe": ["a", "b"],
    "membership": {"a": [0, 1, 0], "b": [0.4, 0.4, 0.2]},
}


class TestSets:
    def test_complement(self, client):
        response = client.post("/sets/complement", json={"set": SET_M})
        body = response.json()
        assert body["set"]["membership"]["a"] == [0.0, 0.5, 0.5]
        assert body["warnings"] == []

    def test_union_and_intersect(self, client):
        union = client.post(
            "/sets/union", json={"left": SET_M, "right": SET_N}
        ).json()
        intersect = client.post(
            "/sets/intersect", json={"left": SET_M, "right": SET_N}
        ).json()
        t_union = union["set"]["membership"]["b"][0]
        t_intersect = intersect["set"]["membership"]["b"][0]
        assert abs(t_union - (0.5 + 0.4 - 0.2)) <= 1e-12
        assert abs(t_intersect - 0.2) <= 1e-12

    def test_difference_matches_composed_form(self, client):
        direct = client.post(
            "/sets/difference", json={"left": SET_M, "right": SET_N}
        ).json()
        complement = client.post("/sets/complement", json={"set": SET_N}).json()
        composed = client.post(
            "/sets/intersect",
            json={"left": SET_M, "right": complement["set"]},
        ).json()
        for element in ("a", "b"):
            a = direct["set"]["membership"][element]
            b = composed["set"]["membership"][element]
            assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-12

    def test_product_lists_all_pairs(self, client):
        response = client.post(
            "/sets/product",
            json={
                "left": SET_M,
                "right": {
                    "universe": ["z"],
                    "membership": {"z": [0, 0, 1]},
                },
            },
        )
        pairs = response.json()["pairs"]
        assert len(pairs) == 2
        assert pairs[0]["left"]["element"] == "a"
        assert pairs[0]["right"]["element"] == "z"
        assert pairs[0]["right"]["value"] == [0.0, 0.0, 1.0]

    def test_missing_membership_warns_and_defaults(self, client):
        response = client.post(
            "/sets/complement",
            json={"set": {"universe": ["a", "b"], "membership": {"a": [1, 0, 0]}}},
        )
        body = response.json()
        assert len(body["warnings"]) == 1
        # default (0,0,1) complements to t = 1
        assert body["set"]["membership"]["b"][0] == 1.0

    def test_universe_mismatch_domain_error(self, client):
        response = client.post(
            "/sets/union",
            json={
                "left": SET_M,
                "right": {"universe": ["zz"], "membership": {"zz": [1, 0, 0]}},
            },
        )
        assert response.status_code == 422
        assert response.json()["detail"]["kind"] == "UniverseMismatch"


EVENTS = {
    "election": [0.25, 0.40, 0.35],
    "rain": [0.50, 0.20, 0.30],
}


class TestProbability:
    def test_chance_with_bound(self, client):
        response = client.post(
            "/probability/chance", json={"events": EVENTS, "name": "election"}
        )
        body = response.json()
        assert body["t"] == 0.25 and body["i"] == 0.40 and body["f"] == 0.35
        assert body["bound"][0] == 0.25
        assert abs(body["bound"][1] - 0.65) <= 1e-12

    def test_unknown_event(self, client):
        response = client.post(
            "/probability/chance", json={"events": EVENTS, "name": "snow"}
        )
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["kind"] == "UnknownEvent"
        assert "snow" in detail["message"]

    def test_combine_conjunction(self, client):
        response = client.post(
            "/probability/combine",
            json={"events": EVENTS, "kind": "and", "a": "election", "b": "rain"},
        )
        assert abs(response.json()["t"] - 0.125) <= 1e-12

    def test_combine_negation_unary(self, client):
        response = client.post(
            "/probability/combine",
            json={"events": EVENTS, "kind": "not", "a": "rain"},
        )
        assert abs(response.json()["t"] - 0.5) <= 1e-12

    def test_combine_negation_with_b_rejected(self, client):
        response = client.post(
            "/probability/combine",
            json={"events": EVENTS, "kind": "not", "a": "rain", "b": "election"},
        )
        assert response.status_code == 422

    def test_combine_binary_without_b_rejected(self, client):
        response = client.post(
            "/probability/combine",
            json={"events": EVENTS, "kind": "and", "a": "rain"},
        )
        assert response.status_code == 422

    def test_unknown_kind_is_request_shape_error(self, client):
        response = client.post(
            "/probability/combine",
            json={"events": EVENTS, "kind": "sometimes", "a": "rain"},
        )
        assert response.status_code == 422
        assert isinstance(response.json()["detail"], list)

    def test_resolve(self, client):
        response = client.post(
            "/probability/resolve",
            json={"accepted": 0.3, "rejected": 0.5, "pending": 0.2, "theta": 0.5},
        )
        body = response.json()
        assert abs(body["accepted"] - 0.4) <= 1e-12
        assert abs(body["rejected"] - 0.6) <= 1e-12

    def test_resolve_theta_out_of_range(self, client):
        response = client.post(
            "/probability/resolve",
            json={"accepted": 0.3, "rejected": 0.5, "pending": 0.2, "theta": 1.5},
        )
        assert response.status_code == 422
        assert response.json()["detail"]["kind"] == "OutOfRange"

    def test_summary(self, client):
        response = client.post("/probability/summary", json={"events": EVENTS})
        body = response.json()
        assert body["count"] == 2
        assert abs(body["mean"]["t"] - 0.375) <= 1e-12
        assert body["minima"][0] == 0.25
        assert body["maxima"][2] == 0.35

    def test_summary_of_empty_space(self, client):
        response = client.post("/probability/summary", json={"events": {}})
        assert response.status_code == 422
        assert response.json()["detail"]["kind"] == "EmptySpace"


class TestTopology:
    def test_union(self, client):
        response = client.post("/topology/union", json={"p": 0.5, "q": 0.5})
        assert response.json() == {
            "kind": "open",
            "parameter": 0.75,
            "closed": False,
        }

    def test_intersect(self, client):
        response = client.post("/topology/intersect", json={"p": 0.5, "q": 0.4})
        assert response.json()["parameter"] == 0.2

    def test_intersect_to_empty(self, client):
        response = client.post("/topology/intersect", json={"p": 0.0, "q": 0.4})
        assert response.json()["kind"] == "empty"

    def test_complement_is_closed(self, client):
        response = client.post("/topology/complement", json={"p": 0.25})
        assert response.json() == {
            "kind": "open",
            "parameter": 0.75,
            "closed": True,
        }

    def test_parameter_out_of_range(self, client):
        response = client.post("/topology/union", json={"p": 1.5, "q": 0.2})
        assert response.status_code == 422
        assert response.json()["detail"]["kind"] == "OutOfRange"

    def test_iso_check(self, client):
        response = client.post("/topology/iso-check", json={"step": 0.05})
        body = response.json()
        assert body["passed"] is True
        assert body["max_deviation"] <= body["tolerance"]


class TestConcepts:
    def test_colors_universe(self, client):
        response = client.post(
            "/concepts/check",
            json={
                "attributes": ["white", "black", "green", "red", "blue", "yellow"],
                "A": ["white"],
                "AntiA": ["black"],
            },
        )
        body = response.json()
        assert body["all_hold"] is True
        assert len(body["laws"]) == 7
        assert body["non"] == ["black", "green", "red", "blue", "yellow"]
        assert body["neut"] == ["green", "red", "blue", "yellow"]

    def test_overlap_rejected(self, client):
        response = client.post(
            "/concepts/check",
            json={"attributes": ["a"], "A": ["a"], "AntiA": ["a"]},
        )
        assert response.status_code == 422
        assert response.json()["detail"]["kind"] == "InvariantViolation"


class TestSweep:
    def test_small_sweep_passes(self, client):
        response = client.post(
            "/properties/sweep",
            json={
                "step": 0.25,
                "seed": 3,
                "connector_cases": 200,
                "set_cases": 40,
                "sample_cases": 50,
            },
        )
        body = response.json()
        assert body["all_passed"] is True
        assert len(body["results"]) == 21
        assert body["total_cases"] == sum(r["cases"] for r in body["results"])

    def test_step_bounds_enforced_by_schema(self, client):
        response = client.post("/properties/sweep", json={"step": 0.9})
        assert response.status_code == 422
        assert isinstance(response.json()["detail"], list)
