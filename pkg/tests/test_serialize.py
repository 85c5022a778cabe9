"""JSON wire formats: round trips, strict key checking, fraction values."""

import random
from fractions import Fraction

import pytest

from cuspcobord import SchemaError
from cuspcobord.moves import Move, MoveTrace
from cuspcobord.pattern import CIRCLE, INTERVAL
from cuspcobord.serialize import (
    descriptor_from_json,
    descriptor_to_json,
    obstruction_to_json,
    pattern_from_json,
    pattern_to_json,
    sigma_from_json,
    sigma_to_json,
    trace_from_json,
    trace_to_json,
)

from _enumeration import build_pattern, random_descriptor, single_shapes


class TestDescriptor:
    def test_round_trip(self):
        rng = random.Random(3)
        for n in (2, 3, 4):
            for _ in range(20):
                d = random_descriptor(n, rng)
                assert descriptor_from_json(descriptor_to_json(d)) == d

    def test_fraction_values_as_strings(self):
        obj = {"n": 2, "oriented": True, "chi_M": 1, "chi_boundary": 0,
               "interior": [],
               "boundary": [
                   {"id": "x0", "mu": 0, "sigma": 1, "value": "1/3"},
                   {"id": "x1", "mu": 1, "sigma": 1, "value": 2}]}
        d = descriptor_from_json(obj)
        assert d.boundary[0].value == Fraction(1, 3)
        assert d.boundary[1].value == Fraction(2)
        out = descriptor_to_json(d)
        assert out["boundary"][0]["value"] == "1/3"

    def test_float_values_rejected(self):
        obj = {"n": 2, "oriented": True, "chi_M": 1, "chi_boundary": 0,
               "interior": [],
               "boundary": [{"id": "x0", "mu": 0, "sigma": 1, "value": 0.5},
                            {"id": "x1", "mu": 1, "sigma": 1}]}
        with pytest.raises(SchemaError):
            descriptor_from_json(obj)

    def test_unknown_keys_rejected(self):
        obj = {"n": 2, "oriented": True, "chi_M": 1, "chi_boundary": 0,
               "interior": [], "boundary": [], "extra": 1}
        with pytest.raises(SchemaError):
            descriptor_from_json(obj)

    def test_bool_not_accepted_as_int(self):
        obj = {"n": True, "oriented": True, "chi_M": 1, "chi_boundary": 0,
               "interior": [], "boundary": []}
        with pytest.raises(SchemaError):
            descriptor_from_json(obj)

    def test_bad_sigma_rejected(self):
        obj = {"n": 2, "oriented": True, "chi_M": 1, "chi_boundary": 0,
               "interior": [],
               "boundary": [{"id": "x0", "mu": 0, "sigma": 2},
                            {"id": "x1", "mu": 1, "sigma": 1}]}
        with pytest.raises(SchemaError):
            descriptor_from_json(obj)


class TestSigma:
    def test_round_trip(self):
        sigma = sigma_from_json({"x0": 1, "x1": -1})
        assert sigma.sign("x0") == 1 and sigma.sign("x1") == -1
        assert sigma_to_json(sigma) == {"x0": 1, "x1": -1}

    def test_bad_sign_rejected(self):
        with pytest.raises(SchemaError):
            sigma_from_json({"x0": 0})


class TestPattern:
    def test_round_trip_over_small_shapes(self):
        for n in (2, 3, 4):
            for shape in single_shapes(n, 2):
                p = build_pattern(n, (shape,))
                assert pattern_from_json(pattern_to_json(p)) == p

    def test_ids_autogenerated_when_omitted(self):
        obj = {"n": 2, "boundary_points": [],
               "components": [{"kind": "circle",
                               "sequence": [{"arc": {"tau": 1}},
                                            {"cusp": {"I": 0}},
                                            {"arc": {"tau": 1, "id": "a0"}},
                                            {"cusp": {"I": 0}}]}]}
        p = pattern_from_json(obj)
        ids = [e.id for e in p.components[0].sequence]
        # the explicit id is kept; generated ones never collide with it
        assert "a0" in ids
        assert len(set(ids)) == 4

    def test_sigma_on_boundary_defaults_to_plus(self):
        obj = {"n": 2,
               "boundary_points": [{"id": "x0", "mu": 0},
                                   {"id": "x1", "mu": 0, "sigma": -1}],
               "components": [{"kind": "interval",
                               "endpoints": ["x0", "x1"],
                               "sequence": [{"arc": {"tau": 1}}]}]}
        p = pattern_from_json(obj)
        assert p.boundary_points[0].sigma == 1
        assert p.boundary_points[1].sigma == -1

    def test_unknown_element_kind_rejected(self):
        obj = {"n": 2, "boundary_points": [],
               "components": [{"kind": "circle",
                               "sequence": [{"blob": {"tau": 1}}]}]}
        with pytest.raises(SchemaError):
            pattern_from_json(obj)

    def test_chi_ambient_is_optional(self):
        obj = {"n": 2, "chi_ambient": 2, "boundary_points": [],
               "components": [{"kind": "circle",
                               "sequence": [{"arc": {"tau": 1}}]}]}
        assert pattern_from_json(obj).chi_ambient == 2


class TestTrace:
    def test_round_trip(self):
        p = build_pattern(2, (("circle", (1,), ()),))
        q = build_pattern(2, (("circle", (1, 1), (0, 0)),))
        trace = MoveTrace(p, (Move("create_cusp_pair",
                                   {"arc": "a0", "i": 0, "flip": False}),),
                          q)
        back = trace_from_json(trace_to_json(trace))
        assert back == trace

    def test_unknown_move_kind_rejected(self):
        p = build_pattern(2, (("circle", (1,), ()),))
        obj = trace_to_json(MoveTrace(p, (), p))
        obj["moves"] = [{"kind": "warp", "params": {}}]
        with pytest.raises(SchemaError):
            trace_from_json(obj)

    def test_missing_required_param_rejected(self):
        p = build_pattern(2, (("circle", (1,), ()),))
        obj = trace_to_json(MoveTrace(p, (), p))
        obj["moves"] = [{"kind": "create_cusp_pair", "params": {"arc": "a0"}}]
        with pytest.raises(SchemaError):
            trace_from_json(obj)


class TestObstruction:
    def test_shape(self):
        from cuspcobord.moves import Obstruction
        out = obstruction_to_json(Obstruction("parity_mismatch",
                                              {"chi_V": 1, "chi_plus": 2}))
        assert out == {"kind": "parity_mismatch",
                       "witness": {"chi_V": 1, "chi_plus": 2}}
