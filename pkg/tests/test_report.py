import json
from fractions import Fraction

import pytest

from plumbook import rational_str, render_json, render_text


class TestRationalStr:
    def test_proper_fraction(self):
        assert rational_str(Fraction(4777, 4)) == "4777/4"

    def test_negative_sign_on_numerator(self):
        assert rational_str(Fraction(-1, 3)) == "-1/3"
        assert rational_str(Fraction(1, -3)) == "-1/3"

    def test_integral_values_collapse(self):
        assert rational_str(Fraction(6, 3)) == "2"
        assert rational_str(Fraction(-4, 2)) == "-2"
        assert rational_str(5) == "5"
        assert rational_str(0) == "0"


class TestRenderJson:
    def test_structure(self):
        data = {"a": 1, "b": Fraction(1, 2), "c": [True, "x"], "d": {"e": None}}
        text = render_json(data)
        assert text.endswith("\n")
        parsed = json.loads(text)
        assert parsed == {"a": 1, "b": "1/2", "c": [True, "x"], "d": {"e": None}}

    def test_key_order_preserved(self):
        text = render_json({"zebra": 1, "alpha": 2})
        assert text.index("zebra") < text.index("alpha")

    def test_deterministic(self):
        data = {"x": (1, 2), "y": Fraction(3, 7)}
        assert render_json(data) == render_json(data)

    def test_rejects_unknown_types(self):
        with pytest.raises(TypeError):
            render_json({"x": object()})


class TestRenderText:
    def test_scalars_and_booleans(self):
        text = render_text({"m": 2, "negative definite": True, "flag": False})
        assert text == "m: 2\nnegative definite: yes\nflag: no\n"

    def test_fractions_and_tuples(self):
        text = render_text({"chi_h": Fraction(4777, 4), "M": (30, 87)})
        assert "chi_h: 4777/4\n" in text
        assert "M: (30, 87)\n" in text

    def test_nested_dict(self):
        text = render_text({"outer": {"inner": 1}})
        assert text == "outer:\n  inner: 1\n"

    def test_list_of_dicts(self):
        text = render_text({"items": [{"a": 1}, {"a": 2}]})
        assert text == "items:\n  -\n    a: 1\n  -\n    a: 2\n"

    def test_nested_tuples_inline(self):
        text = render_text({"slopes": ((90, 30), (87, 87))})
        assert text == "slopes: ((90, 30), (87, 87))\n"

    def test_deterministic(self):
        data = {"a": [1, 2], "b": {"c": Fraction(1, 3)}}
        assert render_text(data) == render_text(data)
