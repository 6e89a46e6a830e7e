import json
from pathlib import Path

import pytest
import sympy

from homnambu.cli import render_json
from homnambu.models import (counterexamples, cross4_theta_counterexample,
                             jacobian_k4_counterexample)

GOLDEN = Path(__file__).parent / "golden"


def _golden(name):
    with open(GOLDEN / name) as f:
        return json.load(f)


def _sympify(text):
    return sympy.sympify(text.replace("^", "**"))


def test_cross4_theta_matches_golden():
    result = cross4_theta_counterexample()
    assert result.matches_expected
    assert not result.holds
    assert json.loads(render_json(result.to_dict())) == \
        _golden("cross4_theta.json")


def test_jacobian_k4_matches_golden():
    result = jacobian_k4_counterexample()
    assert result.matches_expected
    assert result.verdict == "equal iff k4 = 0"
    assert json.loads(render_json(result.to_dict())) == \
        _golden("jacobian_k4.json")


def test_jacobian_k4_agrees_with_sympy():
    x1, x2, x3, k4 = sympy.symbols("x1 x2 x3 k4")

    def twisted(a, b, c):
        det = sympy.Matrix([a, b, c]).jacobian([x1, x2, x3]).det()
        return sympy.expand(det.subs(x3, x3 + k4))

    q = (x1, x2, x3 ** 3, x1 ** 2, x2 * x3)
    lhs = twisted(q[0], q[1], twisted(q[2], q[3], q[4]))
    rhs = (twisted(twisted(q[0], q[1], q[2]), q[3], q[4])
           + twisted(q[2], twisted(q[0], q[1], q[3]), q[4])
           + twisted(q[2], q[3], twisted(q[0], q[1], q[4])))

    result = jacobian_k4_counterexample()
    assert sympy.expand(_sympify(result.lhs) - lhs) == 0
    assert sympy.expand(_sympify(result.rhs) - rhs) == 0
    assert sympy.expand(_sympify(result.expected_lhs) - lhs) == 0
    assert sympy.expand(lhs - rhs - 6 * x1 * k4 * (4 * x3 + 7 * k4)) == 0


def test_jacobian_k4_at_zero_holds():
    result = jacobian_k4_counterexample(k4=0)
    assert result.residual == "0"
    assert result.holds
    assert result.verdict == "equal"
    assert result.matches_expected
    assert result.setting.endswith("k4 = 0")


@pytest.mark.parametrize("k4", [1, "1", "-2/3"])
def test_jacobian_k4_at_nonzero_fails(k4):
    result = jacobian_k4_counterexample(k4=k4)
    assert result.verdict == "not equal"
    assert not result.holds
    assert result.matches_expected


def test_counterexample_registry():
    assert sorted(counterexamples) == ["cross4-theta", "jacobian-k4"]
    assert counterexamples["cross4-theta"]().name == "cross4-theta"
