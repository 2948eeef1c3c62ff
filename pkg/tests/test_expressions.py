import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from featurelab.errors import EvaluationError, ExpressionSyntaxError
from featurelab.spectra import expressions as ex
from featurelab.spectra import parse_index_expression

from oracles import eval_formula_text


def test_normalized_difference_wavelengths():
    defn = parse_index_expression("(R800 - R670) / (R800 + R670)")
    assert defn.wavelengths_used == (670.0, 800.0)


def test_single_terminal_identity():
    defn = parse_index_expression("R550")
    assert defn.wavelengths_used == (550.0,)
    assert ex.evaluate(defn.expression, {550.0: 0.25}) == 0.25


def test_trailing_operator_is_syntax_error():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_index_expression("R800 +")
    assert "operand" in str(err.value)
    assert err.value.position == len("R800 +")


@pytest.mark.parametrize(
    "bad", ["", "   ", "(R800", "R800 R670", "* R800", "R800 + $", "()"]
)
def test_malformed_inputs(bad):
    with pytest.raises(ExpressionSyntaxError):
        parse_index_expression(bad)


def test_evi_matches_independent_interpreter():
    text = "2.5 * (R800 - R670) / (R800 + 6*R670 - 7.5*R450 + 1)"
    values = {800.0: 0.5, 670.0: 0.1, 450.0: 0.05}
    defn = parse_index_expression(text)
    ours = ex.evaluate(defn.expression, values)
    oracle = eval_formula_text(text, values)
    assert ours == pytest.approx(oracle, rel=1e-15)


def test_precedence():
    node = ex.parse_expression("1 + 2 * 3")
    assert ex.evaluate(node, {}) == 7.0
    node = ex.parse_expression("(1 + 2) * 3")
    assert ex.evaluate(node, {}) == 9.0
    node = ex.parse_expression("-2 * 3")
    assert ex.evaluate(node, {}) == -6.0


def test_division_by_zero_raises():
    node = ex.parse_expression("1 / (R800 - R800)")
    with pytest.raises(EvaluationError):
        ex.evaluate(node, {800.0: 0.3})


def _random_expression(rng, depth, wavelengths):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return ex.Num(round(float(rng.uniform(0.1, 9.9)), 3))
        return ex.Band(float(rng.choice(wavelengths)))
    roll = rng.random()
    if roll < 0.15:
        return ex.Neg(_random_expression(rng, depth - 1, wavelengths))
    op = str(rng.choice(["+", "-", "*", "/"]))
    return ex.BinOp(
        op,
        _random_expression(rng, depth - 1, wavelengths),
        _random_expression(rng, depth - 1, wavelengths),
    )


def test_random_expressions_match_python_eval():
    """100 random trees (depth <= 5) evaluate like Python's own arithmetic."""
    rng = np.random.default_rng(7)
    wavelengths = [450.0, 550.0, 670.0, 800.0]
    checked = 0
    while checked < 100:
        node = _random_expression(rng, 5, wavelengths)
        text = ex.serialize(node)
        values = {nm: float(rng.uniform(0.05, 0.95)) for nm in wavelengths}
        try:
            oracle = eval_formula_text(text, values)
        except ZeroDivisionError:
            continue
        ours = ex.evaluate(node, values)
        assert ours == pytest.approx(oracle, rel=1e-12), text
        checked += 1


def test_random_expressions_round_trip():
    rng = np.random.default_rng(11)
    wavelengths = [450.0, 550.0, 670.0, 800.0]
    for _ in range(200):
        node = _random_expression(rng, 5, wavelengths)
        text = ex.serialize(node)
        assert ex.parse_expression(text) == node, text


@given(st.integers(min_value=400, max_value=999))
def test_band_terminal_round_trip(nm):
    defn = parse_index_expression(f"R{nm}")
    assert defn.wavelengths_used == (float(nm),)
    assert defn.text() == f"R{nm}"


@settings(max_examples=50)
@given(
    st.floats(min_value=0.01, max_value=0.99, allow_nan=False),
    st.floats(min_value=0.01, max_value=0.99, allow_nan=False),
)
def test_normalized_difference_bounded(a, b):
    defn = parse_index_expression("(R800 - R670) / (R800 + R670)")
    value = ex.evaluate(defn.expression, {800.0: a, 670.0: b})
    assert -1.0 <= value <= 1.0
