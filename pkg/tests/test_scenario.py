import math

import pytest

from app.errors import ScenarioError, ScenarioValidationError
from app.formula_parser import parse_judgement
from app.quantum import COMPUTATIONAL_BASIS, make_basis
from app.scenario import (
    QubitSpec,
    Scenario,
    Step,
    parse_expression,
    parse_real_expression,
    parse_scenario,
    render_scenario,
    validate_scenario,
)


def test_smoke_parse():
    scenario = parse_scenario("qubit 0.6 0.8i\nbasis 0 0 A\ninsider-basic\n")
    assert scenario.qubit.amplitudes() == (0.6, 0.8j)
    assert scenario.basis == COMPUTATIONAL_BASIS
    assert scenario.steps == (Step("insider-basic"),)
    assert scenario.steps[0].line == 3


def test_comments_defaults_and_phases():
    text = """
    # комментарий
    qubit plus   # пресет
    insider-liar pi/2 -pi/4
    derive A^ (+) A |-
    classical-status A & A^
    """
    scenario = parse_scenario(text)
    assert scenario.basis == COMPUTATIONAL_BASIS
    assert scenario.qubit.amplitudes() == (1, 1)
    liar, derive, status = scenario.steps
    assert liar.phases == pytest.approx((math.pi / 2, -math.pi / 4))
    assert derive.judgement == parse_judgement("A^ (+) A |-")
    assert status.judgement == parse_judgement("|- A & A^")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0.6", 0.6),
        ("0.8i", 0.8j),
        ("-i", -1j),
        ("3+4i", 3 + 4j),
        ("sqrt(0.3)", math.sqrt(0.3)),
        ("1/sqrt(2)", 1 / math.sqrt(2)),
        ("exp(i*pi/2)", 1j),
        ("2*(1-0.5i)", 2 - 1j),
        ("1e-3", 0.001),
    ],
)
def test_expressions(text, expected):
    assert parse_expression(text) == pytest.approx(expected)


@pytest.mark.parametrize("text", ["1/0", "sqrt(", "0.5x", "pi pi"])
def test_bad_expressions(text):
    with pytest.raises(ValueError):
        parse_expression(text)


def test_angles_must_be_real():
    assert parse_real_expression("pi/4") == pytest.approx(math.pi / 4)
    with pytest.raises(ValueError):
        parse_real_expression("i")


def test_consumed_qubit_reuse_is_rejected():
    text = "qubit 0.6 0.8\noutsider-measure\ninsider-basic\n"
    with pytest.raises(ScenarioValidationError, match="no-cloning:") as info:
        parse_scenario(text)
    assert info.value.line == 3


def test_second_standard_measurement_is_rejected():
    text = "qubit 0.6 0.8\noutsider-measure\nderive |- A\noutsider-not-measure\n"
    with pytest.raises(ScenarioValidationError, match="no-cloning:") as info:
        parse_scenario(text)
    assert info.value.line == 4


def test_logic_steps_after_consumption_are_allowed():
    scenario = parse_scenario("qubit 0.6 0.8\noutsider-measure\nderive |- A\nclassical-status |- A\n")
    assert len(scenario.steps) == 3


def test_clone_is_always_rejected():
    with pytest.raises(ScenarioValidationError, match="no-cloning:"):
        parse_scenario("qubit 0.6 0.8\nclone\n")


def test_missing_qubit():
    with pytest.raises(ScenarioError):
        parse_scenario("basis 0 0 A\ninsider-basic\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("qubit 0.6 0.8\nteleport\n", 2),
        ("qubit 0.6 oops\n", 1),
        ("qubit 0 0\n", 1),
        ("qubit 1 0\nbasis 0 0\n", 2),
        ("qubit 1 0\nderive |- A &\n", 2),
        ("qubit 1 0\nseed -1\n", 2),
        ("qubit 1 0\ninsider-basic 0.1\n", 2),
        ("qubit 1 0\nqubit 0 1\n", 2),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(ScenarioError) as info:
        parse_scenario(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"строка {line}: ")


def test_validate_rejects_non_positive_trials():
    with pytest.raises(ScenarioValidationError):
        validate_scenario(Scenario(qubit=QubitSpec(1, 0), trials=0))


def test_render_parses_back():
    scenario = Scenario(
        qubit=QubitSpec(math.sqrt(0.3), -0.2 + math.sqrt(0.66) * 1j),
        basis=make_basis(math.pi / 3, 1.25, "Spin"),
        steps=(
            Step("insider-basic", phases=(math.pi / 7, -0.5)),
            Step("insider-liar"),
            Step("derive", judgement=parse_judgement("Spin^ (+) Spin |-")),
            Step("classical-status", judgement=parse_judgement("|- Spin & Spin^")),
            Step("outsider-measure"),
        ),
        seed=2**64 - 1,
        trials=3,
    )
    assert parse_scenario(render_scenario(scenario)) == scenario


def test_bundled_scenarios_parse_back(scenario_dir):
    paths = sorted(scenario_dir.glob("*.scn"))
    assert paths
    for path in paths:
        scenario = parse_scenario(path.read_text(encoding="utf-8"))
        assert parse_scenario(render_scenario(scenario)) == scenario
