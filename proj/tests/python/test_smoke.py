"""Smoke tests for the python bindings."""

import math
import os

import pytest

import abgrav

SCENARIOS = os.environ.get("ABGRAV_SCENARIOS", "")


def read_scenario(name):
    path = os.path.join(SCENARIOS, name)
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def test_analytic_closed_forms():
    assert abgrav.elevator_phase(2.0, 0.0, 3.0) == pytest.approx(6.0)
    assert abgrav.newtonian_phase(1.0, 2.0, 10.0, 1e-3) == pytest.approx(-5e-3)
    assert abgrav.redshift_factor(0.0, 1.0, "exact") == 1.0
    k = abgrav.Constants()
    k.c = 1.0
    assert abgrav.redshift_factor(0.05, 1.0, "exact", k) == pytest.approx(
        math.sqrt(0.9), abs=1e-15
    )
    # p = 0 weak-field proper-time phase reduces to the Newtonian value.
    assert abgrav.proper_time_route_phase(
        1.0, 2.0, 10.0, 1e-3
    ) == pytest.approx(abgrav.newtonian_phase(1.0, 2.0, 10.0, 1e-3), abs=1e-15)


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        abgrav.newtonian_phase(-1.0, 2.0, 10.0, 1e-3)
    with pytest.raises(ValueError):
        abgrav.run_scenario("bogus_key = 1\n")


def test_wrap_to_pi():
    assert abgrav.wrap_to_pi(3 * math.pi) == pytest.approx(math.pi)
    assert abgrav.wrap_to_pi(-0.25) == pytest.approx(-0.25)


@pytest.mark.skipif(not SCENARIOS, reason="ABGRAV_SCENARIOS not set")
def test_run_tube_scenario():
    result = abgrav.run_scenario(read_scenario("tube.cfg"))
    assert result["numeric_phase"] == pytest.approx(1.0, abs=1e-9)
    assert result["analytic_phase"] == pytest.approx(1.0, abs=1e-12)
    assert abs(result["residual"]) < 1e-9
    assert result["norm_drift"] < 1e-12
    assert len(result["times"]) == len(result["dphi"])
    # The echoed scenario is itself a runnable config.
    again = abgrav.run_scenario(result["scenario"])
    assert again["numeric_phase"] == result["numeric_phase"]


@pytest.mark.skipif(not SCENARIOS, reason="ABGRAV_SCENARIOS not set")
def test_sweep_rows_in_input_order():
    rows = abgrav.sweep(
        read_scenario("newtonian.cfg"), "dwell", [2.0, 1.0], workers=2
    )
    assert [row["value"] for row in rows] == [2.0, 1.0]
    for row in rows:
        assert row["numeric_phase"] == pytest.approx(
            row["analytic_phase"], abs=1e-9
        )
