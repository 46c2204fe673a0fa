import math

import pytest

import stcap


def test_capacity_matches_reference_point():
    p = stcap.NetworkParams(lambda_l=0.01, lambda_e=0.001, alpha=4.0, r=1.0)
    c = stcap.OutageConstraints(sigma=0.3, epsilon=0.01)
    res = stcap.capacity(p, c)
    assert res.feasible
    assert res.tau == pytest.approx(0.0026078839577, rel=1e-9)
    assert res.rates.rate_s == pytest.approx(res.rates.rate_t - res.rates.rate_e)


def test_guard_zone_and_special_functions():
    p = stcap.NetworkParams()
    c = stcap.OutageConstraints(0.3, 0.01)
    assert stcap.coop_capacity(p, c, 3.0).tau == pytest.approx(0.021037283714, rel=1e-9)
    assert stcap.noncoop_capacity(p, c, 3.0).tau == pytest.approx(0.0189237737, rel=1e-7)
    assert stcap.interference_constant(4.0) == pytest.approx(math.pi / 2)
    assert stcap.lambert_w0(math.e) == pytest.approx(1.0)
    lo, hi = stcap.secrecy_outage_bounds(p, 40.125)
    assert lo <= hi


def test_optimize_returns_comparator():
    out = stcap.optimize("lambda_l", stcap.NetworkParams(), stcap.OutageConstraints(0.3, 0.01))
    assert out["argmax"] == pytest.approx(0.068, rel=0.1)
    assert out["optimal_lambda_asymptotic"] == pytest.approx(0.0633, rel=1e-2)


def test_monte_carlo_runs_and_is_deterministic():
    p = stcap.NetworkParams()
    cfg = stcap.MonteCarloConfig(trials=20000, seed=3, threads=1)
    a = stcap.estimate_connection_outage(p, 1.0, cfg)
    b = stcap.estimate_connection_outage(p, 1.0, cfg)
    assert a.events == b.events
    assert abs(a.p_hat - stcap.connection_outage(p, 1.0)) < 4 * a.std_err
    anyone, nearest = stcap.estimate_secrecy_outage(p, 40.125, cfg)
    assert nearest.events <= anyone.events
    g = stcap.estimate_guardzone_outages(
        p, stcap.GuardZoneConfig(3.0, stcap.Protocol.NonCooperative), 1.0, 40.125, cfg
    )
    assert 0.9 < g["active_fraction"].p_hat <= 1.0


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        stcap.capacity(stcap.NetworkParams(alpha=1.5), stcap.OutageConstraints())
    with pytest.raises(stcap.WindowTooSmall):
        stcap.estimate_connection_outage(
            stcap.NetworkParams(), 52.0, stcap.MonteCarloConfig(trials=10, window_radius=1.0)
        )
    with pytest.raises(RuntimeError):
        stcap.optimize("lambda_l", stcap.NetworkParams(), stcap.OutageConstraints(0.01, 0.01))
