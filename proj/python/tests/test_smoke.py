import math
import os

import numpy as np
import pytest

import cosserat_plate as cp

CONFIGS = os.path.join(os.path.dirname(__file__), "..", "..", "configs")

GENERIC = {
    "lambda": 1.5, "mu": 1.0, "alpha": 0.2, "beta": 1e-3, "gamma": 2.5e-3,
    "epsilon": 3.9e-3, "rho": 1.0, "J": [2e-3, 2e-3, 2e-3],
}


def small_config(**extra):
    cfg = {"material": GENERIC, "grid": {"nx": 9, "ny": 9}}
    cfg.update(extra)
    return cfg


def test_validate_material():
    assert cp.validate_material(GENERIC) == []
    bad = dict(GENERIC, alpha=0.0)
    assert any("α>0" in v for v in cp.validate_material(bad))


def test_unit_lame_constants():
    tc = cp.technical_constants(dict(GENERIC, **{"lambda": 1.0}), 1.0)
    assert tc["nu"] == pytest.approx(0.25, abs=1e-15)
    assert tc["D"] == pytest.approx(2.0 / 9.0, rel=1e-14)


def test_3d_round_trip():
    rng = np.random.default_rng(3)
    g, c = rng.standard_normal((3, 3)), rng.standard_normal((3, 3))
    s, m = cp.stress_3d(GENERIC, g, c)
    g2, c2 = cp.strain_3d(GENERIC, s, m)
    np.testing.assert_allclose(g2, g, atol=1e-12)
    np.testing.assert_allclose(c2, c, atol=1e-12)


def test_plate_round_trip_and_energy():
    rng = np.random.default_rng(5)
    e = rng.standard_normal(20)
    s = cp.plate_stress(GENERIC, 0.1, e)
    np.testing.assert_allclose(cp.plate_strain(GENERIC, 0.1, s), e, rtol=1e-10, atol=1e-10)
    assert cp.plate_energy(GENERIC, 0.1, s) == pytest.approx(0.5 * s @ e, rel=1e-10)


def test_branches_and_cutoffs():
    b = cp.branches(small_config(), 0.0)
    assert len(b["flexural"]) == 6 and len(b["extensional"]) == 3
    assert b["flexural"][0] == pytest.approx(0.0, abs=1e-6)
    assert cp.cutoffs(small_config())["flexural_zero_fields"] == ["W"]


def test_static_solve_uniform_pressure():
    cfg = small_config(loads={"p": {"type": "constant", "value": 1.0}})
    r = cp.static_solve(cfg)
    assert r["fields"].shape == (9, 9, 9)
    w = r["fields"][:, :, cp.FIELD_NAMES.index("W")]
    assert w[4, 4] == w.max() and w[4, 4] > 0
    assert np.all(w[0, :] == 0.0)


def test_simulate_energy_log():
    cfg = small_config(
        time={"t_final": 0.2, "cadence": 0},
        initial={"velocity": {"W": {"type": "sinusoidal", "amplitude": 1.0, "m": 1, "n": 1}}},
    )
    r = cp.simulate(cfg)
    assert r["energy"].shape[1] == 5
    assert r["energy_drift"] < 1e-2
    assert r["steps"] == pytest.approx(0.2 / r["dt"], abs=1)


def test_config_file_with_relative_material():
    cfg, base = cp.load_config(os.path.join(CONFIGS, "static_clamped.json"))
    cfg["grid"] = {"nx": 9, "ny": 9}
    assert cp.static_solve(cfg, base)["residual"] < 1e-9


def test_config_error_is_value_error():
    with pytest.raises(ValueError):
        cp.static_solve(small_config(grid={"nx": 3, "ny": 9}))
