"""Micropolar thin-plate statics, dynamics and dispersion.

Materials and run configurations are plain dicts with the same keys as the
JSON files read by the command-line tool. A config may name its material file
relative to ``base_dir``.
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping

import numpy as np

from . import _core
from ._core import ConfigError, DomainError, SolverError, FIELD_NAMES, K4_STAR, K4_STAR_PROFILE

__all__ = [
    "ConfigError",
    "DomainError",
    "SolverError",
    "FIELD_NAMES",
    "K4_STAR",
    "K4_STAR_PROFILE",
    "load_config",
    "validate_material",
    "technical_constants",
    "stress_3d",
    "strain_3d",
    "plate_stress",
    "plate_strain",
    "plate_energy",
    "branches",
    "cutoffs",
    "static_solve",
    "simulate",
    "verify",
]

__version__ = "0.1.0"

_NO_LOADS = np.zeros(4)


def _dump(obj: Mapping[str, Any]) -> str:
    return json.dumps(obj)


def load_config(path: str | os.PathLike) -> tuple[dict, str]:
    """Reads a JSON run configuration; returns (config, base_dir)."""
    with open(path, encoding="utf-8") as f:
        return json.load(f), os.path.dirname(os.path.abspath(path))


def validate_material(material: Mapping[str, Any]) -> list[str]:
    """Violated admissibility conditions; empty when admissible."""
    return _core.validate_material(_dump(material))


def technical_constants(material: Mapping[str, Any], h: float, shear: str = "reissner") -> dict:
    return _core.technical_constants(_dump(material), h, shear)


def stress_3d(material, gamma, chi):
    """(sigma, couple stress) from (strain, torsion); entry (j, i) holds the ji component."""
    return _core.stress_3d(_dump(material), np.asarray(gamma, float), np.asarray(chi, float))


def strain_3d(material, sigma, mu_c):
    return _core.strain_3d(_dump(material), np.asarray(sigma, float), np.asarray(mu_c, float))


def plate_stress(material, h, strain, loads=_NO_LOADS):
    """20 plate resultants from 20 plate strains; loads = (p, sigma0, v, t)."""
    return _core.plate_stress(_dump(material), h, np.asarray(strain, float), np.asarray(loads, float))


def plate_strain(material, h, stress, loads=_NO_LOADS, div_qs=0.0):
    return _core.plate_strain(_dump(material), h, np.asarray(stress, float), np.asarray(loads, float), div_qs)


def plate_energy(material, h, stress, loads=_NO_LOADS, div_qs=0.0) -> float:
    return _core.plate_energy(_dump(material), h, np.asarray(stress, float), np.asarray(loads, float), div_qs)


def branches(config, k1: float, k2: float = 0.0, base_dir: str = ".") -> dict:
    """Flexural (6) and extensional (3) angular frequencies at wavevector (k1, k2)."""
    return _core.branches(_dump(config), base_dir, k1, k2)


def cutoffs(config, base_dir: str = ".") -> dict:
    return _core.cutoffs(_dump(config), base_dir)


def static_solve(config, base_dir: str = ".") -> dict:
    """Static solution; ``fields`` has shape (ny, nx, 9) in FIELD_NAMES order."""
    return _core.static_solve(_dump(config), base_dir)


def simulate(config, base_dir: str = ".") -> dict:
    """Leapfrog run; ``energy`` columns are t, kinetic, strain, external_work, total."""
    return _core.simulate(_dump(config), base_dir)


def verify(seed: int = 1, threads: int = 1) -> list[dict]:
    return _core.verify(seed, threads)
