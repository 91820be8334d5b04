"""Pytest configuration and fixtures."""

import pytest
from pathlib import Path

from bialgebra import semidirect
from catalog import catalog_algebra
from lie3 import AlgebraSpec, LinearMap


B1_FILE = """\
algebra b1
dim 4
bracket 2 3 4 -> 1:1
"""

B1_WITNESS_FILE = """\
derivation D
dim 4
diag 1 1 1 -1
"""


@pytest.fixture
def b1() -> AlgebraSpec:
    """The 4-dim algebra [x2,x3,x4] = x1."""
    return catalog_algebra("4-b1")


@pytest.fixture
def b1_witness() -> LinearMap:
    """diag(1,1,1,-1), the split x1,x2,x3 in A_1 and x4 in A_-1."""
    return LinearMap.diagonal([1, 1, 1, -1])


@pytest.fixture
def b1_double(b1) -> AlgebraSpec:
    """b1 ⋉ b1* in dim 8."""
    return semidirect(b1)


@pytest.fixture
def e1() -> AlgebraSpec:
    """The 4-dim algebra with four brackets."""
    return catalog_algebra("4-e1")


@pytest.fixture
def algebra_file(tmp_path) -> Path:
    """b1 written as an algebra file."""
    path = tmp_path / "b1.alg"
    path.write_text(B1_FILE, encoding="utf-8")
    return path


@pytest.fixture
def derivation_file(tmp_path) -> Path:
    """diag(1,1,1,-1) written as a derivation file."""
    path = tmp_path / "d.der"
    path.write_text(B1_WITNESS_FILE, encoding="utf-8")
    return path


@pytest.fixture
def settings_path(tmp_path, monkeypatch) -> Path:
    """Point settings at a scratch file."""
    path = tmp_path / "settings.toml"
    monkeypatch.setenv("LIE3_SETTINGS", str(path))
    return path
