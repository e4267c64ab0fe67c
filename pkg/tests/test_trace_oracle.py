import math
from itertools import combinations_with_replacement

import numpy as np
import pytest

from sunlie.generators import AlgebraConfig
from sunlie.structure_constants import build_d_table, build_f_table
from sunlie.trace_oracle import (
    CEILING_ENV,
    OracleCostError,
    d_trace,
    estimate_cost,
    f_trace,
    full_oracle_table,
    resolve_ceiling,
)


def test_su2_levi_civita():
    cfg = AlgebraConfig(2)
    assert f_trace(cfg, 1, 2, 3) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("i,k", [(1, 2), (3, 3), (2, 1)])
def test_repeated_first_indices_vanish(i, k):
    cfg = AlgebraConfig(3)
    assert f_trace(cfg, i, i, k) == pytest.approx(0.0, abs=1e-14)


def test_su3_spot_values():
    cfg = AlgebraConfig(3)
    assert f_trace(cfg, 4, 5, 8) == pytest.approx(math.sqrt(3) / 2, abs=1e-14)
    assert d_trace(cfg, 8, 8, 8) == pytest.approx(-1 / math.sqrt(3), abs=1e-14)
    assert d_trace(cfg, 1, 1, 8) == pytest.approx(1 / math.sqrt(3), abs=1e-14)


def test_su2_d_values_all_vanish():
    cfg = AlgebraConfig(2)
    for i, j, k in combinations_with_replacement((1, 2, 3), 3):
        assert d_trace(cfg, i, j, k) == pytest.approx(0.0, abs=1e-14)


def test_full_table_su2():
    table = full_oracle_table(AlgebraConfig(2), "f")
    assert table.as_dict() == pytest.approx({(1, 2, 3): 1.0}, abs=1e-14)


def test_full_table_su3_counts():
    cfg = AlgebraConfig(3)
    assert len(full_oracle_table(cfg, "f")) == 9
    assert len(full_oracle_table(cfg, "d")) == 16


@pytest.mark.parametrize("n_dim", [3, 4, 5])
@pytest.mark.parametrize("kind, build", [("f", build_f_table), ("d", build_d_table)])
def test_oracle_agrees_with_closed_form(n_dim, kind, build):
    oracle = full_oracle_table(AlgebraConfig(n_dim), kind).as_dict()
    closed = build(n_dim).as_dict()
    assert oracle.keys() == closed.keys()
    for key in closed:
        assert abs(oracle[key] - closed[key]) <= 1e-12


def test_hbar_independence():
    for hbar_a, hbar_b in ((1.0, 2.0),):
        for kind in ("f", "d"):
            a = full_oracle_table(AlgebraConfig(3, hbar_a), kind).as_dict()
            b = full_oracle_table(AlgebraConfig(3, hbar_b), kind).as_dict()
            assert a.keys() == b.keys()
            for key in a:
                assert abs(a[key] - b[key]) <= 1e-12


def test_index_symmetries_independent_of_closed_form():
    # Hermiticity of the basis forces the trace expressions themselves to be
    # anti-symmetric (f) / symmetric (d) in their first two indices.
    cfg = AlgebraConfig(4)
    rng = np.random.default_rng(11)
    top = cfg.dim
    for _ in range(25):
        i, j, k = (int(x) for x in rng.integers(1, top + 1, size=3))
        assert f_trace(cfg, i, j, k) == pytest.approx(-f_trace(cfg, j, i, k), abs=1e-13)
        assert f_trace(cfg, i, j, k) == pytest.approx(f_trace(cfg, j, k, i), abs=1e-13)
        assert d_trace(cfg, i, j, k) == pytest.approx(d_trace(cfg, j, i, k), abs=1e-13)
        assert d_trace(cfg, i, j, k) == pytest.approx(d_trace(cfg, k, j, i), abs=1e-13)


class TestCeiling:
    def test_default_refusal_above_eight(self):
        with pytest.raises(OracleCostError, match="refusing"):
            full_oracle_table(AlgebraConfig(9), "f")

    def test_refusal_message_carries_estimate(self):
        with pytest.raises(OracleCostError, match="trace evaluations"):
            full_oracle_table(AlgebraConfig(64), "d")

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(CEILING_ENV, "3")
        with pytest.raises(OracleCostError):
            full_oracle_table(AlgebraConfig(4), "f")
        monkeypatch.setenv(CEILING_ENV, "4")
        assert len(full_oracle_table(AlgebraConfig(4), "f")) == 29

    def test_explicit_argument_wins(self, monkeypatch):
        monkeypatch.setenv(CEILING_ENV, "2")
        assert len(full_oracle_table(AlgebraConfig(3), "f", ceiling=3)) == 9

    def test_bad_env_value(self, monkeypatch):
        monkeypatch.setenv(CEILING_ENV, "many")
        with pytest.raises(ValueError, match=CEILING_ENV):
            resolve_ceiling()


def test_estimate_cost_counts():
    d = 3 * 3 - 1
    assert estimate_cost(3, "f")[0] == math.comb(d, 3)
    assert estimate_cost(3, "d")[0] == math.comb(d + 2, 3)


def test_unknown_kind_rejected():
    with pytest.raises(ValueError, match="kind"):
        full_oracle_table(AlgebraConfig(3), "g")
