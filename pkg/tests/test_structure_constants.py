import math
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sunlie.structure_constants import (
    MAX_MAGNITUDE,
    ConstantTable,
    build_d_table,
    build_f_table,
)

SQRT3 = math.sqrt(3.0)

# su(3) canonical values, frozen from the trace evaluation of the Gell-Mann
# basis (and identical to the textbook tables).
GELLMANN_F = {
    (1, 2, 3): 1.0,
    (1, 4, 7): 0.5,
    (1, 5, 6): -0.5,
    (2, 4, 6): 0.5,
    (2, 5, 7): 0.5,
    (3, 4, 5): 0.5,
    (3, 6, 7): -0.5,
    (4, 5, 8): SQRT3 / 2.0,
    (6, 7, 8): SQRT3 / 2.0,
}
GELLMANN_D = {
    (1, 1, 8): 1.0 / SQRT3,
    (2, 2, 8): 1.0 / SQRT3,
    (3, 3, 8): 1.0 / SQRT3,
    (8, 8, 8): -1.0 / SQRT3,
    (1, 4, 6): 0.5,
    (1, 5, 7): 0.5,
    (2, 4, 7): -0.5,
    (2, 5, 6): 0.5,
    (3, 4, 4): 0.5,
    (3, 5, 5): 0.5,
    (3, 6, 6): -0.5,
    (3, 7, 7): -0.5,
    (4, 4, 8): -1.0 / (2.0 * SQRT3),
    (5, 5, 8): -1.0 / (2.0 * SQRT3),
    (6, 6, 8): -1.0 / (2.0 * SQRT3),
    (7, 7, 8): -1.0 / (2.0 * SQRT3),
}


def f_count(n_dim):
    """Canonical triple count of the f table, derived from the family ranges."""
    return 5 * math.comb(n_dim, 3) + math.comb(n_dim - 1, 2) + math.comb(n_dim, 2)


def d_count(n_dim):
    """Canonical triple count of the d table, derived from the family ranges."""
    return (
        8 * math.comb(n_dim, 3)
        + 3 * math.comb(n_dim - 1, 2)
        + 2 * math.comb(n_dim, 2)
        + n_dim
        - 4
    )


def test_su2_f_is_levi_civita():
    table = build_f_table(2)
    assert table.as_dict() == {(1, 2, 3): 1.0}
    for i, j, k in permutations((1, 2, 3)):
        perm = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1}.get((i, j, k), -1)
        assert table.lookup(i, j, k) == perm


def test_su2_d_table_empty():
    assert len(build_d_table(2)) == 0


def test_su3_f_values():
    table = build_f_table(3)
    assert set(table.as_dict()) == set(GELLMANN_F)
    for key, expected in GELLMANN_F.items():
        assert abs(table.as_dict()[key] - expected) <= 1e-15


def test_su3_d_values():
    table = build_d_table(3)
    assert set(table.as_dict()) == set(GELLMANN_D)
    for key, expected in GELLMANN_D.items():
        assert abs(table.as_dict()[key] - expected) <= 1e-15


@pytest.mark.parametrize("n_dim", [2, 3, 4, 5, 6, 8, 12, 20, 64])
def test_counts_match_closed_form(n_dim):
    assert len(build_f_table(n_dim)) == f_count(n_dim)
    assert len(build_d_table(n_dim)) == d_count(n_dim)


class TestLookup:
    def test_sign_flips_on_transposition(self):
        table = build_f_table(2)
        assert table.lookup(2, 1, 3) == -1.0

    def test_symmetric_lookup_any_order(self):
        table = build_d_table(3)
        assert table.lookup(8, 1, 1) == pytest.approx(1.0 / SQRT3, abs=1e-15)

    def test_repeated_index_is_zero_for_f(self):
        table = build_f_table(3)
        assert table.lookup(3, 3, 1) == 0.0
        assert table.lookup(1, 1, 2) == 0.0

    def test_absent_triple_is_zero(self):
        assert build_d_table(3).lookup(1, 2, 3) == 0.0

    @pytest.mark.parametrize("triple", [(0, 1, 2), (1, 2, 9), (-1, 1, 2)])
    def test_out_of_range_rejected(self, triple):
        table = build_f_table(3)
        with pytest.raises(ValueError, match="outside"):
            table.lookup(*triple)


@given(st.integers(min_value=2, max_value=7), st.data())
def test_permutation_parity_exact(n_dim, data):
    f = build_f_table(n_dim)
    d = build_d_table(n_dim)
    top = n_dim * n_dim - 1
    idx = st.integers(min_value=1, max_value=top)
    i, j, k = data.draw(idx), data.draw(idx), data.draw(idx)
    base_f = f.lookup(i, j, k)
    base_d = d.lookup(i, j, k)
    signs = (1.0, -1.0, -1.0, 1.0, 1.0, -1.0)
    for perm, sign in zip(permutations((i, j, k)), signs):
        assert f.lookup(*perm) == sign * base_f
        assert d.lookup(*perm) == base_d


@pytest.mark.parametrize("n_dim", [2, 3, 4, 5, 6])
def test_jacobi_identity(n_dim):
    table = build_f_table(n_dim)
    top = n_dim * n_dim - 1
    rng = np.random.default_rng(7)
    for _ in range(200):
        i, j, k, l = rng.integers(1, top + 1, size=4)
        residual = sum(
            table.lookup(i, j, m) * table.lookup(m, k, l)
            + table.lookup(j, k, m) * table.lookup(m, i, l)
            + table.lookup(k, i, m) * table.lookup(m, j, l)
            for m in range(1, top + 1)
        )
        assert abs(residual) <= 1e-12


@pytest.mark.parametrize("n_dim", [2, 3, 5])
def test_cartan_generators_commute(n_dim):
    table = build_f_table(n_dim)
    top = n_dim * n_dim - 1
    cartan = [n * n - 1 for n in range(2, n_dim + 1)]
    for a in cartan:
        for b in cartan:
            for k in range(1, top + 1):
                assert table.lookup(a, b, k) == 0.0


@pytest.mark.parametrize("build, strict", [(build_f_table, True), (build_d_table, False)])
@pytest.mark.parametrize("n_dim", [3, 6, 9])
def test_canonical_storage_invariants(build, strict, n_dim):
    table = build(n_dim)
    top = n_dim * n_dim - 1
    for t in table.triples():
        assert 1 <= t.i <= top and t.k <= top
        assert (t.i < t.j < t.k) if strict else (t.i <= t.j <= t.k)
        assert t.value != 0.0
        assert abs(t.value) <= MAX_MAGNITUDE + 1e-12


def test_duplicate_insertion_is_hard_error():
    with pytest.raises(RuntimeError, match="duplicate"):
        ConstantTable(3, "f", {})  # construction itself is fine
        from sunlie.structure_constants import _insert

        entries = {(1, 2, 3): 1.0}
        _insert(entries, (1, 2, 3), 0.5)


def test_stats_are_deterministic_and_order_independent():
    a = build_f_table(4)
    b = build_f_table(4)
    assert a.stats() == b.stats()
    count, checksum = a.stats()
    assert count == len(a)
    assert len(checksum) == 16
    int(checksum, 16)  # valid hex
    # different table, different digest
    assert build_d_table(4).stats()[1] != checksum


def test_tables_of_different_n_share_prefix():
    # su(N) constants embed unchanged in su(N+1): same value on same triple.
    small = build_f_table(4).as_dict()
    large = build_f_table(5).as_dict()
    for key, value in small.items():
        assert large[key] == value
