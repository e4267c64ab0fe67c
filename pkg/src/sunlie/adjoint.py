"""Adjoint representation assembled from the anti-symmetric constant table.

The matrices T_i with entries [T_i]_jk = -i f_ijk represent the algebra on
itself: [T_i, T_j] = i sum_k f_ijk T_k.  Because f is real and totally
anti-symmetric, every T_i is Hermitian, purely imaginary off the diagonal,
zero on it, and traceless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .structure_constants import F_KIND, ConstantTable

# Exhaustive pair verification is the default up to this N; beyond it the
# check samples pairs instead.
EXHAUSTIVE_MAX_N = 6
DEFAULT_SAMPLE_PAIRS = 200


@dataclass(frozen=True)
class AdjointReport:
    """Outcome of the representation-property check [T_i,T_j] = i f_ijk T_k."""

    n_dim: int
    pairs_checked: int
    exhaustive: bool
    max_deviation: float
    tolerance: float
    passed: bool


def _require_f(table: ConstantTable) -> None:
    if table.kind != F_KIND:
        raise ValueError(f"adjoint construction needs an '{F_KIND}' table, got '{table.kind}'")


def adjoint_stack(table: ConstantTable) -> np.ndarray:
    """All adjoint matrices as one (d, d, d) complex array, d = N**2 - 1."""
    _require_f(table)
    d = table.n_dim * table.n_dim - 1
    stack = np.zeros((d, d, d), dtype=np.complex128)
    for triple in table.triples():
        a, b, c = triple.i - 1, triple.j - 1, triple.k - 1
        v = -1j * triple.value
        # All six permutations of the canonical triple, with f's sign parity.
        stack[a, b, c] = v
        stack[a, c, b] = -v
        stack[b, c, a] = v
        stack[b, a, c] = -v
        stack[c, a, b] = v
        stack[c, b, a] = -v
    return stack


def adjoint_matrix(table: ConstantTable, i: int) -> np.ndarray:
    """The (N**2-1) x (N**2-1) matrix T_i with [T_i]_jk = -i f_ijk."""
    _require_f(table)
    d = table.n_dim * table.n_dim - 1
    if not 1 <= i <= d:
        raise ValueError(f"index {i} outside 1..{d} for N={table.n_dim}")
    out = np.zeros((d, d), dtype=np.complex128)
    for triple in table.triples():
        if i not in (triple.i, triple.j, triple.k):
            continue
        v = -1j * triple.value
        if i == triple.i:
            j, k = triple.j - 1, triple.k - 1
        elif i == triple.j:
            j, k = triple.k - 1, triple.i - 1  # cyclic: f_jki = f_ijk
        else:
            j, k = triple.i - 1, triple.j - 1
        out[j, k] = v
        out[k, j] = -v
    return out


def verify_adjoint_commutators(
    table: ConstantTable,
    *,
    sample: int | None = None,
    seed: int = 42,
    tol: float = 1e-12,
) -> AdjointReport:
    """Check [T_i, T_j] = i sum_k f_ijk T_k over index pairs.

    With ``sample=None`` all pairs are checked for N <= 6 and 200 seeded
    random pairs beyond that; pass an explicit count to override.  Returns a
    report rather than raising: max deviation is a result, not an error.
    """
    stack = adjoint_stack(table)
    d = stack.shape[0]

    all_pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    exhaustive = sample is None and table.n_dim <= EXHAUSTIVE_MAX_N
    if exhaustive:
        pairs = all_pairs
    else:
        count = min(DEFAULT_SAMPLE_PAIRS if sample is None else sample, len(all_pairs))
        rng = np.random.default_rng(seed)
        chosen = rng.choice(len(all_pairs), size=count, replace=False)
        pairs = [all_pairs[idx] for idx in chosen]

    max_dev = 0.0
    for i, j in pairs:
        comm = stack[i] @ stack[j] - stack[j] @ stack[i]
        f_row = (1j * stack[i][j]).real  # f_ijk for all k
        rhs = 1j * np.tensordot(f_row, stack, axes=(0, 0))
        dev = float(np.abs(comm - rhs).max())
        if dev > max_dev:
            max_dev = dev

    return AdjointReport(
        n_dim=table.n_dim,
        pairs_checked=len(pairs),
        exhaustive=exhaustive,
        max_deviation=max_dev,
        tolerance=tol,
        passed=max_dev <= tol,
    )
