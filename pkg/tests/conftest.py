import numpy as np


def random_hermitian(rng, n_dim):
    """Hermitian matrix with Gaussian entries, rescaled to unit spectral radius."""
    a = rng.normal(size=(n_dim, n_dim)) + 1j * rng.normal(size=(n_dim, n_dim))
    h = 0.5 * (a + a.conj().T)
    return h / np.max(np.abs(np.linalg.eigvalsh(h)))


def random_state(rng, n_dim):
    """Normalized complex amplitude vector."""
    c = rng.normal(size=n_dim) + 1j * rng.normal(size=n_dim)
    return c / np.linalg.norm(c)
