"""Pure-numpy RK4 propagation kernel (fallback backend).

Evolves column states under i dy/dt = (diag(E) + g0 cos(w_j t) X) y, where
column j has its own modulation frequency w_j.  This one entry point covers
single trajectories (one column), matrix propagators (columns = basis
vectors, equal frequencies) and whole frequency sweeps (columns = sweep
points) with identical arithmetic.
"""

import numpy as np


def rk4_history(energies, coupling_op, g0, varpi, y0, t0, dt, n_samples, substeps=1):
    """Classic fixed-step RK4 with the Hamiltonian sampled at stage times.

    Parameters
    ----------
    energies : (dim,) float array, diagonal of the static Hamiltonian.
    coupling_op : (dim, dim) complex array, modulated coupling operator.
    g0, varpi : coupling amplitude and per-column modulation frequencies
        (varpi has shape (ncols,)).
    y0 : (dim, ncols) complex array of initial columns.
    t0, dt : start time and sample spacing (ns).
    n_samples : number of samples after the initial one.
    substeps : RK4 steps per sample interval.

    Returns
    -------
    (n_samples + 1, dim, ncols) complex array; entry 0 is y0.
    """
    E = np.asarray(energies, dtype=float)
    X = np.asarray(coupling_op, dtype=complex)
    w = np.asarray(varpi, dtype=float)
    y = np.array(y0, dtype=complex)
    if y.ndim != 2 or y.shape[0] != E.shape[0] or w.shape[0] != y.shape[1]:
        raise ValueError("inconsistent kernel argument shapes")

    out = np.empty((n_samples + 1,) + y.shape, dtype=complex)
    out[0] = y
    h = dt / substeps
    Ecol = E[:, None]

    def rhs(ts, state):
        g = g0 * np.cos(w * ts)
        return -1j * (Ecol * state + g * (X @ state))

    for k in range(n_samples):
        base = k * substeps
        for j in range(substeps):
            ts = t0 + (base + j) * h
            k1 = rhs(ts, y)
            k2 = rhs(ts + 0.5 * h, y + (0.5 * h) * k1)
            k3 = rhs(ts + 0.5 * h, y + (0.5 * h) * k2)
            k4 = rhs(ts + h, y + h * k3)
            y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[k + 1] = y
    return out
