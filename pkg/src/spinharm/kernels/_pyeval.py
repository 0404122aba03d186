"""Pure numpy implementation of the batched evaluation kernels."""
import numpy as np


def poly_eval_batch(exps, coeffs, z1, z2):
    """Sum_t coeffs[t] * z1^a z2^b conj(z1)^c conj(z2)^d at every point.

    exps: (T, 4) int64; coeffs: (T,) complex128; z1, z2: (N,) complex128.
    """
    exps = np.asarray(exps, dtype=np.int64).reshape(-1, 4)
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    z1 = np.asarray(z1, dtype=np.complex128)
    z2 = np.asarray(z2, dtype=np.complex128)
    out = np.zeros(z1.shape, dtype=np.complex128)
    if exps.shape[0] == 0:
        return out
    base = (z1, z2, np.conj(z1), np.conj(z2))
    top = exps.max(axis=0)
    powers = []
    for k in range(4):
        table = np.empty((top[k] + 1,) + z1.shape, dtype=np.complex128)
        table[0] = 1.0
        for e in range(1, top[k] + 1):
            table[e] = table[e - 1] * base[k]
        powers.append(table)
    for (a, b, c, d), coef in zip(exps, coeffs):
        out += coef * powers[0][a] * powers[1][b] * powers[2][c] * powers[3][d]
    return out
