"""Independent brute-force references.

Nothing here imports the package under test: states are written out ket by
ket, traces and transposes are explicit index loops, and spectra come from
LAPACK via numpy.
"""

import itertools
import math

import numpy as np


def ket_index(bits):
    idx = 0
    for b in bits:
        idx = 2 * idx + b
    return idx


def five_mode_state(r_b, r_c, b_accelerated=True):
    """GHZ written in modes (A, B_I, B_II, C_I, C_II), term by term."""
    cb, sb = (math.cos(r_b), math.sin(r_b)) if b_accelerated else (1.0, 0.0)
    cc, sc = math.cos(r_c), math.sin(r_c)
    terms = {
        (0, 0, 0, 0, 0): cb * cc,
        (0, 0, 0, 1, 1): cb * sc,
        (0, 1, 1, 0, 0): sb * cc,
        (0, 1, 1, 1, 1): sb * sc,
        (1, 1, 0, 1, 0): 1.0,
    }
    psi = np.zeros(32, dtype=complex)
    for bits, amp in terms.items():
        psi[ket_index(bits)] += amp / math.sqrt(2)
    return psi


def trace_region_two(psi):
    """rho on (A, B_I, C_I) by summing over the B_II and C_II digits."""
    rho = np.zeros((8, 8), dtype=complex)
    for row in itertools.product((0, 1), repeat=3):
        for col in itertools.product((0, 1), repeat=3):
            total = 0j
            for b2, c2 in itertools.product((0, 1), repeat=2):
                i = ket_index((row[0], row[1], b2, row[2], c2))
                j = ket_index((col[0], col[1], b2, col[2], c2))
                total += psi[i] * np.conj(psi[j])
            rho[ket_index(row), ket_index(col)] = total
    return rho


def transpose_qubit(rho, n, k):
    out = np.zeros_like(rho)
    for row in itertools.product((0, 1), repeat=n):
        for col in itertools.product((0, 1), repeat=n):
            r, c = list(row), list(col)
            r[k], c[k] = col[k], row[k]
            out[ket_index(r), ket_index(c)] = rho[ket_index(row), ket_index(col)]
    return out


def negativity(rho, n, k):
    return float(np.sum(np.abs(np.linalg.eigvalsh(transpose_qubit(rho, n, k))))) - 1.0


def one_tangles(r_b, r_c, b_accelerated=True):
    rho = trace_region_two(five_mode_state(r_b, r_c, b_accelerated))
    return [negativity(rho, 3, k) for k in range(3)]
