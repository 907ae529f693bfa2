"""Compensated (error-tracking) summation for partial-sum sequences.

The condition sums evaluated in this package mix term magnitudes across
many orders; plain left-to-right accumulation can lose low-order bits that
the 1e-12 relative slacks elsewhere rely on.  All running partial sums are
therefore produced with a Neumaier-compensated accumulator.
"""

from __future__ import annotations

import math

import numpy as np


def compensated_cumsum(terms: np.ndarray) -> np.ndarray:
    """Running partial sums of ``terms`` with Neumaier compensation.

    Returns an array ``out`` with ``out[m] = terms[0] + ... + terms[m]``,
    each prefix carrying the accumulated correction term.
    """
    terms = np.asarray(terms, dtype=float)
    out = np.empty_like(terms)
    total = 0.0
    comp = 0.0
    for i, x in enumerate(terms):
        s = total + x
        if abs(total) >= abs(x):
            comp += (total - s) + x
        else:
            comp += (x - s) + total
        total = s
        out[i] = total + comp
    return out


def compensated_sum(terms) -> float:
    """Accurate one-shot sum (math.fsum on the flattened input)."""
    return math.fsum(np.asarray(terms, dtype=float).ravel())
