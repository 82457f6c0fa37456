"""Shared helpers for the census kernels.

A fiber profile (multiset of factor degrees of a squarefree monic
polynomial of degree n) is packed into one int64 code so the kernels
can return a flat array: digit d-1 in base n+1 holds the multiplicity
of degree d.  Code -1 marks a ramified or degenerate fiber.  Base n+1
with n digits stays below 2**63 for n <= 15, which bounds the kernel
fast path; larger degrees take the generic object path.
"""

from __future__ import annotations

import numpy as np

MAX_KERNEL_DEGREE = 15
MAX_KERNEL_PRIME = 2**31  # products must fit in int64

RAMIFIED = -1


def kernel_eligible(p: int, m: int, n: int) -> bool:
    return m == 1 and 2 <= n <= MAX_KERNEL_DEGREE and p < MAX_KERNEL_PRIME


def encode_parts(parts, n: int) -> int:
    """Pack a degree multiset summing to n into its int64 code."""
    code = 0
    for d in parts:
        code += (n + 1) ** (d - 1)
    return code


def decode_code(code: int, n: int) -> tuple[int, ...]:
    """Unpack a code into the sorted tuple of parts."""
    parts = []
    base = n + 1
    d = 1
    while code:
        code, beta = divmod(code, base)
        parts.extend([d] * beta)
        d += 1
    return tuple(parts)


def coeff_matrix(bipoly, p: int) -> np.ndarray:
    """Coefficient matrix of P(T, Y) reduced mod p, rows indexed by T-degree."""
    rows = [[c % p for c in row] for row in bipoly.rows]
    return np.array(rows, dtype=np.int64)
