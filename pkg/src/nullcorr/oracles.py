"""Independent brute-force recomputation paths for the property-test suite.

Nothing here shares helper code with the production modules beyond Python
integers: section counts come from explicit monomial enumeration, Chern
classes from power-series long division, and Hilbert functions from a
from-scratch alternating sum over generator subsets.
"""

from __future__ import annotations

import math
from itertools import combinations

from .chern import ChernVector
from .monad import MonadSpec


def h0_line_by_enumeration(N: int, d: int) -> int:
    """Count degree-d monomials in N+1 variables by walking exponent vectors."""
    if not (0 <= d <= 12 and 1 <= N <= 7):
        raise ValueError(f"enumeration oracle is desk-scale only, got N={N}, d={d}")

    def count(vars_left: int, budget: int) -> int:
        if vars_left == 1:
            return 1
        return sum(count(vars_left - 1, budget - e) for e in range(budget + 1))

    return count(N + 1, d)


def _poly_mul(p: list[int], q: list[int], length: int) -> list[int]:
    out = [0] * length
    for i, pi in enumerate(p[:length]):
        for j, qj in enumerate(q[: length - i]):
            out[i + j] += pi * qj
    return out


def chern_by_series(spec: MonadSpec) -> ChernVector:
    """c(E) recomputed by dividing c(H) by (1 - c*h)(1 + c*h) with long division."""
    N = spec.ambient_dim
    num = [1]
    for d in spec.bundle_H().degrees:
        num = _poly_mul(num, [1, d], N + 1)
    den = _poly_mul([1, -spec.c], [1, spec.c], N + 1)
    quot = [0] * (N + 1)
    for k in range(N + 1):
        acc = num[k] if k < len(num) else 0
        for i in range(1, k + 1):
            acc -= den[i] * quot[k - i]
        quot[k] = acc  # den[0] == 1
    return ChernVector(N, tuple(quot))


def hilbert_by_resolution(spec: MonadSpec, j: int) -> int:
    """dim M_j from the graded free resolution, written out from scratch."""
    degs = spec.generator_degrees()
    nvars = len(degs)  # 2n+2 variables as well
    total = 0
    for k in range(nvars + 1):
        for T in combinations(degs, k):
            m = j - sum(T)
            if m >= 0:
                total += (-1) ** k * math.comb(m + nvars - 1, nvars - 1)
    return total
