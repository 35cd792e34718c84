"""Cohomology of line bundles and split bundles on P^N, as exact integers.

All dimensions are computed with arbitrary-precision binomials; nothing here
ever rounds or overflows.  These counts are the substrate for every other
module: Chern classes, Hilbert functions and moduli dimensions all reduce to
sums of the functions below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations


def h0_line(N: int, d: int) -> int:
    """dim H^0 of O(d) on P^N: the number of degree-d monomials in N+1 variables."""
    if N < 1:
        raise ValueError(f"ambient dimension must be >= 1, got {N}")
    if d < 0:
        return 0
    return math.comb(N + d, N)


def h_top_line(N: int, d: int) -> int:
    """dim H^N of O(d) on P^N, by Serre duality against O(-d-N-1)."""
    return h0_line(N, -d - N - 1)


def hi_line(N: int, i: int, d: int) -> int:
    """dim H^i of O(d) on P^N; zero in every intermediate degree 0 < i < N."""
    if i < 0 or i > N:
        return 0
    if i == 0:
        return h0_line(N, d)
    if i == N:
        return h_top_line(N, d)
    return 0


def chi_line(N: int, d: int) -> int:
    """Euler characteristic of O(d) on P^N: binomial(d+N, N) as a polynomial in d."""
    if N < 1:
        raise ValueError(f"ambient dimension must be >= 1, got {N}")
    num = 1
    for k in range(1, N + 1):
        num *= d + k
    # product of N consecutive integers, exactly divisible by N!
    return num // math.factorial(N)


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles O(d) on P^N, recorded by its degree multiset."""

    ambient_dim: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.ambient_dim}")
        if not self.degrees:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def is_negation_closed(self) -> bool:
        """True when the degree multiset equals its own negation (symmetric shape)."""
        return sorted(self.degrees) == sorted(-d for d in self.degrees)

    def twist(self, t: int) -> "SplitBundle":
        return SplitBundle(self.ambient_dim, tuple(d + t for d in self.degrees))


def h0_split(B: SplitBundle, t: int = 0) -> int:
    """dim H^0 of B(t), summed over the summands."""
    return sum(h0_line(B.ambient_dim, d + t) for d in B.degrees)


def h0_tensor(B1: SplitBundle, B2: SplitBundle, t: int = 0) -> int:
    """dim H^0 of (B1 tensor B2)(t), over all ordered pairs of summands."""
    if B1.ambient_dim != B2.ambient_dim:
        raise ValueError("tensor factors must live on the same P^N")
    N = B1.ambient_dim
    return sum(h0_line(N, d + e + t) for d in B1.degrees for e in B2.degrees)


def h0_wedge2(B: SplitBundle) -> int:
    """dim H^0 of the second wedge of B: one term per unordered pair of slots.

    Repeated degrees count as distinct slots, so the trivial bundle of rank r
    contributes C(r, 2).
    """
    N = B.ambient_dim
    return sum(h0_line(N, d + e) for d, e in combinations(B.degrees, 2))


def dim_symp(B: SplitBundle) -> int:
    """Dimension of the symplectic automorphism group of a symmetric split bundle.

    Equals h0(B tensor B) - h0(wedge^2 B); for the trivial bundle of rank 2m
    this is the classical dim Sp(2m) = m(2m+1).
    """
    if not B.is_negation_closed():
        raise ValueError(
            "symplectic automorphisms need a negation-closed degree multiset, "
            f"got {B.degrees}"
        )
    return h0_tensor(B, B, 0) - h0_wedge2(B)
