"""Monad data, Hilbert functions of the attached complete intersection, and
the cohomology table of the middle bundle E.

A MonadSpec is the numeric data (n, c, a_1 >= ... >= a_{n+1} >= 0) of the
monad O(-c) -> H -> O(c) on P^{2n+1}, with H the symmetric split bundle with
degrees +-a_i.  The 2n+2 forms cutting out the ring M have degrees c-a_i and
c+a_i; only these degrees ever enter, so the generic forms themselves are
never represented.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .combinat import SplitBundle, chi_line, h0_line, h0_split


@dataclass(frozen=True)
class MonadSpec:
    """Numeric data of a special generalized null correlation monad on P^{2n+1}."""

    n: int
    c: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if len(self.a) != self.n + 1:
            raise ValueError(
                f"need exactly n+1 = {self.n + 1} twists, got {len(self.a)}"
            )
        if any(self.a[i] < self.a[i + 1] for i in range(len(self.a) - 1)):
            raise ValueError(f"twists must be non-increasing, got {self.a}")
        if self.a[-1] < 0:
            raise ValueError(f"twists must be nonnegative, got {self.a}")
        if self.c <= self.a[0]:
            raise ValueError(f"need c > a_1, got c={self.c}, a_1={self.a[0]}")

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n + 1

    @property
    def num_vars(self) -> int:
        """Number of variables of the polynomial ring, 2n+2."""
        return 2 * self.n + 2

    def bundle_H(self) -> SplitBundle:
        """The symmetric middle bundle O(a_1) + ... + O(-a_{n+1})."""
        degs = self.a + tuple(-ai for ai in self.a)
        return SplitBundle(self.ambient_dim, degs)

    def generator_degrees(self) -> tuple[int, ...]:
        """Degrees c-a_i of the f_i followed by degrees c+a_i of the g_i."""
        return tuple(self.c - ai for ai in self.a) + tuple(self.c + ai for ai in self.a)

    @property
    def socle_degree(self) -> int:
        """Top nonzero degree of M: sum of generator degrees minus 2n+2."""
        return sum(self.generator_degrees()) - self.num_vars


@lru_cache(maxsize=None)
def _hilbert_coeffs(spec: MonadSpec) -> tuple[int, ...]:
    """Coefficients of the Hilbert series of M, degrees 0..socle_degree.

    Expands prod_i (1 - t^{d_i}) densely, then divides by (1-t)^{2n+2} with
    one prefix-sum pass per factor.  Everything stays in Z.
    """
    degs = spec.generator_degrees()
    top = sum(degs)
    num = [0] * (top + 1)
    num[0] = 1
    for d in degs:
        for j in range(top, d - 1, -1):
            num[j] -= num[j - d]
    for _ in range(spec.num_vars):
        for j in range(1, top + 1):
            num[j] += num[j - 1]
    socle = spec.socle_degree
    if any(num[socle + 1 :]):
        raise AssertionError("Hilbert series did not terminate at the socle degree")
    return tuple(num[: socle + 1])


def hilbert_M(spec: MonadSpec, j: int) -> int:
    """dim of the degree-j piece of the complete intersection ring M."""
    if j < 0 or j > spec.socle_degree:
        return 0
    return _hilbert_coeffs(spec)[j]


@dataclass(frozen=True)
class HilbertFunction:
    """The full Hilbert function of M for one spec, with its socle degree."""

    spec: MonadSpec
    values: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _hilbert_coeffs(self.spec))

    @property
    def socle_degree(self) -> int:
        return self.spec.socle_degree

    def __call__(self, j: int) -> int:
        return hilbert_M(self.spec, j)


def hilbert_function(spec: MonadSpec) -> HilbertFunction:
    return HilbertFunction(spec)


@lru_cache(maxsize=None)
def _koszul_terms(spec: MonadSpec) -> tuple[tuple[int, int], ...]:
    """Signed multiset of subset degree-sums of the Koszul resolution."""
    degs = spec.generator_degrees()
    acc: Counter[int] = Counter()
    for k in range(len(degs) + 1):
        sign = (-1) ** k
        for T in combinations(degs, k):
            acc[sum(T)] += sign
    return tuple(sorted(acc.items()))


def koszul_alternating_sum(spec: MonadSpec, j: int) -> int:
    """dim M_j recomputed as the graded Euler characteristic of the Koszul
    resolution: an alternating sum of polynomial-ring dimension counts."""
    N = spec.ambient_dim
    return sum(sign * h0_line(N, j - s) for s, sign in _koszul_terms(spec))


def h1_E(spec: MonadSpec, t: int) -> int:
    """dim H^1 of E(t): the degree t+c piece of M."""
    return hilbert_M(spec, t + spec.c)


def h0_F(spec: MonadSpec, t: int) -> int:
    """dim H^0 of the kernel bundle F(t), off the sequence F -> H -> O(c)."""
    N = spec.ambient_dim
    return h0_split(spec.bundle_H(), t) - h0_line(N, spec.c + t) + hilbert_M(
        spec, spec.c + t
    )


def h0_E(spec: MonadSpec, t: int) -> int:
    """dim H^0 of E(t), off the sequence O(-c) -> F -> E."""
    return h0_F(spec, t) - h0_line(spec.ambient_dim, t - spec.c)


def chi_monad(spec: MonadSpec, t: int) -> int:
    """Euler characteristic of E(t), by additivity over the monad."""
    N = spec.ambient_dim
    c = spec.c
    total = sum(chi_line(N, d + t) for d in spec.bundle_H().degrees)
    return total - chi_line(N, t - c) - chi_line(N, t + c)


def default_twist_range(spec: MonadSpec) -> tuple[int, int]:
    """Window covering the duality and generation regimes: [-2c-2n-2, 2c]."""
    return (-2 * spec.c - 2 * spec.n - 2, 2 * spec.c)


@dataclass(frozen=True)
class CohomologyTable:
    """h^i(E(t)) for 0 <= i <= 2n+1 over a twist range, plus the chi row.

    Rows are indexed by i, columns by t - t_min.
    """

    spec: MonadSpec
    t_min: int
    t_max: int
    h: tuple[tuple[int, ...], ...]
    chi: tuple[int, ...]

    def entry(self, i: int, t: int) -> int:
        return self.h[i][t - self.t_min]

    def column(self, t: int) -> tuple[int, ...]:
        return tuple(row[t - self.t_min] for row in self.h)

    def euler(self, t: int) -> int:
        return self.chi[t - self.t_min]

    @property
    def twists(self) -> range:
        return range(self.t_min, self.t_max + 1)


def cohomology_table(
    spec: MonadSpec, t_min: int | None = None, t_max: int | None = None
) -> CohomologyTable:
    """Assemble the full table of h^i(E(t)).

    h^0 and h^1 come from the monad formulas; h^i vanishes for
    2 <= i <= 2n-1; the top two rows are filled by Serre duality combined
    with the self-duality E = E*.
    """
    if t_min is None and t_max is None:
        t_min, t_max = default_twist_range(spec)
    if t_min is None or t_max is None or t_min > t_max:
        raise ValueError(f"bad twist range [{t_min}, {t_max}]")
    n = spec.n
    N = spec.ambient_dim
    twists = range(t_min, t_max + 1)
    rows: list[tuple[int, ...]] = []
    for i in range(N + 1):
        if i == 0:
            row = tuple(h0_E(spec, t) for t in twists)
        elif i == 1:
            row = tuple(h1_E(spec, t) for t in twists)
        elif i == 2 * n:
            row = tuple(h1_E(spec, -t - N - 1) for t in twists)
        elif i == 2 * n + 1:
            row = tuple(h0_E(spec, -t - N - 1) for t in twists)
        else:
            row = tuple(0 for _ in twists)
        rows.append(row)
    chi_row = tuple(
        sum((-1) ** i * rows[i][k] for i in range(N + 1)) for k in range(len(twists))
    )
    return CohomologyTable(spec, t_min, t_max, tuple(rows), chi_row)
