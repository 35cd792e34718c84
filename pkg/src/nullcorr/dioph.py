"""Diophantine engine producing many-component certificates.

The pipeline: pick M so that x^2 + 3y^2 = M has enough integral solutions,
push each solution through the degree-2/degree-4 power-sum identities to get
triples (u, v, w) sharing the same square sum and square-product sum, verify
the whole class exhaustively, and attach a moduli dimension to every triple.
The resulting certificate witnesses that one moduli space on P^5 contains at
least N distinct irreducible components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .chern import chern_closed_form_p5
from .moduli import moduli_report
from .monad import MonadSpec

DEFAULT_AB = (1, 1)
DEFAULT_MAX_M = 200_000


class MSearchExhausted(RuntimeError):
    """Raised when no admissible M is found below the configured ceiling."""

    def __init__(self, needed: int, max_m: int):
        super().__init__(
            f"no M <= {max_m} yields {needed} distinct triple classes; "
            "raise the ceiling"
        )
        self.needed = needed
        self.max_m = max_m


@dataclass(frozen=True)
class TripleClass:
    """All triples u >= v >= w >= 0 sharing a square sum and a square-product sum."""

    lam: int
    zeta: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for u, v, w in self.triples:
            if not (u >= v >= w >= 0):
                raise ValueError(f"triple {(u, v, w)} is not sorted descending")
            if u * u + v * v + w * w != self.lam:
                raise ValueError(f"triple {(u, v, w)} misses the square sum {self.lam}")
            if u * u * v * v + u * u * w * w + v * v * w * w != self.zeta:
                raise ValueError(
                    f"triple {(u, v, w)} misses the square-product sum {self.zeta}"
                )
        object.__setattr__(self, "triples", tuple(sorted(self.triples, reverse=True)))

    @property
    def count(self) -> int:
        return len(self.triples)


class ComponentEntry(NamedTuple):
    a1: int
    a2: int
    a3: int
    dim_N: int


@dataclass(frozen=True)
class ComponentCertificate:
    """Witness that M_{P^5}(4; 0, s, 0, t) has at least `count` components."""

    c: int
    s: int
    t: int
    components: tuple[ComponentEntry, ...]
    verified_by_brute_force: bool

    def __post_init__(self) -> None:
        seen = set()
        for e in self.components:
            if not (self.c > 5 * e.a1 and e.a1 >= e.a2 >= e.a3 >= 0):
                raise ValueError(f"entry {e} violates c > 5a_1 >= ... >= 0")
            if chern_closed_form_p5(self.c, e.a1, e.a2, e.a3) != (0, self.s, 0, self.t):
                raise ValueError(f"entry {e} does not hit the Chern targets")
            key = (e.a1, e.a2, e.a3)
            if key in seen:
                raise ValueError(f"duplicate triple {key} in certificate")
            seen.add(key)

    @property
    def count(self) -> int:
        return len(self.components)


def _is_square(x: int) -> int | None:
    if x < 0:
        return None
    r = math.isqrt(x)
    return r if r * r == x else None


def brute_force_triples(lam: int, zeta: int) -> TripleClass:
    """Exhaustive scan for all u >= v >= w >= 0 with the given power sums."""
    if lam < 0 or zeta < 0:
        raise ValueError("power sums must be nonnegative")
    found = []
    for u in range(math.isqrt(lam), -1, -1):
        rest = lam - u * u
        if rest > 2 * u * u:
            break  # u no longer the largest entry
        for v in range(math.isqrt(rest), -1, -1):
            if v > u:
                continue
            w = _is_square(rest - v * v)
            if w is None or w > v:
                continue
            if u * u * v * v + u * u * w * w + v * v * w * w == zeta:
                found.append((u, v, w))
    return TripleClass(lam, zeta, tuple(found))


def _piezas_matrix_ok(a: int, b: int) -> bool:
    return a * (-2 * a - b) - b * (a + 2 * b) != 0


def piezas_triple(a: int, b: int, x: int, y: int) -> tuple[int, int, int]:
    """One triple from the power-sum identities, sorted descending by |.|.

    The three linear forms satisfy, for k = 2 and k = 4,
    sum of k-th powers = (a^k + b^k + (a+b)^k) (x^2 + 3y^2)^{k/2};
    both identities are asserted on the returned values.
    """
    if not _piezas_matrix_ok(a, b):
        raise ValueError(f"degenerate parameter pair (a, b) = {(a, b)}")
    u = abs(a * x + (a + 2 * b) * y)
    v = abs(b * x - (2 * a + b) * y)
    w = abs((a + b) * x - (a - b) * y)
    u, v, w = sorted((u, v, w), reverse=True)
    norm = x * x + 3 * y * y
    assert u**2 + v**2 + w**2 == (a**2 + b**2 + (a + b) ** 2) * norm
    assert u**4 + v**4 + w**4 == (a**4 + b**4 + (a + b) ** 4) * norm**2
    return (u, v, w)


def representations_x2_3y2(M: int) -> list[tuple[int, int]]:
    """All (x >= 0, y >= 0) with x^2 + 3y^2 = M, sorted by y."""
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    reps = []
    for y in range(math.isqrt(M // 3) + 1):
        x = _is_square(M - 3 * y * y)
        if x is not None:
            reps.append((x, y))
    return reps


def _full_solution_count(reps: list[tuple[int, int]]) -> int:
    """Number of integral (x, y) pairs in the full sign orbit of the
    nonnegative representatives."""
    total = 0
    for x, y in reps:
        total += (2 if x > 0 else 1) * (2 if y > 0 else 1)
    return total


def _triple_classes(reps: list[tuple[int, int]], a: int, b: int) -> set[tuple[int, int, int]]:
    """Distinct sorted-absolute-value triples induced by all sign choices."""
    classes = set()
    for x, y in reps:
        classes.add(piezas_triple(a, b, x, y))
        classes.add(piezas_triple(a, b, x, -y))
    return classes


def find_M_with_representations(
    N: int, a: int = 1, b: int = 1, max_m: int = DEFAULT_MAX_M
) -> int:
    """Smallest M whose full solution set of x^2 + 3y^2 = M has >= N members
    and whose induced triples fall into >= N distinct classes."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if not _piezas_matrix_ok(a, b):
        raise ValueError(f"degenerate parameter pair (a, b) = {(a, b)}")
    for M in range(1, max_m + 1):
        reps = representations_x2_3y2(M)
        if not reps:
            continue
        if _full_solution_count(reps) < N:
            continue
        if len(_triple_classes(reps, a, b)) >= N:
            return M
    raise MSearchExhausted(N, max_m)


def triple_family(
    N: int, a: int = 1, b: int = 1, max_m: int = DEFAULT_MAX_M
) -> TripleClass:
    """A verified class of >= N triples sharing the same (lam, zeta)."""
    M = find_M_with_representations(N, a, b, max_m)
    reps = representations_x2_3y2(M)
    lam = (a * a + b * b + (a + b) ** 2) * M
    fourth = (a**4 + b**4 + (a + b) ** 4) * M * M
    zeta = (lam * lam - fourth) // 2
    family = brute_force_triples(lam, zeta)
    produced = _triple_classes(reps, a, b)
    if not produced <= set(family.triples):
        raise AssertionError("constructed triple missed by the exhaustive scan")
    if family.count < N:
        raise AssertionError("exhaustive scan returned fewer triples than constructed")
    return family


def components_certificate(
    N: int, a: int = 1, b: int = 1, max_m: int = DEFAULT_MAX_M
) -> ComponentCertificate:
    """Certificate that a single moduli space M_{P^5}(4; 0, s, 0, t) contains
    at least N distinct irreducible components.

    Picks c = 5 * max(a_1) + 1, the smallest value meeting c > 5a_1 for every
    triple in the family, and attaches each triple's component dimension.
    """
    family = triple_family(N, a, b, max_m)
    c = 5 * max(u for u, _, _ in family.triples) + 1
    s = c * c - family.lam
    t = c**4 - c * c * family.lam + family.zeta
    entries = []
    for a1, a2, a3 in family.triples:
        report = moduli_report(MonadSpec(n=2, c=c, a=(a1, a2, a3)))
        entries.append(ComponentEntry(a1, a2, a3, report.dim_N))
    return ComponentCertificate(
        c=c, s=s, t=t, components=tuple(entries), verified_by_brute_force=True
    )
