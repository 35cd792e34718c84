"""Total Chern class arithmetic in the truncated ring Z[h]/(h^{N+1}).

Classes are dense integer coefficient vectors of fixed length N+1; the
truncation is implicit in every product.  The middle bundle E of a monad gets
its Chern class from c(H) * c(O(-c))^{-1} * c(O(c))^{-1}, and on P^5 the same
numbers have a closed form in (c, a_1, a_2, a_3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import SplitBundle
from .monad import MonadSpec


@dataclass(frozen=True)
class ChernVector:
    """Coefficients c_0..c_N of a total Chern class truncated at h^N."""

    ambient_dim: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.ambient_dim < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.ambient_dim}")
        if len(self.coeffs) != self.ambient_dim + 1:
            raise ValueError(
                f"need exactly {self.ambient_dim + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]


def chern_one(N: int) -> ChernVector:
    return ChernVector(N, (1,) + (0,) * N)


def chern_line(N: int, d: int) -> ChernVector:
    """c(O(d)) = 1 + d*h."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    if N >= 1:
        coeffs[1] = d
    return ChernVector(N, tuple(coeffs))


def chern_mul(u: ChernVector, v: ChernVector) -> ChernVector:
    """Product in Z[h]/(h^{N+1})."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("factors must share the ambient dimension")
    N = u.ambient_dim
    out = [0] * (N + 1)
    for i, ui in enumerate(u.coeffs):
        if ui == 0:
            continue
        for j in range(N + 1 - i):
            out[i + j] += ui * v.coeffs[j]
    return ChernVector(N, tuple(out))


def chern_invert(v: ChernVector) -> ChernVector:
    """Truncated multiplicative inverse, by peeling coefficients."""
    if v.coeffs[0] != 1:
        raise ValueError(f"only classes with c_0 = 1 are invertible, got c_0 = {v.coeffs[0]}")
    N = v.ambient_dim
    inv = [0] * (N + 1)
    inv[0] = 1
    for k in range(1, N + 1):
        inv[k] = -sum(v.coeffs[i] * inv[k - i] for i in range(1, k + 1))
    return ChernVector(N, tuple(inv))


def chern_split(B: SplitBundle) -> ChernVector:
    """c of a split bundle: product of 1 + d*h over the summands."""
    acc = chern_one(B.ambient_dim)
    for d in B.degrees:
        acc = chern_mul(acc, chern_line(B.ambient_dim, d))
    return acc


def chern_of_E(spec: MonadSpec) -> ChernVector:
    """c(E) of the monad's middle bundle: c(H) * c(O(-c))^{-1} * c(O(c))^{-1}."""
    N = spec.ambient_dim
    cH = chern_split(spec.bundle_H())
    inv_minus = chern_invert(chern_line(N, -spec.c))
    inv_plus = chern_invert(chern_line(N, spec.c))
    return chern_mul(chern_mul(cH, inv_minus), inv_plus)


def chern_closed_form_p5(c: int, a1: int, a2: int, a3: int) -> tuple[int, int, int, int]:
    """(c_1, c_2, c_3, c_4) of E on P^5 by direct substitution.

    c_1 = c_3 = 0, c_2 = c^2 - (a_1^2+a_2^2+a_3^2) and
    c_4 = c^4 - c^2(a_1^2+a_2^2+a_3^2) + (a_1^2 a_2^2 + a_1^2 a_3^2 + a_2^2 a_3^2).
    """
    if not (c > a1 >= a2 >= a3 >= 0):
        raise ValueError(f"need c > a_1 >= a_2 >= a_3 >= 0, got {(c, a1, a2, a3)}")
    q = a1 * a1 + a2 * a2 + a3 * a3
    c2 = c * c - q
    c4 = c**4 - c * c * q + (a1 * a1 * a2 * a2 + a1 * a1 * a3 * a3 + a2 * a2 * a3 * a3)
    return (0, c2, 0, c4)
