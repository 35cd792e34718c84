"""Stability flags, End-cohomology dimensions and moduli-component dimensions.

The stability criteria are sufficient conditions (an iff only on P^3), so the
flags are tri-state strings rather than booleans.  The component dimension on
P^5 is computed along two independent routes, one through End-cohomology and
one through the group-quotient count; they must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chern import chern_closed_form_p5
from .combinat import dim_symp, h0_line, h0_split, h0_tensor, h0_wedge2
from .monad import MonadSpec, chi_monad

TRUE = "true"
FALSE = "false"
FALSE_UNKNOWN = "false-unknown"
NOT_AVAILABLE = "criterion-not-available"


@dataclass(frozen=True)
class StabilityReport:
    e_stable: str
    e_simple: str
    fg_stable: str
    criteria_used: tuple[str, ...]


@dataclass(frozen=True)
class ModuliReport:
    spec: MonadSpec
    h1_end: int
    h2_end: int
    dim_N: int
    smooth_point: bool
    chern: tuple[int, int, int, int]


def stability_flags(spec: MonadSpec) -> StabilityReport:
    """Evaluate the numeric stability criteria available for this ambient space."""
    c, a = spec.c, spec.a
    if spec.n == 1:
        # on P^3 the criterion c > a+b is an iff
        stable = c > a[0] + a[1]
        return StabilityReport(
            e_stable=TRUE if stable else FALSE,
            e_simple=TRUE if stable else FALSE_UNKNOWN,
            fg_stable=NOT_AVAILABLE,
            criteria_used=("P^3: E stable iff c > a_1 + a_2",),
        )
    if spec.n == 2:
        e_ok = c > 2 * a[0] + a[1]
        fg_ok = c > 5 * a[0]
        return StabilityReport(
            e_stable=TRUE if e_ok else FALSE_UNKNOWN,
            e_simple=TRUE if e_ok else FALSE_UNKNOWN,
            fg_stable=TRUE if fg_ok else FALSE_UNKNOWN,
            criteria_used=(
                "P^5: E stable and simple if c > 2a_1 + a_2",
                "P^5: F and G stable if c > 5a_1",
            ),
        )
    return StabilityReport(
        e_stable=NOT_AVAILABLE,
        e_simple=NOT_AVAILABLE,
        fg_stable=NOT_AVAILABLE,
        criteria_used=(),
    )


def _require_p5_hypothesis(spec: MonadSpec) -> None:
    if spec.n != 2:
        raise ValueError(f"moduli dimensions are only available on P^5, got n={spec.n}")
    if spec.c <= 5 * spec.a[0]:
        raise ValueError(
            f"need c > 5a_1 for the moduli formulas, got c={spec.c}, a_1={spec.a[0]}"
        )


def h1_end(spec: MonadSpec) -> int:
    """dim H^1 of End E on P^5 under c > 5a_1."""
    _require_p5_hypothesis(spec)
    H = spec.bundle_H()
    return h0_wedge2(H) - 1 + h0_split(H, spec.c) - h0_tensor(H, H, 0)


def h2_end(spec: MonadSpec) -> int:
    """dim H^2 of End E on P^5, computed along both published routes."""
    _require_p5_hypothesis(spec)
    H = spec.bundle_H()
    via_chi = h0_wedge2(H) - 1 - chi_monad(spec, spec.c)
    via_sections = h0_wedge2(H) + h0_line(spec.ambient_dim, 2 * spec.c) - h0_split(
        H, spec.c
    )
    if via_chi != via_sections:
        raise AssertionError(
            f"h2(End E) routes disagree for {spec}: {via_chi} != {via_sections}"
        )
    return via_chi


def dim_N_quotient(spec: MonadSpec) -> int:
    """dim of the component by the quotient count: the monad parameter space
    modulo the symplectic group action, whose fibers have dimension
    1 + dim Symp(H)."""
    _require_p5_hypothesis(spec)
    H = spec.bundle_H()
    return h0_split(H, spec.c) - 1 - dim_symp(H)


def moduli_report(spec: MonadSpec) -> ModuliReport:
    """Assemble the component dimension, obstruction number and Chern data."""
    _require_p5_hypothesis(spec)
    d1 = h1_end(spec)
    dq = dim_N_quotient(spec)
    if d1 != dq:
        raise AssertionError(
            f"component dimension routes disagree for {spec}: {d1} != {dq}"
        )
    return ModuliReport(
        spec=spec,
        h1_end=d1,
        h2_end=h2_end(spec),
        dim_N=d1,
        smooth_point=spec.c > 5 * spec.a[0],
        chern=chern_closed_form_p5(spec.c, *spec.a),
    )
