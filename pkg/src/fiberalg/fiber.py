"""Physical reading of squared elements over small signed group algebras.

Over the four-dimensional algebra with two unit-square generators, the
square x (x) x of an element x splits under two commuting projector
families into three sectors:

* a tangent sector carrying the rates (dt, dq) and their norm ds,
* a momentum sector carrying (H, p) and the mass norm m,
* a mixed sector carrying four cross components that tie the action
  rate dS = p dq - H dt to the norms.

This module provides the closed polynomial forms of that decomposition,
the minimum-action predicate and factorization, hyperbolic and circular
transformation elements, a kinematics inverse, a free-particle action
integral, and the Euclidean counterparts obtained when the first
generator squares to -1.

Every closed form has a projector twin (``*_projected``) computed purely
through the coefficient-grid machinery in :mod:`fiberalg.tensor`; the
twins act as the independent oracle in the verification sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .algebra import AlgebraElement, Signature, idempotent_pair, multiply
from .tensor import (
    ComponentBasis,
    TensorElement,
    basis_pair,
    diagonal_projector,
    lift_projectors,
    mixed_projector,
    square_embed,
    tensor_multiply,
)

__all__ = [
    "TANGENT_SIGNATURE",
    "FIBER_SIGNATURE",
    "EUCLIDEAN_TANGENT_SIGNATURE",
    "EUCLIDEAN_FIBER_SIGNATURE",
    "TangentTriple",
    "MomentumTriple",
    "CrossQuad",
    "FiberDecomposition",
    "EuclideanComponents",
    "EuclideanSector",
    "EuclideanFiberDecomposition",
    "CausalClass",
    "Factorization",
    "ActionIntegral",
    "decompose_c2",
    "decompose_d2",
    "decompose_euclidean",
    "decompose_c2_projected",
    "decompose_d2_projected",
    "euclidean_plane_projected",
    "is_min_action",
    "factorize",
    "transform",
    "boost_element",
    "rotation_element",
    "lift_kinematics",
    "free_particle_element",
    "trajectory_action",
    "classify_causal",
    "tangent_component_basis",
    "fiber_component_basis",
]

TANGENT_SIGNATURE = Signature((1,))
FIBER_SIGNATURE = Signature((1, 1))
EUCLIDEAN_TANGENT_SIGNATURE = Signature((-1,))
EUCLIDEAN_FIBER_SIGNATURE = Signature((-1, 1))

MIN_ACTION_TOL = 1e-10
CAUSAL_TOL = 1e-12


@dataclass(frozen=True)
class TangentTriple:
    """Rates of time, space, and proper time along a curve parameter.

    ``ds`` is stored signed; for triples produced from a real element it
    satisfies ds**2 == dt**2 - dq**2 with dt >= |dq|.  ``ds`` may be left
    unset on user-supplied triples fed to :func:`lift_kinematics`.
    """

    dt: float
    dq: float
    ds: float | None = None


@dataclass(frozen=True)
class MomentumTriple:
    """Energy, momentum, and signed mass norm; m**2 == H**2 - p**2."""

    H: float
    p: float
    m: float | None = None


@dataclass(frozen=True)
class CrossQuad:
    """Signed components of the mixed sector.

    ``c_plus_1`` and ``c_plus_e1`` sit in the plus half of the sector and
    transform with the tangent and momentum vectors; ``c_minus_1`` and
    ``c_minus_e12`` sit in the minus half and are invariant under
    norm-preserving transformations.  Their squares satisfy
    2 c**2 = H dt +/- p dq +/- m ds in the sign pattern
    (+ +), (+ -), (- +), (- -).
    """

    c_plus_1: float
    c_plus_e1: float
    c_minus_1: float
    c_minus_e12: float


@dataclass(frozen=True)
class FiberDecomposition:
    """Full sector decomposition of x (x) x over the fiber algebra.

    ``action_rate`` is p dq - H dt.  ``min_action_residual`` is
    2 (x0 x3 - x1 x2)**2, equal to half the squared c_minus_e12
    component; it vanishes exactly on minimum-action elements.
    """

    tangent: TangentTriple
    momentum: MomentumTriple
    cross: CrossQuad
    action_rate: float
    min_action_residual: float


@dataclass(frozen=True)
class EuclideanComponents:
    """Sector components for the one-generator algebra with e1**2 == -1.

    ``p_plus_1`` is the rotation invariant x0**2 + x1**2.  The field
    names follow the unit-square layout; with a negative-squaring
    generator the e-carried component actually lives in the minus
    subspace, paired with ``p_minus`` as a rotating 2-vector.
    """

    p_plus_1: float
    p_plus_e: float
    p_minus: float


@dataclass(frozen=True)
class EuclideanSector:
    """One diagonal sector of the Euclidean fiber.

    ``invariant`` is unchanged under unit rotations; (vec_1, vec_e1)
    rotate as a plane vector with doubled angle.
    """

    invariant: float
    vec_1: float
    vec_e1: float


@dataclass(frozen=True)
class EuclideanFiberDecomposition:
    """Sector decomposition over the two-generator algebra with squares (-1, +1)."""

    tangent: EuclideanSector
    momentum: EuclideanSector
    cross_invariant_1: float
    cross_invariant_e12: float
    cross_vec_1: float
    cross_vec_e1: float


class CausalClass(Enum):
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


@dataclass(frozen=True)
class Factorization:
    """x == scale * first * second with first = x0 + x1 e1, second = x0 + x2 e2."""

    first: AlgebraElement
    second: AlgebraElement
    scale: float

    def reconstruct(self) -> AlgebraElement:
        return multiply(self.first, self.second) * self.scale


@dataclass(frozen=True)
class ActionIntegral:
    """Step-summed and closed-form action for a free particle."""

    numeric_S: float
    analytic_S: float
    error: float


class _TangentParts(NamedTuple):
    dt: object
    dq: object
    ds: object


class _FiberParts(NamedTuple):
    dt: object
    dq: object
    ds: object
    H: object
    p: object
    m: object
    c_plus_1: object
    c_plus_e1: object
    c_minus_1: object
    c_minus_e12: object
    action_rate: object
    residual: object


def _tangent_parts(u, v) -> _TangentParts:
    """(u**2 + v**2, 2uv, u**2 - v**2); accepts scalars or arrays."""
    return _TangentParts(u * u + v * v, 2 * u * v, u * u - v * v)


def _fiber_parts(x0, x1, x2, x3) -> _FiberParts:
    """All sector components of the fiber decomposition; scalar or array."""
    a, b = x0 + x2, x1 + x3
    c, d = x0 - x2, x1 - x3
    dt, dq, ds = _tangent_parts(a, b)
    energy, momentum, mass = _tangent_parts(c, d)
    cp1 = c * a + d * b
    cpe = c * b + d * a
    cm1 = c * a - d * b
    cme = c * b - d * a
    action = momentum * dq - energy * dt
    residual = 2 * (x0 * x3 - x1 * x2) ** 2
    return _FiberParts(dt, dq, ds, energy, momentum, mass, cp1, cpe, cm1, cme, action, residual)


def _require_signature(x: AlgebraElement, expected: Signature, what: str) -> None:
    if x.signature != expected:
        raise ValueError(f"{what} requires signature {expected}, got {x.signature}")


def _scalar_coeffs(x: AlgebraElement) -> list:
    if x.exact:
        return list(x.coeffs)
    return [float(c) for c in x.coeffs]


def decompose_c2(x: AlgebraElement) -> TangentTriple:
    """Tangent triple of x (x) x over the one-generator unit-square algebra."""
    _require_signature(x, TANGENT_SIGNATURE, "decompose_c2")
    x0, x1 = _scalar_coeffs(x)
    parts = _tangent_parts(x0, x1)
    return TangentTriple(parts.dt, parts.dq, parts.ds)


def decompose_d2(x: AlgebraElement) -> FiberDecomposition:
    """Full fiber decomposition of x (x) x over the two-generator algebra."""
    _require_signature(x, FIBER_SIGNATURE, "decompose_d2")
    parts = _fiber_parts(*_scalar_coeffs(x))
    return FiberDecomposition(
        tangent=TangentTriple(parts.dt, parts.dq, parts.ds),
        momentum=MomentumTriple(parts.H, parts.p, parts.m),
        cross=CrossQuad(parts.c_plus_1, parts.c_plus_e1, parts.c_minus_1, parts.c_minus_e12),
        action_rate=parts.action_rate,
        min_action_residual=parts.residual,
    )


def decompose_euclidean(x: AlgebraElement):
    """Euclidean counterpart decompositions.

    Accepts the one-generator algebra with square -1 (returns
    :class:`EuclideanComponents`) or the two-generator algebra with
    squares (-1, +1) (returns :class:`EuclideanFiberDecomposition`,
    extracted through the projector machinery).
    """
    if x.signature == EUCLIDEAN_TANGENT_SIGNATURE:
        x0, x1 = _scalar_coeffs(x)
        parts = _tangent_parts(x0, x1)
        return EuclideanComponents(p_plus_1=parts.dt, p_plus_e=parts.dq, p_minus=parts.ds)
    if x.signature == EUCLIDEAN_FIBER_SIGNATURE:
        comps = fiber_component_basis(x.signature).components(square_embed(x))
        return EuclideanFiberDecomposition(
            tangent=EuclideanSector(
                comps["tangent_invariant"], comps["tangent_vec_1"], comps["tangent_vec_e1"]
            ),
            momentum=EuclideanSector(
                comps["momentum_invariant"], comps["momentum_vec_1"], comps["momentum_vec_e1"]
            ),
            cross_invariant_1=comps["cross_invariant_1"],
            cross_invariant_e12=comps["cross_invariant_e12"],
            cross_vec_1=comps["cross_vec_1"],
            cross_vec_e1=comps["cross_vec_e1"],
        )
    raise ValueError(
        f"decompose_euclidean requires signature {EUCLIDEAN_TANGENT_SIGNATURE} or "
        f"{EUCLIDEAN_FIBER_SIGNATURE}, got {x.signature}"
    )


def is_min_action(x: AlgebraElement, tol: float = MIN_ACTION_TOL) -> bool:
    """True when the null component of the mixed sector vanishes.

    The criterion |x0 x3 - x1 x2| <= tol * |x|**2 is total; it matches
    the factorization condition wherever x0 != 0.
    """
    _require_signature(x, FIBER_SIGNATURE, "is_min_action")
    x0, x1, x2, x3 = _scalar_coeffs(x)
    return abs(x0 * x3 - x1 * x2) <= tol * x.norm_squared()


def factorize(x: AlgebraElement, tol: float = MIN_ACTION_TOL) -> Factorization:
    """Split a minimum-action element into its two single-generator factors."""
    _require_signature(x, FIBER_SIGNATURE, "factorize")
    x0, x1, x2, x3 = _scalar_coeffs(x)
    if x0 == 0:
        raise ValueError(
            "factorize needs a nonzero scalar part; minimality is still decidable "
            "through the x0-free criterion x0*x3 == x1*x2"
        )
    if not is_min_action(x, tol):
        residual = 2 * (x0 * x3 - x1 * x2) ** 2
        raise ValueError(
            f"element is not minimum-action (residual {residual:.3e}); it does not "
            "factor into single-generator parts"
        )
    sig = x.signature
    first = AlgebraElement(sig, [x0, x1, 0.0, 0.0])
    second = AlgebraElement(sig, [x0, 0.0, x2, 0.0])
    return Factorization(first=first, second=second, scale=1.0 / x0)


def transform(x: AlgebraElement, u: AlgebraElement) -> AlgebraElement:
    """Right action x -> x u; squares compose as (x (x) x)(u (x) u).

    For u = u0 + u1 e1 with u0**2 - u1**2 == 1 the minus-half components
    (ds, m, c_minus_1, c_minus_e12) are preserved and the plus-half pairs
    (dt, dq), (H, p), (c_plus_1, c_plus_e1) each undergo the hyperbolic
    rotation with doubled rapidity.
    """
    return multiply(x, u)


def boost_element(signature: Signature, rapidity: float) -> AlgebraElement:
    """u = cosh(phi) + sinh(phi) e1; requires e1 to square to +1.

    Acting on x multiplies the decomposed plus-half 2-vectors by the
    matrix [[cosh 2 phi, sinh 2 phi], [sinh 2 phi, cosh 2 phi]]; the
    doubling comes from the square in x (x) x.
    """
    if signature.squares[0] != 1:
        raise ValueError(f"boost_element requires e1**2 == +1, got signature {signature}")
    coeffs = [0.0] * signature.dim
    coeffs[0] = math.cosh(rapidity)
    coeffs[1] = math.sinh(rapidity)
    return AlgebraElement(signature, coeffs)


def rotation_element(signature: Signature, angle: float) -> AlgebraElement:
    """u = cos(angle) + sin(angle) e1; requires e1 to square to -1."""
    if signature.squares[0] != -1:
        raise ValueError(f"rotation_element requires e1**2 == -1, got signature {signature}")
    coeffs = [0.0] * signature.dim
    coeffs[0] = math.cos(angle)
    coeffs[1] = math.sin(angle)
    return AlgebraElement(signature, coeffs)


def lift_kinematics(tangent: TangentTriple, momentum: MomentumTriple) -> AlgebraElement:
    """Inverse of :func:`decompose_d2` on the (dt, dq) and (H, p) pairs.

    Only dt, dq, H, p are read; the norms are implied.  The
    nonnegative-root branch is chosen for both sector halves, so the
    result is one canonical preimage among the sign choices.
    """
    dt, dq = float(tangent.dt), float(tangent.dq)
    energy, momentum_p = float(momentum.H), float(momentum.p)
    if dt < abs(dq):
        raise ValueError(f"tangent pair (dt={dt}, dq={dq}) is spacelike; no real preimage")
    if energy < abs(momentum_p):
        raise ValueError(
            f"momentum pair (H={energy}, p={momentum_p}) is outside the mass shell; no real preimage"
        )
    sum_root = math.sqrt(dt + dq)
    diff_root = math.sqrt(dt - dq)
    a = (sum_root + diff_root) / 2.0
    b = (sum_root - diff_root) / 2.0
    sum_root = math.sqrt(energy + momentum_p)
    diff_root = math.sqrt(energy - momentum_p)
    c = (sum_root + diff_root) / 2.0
    d = (sum_root - diff_root) / 2.0
    return AlgebraElement(
        FIBER_SIGNATURE,
        [(a + c) / 2.0, (b + d) / 2.0, (a - c) / 2.0, (b - d) / 2.0],
    )


def free_particle_element(mass: float, rapidity: float) -> AlgebraElement:
    """Minimum-action element for a free particle in proper-time gauge.

    The curve parameter is proper time (ds rate 1), so the tangent pair
    is (cosh 2 phi, sinh 2 phi) and the momentum pair is mass times the
    same vector; the coordinate velocity is dq/dt = tanh(2 phi).
    """
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    ch, sh = math.cosh(2 * rapidity), math.sinh(2 * rapidity)
    return lift_kinematics(TangentTriple(ch, sh), MomentumTriple(mass * ch, mass * sh))


def trajectory_action(mass: float, rapidity: float, lambda_span: float, steps: int) -> ActionIntegral:
    """Left-endpoint action integral for a constant free-particle element.

    The integrand p dq - H dt is constant along the worldline, so the
    quadrature order is irrelevant; the step sum exists to tie the rate
    form of the action to its integral form, and the only disagreement
    with -mass * ds * span is summation rounding.
    """
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    if lambda_span <= 0:
        raise ValueError(f"lambda_span must be positive, got {lambda_span}")
    steps = int(steps)
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps}")
    x = free_particle_element(mass, rapidity)
    decomposition = decompose_d2(x)
    rate = decomposition.action_rate
    step = lambda_span / steps
    numeric = float(np.sum(np.full(steps, rate * step)))
    analytic = -mass * decomposition.tangent.ds * lambda_span
    return ActionIntegral(numeric_S=numeric, analytic_S=float(analytic), error=abs(numeric - analytic))


def classify_causal(t: TangentTriple, tol: float = CAUSAL_TOL) -> CausalClass:
    """Classify a tangent triple by the sign of dt**2 - dq**2.

    The interval is recomputed from (dt, dq) so user triples without a
    stored ds are classified consistently.  Triples produced from a real
    element are never spacelike.
    """
    interval = t.dt * t.dt - t.dq * t.dq
    if interval > tol:
        return CausalClass.TIMELIKE
    if interval < -tol:
        return CausalClass.SPACELIKE
    return CausalClass.LIGHTLIKE


# ---------------------------------------------------------------------------
# Projector-path extraction (the grid oracle).


@lru_cache(maxsize=None)
def tangent_component_basis(signature: Signature) -> ComponentBasis:
    """Component carriers for one-generator squares.

    With a unit square the off-diagonal component sits in the plus
    projector half; with square -1 it moves to the minus half and the
    plus half carries the rotation invariant.
    """
    if signature.n != 1:
        raise ValueError(f"tangent basis needs one generator, got signature {signature}")
    plus = diagonal_projector(signature, 1, +1).element
    minus = diagonal_projector(signature, 1, -1).element
    e_bar = basis_pair(signature, 0, 1)
    if signature.squares[0] == 1:
        rows = [("dt", plus), ("dq", tensor_multiply(plus, e_bar)), ("ds", minus)]
    else:
        rows = [
            ("invariant", plus),
            ("vec_1", minus),
            ("vec_e", tensor_multiply(minus, e_bar)),
        ]
    return ComponentBasis(signature, tuple(r[0] for r in rows), tuple(r[1] for r in rows))


@lru_cache(maxsize=None)
def fiber_component_basis(signature: Signature) -> ComponentBasis:
    """Sector component carriers for two-generator fiber algebras.

    Requires e2**2 == +1, which makes the right projector pair exist.
    The carrier layout depends on the square of e1: the off-diagonal
    carriers swap projector halves between the +1 and -1 cases.
    """
    if signature.n != 2 or signature.squares[1] != 1:
        raise ValueError(
            f"fiber basis needs two generators with e2**2 == +1, got signature {signature}"
        )
    plus2, minus2 = idempotent_pair(0b10, signature)
    sector_tt = lift_projectors(plus2, plus2).element
    sector_mm = lift_projectors(minus2, minus2).element
    sector_cross = mixed_projector(plus2, minus2).element
    left_plus = diagonal_projector(signature, 0b01, +1).element
    left_minus = diagonal_projector(signature, 0b01, -1).element
    e1_bar = basis_pair(signature, 0, 0b01)
    e12_bar = basis_pair(signature, 0, 0b11)

    def carrier(left: TensorElement, shift: TensorElement | None, sector: TensorElement) -> TensorElement:
        out = left if shift is None else tensor_multiply(left, shift)
        return tensor_multiply(out, sector)

    if signature.squares[0] == 1:
        rows = [
            ("dt", left_plus, None, sector_tt),
            ("dq", left_plus, e1_bar, sector_tt),
            ("ds", left_minus, None, sector_tt),
            ("H", left_plus, None, sector_mm),
            ("p", left_plus, e1_bar, sector_mm),
            ("m", left_minus, None, sector_mm),
            ("c_plus_1", left_plus, None, sector_cross),
            ("c_plus_e1", left_plus, e1_bar, sector_cross),
            ("c_minus_1", left_minus, None, sector_cross),
            ("c_minus_e12", left_minus, e12_bar, sector_cross),
        ]
    else:
        rows = [
            ("tangent_invariant", left_plus, None, sector_tt),
            ("tangent_vec_1", left_minus, None, sector_tt),
            ("tangent_vec_e1", left_minus, e1_bar, sector_tt),
            ("momentum_invariant", left_plus, None, sector_mm),
            ("momentum_vec_1", left_minus, None, sector_mm),
            ("momentum_vec_e1", left_minus, e1_bar, sector_mm),
            ("cross_invariant_1", left_plus, None, sector_cross),
            ("cross_invariant_e12", left_plus, e12_bar, sector_cross),
            ("cross_vec_1", left_minus, None, sector_cross),
            ("cross_vec_e1", left_minus, e1_bar, sector_cross),
        ]
    names = tuple(r[0] for r in rows)
    tensors = tuple(carrier(r[1], r[2], r[3]) for r in rows)
    return ComponentBasis(signature, names, tensors)


def decompose_c2_projected(x: AlgebraElement) -> TangentTriple:
    """Tangent triple extracted through the grid, never the closed forms."""
    _require_signature(x, TANGENT_SIGNATURE, "decompose_c2_projected")
    comps = tangent_component_basis(x.signature).components(square_embed(x))
    return TangentTriple(comps["dt"], comps["dq"], comps["ds"])


def euclidean_plane_projected(x: AlgebraElement) -> EuclideanComponents:
    """Euclidean plane components extracted through the grid."""
    _require_signature(x, EUCLIDEAN_TANGENT_SIGNATURE, "euclidean_plane_projected")
    comps = tangent_component_basis(x.signature).components(square_embed(x))
    return EuclideanComponents(p_plus_1=comps["invariant"], p_plus_e=comps["vec_e"], p_minus=comps["vec_1"])


def decompose_d2_projected(x: AlgebraElement) -> FiberDecomposition:
    """Fiber decomposition extracted through the grid, never the closed forms.

    The action rate and the minimum-action residual are assembled from
    the extracted components alone: dS = p dq - H dt and residual =
    c_minus_e12**2 / 2.
    """
    _require_signature(x, FIBER_SIGNATURE, "decompose_d2_projected")
    comps = fiber_component_basis(x.signature).components(square_embed(x))
    action = comps["p"] * comps["dq"] - comps["H"] * comps["dt"]
    residual = comps["c_minus_e12"] ** 2 / 2.0
    return FiberDecomposition(
        tangent=TangentTriple(comps["dt"], comps["dq"], comps["ds"]),
        momentum=MomentumTriple(comps["H"], comps["p"], comps["m"]),
        cross=CrossQuad(comps["c_plus_1"], comps["c_plus_e1"], comps["c_minus_1"], comps["c_minus_e12"]),
        action_rate=action,
        min_action_residual=residual,
    )
