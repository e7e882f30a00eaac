"""Seeded verification sweeps over the algebra and fiber identities.

Each property draws its own reproducible sample stream, evaluates a
polynomial identity on it, and reports the worst absolute and scaled
residuals.  Residuals are scaled by the dominant sector magnitude (for
example dt**2 for the tangent norm identity), not by the compared values
alone: near light-like elements the identities cancel to zero and a
value-relative quotient would be noise over noise.

The sweep for the two-generator unit-square algebra pits the closed
polynomial forms against the projector-path extraction from the
coefficient grid, which keeps the two routes honest against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, Signature, idempotent_pair, multiply
from .fiber import (
    EUCLIDEAN_FIBER_SIGNATURE,
    EUCLIDEAN_TANGENT_SIGNATURE,
    FIBER_SIGNATURE,
    TANGENT_SIGNATURE,
    MomentumTriple,
    TangentTriple,
    _fiber_parts,
    _tangent_parts,
    factorize,
    fiber_component_basis,
    lift_kinematics,
    tangent_component_basis,
)
from .tensor import (
    lift_projectors,
    mixed_projector,
    tensor_identity,
    tensor_multiply,
)

__all__ = ["PropertyResult", "VerificationReport", "run_verification"]

COEFF_RANGE = 10.0
RAPIDITY_RANGE = 3.0
LOOP_CAP = 20000

# Thresholds of the three-way minimum-action equivalence.
RESIDUAL_GATE = 1e-20
PRODUCT_GATE = 1e-10
ROUNDTRIP_GATE = 1e-13


@dataclass(frozen=True)
class PropertyResult:
    name: str
    samples: int
    max_abs_residual: float
    max_rel_residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "max_abs_residual": self.max_abs_residual,
            "max_rel_residual": self.max_rel_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    signature: str
    samples: int
    seed: int
    tolerance: float
    properties: tuple[PropertyResult, ...]
    passed: bool

    def to_dict(self) -> dict:
        return {
            "config": {
                "signature": self.signature,
                "samples": self.samples,
                "seed": self.seed,
                "tol": self.tolerance,
            },
            "properties": [p.to_dict() for p in self.properties],
            "pass": self.passed,
        }


def _rel(diff: np.ndarray, scale: np.ndarray) -> np.ndarray:
    diff = np.abs(np.asarray(diff, dtype=np.float64))
    scale = np.asarray(scale, dtype=np.float64)
    out = np.zeros_like(diff)
    hot = scale > 0
    out[hot] = diff[hot] / scale[hot]
    out[~hot & (diff > 0)] = np.inf
    return out


def _batch_multiply(signature: Signature, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise algebra product of two (N, dim) coefficient batches.

    ``b`` may also be a single (dim,) element applied to every row.
    """
    dim = signature.dim
    table = signature.sign_table
    constant = b.ndim == 1
    out = np.zeros_like(a)
    for s in range(dim):
        col = a[:, s]
        for t in range(dim):
            bt = b[t] if constant else b[:, t]
            if constant and bt == 0:
                continue
            out[:, s ^ t] += col * (float(table[s, t]) * bt)
    return out


def _embed_flat(coeffs: np.ndarray) -> np.ndarray:
    """Row-major flattened grids of x (x) x for a batch of elements."""
    n, dim = coeffs.shape
    return np.einsum("ni,nj->nij", coeffs, coeffs).reshape(n, dim * dim)


def _result(name: str, samples: int, abs_res: float, rel_res: float, tol: float) -> PropertyResult:
    return PropertyResult(
        name=name,
        samples=samples,
        max_abs_residual=float(abs_res),
        max_rel_residual=float(rel_res),
        tolerance=tol,
        passed=bool(rel_res <= tol),
    )


# ---------------------------------------------------------------------------
# Generic algebra and tensor properties.


def _check_product_laws(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    n = min(samples, LOOP_CAP)
    dim = sig.dim
    a = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (n, dim))
    b = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (n, dim))
    c = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (n, dim))
    ab = _batch_multiply(sig, a, b)
    assoc = _batch_multiply(sig, ab, c) - _batch_multiply(sig, a, _batch_multiply(sig, b, c))
    comm = ab - _batch_multiply(sig, b, a)
    one = np.zeros(dim)
    one[0] = 1.0
    ident = _batch_multiply(sig, a, one) - a
    scale = np.max(np.abs(ab), axis=1) * np.max(np.abs(c), axis=1) + 1.0
    worst_abs = max(float(np.max(np.abs(assoc))), float(np.max(np.abs(comm))), float(np.max(np.abs(ident))))
    worst_rel = max(
        float(np.max(_rel(np.max(np.abs(assoc), axis=1), scale))),
        float(np.max(_rel(np.max(np.abs(comm), axis=1), np.max(np.abs(ab), axis=1) + 1.0))),
        float(np.max(np.abs(ident))),
    )
    return _result("product_laws", n, worst_abs, worst_rel, tol)


def _check_projector_algebra(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    checks = 0
    worst = 0.0
    for exact in (False, True):
        one = AlgebraElement.basis(sig, 0, exact=exact)
        for mask in range(sig.dim):
            if int(sig.sign_table[mask, mask]) != 1:
                continue
            plus, minus = idempotent_pair(mask, sig, exact=exact)
            total = plus.element + minus.element - one
            prod = multiply(plus.element, minus.element)
            sq = multiply(plus.element, plus.element) - plus.element
            for elem in (total, prod, sq):
                worst = max(worst, float(max(abs(v) for v in elem.coeffs)))
                checks += 1
    if sig.n == 2 and sig.squares[1] == 1:
        plus2, minus2 = idempotent_pair(0b10, sig)
        sectors = (
            lift_projectors(plus2, plus2).element,
            mixed_projector(plus2, minus2).element,
            lift_projectors(minus2, minus2).element,
        )
        total = sectors[0] + sectors[1] + sectors[2] - tensor_identity(sig)
        worst = max(worst, float(np.max(np.abs(total.grid))))
        for i in range(3):
            for j in range(i + 1, 3):
                prod = tensor_multiply(sectors[i], sectors[j])
                worst = max(worst, float(np.max(np.abs(prod.grid))))
                checks += 1
        checks += 1
    return _result("projector_algebra", checks, worst, worst, tol)


def _check_embed_homomorphism(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    n = min(samples, LOOP_CAP)
    dim = sig.dim
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (n, dim))
    u = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (n, dim))
    doubled = sig.doubled()
    lhs = _batch_multiply(doubled, _embed_flat(x), _embed_flat(u))
    rhs = _embed_flat(_batch_multiply(sig, x, u))
    diff = np.max(np.abs(lhs - rhs), axis=1)
    scale = np.max(np.abs(rhs), axis=1) + 1.0
    return _result(
        "embed_homomorphism", n, float(np.max(diff)), float(np.max(_rel(diff, scale))), tol
    )


def _check_sector_completeness(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    dim = sig.dim
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, dim))
    flat = _embed_flat(x)
    doubled = sig.doubled()
    plus2, minus2 = idempotent_pair(0b10, sig)
    sectors = (
        lift_projectors(plus2, plus2).element,
        mixed_projector(plus2, minus2).element,
        lift_projectors(minus2, minus2).element,
    )
    total = np.zeros_like(flat)
    for sector in sectors:
        total += _batch_multiply(doubled, flat, np.asarray(sector.grid, dtype=np.float64).ravel())
    diff = np.max(np.abs(total - flat), axis=1)
    scale = np.max(np.abs(flat), axis=1)
    return _result(
        "sector_completeness", samples, float(np.max(diff)), float(np.max(_rel(diff, scale))), tol
    )


# ---------------------------------------------------------------------------
# Tangent algebra properties (one generator, square +1).


def _check_tangent_norm(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 2))
    dt, dq, ds = _tangent_parts(x[:, 0], x[:, 1])
    diff = ds * ds - (dt * dt - dq * dq)
    rel = _rel(diff, dt * dt)
    return _result("tangent_norm_identity", samples, float(np.max(np.abs(diff))), float(np.max(rel)), tol)


def _check_tangent_max_speed(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 2))
    dt, dq, _ = _tangent_parts(x[:, 0], x[:, 1])
    excess = np.maximum(np.abs(dq) - dt, 0.0)
    negative = np.maximum(-dt, 0.0)
    worst = np.maximum(excess, negative)
    rel = _rel(worst, np.maximum(dt, 1.0))
    return _result("tangent_max_speed", samples, float(np.max(worst)), float(np.max(rel)), tol)


def _check_tangent_boost(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 2))
    phi = rng.uniform(-RAPIDITY_RANGE, RAPIDITY_RANGE, samples)
    u = np.stack([np.cosh(phi), np.sinh(phi)], axis=1)
    xu = _batch_multiply(sig, x, u)
    dt0, dq0, ds0 = _tangent_parts(x[:, 0], x[:, 1])
    dt1, dq1, ds1 = _tangent_parts(xu[:, 0], xu[:, 1])
    ch, sh = np.cosh(2 * phi), np.sinh(2 * phi)
    rel = np.max(
        np.stack(
            [
                _rel(ds1 - ds0, np.maximum(dt0, dt1)),
                _rel(dt1 - (ch * dt0 + sh * dq0), np.maximum(dt1, dt0)),
                _rel(dq1 - (sh * dt0 + ch * dq0), np.maximum(dt1, dt0)),
            ]
        ),
        axis=0,
    )
    worst_abs = float(np.max(np.abs(ds1 - ds0)))
    return _result("boost_invariance", samples, worst_abs, float(np.max(rel)), tol)


def _check_tangent_oracle(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 2))
    basis = tangent_component_basis(sig)
    comps = basis.components_batch(_embed_flat(x))
    dt, dq, ds = _tangent_parts(x[:, 0], x[:, 1])
    closed = np.stack([dt, dq, ds], axis=1)
    diff = np.max(np.abs(comps - closed), axis=1)
    recon = basis.reconstruction_residual_batch(_embed_flat(x))
    scale = dt + 1.0
    worst = np.maximum(diff, recon)
    return _result(
        "oracle_equivalence", samples, float(np.max(worst)), float(np.max(_rel(worst, scale))), tol
    )


# ---------------------------------------------------------------------------
# Fiber properties (two generators, squares (+1, +1)).


def _check_fiber_norms(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    tangent = f.ds * f.ds - (f.dt * f.dt - f.dq * f.dq)
    momentum = f.m * f.m - (f.H * f.H - f.p * f.p)
    rel = np.maximum(_rel(tangent, f.dt * f.dt), _rel(momentum, f.H * f.H))
    worst_abs = max(float(np.max(np.abs(tangent))), float(np.max(np.abs(momentum))))
    return _result("norm_identities", samples, worst_abs, float(np.max(rel)), tol)


def _check_fiber_max_speed(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    worst = np.maximum(np.abs(f.dq) - f.dt, np.abs(f.p) - f.H)
    worst = np.maximum(worst, np.maximum(-f.dt, -f.H))
    worst = np.maximum(worst, 0.0)
    rel = _rel(worst, np.maximum(np.maximum(f.dt, f.H), 1.0))
    return _result("max_speed", samples, float(np.max(worst)), float(np.max(rel)), tol)


def _check_cross_squares(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    hdt, pdq, mds = f.H * f.dt, f.p * f.dq, f.m * f.ds
    scale = hdt + 1e-300
    combos = (
        2 * f.c_plus_1**2 - (hdt + pdq + mds),
        2 * f.c_plus_e1**2 - (hdt + pdq - mds),
        2 * f.c_minus_1**2 - (hdt - pdq + mds),
        2 * f.c_minus_e12**2 - (hdt - pdq - mds),
    )
    worst_abs = max(float(np.max(np.abs(c))) for c in combos)
    worst_rel = max(float(np.max(_rel(c, scale))) for c in combos)
    return _result("cross_square_identities", samples, worst_abs, worst_rel, tol)


def _minimal_samples(rng, count: int) -> np.ndarray:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (count, 4))
    sign = np.where(rng.uniform(size=count) < 0.5, -1.0, 1.0)
    x[:, 0] = sign * rng.uniform(0.1, COEFF_RANGE, count)
    x[:, 3] = x[:, 1] * x[:, 2] / x[:, 0]
    return x


def _exact_minimal_samples(rng, count: int) -> np.ndarray:
    """Minimal elements whose construction is exact in floats.

    Dyadic coefficients and a power-of-two scalar part make x1*x2/x0
    exact, so x0*x3 == x1*x2 holds with no rounding; identities stated
    at exact minimality can then be checked at full strictness.
    """
    x = np.empty((count, 4))
    sign = np.where(rng.uniform(size=count) < 0.5, -1.0, 1.0)
    x[:, 0] = sign * 2.0 ** rng.integers(-3, 4, count)
    x[:, 1] = rng.integers(-2560, 2561, count) / 256.0
    x[:, 2] = rng.integers(-2560, 2561, count) / 256.0
    x[:, 3] = x[:, 1] * x[:, 2] / x[:, 0]
    return x


def _min_action_flags(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    norm_sq = np.sum(x * x, axis=1)
    by_residual = f.residual <= RESIDUAL_GATE * norm_sq * norm_sq
    by_product = np.abs(x[:, 0] * x[:, 3] - x[:, 1] * x[:, 2]) <= PRODUCT_GATE * norm_sq
    recon_gap = np.abs(x[:, 1] * x[:, 2] / x[:, 0] - x[:, 3])
    by_roundtrip = recon_gap <= ROUNDTRIP_GATE * np.max(np.abs(x), axis=1)
    return by_residual, by_product, by_roundtrip


def _check_min_action_equivalence(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    half = max(samples // 2, 1)
    minimal = _minimal_samples(rng, half)
    generic = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (half, 4))
    disagreements = 0
    for block in (minimal, generic):
        a, b, c = _min_action_flags(block)
        disagreements += int(np.sum(a != b)) + int(np.sum(b != c))
    # Spot-check the scalar API against the vectorized gates.
    for row in minimal[:25]:
        factorization = factorize(AlgebraElement(sig, row))
        gap = np.max(np.abs(factorization.reconstruct().coeffs - row))
        if gap > ROUNDTRIP_GATE * np.max(np.abs(row)):
            disagreements += 1
    for row in generic[:25]:
        element = AlgebraElement(sig, row)
        minimal_flag = abs(row[0] * row[3] - row[1] * row[2]) <= PRODUCT_GATE * float(np.sum(row * row))
        try:
            factorize(element)
            factored = True
        except ValueError:
            factored = False
        if factored != minimal_flag:
            disagreements += 1
    residual = float(disagreements)
    return _result("min_action_equivalence", 2 * half, residual, residual, tol if tol >= 1 else 0.5)


def _check_min_action_rate(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = _exact_minimal_samples(rng, samples)
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    diff = f.action_rate + f.m * f.ds
    rel = _rel(diff, f.H * f.dt + 1e-300)
    return _result("min_action_rate", samples, float(np.max(np.abs(diff))), float(np.max(rel)), tol)


def _check_fiber_boost(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    phi = rng.uniform(-RAPIDITY_RANGE, RAPIDITY_RANGE, samples)
    u = np.zeros((samples, 4))
    u[:, 0] = np.cosh(phi)
    u[:, 1] = np.sinh(phi)
    xu = _batch_multiply(sig, x, u)
    f0 = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    f1 = _fiber_parts(xu[:, 0], xu[:, 1], xu[:, 2], xu[:, 3])
    ch, sh = np.cosh(2 * phi), np.sinh(2 * phi)
    # dt + H is twice the squared coefficient norm.  A sector more than
    # four decades below it sits under the coefficient rounding noise and
    # can only be measured against the element, not against itself.
    floor = 1e-4 * np.maximum(f0.dt + f0.H, f1.dt + f1.H)
    tangent_scale = np.maximum(np.maximum(f0.dt, f1.dt), floor)
    momentum_scale = np.maximum(np.maximum(f0.H, f1.H), floor)
    cross_scale = np.maximum(np.sqrt(np.maximum(f0.H * f0.dt, f1.H * f1.dt)), floor)
    action_scale = np.maximum(np.maximum(f0.H * f0.dt, f1.H * f1.dt), floor * floor)
    residuals = [
        _rel(f1.ds - f0.ds, tangent_scale),
        _rel(f1.m - f0.m, momentum_scale),
        _rel(f1.c_minus_1 - f0.c_minus_1, cross_scale),
        _rel(f1.c_minus_e12 - f0.c_minus_e12, cross_scale),
        _rel(f1.action_rate - f0.action_rate, action_scale),
        _rel(f1.dt - (ch * f0.dt + sh * f0.dq), tangent_scale),
        _rel(f1.dq - (sh * f0.dt + ch * f0.dq), tangent_scale),
        _rel(f1.H - (ch * f0.H + sh * f0.p), momentum_scale),
        _rel(f1.p - (sh * f0.H + ch * f0.p), momentum_scale),
        _rel(f1.c_plus_1 - (ch * f0.c_plus_1 + sh * f0.c_plus_e1), cross_scale),
        _rel(f1.c_plus_e1 - (sh * f0.c_plus_1 + ch * f0.c_plus_e1), cross_scale),
    ]
    worst_abs = float(np.max(np.abs(f1.ds - f0.ds)))
    worst_rel = max(float(np.max(r)) for r in residuals)
    return _result("boost_invariance", samples, worst_abs, worst_rel, tol)


def _check_fiber_oracle(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    basis = fiber_component_basis(sig)
    flat = _embed_flat(x)
    comps = basis.components_batch(flat)
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    closed = np.stack(
        [f.dt, f.dq, f.ds, f.H, f.p, f.m, f.c_plus_1, f.c_plus_e1, f.c_minus_1, f.c_minus_e12],
        axis=1,
    )
    diff = np.max(np.abs(comps - closed), axis=1)
    recon = basis.reconstruction_residual_batch(flat)
    worst = np.maximum(diff, recon)
    scale = f.dt + f.H + 1e-300
    return _result(
        "oracle_equivalence", samples, float(np.max(worst)), float(np.max(_rel(worst, scale))), tol
    )


def _check_lift_round_trip(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    f = _fiber_parts(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    sum_root = np.sqrt(f.dt + f.dq)
    diff_root = np.sqrt(f.dt - f.dq)
    a, b = (sum_root + diff_root) / 2, (sum_root - diff_root) / 2
    sum_root = np.sqrt(f.H + f.p)
    diff_root = np.sqrt(f.H - f.p)
    c, d = (sum_root + diff_root) / 2, (sum_root - diff_root) / 2
    lifted = np.stack([(a + c) / 2, (b + d) / 2, (a - c) / 2, (b - d) / 2], axis=1)
    g = _fiber_parts(lifted[:, 0], lifted[:, 1], lifted[:, 2], lifted[:, 3])
    # lifted coefficients hold sector sums, so a sector far below the
    # element magnitude cannot round-trip relative to itself
    floor = 1e-4 * (f.dt + f.H)
    rel = np.max(
        np.stack(
            [
                _rel(g.dt - f.dt, np.maximum(f.dt, floor)),
                _rel(g.dq - f.dq, np.maximum(f.dt, floor)),
                _rel(g.H - f.H, np.maximum(f.H, floor)),
                _rel(g.p - f.p, np.maximum(f.H, floor)),
            ]
        ),
        axis=0,
    )
    worst_abs = float(np.max(np.abs(g.dt - f.dt)))
    for row in x[:25]:
        parts = _fiber_parts(*row)
        element = lift_kinematics(
            TangentTriple(float(parts.dt), float(parts.dq)),
            MomentumTriple(float(parts.H), float(parts.p)),
        )
        back = _fiber_parts(*[float(v) for v in element.coeffs])
        gap = max(
            abs(back.dt - parts.dt) / max(parts.dt, 1.0),
            abs(back.H - parts.H) / max(parts.H, 1.0),
        )
        rel = np.append(rel, gap)
    return _result("lift_round_trip", samples, worst_abs, float(np.max(rel)), tol)


# ---------------------------------------------------------------------------
# Euclidean properties.


def _check_plane_rotation(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 2))
    theta = rng.uniform(-np.pi, np.pi, samples)
    u = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    xu = _batch_multiply(sig, x, u)
    before = x[:, 0] ** 2 + x[:, 1] ** 2
    after = xu[:, 0] ** 2 + xu[:, 1] ** 2
    diff = after - before
    rel = _rel(diff, np.maximum(before, after))
    return _result("rotation_invariance", samples, float(np.max(np.abs(diff))), float(np.max(rel)), tol)


def _check_plane_oracle(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 2))
    basis = tangent_component_basis(sig)
    comps = basis.components_batch(_embed_flat(x))
    closed = np.stack(
        [x[:, 0] ** 2 + x[:, 1] ** 2, x[:, 0] ** 2 - x[:, 1] ** 2, 2 * x[:, 0] * x[:, 1]], axis=1
    )
    diff = np.max(np.abs(comps - closed), axis=1)
    scale = closed[:, 0] + 1.0
    return _result(
        "oracle_equivalence", samples, float(np.max(diff)), float(np.max(_rel(diff, scale))), tol
    )


def _euclidean_fiber_closed(x: np.ndarray) -> np.ndarray:
    """Hand-derived sector components for squares (-1, +1)."""
    a, b = x[:, 0] + x[:, 2], x[:, 1] + x[:, 3]
    c, d = x[:, 0] - x[:, 2], x[:, 1] - x[:, 3]
    return np.stack(
        [
            a * a + b * b,
            a * a - b * b,
            2 * a * b,
            c * c + d * d,
            c * c - d * d,
            2 * c * d,
            c * a + d * b,
            c * b - d * a,
            c * a - d * b,
            c * b + d * a,
        ],
        axis=1,
    )


def _check_euclidean_fiber_oracle(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    basis = fiber_component_basis(sig)
    flat = _embed_flat(x)
    comps = basis.components_batch(flat)
    closed = _euclidean_fiber_closed(x)
    diff = np.max(np.abs(comps - closed), axis=1)
    recon = basis.reconstruction_residual_batch(flat)
    worst = np.maximum(diff, recon)
    scale = closed[:, 0] + closed[:, 3] + 1e-300
    return _result(
        "oracle_equivalence", samples, float(np.max(worst)), float(np.max(_rel(worst, scale))), tol
    )


def _check_euclidean_fiber_rotation(sig: Signature, rng, samples: int, tol: float) -> PropertyResult:
    x = rng.uniform(-COEFF_RANGE, COEFF_RANGE, (samples, 4))
    theta = rng.uniform(-np.pi, np.pi, samples)
    u = np.zeros((samples, 4))
    u[:, 0] = np.cos(theta)
    u[:, 1] = np.sin(theta)
    xu = _batch_multiply(sig, x, u)
    basis = fiber_component_basis(sig)
    before = basis.components_batch(_embed_flat(x))
    after = basis.components_batch(_embed_flat(xu))
    names = basis.names
    idx = {name: names.index(name) for name in names}
    size0 = before[:, idx["tangent_invariant"]] + before[:, idx["momentum_invariant"]]
    size1 = after[:, idx["tangent_invariant"]] + after[:, idx["momentum_invariant"]]
    floor = 1e-4 * np.maximum(size0, size1)
    tangent_scale = np.maximum(
        np.maximum(before[:, idx["tangent_invariant"]], after[:, idx["tangent_invariant"]]), floor
    )
    momentum_scale = np.maximum(
        np.maximum(before[:, idx["momentum_invariant"]], after[:, idx["momentum_invariant"]]), floor
    )
    cross_scale = np.maximum(np.sqrt(np.abs(tangent_scale * momentum_scale)), floor)
    residuals = [
        _rel(after[:, idx["tangent_invariant"]] - before[:, idx["tangent_invariant"]], tangent_scale),
        _rel(after[:, idx["momentum_invariant"]] - before[:, idx["momentum_invariant"]], momentum_scale),
        _rel(after[:, idx["cross_invariant_1"]] - before[:, idx["cross_invariant_1"]], cross_scale),
        _rel(after[:, idx["cross_invariant_e12"]] - before[:, idx["cross_invariant_e12"]], cross_scale),
    ]
    worst_abs = float(
        np.max(np.abs(after[:, idx["tangent_invariant"]] - before[:, idx["tangent_invariant"]]))
    )
    worst_rel = max(float(np.max(r)) for r in residuals)
    return _result("rotation_invariance", samples, worst_abs, worst_rel, tol)


# ---------------------------------------------------------------------------
# Registry and entry point.


def _checks_for(sig: Signature):
    checks = [_check_product_laws, _check_projector_algebra, _check_embed_homomorphism]
    if sig == TANGENT_SIGNATURE:
        checks += [
            _check_tangent_norm,
            _check_tangent_max_speed,
            _check_tangent_boost,
            _check_tangent_oracle,
        ]
    elif sig == FIBER_SIGNATURE:
        checks += [
            _check_sector_completeness,
            _check_fiber_norms,
            _check_fiber_max_speed,
            _check_cross_squares,
            _check_min_action_equivalence,
            _check_min_action_rate,
            _check_fiber_boost,
            _check_fiber_oracle,
            _check_lift_round_trip,
        ]
    elif sig == EUCLIDEAN_TANGENT_SIGNATURE:
        checks += [_check_plane_rotation, _check_plane_oracle]
    elif sig == EUCLIDEAN_FIBER_SIGNATURE:
        checks += [
            _check_sector_completeness,
            _check_euclidean_fiber_oracle,
            _check_euclidean_fiber_rotation,
        ]
    return checks


def run_verification(signature: Signature | str, samples: int, seed: int, tol: float) -> VerificationReport:
    """Run every identity sweep applicable to the signature.

    Deterministic for a fixed (signature, samples, seed, tol): each
    property draws from its own seed stream, so adding or removing
    properties never perturbs the others.
    """
    if isinstance(signature, str):
        signature = Signature.from_string(signature)
    samples = int(samples)
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    results = []
    for index, check in enumerate(_checks_for(signature)):
        rng = np.random.default_rng([seed, index])
        results.append(check(signature, rng, samples, tol))
    return VerificationReport(
        signature=str(signature),
        samples=samples,
        seed=seed,
        tolerance=tol,
        properties=tuple(results),
        passed=all(r.passed for r in results),
    )
