"""Signed abelian group algebras over the reals.

A :class:`Signature` lists the square (+1 or -1) of each commuting
generator ``e_i``.  Basis elements are indexed by subset bitmask: bit
``i`` of the index selects generator ``e_i``, the empty subset is the
multiplicative identity, and the algebra dimension is ``2**n`` for ``n``
generators.  Because the generators commute, the product rule collapses
to

    ``e_S * e_T = basis_sign(S, T) * e_(S xor T)``

where the sign multiplies the squares of the generators shared by the
two subsets.

Coefficients are float64 by default.  Constructing an element from
:class:`fractions.Fraction` values switches it to exact arithmetic,
which the test suite uses to check projector identities without any
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Number

import numpy as np

__all__ = [
    "Signature",
    "AlgebraElement",
    "Idempotent",
    "basis_sign",
    "multiply",
    "idempotent_half",
    "idempotent_pair",
    "right_project",
]

# Absolute slack allowed when checking p*p == p on float coefficients.
IDEMPOTENT_ATOL = 1e-14


@dataclass(frozen=True)
class Signature:
    """Squares of the commuting generators, one entry per generator."""

    squares: tuple[int, ...]

    def __post_init__(self) -> None:
        squares = tuple(int(s) for s in self.squares)
        if not squares:
            raise ValueError("a signature needs at least one generator")
        bad = [s for s in squares if s not in (-1, 1)]
        if bad:
            raise ValueError(f"generator squares must be +1 or -1, got {bad}")
        object.__setattr__(self, "squares", squares)

    @classmethod
    def from_string(cls, text: str) -> Signature:
        """Parse a string of '+'/'-' characters, one per generator.

        'p' and 'm' are accepted as aliases so that signatures starting
        with a minus can be written where a leading '-' would read as a
        command line flag.  The unicode minus is accepted as well.
        """
        table = {"+": 1, "p": 1, "-": -1, "m": -1, "−": -1}
        squares = []
        for ch in text:
            if ch not in table:
                raise ValueError(f"unknown signature character {ch!r} in {text!r}")
            squares.append(table[ch])
        return cls(tuple(squares))

    @property
    def n(self) -> int:
        return len(self.squares)

    @property
    def dim(self) -> int:
        return 1 << len(self.squares)

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.squares)

    def basis_labels(self) -> tuple[str, ...]:
        """Labels in subset-bitmask order: 1, e1, e2, e12, e3, ..."""
        labels = []
        for mask in range(self.dim):
            picked = [str(i + 1) for i in range(self.n) if mask >> i & 1]
            labels.append("e" + "".join(picked) if picked else "1")
        return tuple(labels)

    def doubled(self) -> Signature:
        """Signature of the two-slot product algebra (generators repeated)."""
        return Signature(self.squares + self.squares)

    @cached_property
    def sign_table(self) -> np.ndarray:
        """``sign_table[S, T]`` is the product of squares over ``S & T``."""
        dim = self.dim
        table = np.ones((dim, dim), dtype=np.int8)
        for s in range(dim):
            for t in range(dim):
                shared = s & t
                sign = 1
                for i, square in enumerate(self.squares):
                    if shared >> i & 1 and square < 0:
                        sign = -sign
                table[s, t] = sign
        return table


def _check_mask(signature: Signature, mask: int) -> int:
    mask = int(mask)
    if not 0 <= mask < signature.dim:
        raise ValueError(
            f"basis index {mask} out of range for signature {signature} (dim {signature.dim})"
        )
    return mask


def basis_sign(left_mask: int, right_mask: int, signature: Signature) -> int:
    """Sign picked up by the product of two basis elements.

    Symmetric in its arguments: the generators commute, so only the
    squares of the shared generators contribute.
    """
    left_mask = _check_mask(signature, left_mask)
    right_mask = _check_mask(signature, right_mask)
    return int(signature.sign_table[left_mask, right_mask])


def _coerce_coeffs(values, dim: int) -> np.ndarray:
    arr = np.asarray(values)
    if arr.shape != (dim,):
        raise ValueError(f"expected {dim} coefficients, got shape {arr.shape}")
    if arr.dtype == object:
        arr = arr.copy()
    else:
        arr = arr.astype(np.float64, copy=True)
    arr.setflags(write=False)
    return arr


def _zero_values(dim: int, exact: bool) -> list:
    zero = Fraction(0) if exact else 0.0
    return [zero] * dim


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Dense real element of a signed abelian group algebra.

    ``coeffs[S]`` is the coefficient of the basis element with subset
    bitmask ``S``.  Instances are immutable; all arithmetic returns new
    elements.
    """

    signature: Signature
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _coerce_coeffs(self.coeffs, self.signature.dim))

    @classmethod
    def zero(cls, signature: Signature, exact: bool = False) -> AlgebraElement:
        return cls(signature, np.array(_zero_values(signature.dim, exact), dtype=object if exact else None))

    @classmethod
    def basis(cls, signature: Signature, mask: int, exact: bool = False) -> AlgebraElement:
        """The basis element e_S for subset bitmask ``mask`` (e_0 is 1)."""
        mask = _check_mask(signature, mask)
        values = _zero_values(signature.dim, exact)
        values[mask] = Fraction(1) if exact else 1.0
        return cls(signature, np.array(values, dtype=object if exact else None))

    @classmethod
    def scalar(cls, signature: Signature, value, exact: bool = False) -> AlgebraElement:
        values = _zero_values(signature.dim, exact)
        values[0] = value
        return cls(signature, np.array(values, dtype=object if exact else None))

    @property
    def exact(self) -> bool:
        return self.coeffs.dtype == object

    def coefficient(self, mask: int):
        """Coefficient of e_S; a Python float unless the element is exact."""
        return self.coeffs.item(_check_mask(self.signature, mask))

    def norm_squared(self):
        """Sum of squared coefficients (used to scale tolerances)."""
        total = (self.coeffs * self.coeffs).sum()
        return total if self.exact else float(total)

    def as_float(self) -> AlgebraElement:
        return AlgebraElement(self.signature, np.asarray([float(c) for c in self.coeffs]))

    def _require_same_signature(self, other: AlgebraElement) -> None:
        if self.signature != other.signature:
            raise ValueError(f"signature mismatch: {self.signature} vs {other.signature}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.signature == other.signature and bool(np.array_equal(self.coeffs, other.coeffs))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same_signature(other)
        return AlgebraElement(self.signature, self.coeffs + other.coeffs)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same_signature(other)
        return AlgebraElement(self.signature, self.coeffs - other.coeffs)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.signature, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, Number):
            return AlgebraElement(self.signature, self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return AlgebraElement(self.signature, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return AlgebraElement(self.signature, self.coeffs / other)
        return NotImplemented

    def __str__(self) -> str:
        labels = self.signature.basis_labels()
        parts = []
        for mask, value in enumerate(self.coeffs):
            if value == 0:
                continue
            term = str(value) if mask == 0 else f"{value}*{labels[mask]}"
            parts.append(term)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"AlgebraElement({self.signature}, [{', '.join(str(c) for c in self.coeffs)}])"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Algebra product, the bilinear extension of the basis product rule."""
    a._require_same_signature(b)
    sig = a.signature
    dim = sig.dim
    table = sig.sign_table
    masks = np.arange(dim)
    exact = a.exact or b.exact
    out = np.zeros(dim, dtype=object) if exact else np.zeros(dim)
    bc = b.coeffs
    for s in range(dim):
        cs = a.coeffs[s]
        if cs == 0:
            continue
        # s ^ masks is a permutation, so the fancy index never repeats.
        out[s ^ masks] = out[s ^ masks] + cs * (table[s] * bc)
    return AlgebraElement(sig, out)


@dataclass(frozen=True, eq=False)
class Idempotent:
    """An algebra element validated to satisfy p*p == p at construction."""

    element: AlgebraElement

    def __post_init__(self) -> None:
        p = self.element
        square = multiply(p, p)
        if p.exact:
            if not np.array_equal(square.coeffs, p.coeffs):
                raise ValueError(f"element is not idempotent: ({p})^2 = {square}")
        else:
            deviation = float(np.max(np.abs(square.coeffs - p.coeffs)))
            if deviation > IDEMPOTENT_ATOL:
                raise ValueError(
                    f"element is not idempotent: max |p*p - p| = {deviation:.3e}"
                )

    @property
    def signature(self) -> Signature:
        return self.element.signature


def idempotent_half(mask: int, sign: int, signature: Signature, exact: bool = False) -> Idempotent:
    """The idempotent (1 + sign * e_S) / 2 for a generator subset ``mask``.

    Requires e_S to square to +1; otherwise the element squares to
    (1 + sign * e_S) / 2 - (1 - e_S^2) / 4 and is rejected.
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    mask = _check_mask(signature, mask)
    if basis_sign(mask, mask, signature) != 1:
        labels = signature.basis_labels()
        raise ValueError(
            f"{labels[mask]} squares to -1 under signature {signature}; "
            f"(1 ± {labels[mask]})/2 is not idempotent"
        )
    half = Fraction(1, 2) if exact else 0.5
    values = _zero_values(signature.dim, exact)
    values[0] = values[0] + half
    values[mask] = values[mask] + sign * half
    return Idempotent(AlgebraElement(signature, np.array(values, dtype=object if exact else None)))


def idempotent_pair(mask: int, signature: Signature, exact: bool = False) -> tuple[Idempotent, Idempotent]:
    """The complementary pair (1 + e_S)/2, (1 - e_S)/2."""
    return (
        idempotent_half(mask, +1, signature, exact=exact),
        idempotent_half(mask, -1, signature, exact=exact),
    )


def right_project(x: AlgebraElement, p: Idempotent) -> AlgebraElement:
    """Right action x * p, mapping x into the left ideal carried by p."""
    return multiply(x, p.element)
