"""Hand-rolled reference models, kept independent of the package kernels.

The group model multiplies basis elements by walking generator lists and
cancelling repeated generators against their squares, with no bitmask
arithmetic, so agreement with the packed implementation is meaningful.
"""

from fractions import Fraction


def mask_to_generators(mask: int) -> list[int]:
    gens = []
    i = 0
    while mask:
        if mask & 1:
            gens.append(i)
        mask >>= 1
        i += 1
    return gens


def generators_to_mask(gens) -> int:
    mask = 0
    for g in gens:
        mask |= 1 << g
    return mask


def reference_basis_product(left_mask: int, right_mask: int, squares) -> tuple[int, int]:
    """(sign, result mask) for e_S * e_T by explicit cancellation."""
    acc = mask_to_generators(left_mask)
    sign = 1
    for g in mask_to_generators(right_mask):
        if g in acc:
            acc.remove(g)
            sign *= squares[g]
        else:
            acc.append(g)
    return sign, generators_to_mask(acc)


def reference_multiply(a_coeffs, b_coeffs, squares) -> list:
    """Bilinear extension of the reference basis product."""
    dim = len(a_coeffs)
    out = [Fraction(0) if isinstance(a_coeffs[0], Fraction) else 0.0] * dim
    for s, ca in enumerate(a_coeffs):
        if ca == 0:
            continue
        for t, cb in enumerate(b_coeffs):
            if cb == 0:
                continue
            sign, target = reference_basis_product(s, t, squares)
            out[target] = out[target] + sign * ca * cb
    return out


def all_signatures(max_generators: int = 3):
    """Every square assignment with 1..max_generators generators."""
    for n in range(1, max_generators + 1):
        for bits in range(1 << n):
            yield tuple(-1 if bits >> i & 1 else 1 for i in range(n))
