"""Clifford dimension function, Radon-Hurwitz numbers, and their duality."""

from __future__ import annotations

# delta(1..8); delta(m + 8) = 16 * delta(m)
DELTA_TABLE = (1, 2, 4, 4, 8, 8, 8, 8)


def delta(m: int) -> int:
    """Half the dimension of an irreducible representation of Cl^{0,m+1}."""
    if m < 1:
        raise ValueError(f"delta is defined for m >= 1, got {m}")
    periods, r = divmod(m - 1, 8)
    return DELTA_TABLE[r] * 16**periods


def radon_hurwitz(N: int) -> int:
    """rho(N): S^{N-1} carries exactly rho(N) - 1 independent vector fields.

    Writes N = odd * 2^(4c + b) with 0 <= b <= 3 and returns 2^b + 8c.
    """
    if N < 1:
        raise ValueError(f"radon_hurwitz is defined for N >= 1, got {N}")
    two_adic = (N & -N).bit_length() - 1
    c, b = divmod(two_adic, 4)
    return 2**b + 8 * c


def delta_divides(ell: int, N: int) -> bool:
    """True iff delta(ell) divides N.

    ``ell == 0`` is always true (delta(0) is taken to be 1), which makes the
    divisibility condition on ``delta(m_minus - 1)`` vacuous for ``m_minus == 1``.
    """
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if ell == 0:
        return True
    return N % delta(ell) == 0
