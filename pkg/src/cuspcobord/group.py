"""The cobordism group of Morse functions and solvers over it.

Descriptors are cobordant iff their invariants agree; the group of classes
is Z/2 in even dimension and Z in odd dimension, generated by the standard
function on the n-disk whose boundary restriction has exactly two critical
points.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import PreconditionError
from .invariants import (
    CobordismClass,
    SignAssignment,
    chi_plus_sigma,
    cobordism_invariant,
)
from .morse import BoundaryCriticalPoint, MorseDescriptor, validate

__all__ = [
    "is_cobordant",
    "generator",
    "realize_sign_assignment",
    "NoSolution",
    "solve_sigma_for_target",
]


def is_cobordant(d1: MorseDescriptor, d2: MorseDescriptor) -> bool:
    """True iff the two descriptors represent the same cobordism class."""
    if d1.n != d2.n:
        raise PreconditionError(f"dimension mismatch: {d1.n} vs {d2.n}")
    return cobordism_invariant(d1) == cobordism_invariant(d2)


def generator(n: int) -> MorseDescriptor:
    """Standard generator of the degree-n group: a disk with a two-point
    boundary restriction (minimum and maximum, both increasing inward)."""
    if n < 2:
        raise PreconditionError(f"ambient dimension must be >= 2, got {n}")
    boundary = (
        BoundaryCriticalPoint("x0", 0, 1),
        BoundaryCriticalPoint("x1", n - 1, 1),
    )
    return MorseDescriptor(
        n=n,
        oriented=True,
        chi_M=1,
        chi_boundary=1 + (-1) ** (n - 1),
        boundary=boundary,
    )


def realize_sign_assignment(boundary: tuple[BoundaryCriticalPoint, ...],
                            sigma: SignAssignment,
                            n: int,
                            chi_M: int) -> MorseDescriptor:
    """Descriptor with the given boundary points re-signed by ``sigma``.

    The stored signs on the points are overwritten; the interior is left
    without critical points.  The result must validate.
    """
    ids = {p.id for p in boundary}
    if sigma.domain() != ids:
        raise PreconditionError("sign assignment domain mismatch")
    signed = tuple(replace(p, sigma=sigma.sign(p.id)) for p in boundary)
    chi_boundary = sum((-1) ** p.mu for p in signed)
    d = MorseDescriptor(n=n, oriented=True, chi_M=chi_M,
                        chi_boundary=chi_boundary, boundary=signed)
    report = validate(d)
    if not report.ok:
        raise PreconditionError(
            "realized descriptor is invalid: "
            + "; ".join(v.message for v in report.violations))
    return d


@dataclass(frozen=True)
class NoSolution:
    """Certificate that no sign assignment hits the requested class."""

    target: CobordismClass
    attainable: tuple[int, ...]


def solve_sigma_for_target(boundary: tuple[BoundaryCriticalPoint, ...],
                           n: int,
                           chi_M: int,
                           target: CobordismClass):
    """Find a sign assignment whose invariant equals ``target``.

    Returns a SignAssignment, or a NoSolution carrying the set of values
    the invariant can attain on this boundary data.  Up to 20 points the
    search is exhaustive in a fixed order; beyond that the answer is
    constructed directly from the attainable range of chi_plus, which is
    the integer interval [-(odd-index count), +(even-index count)].
    """
    if target.n != n:
        raise PreconditionError(
            f"target dimension {target.n} does not match n={n}")
    pts = sorted(boundary, key=lambda p: p.id)
    ids = [p.id for p in pts]
    if len(set(ids)) != len(ids):
        raise PreconditionError("boundary ids must be distinct")

    def invariant_of(cp: int) -> int:
        v = chi_M - cp
        return v % 2 if n % 2 == 0 else v

    n_even = sum(1 for p in pts if p.mu % 2 == 0)
    n_odd = len(pts) - n_even
    attainable = sorted({invariant_of(cp) for cp in range(-n_odd, n_even + 1)})

    if len(pts) <= 20:
        for bits in range(2 ** len(pts)):
            signs = {}
            for k, p in enumerate(pts):
                bit = (bits >> (len(pts) - 1 - k)) & 1
                signs[p.id] = 1 if bit == 0 else -1
            sigma = SignAssignment(signs)
            cp = chi_plus_sigma(tuple(pts), sigma)
            if invariant_of(cp) == target.value:
                return sigma
        return NoSolution(target=target, attainable=tuple(attainable))

    if target.value not in attainable:
        return NoSolution(target=target, attainable=tuple(attainable))
    # pick the chi_plus value to realize, then assign +1 to just enough
    # points: even-index points raise chi_plus, odd-index points lower it
    wanted = None
    for cp in range(-n_odd, n_even + 1):
        if invariant_of(cp) == target.value:
            wanted = cp
            break
    assert wanted is not None
    signs = {p.id: -1 for p in pts}
    if wanted >= 0:
        quota = wanted
        for p in pts:
            if quota and p.mu % 2 == 0:
                signs[p.id] = 1
                quota -= 1
    else:
        quota = -wanted
        for p in pts:
            if quota and p.mu % 2 == 1:
                signs[p.id] = 1
                quota -= 1
    return SignAssignment(signs)
