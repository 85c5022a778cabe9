"""Combinatorial patterns of fold/cusp singular sets over a 1-manifold.

A generic map of an n-manifold to the plane has a 1-dimensional singular
set: circles and intervals made of fold arcs separated by isolated cusps.
Each fold arc carries an absolute index tau with
ceil((n-1)/2) <= tau <= n-1; each cusp carries a normal index I with
0 <= I <= n-2 and derived absolute index tau = max(I, n-2-I).

Local rules constrain how indices meet:

* at a cusp p the two abutting arcs have indices {tau(p), tau(p)+1},
  except when n is even and tau(p) = n/2 - 1, in which case both abutting
  arcs have index n/2;
* an interval endpoint lying over a boundary critical point x forces the
  end arc to have index max(mu(x), n-1-mu(x)).

Patterns carry no embedding data: they remember only the cyclic/linear
words of arcs and cusps and which boundary critical points bound which
interval.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import PreconditionError
from .invariants import SignAssignment, chi_plus_sigma
from .morse import (
    BoundaryCriticalPoint,
    ValidationReport,
    Violation,
    euler_boundary_sum,
)

__all__ = [
    "CIRCLE",
    "INTERVAL",
    "Cusp",
    "FoldArc",
    "Component",
    "SingularPattern",
    "cusp_tau",
    "endpoint_tau",
    "fold_tau_range",
    "validate_pattern",
    "vector_field_exists",
    "check_condition_even",
    "check_condition_odd",
    "cusp_parity_check",
    "aggregate_even",
    "aggregate_odd",
]

CIRCLE = "circle"
INTERVAL = "interval"


@dataclass(frozen=True)
class Cusp:
    """Cusp point with its normal index I."""

    id: str
    normal_index: int

    def tau(self, n: int) -> int:
        return cusp_tau(self.normal_index, n)


@dataclass(frozen=True)
class FoldArc:
    """Maximal arc of fold points with constant absolute index."""

    id: str
    tau: int


Element = Union[FoldArc, Cusp]


def cusp_tau(normal_index: int, n: int) -> int:
    """Absolute index of a cusp from its normal index."""
    return max(normal_index, n - 2 - normal_index)


def endpoint_tau(mu: int, n: int) -> int:
    """Absolute index forced on an end arc by a boundary critical point."""
    return max(mu, n - 1 - mu)


def fold_tau_range(n: int) -> tuple[int, int]:
    """Admissible absolute indices for fold arcs in ambient dimension n."""
    return (n - 1 + 1) // 2, n - 1


@dataclass(frozen=True)
class Component:
    """One connected component of the singular set.

    ``sequence`` is the word of arcs and cusps along the component.  A
    circle alternates cyclically (so a nonempty cusp set means the word has
    even length, arc first, cusp last, wrapping around); an interval starts
    and ends with an arc.  ``endpoints`` names the two boundary critical
    points an interval ends on, in word order; circles have none.
    """

    kind: str
    sequence: tuple[Element, ...]
    endpoints: Optional[tuple[str, str]] = None

    def __post_init__(self) -> None:
        if self.kind not in (CIRCLE, INTERVAL):
            raise ValueError(f"unknown component kind {self.kind!r}")

    def arcs(self) -> tuple[FoldArc, ...]:
        return tuple(e for e in self.sequence if isinstance(e, FoldArc))

    def cusps(self) -> tuple[Cusp, ...]:
        return tuple(e for e in self.sequence if isinstance(e, Cusp))

    @property
    def cusp_count(self) -> int:
        return sum(1 for e in self.sequence if isinstance(e, Cusp))


@dataclass(frozen=True)
class SingularPattern:
    """A disjoint union of components plus the boundary critical points."""

    n: int
    components: tuple[Component, ...]
    boundary_points: tuple[BoundaryCriticalPoint, ...] = ()
    chi_ambient: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {self.n}")

    def boundary_by_id(self) -> dict[str, BoundaryCriticalPoint]:
        return {p.id: p for p in self.boundary_points}

    @property
    def total_cusps(self) -> int:
        return sum(c.cusp_count for c in self.components)


def _abutting_arcs(comp: Component, pos: int) -> tuple[FoldArc, FoldArc]:
    """Arcs immediately before and after the cusp at word position pos."""
    seq = comp.sequence
    if comp.kind == CIRCLE:
        left = seq[pos - 1]
        right = seq[(pos + 1) % len(seq)]
    else:
        left = seq[pos - 1]
        right = seq[pos + 1]
    assert isinstance(left, FoldArc) and isinstance(right, FoldArc)
    return left, right


def _transition_ok(cusp: Cusp, left: FoldArc, right: FoldArc, n: int) -> bool:
    tc = cusp.tau(n)
    if n % 2 == 0 and tc == n // 2 - 1:
        return left.tau == n // 2 and right.tau == n // 2
    return {left.tau, right.tau} == {tc, tc + 1}


def _alternation_ok(comp: Component) -> bool:
    seq = comp.sequence
    if not seq:
        return False
    if comp.kind == CIRCLE:
        if len(seq) == 1:
            return isinstance(seq[0], FoldArc)
        if len(seq) % 2 != 0:
            return False
        return all(isinstance(e, FoldArc if i % 2 == 0 else Cusp)
                   for i, e in enumerate(seq))
    if len(seq) % 2 != 1:
        return False
    return all(isinstance(e, FoldArc if i % 2 == 0 else Cusp)
               for i, e in enumerate(seq))


# Memoized: patterns and reports are immutable, and rewriting workflows
# re-validate the same pattern many times (once per predicate call).
@functools.lru_cache(maxsize=8192)
def validate_pattern(p: SingularPattern) -> ValidationReport:
    """Check every structural law, reporting each violation with its location."""
    out: list[Violation] = []
    lo, hi = fold_tau_range(p.n)
    by_id = p.boundary_by_id()
    if len(by_id) != len(p.boundary_points):
        out.append(Violation("duplicate-boundary-id",
                             "boundary point ids are not distinct"))
    seen_elt: set[str] = set()
    endpoint_use: dict[str, int] = {pid: 0 for pid in by_id}

    for ci, comp in enumerate(p.components):
        where = f"component {ci}"
        if not comp.sequence:
            out.append(Violation("empty-component", f"{where} has no elements"))
            continue
        if not _alternation_ok(comp):
            out.append(Violation(
                "alternation",
                f"{where} does not alternate arcs and cusps as a "
                f"{comp.kind} must"))
            continue
        for e in comp.sequence:
            if e.id in seen_elt:
                out.append(Violation("duplicate-element-id",
                                     f"id {e.id!r} used twice"))
            seen_elt.add(e.id)
        for e in comp.arcs():
            if not lo <= e.tau <= hi:
                out.append(Violation(
                    "arc-index-range",
                    f"{where}: arc {e.id!r} has tau={e.tau}, outside "
                    f"[{lo}, {hi}]"))
        for e in comp.cusps():
            if not 0 <= e.normal_index <= p.n - 2:
                out.append(Violation(
                    "cusp-index-range",
                    f"{where}: cusp {e.id!r} has I={e.normal_index}, "
                    f"outside [0, {p.n - 2}]"))
        for pos, e in enumerate(comp.sequence):
            if not isinstance(e, Cusp):
                continue
            if not 0 <= e.normal_index <= p.n - 2:
                continue
            left, right = _abutting_arcs(comp, pos)
            if not _transition_ok(e, left, right, p.n):
                out.append(Violation(
                    "cusp-transition",
                    f"{where}: cusp {e.id!r} (I={e.normal_index}, "
                    f"tau={e.tau(p.n)}) abuts arcs of indices "
                    f"{left.tau} and {right.tau}"))

        if comp.kind == CIRCLE:
            if comp.endpoints is not None:
                out.append(Violation(
                    "circle-endpoints",
                    f"{where} is a circle but names endpoints"))
            if p.n % 2 == 1 and comp.cusp_count % 2 == 1:
                out.append(Violation(
                    "odd-circle-cusps",
                    f"{where}: a circle carries {comp.cusp_count} cusps, "
                    f"impossible in odd ambient dimension"))
        else:
            if comp.endpoints is None:
                out.append(Violation(
                    "interval-endpoints-missing",
                    f"{where} is an interval but names no endpoints"))
                continue
            x0, x1 = comp.endpoints
            if x0 == x1:
                out.append(Violation(
                    "interval-endpoints-equal",
                    f"{where}: both ends claim boundary point {x0!r}"))
            for side, pid, arc in ((0, x0, comp.sequence[0]),
                                   (1, x1, comp.sequence[-1])):
                if pid not in by_id:
                    out.append(Violation(
                        "unknown-endpoint",
                        f"{where}: endpoint {pid!r} is not a listed "
                        f"boundary point"))
                    continue
                endpoint_use[pid] += 1
                want = endpoint_tau(by_id[pid].mu, p.n)
                assert isinstance(arc, FoldArc)
                if arc.tau != want:
                    out.append(Violation(
                        "endpoint-index",
                        f"{where}: end arc {arc.id!r} has tau={arc.tau} "
                        f"but boundary point {pid!r} (mu="
                        f"{by_id[pid].mu}) forces {want}"))

    for pid, count in endpoint_use.items():
        if count != 1:
            out.append(Violation(
                "endpoint-multiplicity",
                f"boundary point {pid!r} is an interval endpoint "
                f"{count} times, expected exactly once"))

    return ValidationReport(tuple(out))


def _require_valid(p: SingularPattern) -> None:
    report = validate_pattern(p)
    if not report.ok:
        raise PreconditionError(
            "invalid pattern: " + "; ".join(v.message for v in report.violations))


def _require_sigma(p: SingularPattern, sigma: SignAssignment) -> None:
    ids = {bp.id for bp in p.boundary_points}
    if sigma.domain() != ids:
        raise PreconditionError("sign assignment domain mismatch with pattern")


def vector_field_exists(p: SingularPattern, sigma: SignAssignment) -> bool:
    """Whether a nowhere-zero normal field compatible with the signs exists.

    Componentwise: every circle must carry an even number of cusps, and an
    interval carries an even number iff its two endpoint signs differ.
    """
    _require_valid(p)
    _require_sigma(p, sigma)
    for comp in p.components:
        even = comp.cusp_count % 2 == 0
        if comp.kind == CIRCLE:
            if not even:
                return False
        else:
            x0, x1 = comp.endpoints
            if even != (sigma.sign(x0) != sigma.sign(x1)):
                return False
    return True


def _half_sign_sum(comp: Component, sigma: SignAssignment) -> Fraction:
    if comp.kind == CIRCLE:
        return Fraction(0)
    x0, x1 = comp.endpoints
    return Fraction(sigma.sign(x0) + sigma.sign(x1), 2)


def check_condition_even(p: SingularPattern,
                         sigma: SignAssignment) -> list[bool]:
    """Per-component congruence for even n: cusp count plus half the
    endpoint sign sum must vanish mod 2."""
    if p.n % 2 != 0:
        raise PreconditionError(f"even-dimensional check called with n={p.n}")
    _require_valid(p)
    _require_sigma(p, sigma)
    out = []
    for comp in p.components:
        total = comp.cusp_count + _half_sign_sum(comp, sigma)
        out.append(total % 2 == 0)
    return out


def check_condition_odd(p: SingularPattern,
                        sigma: SignAssignment) -> list[bool]:
    """Per-component equation for odd n: the (-1)^mu-weighted endpoint sign
    sum must vanish.  Circles pass vacuously."""
    if p.n % 2 != 1:
        raise PreconditionError(f"odd-dimensional check called with n={p.n}")
    _require_valid(p)
    _require_sigma(p, sigma)
    by_id = p.boundary_by_id()
    out = []
    for comp in p.components:
        if comp.kind == CIRCLE:
            out.append(True)
            continue
        total = sum((-1) ** by_id[x].mu * sigma.sign(x)
                    for x in comp.endpoints)
        out.append(total == 0)
    return out


def cusp_parity_check(p: SingularPattern,
                      chi_ambient: Optional[int] = None) -> bool:
    """Global parity law: total cusps == chi(ambient) + #boundary/2 (mod 2)."""
    chi = chi_ambient if chi_ambient is not None else p.chi_ambient
    if chi is None:
        raise PreconditionError("no ambient Euler characteristic available")
    k = len(p.boundary_points)
    if k % 2 != 0:
        raise PreconditionError(
            f"{k} boundary points; the count must be even")
    return (p.total_cusps - chi - k // 2) % 2 == 0


def aggregate_even(p: SingularPattern, sigma: SignAssignment,
                   chi_V: int) -> tuple[int, int]:
    """Both sides, as mod-2 residues, of the even-dimensional aggregate
    congruence: chi_V - chi_plus versus the sum of componentwise defects."""
    if p.n % 2 != 0:
        raise PreconditionError(f"even aggregate called with n={p.n}")
    _require_valid(p)
    _require_sigma(p, sigma)
    if not cusp_parity_check(p, chi_V):
        raise PreconditionError(
            "cusp-parity law fails for the given ambient Euler "
            "characteristic; the aggregate congruence presupposes it")
    lhs = (chi_V - chi_plus_sigma(p.boundary_points, sigma)) % 2
    total = Fraction(0)
    for comp in p.components:
        total += comp.cusp_count + _half_sign_sum(comp, sigma)
    assert total.denominator == 1
    rhs = int(total) % 2
    return lhs, rhs


def aggregate_odd(p: SingularPattern,
                  sigma: SignAssignment) -> tuple[Fraction, Fraction]:
    """Both sides of the odd-dimensional aggregate identity:
    chi(boundary)/2 - chi_plus versus -1/2 of the total weighted sign sum."""
    if p.n % 2 != 1:
        raise PreconditionError(f"odd aggregate called with n={p.n}")
    _require_valid(p)
    _require_sigma(p, sigma)
    chi_dV = euler_boundary_sum(p.boundary_points)
    lhs = Fraction(chi_dV, 2) - chi_plus_sigma(p.boundary_points, sigma)
    by_id = p.boundary_by_id()
    total = 0
    for comp in p.components:
        if comp.kind == INTERVAL:
            total += sum((-1) ** by_id[x].mu * sigma.sign(x)
                         for x in comp.endpoints)
    rhs = -Fraction(total, 2)
    return lhs, rhs
