"""Positive allowable Lefschetz fibrations over the disk with planar fiber:
allowability, handle-complex homology, fundamental group, and the standard
family of Mazur-type fillings.

The total space of a fibration with fiber an r-holed sphere and m
vanishing cycles has one 0-handle, r-1 one-handles and m two-handles, so
its chain complex is ``Z^m -> Z^(r-1) -> Z`` with the only nonzero map
given by the homology classes of the cycles.

Family conventions (calibrated; see README):
  * fiber S(0,4); alpha = std{1}, beta = std{1,2}, gamma = std{2,3};
  * ``compose(f, g)`` applies g first, and the n-th vanishing cycle is
    the image of gamma under the n-th power of compose(t_gamma, t_beta);
  * the monodromy of ``(c1, ..., cm)`` composes as t_c1 . t_c2 ... t_cm
    (rightmost applied first).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .intmatrix import IntMatrix, cokernel_invariants, det, kernel_rank
from .presentation import Presentation
from .surface import (
    Curve,
    MappingClass,
    PlanarSurface,
    apply,
    compose,
    dehn_twist,
    power,
    standard_curve,
)


class PALFSpec:
    """A planar fiber together with an ordered list of vanishing cycles."""

    __slots__ = ("fiber", "cycles")

    def __init__(self, fiber: PlanarSurface, cycles: Sequence[Curve]):
        cycles = tuple(cycles)
        for c in cycles:
            if c.surface != fiber:
                raise ValueError("vanishing cycle does not live on the fiber")
        self.fiber = fiber
        self.cycles = cycles

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PALFSpec) and self.fiber == other.fiber and self.cycles == other.cycles

    def __hash__(self) -> int:
        return hash((self.fiber, self.cycles))

    def __repr__(self) -> str:
        return f"PALFSpec({self.fiber}, {len(self.cycles)} cycles)"


@dataclass(frozen=True)
class HomologyResult:
    """Integral homology of the total space: (free rank, torsion orders)."""

    h0: tuple[int, tuple[int, ...]]
    h1: tuple[int, tuple[int, ...]]
    h2: tuple[int, tuple[int, ...]]
    euler: int

    @property
    def is_point(self) -> bool:
        trivial = (0, ())
        return self.h0 == (1, ()) and self.h1 == trivial and self.h2 == trivial


def allowable(spec: PALFSpec) -> tuple[bool, int | None]:
    """Check all vanishing cycles are homologically essential in the fiber.

    Returns ``(True, None)`` or ``(False, index of the first offender)``.
    """
    for i, c in enumerate(spec.cycles):
        if c.is_nullhomologous:
            return False, i
    return True, None


def boundary_matrix(spec: PALFSpec) -> IntMatrix:
    """The 2-handle boundary map: column i is the class of cycle i."""
    return IntMatrix.from_columns([c.homology_class for c in spec.cycles], spec.fiber.rank)


def homology(spec: PALFSpec) -> HomologyResult:
    """Homology of the total space from the handle chain complex."""
    d2 = boundary_matrix(spec)
    return HomologyResult(
        h0=(1, ()),
        h1=cokernel_invariants(d2),
        h2=(kernel_rank(d2), ()),
        euler=1 - spec.fiber.rank + len(spec.cycles),
    )


def boundary_is_homology_sphere(spec: PALFSpec) -> bool:
    """True when the total space is a homology ball, so the boundary is a
    homology 3-sphere: square boundary map of determinant +-1."""
    d2 = boundary_matrix(spec)
    return d2.nrows == d2.ncols and det(d2) in (1, -1)


def pi1_presentation(spec: PALFSpec) -> Presentation:
    """Fundamental group of the total space: one relator per vanishing cycle."""
    return Presentation(spec.fiber.group, [c.word for c in spec.cycles])


def total_monodromy(spec: PALFSpec) -> MappingClass:
    """Ordered composite of the positive twists about the vanishing cycles.

    The last listed cycle's twist is applied first; the empty product is
    the identity.
    """
    twists = [dehn_twist(c) for c in spec.cycles]
    return reduce(compose, twists, MappingClass.identity(spec.fiber))


# -- the standard family ----------------------------------------------------

def family_fiber() -> PlanarSurface:
    return PlanarSurface(4)


def family_curves(fiber: PlanarSurface | None = None) -> tuple[Curve, Curve, Curve]:
    """The calibrated fixture curves (alpha, beta, gamma) on S(0,4)."""
    s = fiber if fiber is not None else family_fiber()
    if s.holes != 4:
        raise ValueError("the standard family lives on S(0,4)")
    return (
        standard_curve(s, (1,)),
        standard_curve(s, (1, 2)),
        standard_curve(s, (2, 3)),
    )


def family_twists(fiber: PlanarSurface | None = None) -> tuple[MappingClass, MappingClass, MappingClass]:
    """Twists (t_alpha, t_beta, t_gamma) about the fixture curves."""
    alpha, beta, gamma = family_curves(fiber)
    return dehn_twist(alpha), dehn_twist(beta), dehn_twist(gamma)


def mazur_family(n: int) -> PALFSpec:
    """The n-th member of the family of Mazur-type fillings.

    Vanishing cycles are (alpha, beta, gamma_n) on the 4-holed sphere,
    where gamma_n is the image of gamma under the n-th power of
    ``compose(t_gamma, t_beta)``.  ``n = 0`` (the untwisted gamma) is
    allowed as a degenerate diagnostic.
    """
    if n < 0:
        raise ValueError("family index must be nonnegative")
    s = family_fiber()
    alpha, beta, gamma = family_curves(s)
    phi = compose(dehn_twist(gamma), dehn_twist(beta))
    gamma_n = apply(power(phi, n), gamma)
    return PALFSpec(s, (alpha, beta, gamma_n))
