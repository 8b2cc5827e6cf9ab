"""Planar surfaces, simple closed curves, and Dehn twists as free-group
automorphisms.

Model and conventions
---------------------
A planar surface with ``r`` holes has fundamental group free on
``x1 .. x(r-1)``, where ``xi`` loops once around hole ``i`` and the
basepoint sits on the outer boundary (hole ``r``).  The outer boundary
word is ``delta = x1 x2 ... x(r-1)``.

A positive Dehn twist about a curve in standard position enclosing a
consecutive run of holes ``i..j`` sends each enclosed generator ``xk``
to ``c xk c^-1`` with ``c = xi ... xj`` and fixes the rest.  Curves
enclosing a non-consecutive hole set are not twistable in this direct
form (the conjugation recipe is no longer induced by a homeomorphism);
build their twists through :func:`twist_of_image` instead, e.g. from a
:func:`half_twist` image.  Mapping classes compose right to left:
``compose(f, g)`` applies ``g`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Sequence, Union

from .words import FreeGroup, Word, are_conjugate, substitute

OVER = "over"
UNDER = "under"


class UnsupportedCurveError(ValueError):
    """The curve is not in a position the direct twist formula supports."""


class PlanarSurface:
    """A genus-zero surface with ``holes`` boundary components."""

    __slots__ = ("holes", "group", "delta")

    def __init__(self, holes: int):
        if holes < 1:
            raise ValueError("a planar surface needs at least one hole")
        self.holes = holes
        self.group = FreeGroup(holes - 1)
        self.delta = Word(self.group, range(1, holes))

    @property
    def rank(self) -> int:
        return self.holes - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarSurface) and self.holes == other.holes

    def __hash__(self) -> int:
        return hash(("PlanarSurface", self.holes))

    def __repr__(self) -> str:
        return f"PlanarSurface(holes={self.holes})"

    def __str__(self) -> str:
        return f"S(0,{self.holes})"


@dataclass(frozen=True)
class StandardPosition:
    """Provenance of a standard-position curve: enclosed holes and, for
    each skipped hole between them, whether the curve passes over it."""

    holes: tuple[int, ...]
    sides: tuple[tuple[int, str], ...] = ()


@dataclass(frozen=True)
class ImagePosition:
    """Provenance of a curve obtained as a mapping-class image."""

    phi: "MappingClass"
    base: "Curve"


class Curve:
    """A simple closed curve recorded by a representative word in pi1.

    Isotopy is not decided; two Curve values describe the same free
    homotopy class when their words are conjugate (see
    :meth:`is_equivalent`).
    """

    __slots__ = ("surface", "word", "homology_class", "provenance")

    def __init__(
        self,
        surface: PlanarSurface,
        word: Word,
        provenance: StandardPosition | ImagePosition | None = None,
    ):
        if word.group != surface.group:
            raise ValueError("curve word does not live on the surface")
        self.surface = surface
        self.word = word
        self.homology_class = word.exponent_vector()
        self.provenance = provenance

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Curve) and self.surface == other.surface and self.word == other.word

    def __hash__(self) -> int:
        return hash((self.surface, self.word))

    def __repr__(self) -> str:
        return f"Curve({self.word!s})"

    def is_equivalent(self, other: Curve) -> bool:
        """True when the representative words are conjugate."""
        if self.surface != other.surface:
            return False
        return are_conjugate(self.word, other.word)

    @property
    def is_nullhomologous(self) -> bool:
        return not any(self.homology_class)


def standard_curve(
    surface: PlanarSurface,
    holes: Sequence[int],
    side_choices: Mapping[int, str] | None = None,
) -> Curve:
    """A curve in standard position enclosing the given holes.

    The word is the product of the enclosed generators in hole order;
    a generator reached by passing *over* an intervening skipped hole is
    conjugated by the skipped generators, e.g. holes ``{1, 3}`` with
    hole 2 flagged ``over`` gives ``x1 (x2 x3 x2^-1)`` while ``under``
    gives ``x1 x3``.  A set containing the outer hole ``r`` is replaced
    by its complement, which describes the same curve.
    """
    hole_set = set(holes)
    if not hole_set:
        raise ValueError("a curve must enclose at least one hole")
    for h in hole_set:
        if not 1 <= h <= surface.holes:
            raise ValueError(f"hole {h} out of range on {surface}")
    if surface.holes in hole_set:
        hole_set = set(range(1, surface.holes + 1)) - hole_set
        if not hole_set:
            raise ValueError("a curve enclosing every hole is nullhomotopic")

    enclosed = sorted(hole_set)
    skipped = [h for h in range(enclosed[0] + 1, enclosed[-1]) if h not in hole_set]
    sides = dict(side_choices or {})
    unknown = set(sides) - set(skipped)
    if unknown:
        raise ValueError(f"side choices given for non-skipped holes {sorted(unknown)}")
    missing = [h for h in skipped if h not in sides]
    if missing:
        raise ValueError(f"side choices required for skipped holes {missing}")
    bad = {h: s for h, s in sides.items() if s not in (OVER, UNDER)}
    if bad:
        raise ValueError(f"side choices must be '{OVER}' or '{UNDER}', got {bad}")

    letters: list[int] = []
    prev = enclosed[0]
    for h in enclosed:
        gap_over = [s for s in range(prev + 1, h) if sides.get(s) == OVER]
        letters.extend(gap_over)
        letters.append(h)
        letters.extend(-s for s in reversed(gap_over))
        prev = h
    word = Word(surface.group, letters)
    provenance = StandardPosition(tuple(enclosed), tuple(sorted(sides.items())))
    return Curve(surface, word, provenance)


class MappingClass:
    """An automorphism of the surface group with a stored inverse.

    Construction verifies that the two image lists are mutually inverse
    and that the outer boundary word ``delta`` maps to a conjugate of
    itself; both are required of any homeomorphism-induced map in this
    model.
    """

    __slots__ = ("surface", "images", "inverse_images")

    def __init__(self, surface: PlanarSurface, images: Sequence[Word], inverse_images: Sequence[Word]):
        images = tuple(images)
        inverse_images = tuple(inverse_images)
        rank = surface.rank
        if len(images) != rank or len(inverse_images) != rank:
            raise ValueError(f"need {rank} generator images and inverse images")
        for w in images + inverse_images:
            if w.group != surface.group:
                raise ValueError("image word does not live on the surface")
        for i in range(rank):
            gen = surface.group.generator(i)
            if substitute(inverse_images[i], images) != gen:
                raise ValueError("stored inverse is not a left inverse")
            if substitute(images[i], inverse_images) != gen:
                raise ValueError("stored inverse is not a right inverse")
        if not are_conjugate(substitute(surface.delta, images), surface.delta):
            raise ValueError("map does not preserve the boundary word up to conjugacy")
        self.surface = surface
        self.images = images
        self.inverse_images = inverse_images

    @classmethod
    def identity(cls, surface: PlanarSurface) -> MappingClass:
        gens = surface.group.generators()
        return cls(surface, gens, gens)

    @classmethod
    def _trusted(cls, surface: PlanarSurface, images: tuple[Word, ...], inverse_images: tuple[Word, ...]) -> MappingClass:
        # skip validation: used only where validity is inherited, e.g. when
        # composing or inverting maps that were themselves validated
        self = object.__new__(cls)
        self.surface = surface
        self.images = images
        self.inverse_images = inverse_images
        return self

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MappingClass)
            and self.surface == other.surface
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.surface, self.images))

    def __repr__(self) -> str:
        body = ", ".join(f"{n} -> {w}" for n, w in zip(self.surface.group.names, self.images))
        return f"MappingClass({body})"

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(self.surface.group.generators())

    def __call__(self, word: Word) -> Word:
        if word.group != self.surface.group:
            raise ValueError("word does not live on the surface")
        return substitute(word, self.images)

    def inverse(self) -> MappingClass:
        return MappingClass._trusted(self.surface, self.inverse_images, self.images)


def compose(phi: MappingClass, psi: MappingClass) -> MappingClass:
    """The composite ``phi after psi``: (phi psi)(w) = phi(psi(w))."""
    if phi.surface != psi.surface:
        raise ValueError("mapping classes on different surfaces")
    images = tuple(substitute(w, phi.images) for w in psi.images)
    inverse_images = tuple(substitute(w, psi.inverse_images) for w in phi.inverse_images)
    return MappingClass._trusted(phi.surface, images, inverse_images)


def compose_all(surface: PlanarSurface, factors: Sequence[MappingClass]) -> MappingClass:
    """Compose left to right: the last factor is applied first."""
    return reduce(compose, factors, MappingClass.identity(surface))


def power(phi: MappingClass, n: int) -> MappingClass:
    if n < 0:
        return power(phi.inverse(), -n)
    result = MappingClass.identity(phi.surface)
    base = phi
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def apply(phi: MappingClass, target: Union[Word, Curve]) -> Union[Word, Curve]:
    """Image of a word or curve; image curves remember their provenance."""
    if isinstance(target, Word):
        return phi(target)
    if not isinstance(target, Curve):
        raise TypeError("expected a Word or a Curve")
    if target.surface != phi.surface:
        raise ValueError("curve does not live on the mapping class surface")
    if isinstance(target.provenance, ImagePosition):
        provenance = ImagePosition(compose(phi, target.provenance.phi), target.provenance.base)
    else:
        provenance = ImagePosition(phi, target)
    return Curve(phi.surface, phi(target.word), provenance)


def _contiguous_run(holes: Sequence[int]) -> bool:
    return bool(holes) and holes[-1] - holes[0] + 1 == len(holes)


def dehn_twist(curve: Curve, enclosed: Sequence[int] | None = None) -> MappingClass:
    """The positive Dehn twist about a supported curve.

    Supported positions are standard curves whose enclosed holes form a
    consecutive run (conjugation by the curve word is then the honest
    twist action) and mapping-class images of supported curves, for
    which the twist is the conjugated twist of the base curve.
    """
    surface = curve.surface
    prov = curve.provenance

    if isinstance(prov, ImagePosition):
        if enclosed is not None:
            raise ValueError("enclosed holes are determined by the base curve of an image curve")
        return twist_of_image(prov.phi, prov.base)

    if isinstance(prov, StandardPosition):
        holes = prov.holes
        if enclosed is not None and tuple(sorted(enclosed)) != holes:
            raise ValueError(f"enclosed holes {tuple(enclosed)} disagree with curve position {holes}")
    elif enclosed is not None:
        expected = standard_curve(surface, tuple(enclosed))
        if expected.word != curve.word:
            raise UnsupportedCurveError(
                "curve word is not the standard word for the given holes; use twist_of_image"
            )
        holes = expected.provenance.holes  # complement-normalized
    else:
        raise UnsupportedCurveError("curve has no usable position data; use twist_of_image")

    if not _contiguous_run(holes):
        raise UnsupportedCurveError(
            f"direct twists support consecutive hole runs only, not {holes}; use twist_of_image"
        )

    c = curve.word
    c_inv = c.inverse()
    images = []
    inverse_images = []
    for i in range(surface.rank):
        gen = surface.group.generator(i)
        if holes[0] <= i + 1 <= holes[-1]:
            images.append(c * gen * c_inv)
            inverse_images.append(c_inv * gen * c)
        else:
            images.append(gen)
            inverse_images.append(gen)
    return MappingClass(surface, images, inverse_images)


def twist_of_image(phi: MappingClass, curve: Curve, enclosed: Sequence[int] | None = None) -> MappingClass:
    """Twist about the image curve phi(curve), as phi t_curve phi^-1."""
    base = dehn_twist(curve, enclosed)
    return compose(compose(phi, base), phi.inverse())


def half_twist(surface: PlanarSurface, i: int) -> MappingClass:
    """The positive half twist exchanging adjacent inner holes i and i+1.

    Not a Dehn twist itself; it is the standard scaffolding for building
    image curves (and their twists) in skipped standard positions, e.g.
    ``apply(half_twist(s, 2), standard_curve(s, (1, 2)))`` is the curve
    about holes 1 and 3 passing over hole 2.
    """
    if not 1 <= i <= surface.rank - 1:
        raise ValueError(f"half twist needs adjacent inner holes; got {i} on {surface}")
    group = surface.group
    images = []
    inverse_images = []
    for j in range(surface.rank):
        gen = group.generator(j)
        if j == i - 1:
            nxt = group.generator(i)
            images.append(gen * nxt * gen.inverse())
            inverse_images.append(nxt)
        elif j == i:
            prev = group.generator(i - 1)
            images.append(prev)
            inverse_images.append(gen.inverse() * prev * gen)
        else:
            images.append(gen)
            inverse_images.append(gen)
    return MappingClass(surface, images, inverse_images)
