"""Finite group presentations and a bounded Tietze simplification heuristic.

Every move applied by :func:`simplify_presentation` preserves the
isomorphism class of the presented group (relator conjugation and
inversion, multiplying one relator by another, and eliminating a
generator through a relator that mentions it exactly once), so a
``Trivial`` verdict is always sound.  ``Unknown`` promises nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .intmatrix import IntMatrix, cokernel_invariants
from .words import FreeGroup, Word, substitute

TRIVIAL = "Trivial"
UNKNOWN = "Unknown"


class Presentation:
    """A presentation ``<x1..xn | r1, ..., rk>`` with reduced relators."""

    __slots__ = ("group", "relators")

    def __init__(self, group: FreeGroup, relators: Iterable[Word] = ()):
        rels = tuple(relators)
        for r in rels:
            if r.group != group:
                raise ValueError("relator lives in a different free group")
        self.group = group
        self.relators = rels

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def deficiency(self) -> int:
        return self.group.rank - len(self.relators)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Presentation)
            and self.group == other.group
            and self.relators == other.relators
        )

    def __hash__(self) -> int:
        return hash((self.group, self.relators))

    def __repr__(self) -> str:
        return f"Presentation({str(self)!r})"

    def __str__(self) -> str:
        gens = " ".join(self.group.names)
        rels = ", ".join(str(r) for r in self.relators)
        return f"{gens} | {rels}" if rels else f"{gens} |"

    def exponent_matrix(self) -> IntMatrix:
        """Relator exponent vectors as columns: a rank x len(relators) matrix."""
        return IntMatrix.from_columns([r.exponent_vector() for r in self.relators], self.rank)

    def abelianization_invariants(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, torsion orders) of the abelianized group."""
        return cokernel_invariants(self.exponent_matrix())


@dataclass(frozen=True)
class SimplifyResult:
    verdict: str  # TRIVIAL or UNKNOWN
    presentation: Presentation
    moves: int


def _cyclic_canonical(word: Word) -> Word:
    """Least rotation of the cyclic reduction of the word or its inverse."""
    core = word.cyclic_reduction().letters
    if not core:
        return Word(word.group, ())
    best = None
    for letters in (core, tuple(-x for x in reversed(core))):
        doubled = letters + letters
        n = len(letters)
        for i in range(n):
            cand = doubled[i:i + n]
            if best is None or cand < best:
                best = cand
    return Word(word.group, best)


def _normalized(relators: Sequence[Word]) -> list[Word]:
    seen = set()
    out = []
    for r in relators:
        c = _cyclic_canonical(r)
        if c.is_identity or c.letters in seen:
            continue
        seen.add(c.letters)
        out.append(c)
    out.sort(key=lambda w: (len(w), w.letters))
    return out


def _eliminate(group: FreeGroup, relators: list[Word]) -> tuple[FreeGroup, list[Word]] | None:
    """Drop one generator via a relator that mentions it exactly once."""
    for ridx, rel in enumerate(relators):
        counts: dict[int, int] = {}
        for x in rel.letters:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        single = sorted(g for g, c in counts.items() if c == 1)
        if not single:
            continue
        target = single[0]
        pos = next(i for i, x in enumerate(rel.letters) if abs(x) == target)
        u = Word(group, rel.letters[:pos])
        v = Word(group, rel.letters[pos + 1:])
        # u g v = 1 gives g = u^-1 v^-1; u g^-1 v = 1 gives g = v u
        solution = u.inverse() * v.inverse() if rel.letters[pos] > 0 else v * u

        images = [group.generator(i) if i != target - 1 else solution for i in range(group.rank)]
        new_group = FreeGroup(
            group.rank - 1,
            tuple(n for i, n in enumerate(group.names) if i != target - 1),
        )
        down = [Word(new_group, (i + 1 if i < target - 1 else i,)) for i in range(group.rank) if i != target - 1]
        down.insert(target - 1, new_group.identity)  # placeholder, never used

        new_relators = []
        for i, other in enumerate(relators):
            if i == ridx:
                continue
            in_old = substitute(other, images)
            new_relators.append(substitute(in_old, down, target=new_group))
        return new_group, new_relators
    return None


def _shorten_by_product(relators: list[Word]) -> list[Word] | None:
    """Replace some relator by a strictly shorter product with another."""
    for i, ri in enumerate(relators):
        for j, rj in enumerate(relators):
            if i == j:
                continue
            core = rj.letters
            n = len(core)
            for offset in range(n):
                rotated = core[offset:] + core[:offset]
                for letters in (rotated, tuple(-x for x in reversed(rotated))):
                    candidate = (ri * Word(ri.group, letters)).cyclic_reduction()
                    if len(candidate) < len(ri):
                        out = list(relators)
                        out[i] = candidate
                        return out
    return None


def simplify_presentation(p: Presentation, budget: int = 200) -> SimplifyResult:
    """Attempt to certify triviality of the presented group by Tietze moves.

    Returns ``TRIVIAL`` only when the presentation collapses to zero
    generators; this is sound but deliberately incomplete, so
    ``UNKNOWN`` does not mean the group is nontrivial.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    group = p.group
    relators = _normalized(p.relators)
    moves = 0
    while moves < budget:
        if group.rank == 0:
            break
        step = _eliminate(group, relators)
        if step is not None:
            group, relators = step
            relators = _normalized(relators)
            moves += 1
            continue
        shorter = _shorten_by_product(relators)
        if shorter is not None:
            relators = _normalized(shorter)
            moves += 1
            continue
        break
    verdict = TRIVIAL if group.rank == 0 else UNKNOWN
    return SimplifyResult(verdict, Presentation(group, relators), moves)
