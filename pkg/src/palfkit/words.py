"""Freely reduced words in a finitely generated free group.

Letters are nonzero integers: ``k`` is the (k-1)-th generator and ``-k``
its inverse.  Every :class:`Word` is stored freely reduced, so equality
of words is equality of group elements.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def default_names(rank: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(rank))


class FreeGroup:
    """A free group of finite rank with printable generator names."""

    __slots__ = ("rank", "names")

    def __init__(self, rank: int, names: Sequence[str] | None = None):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        if names is None:
            names = default_names(rank)
        if len(names) != rank:
            raise ValueError(f"expected {rank} generator names, got {len(names)}")
        if len(set(names)) != rank:
            raise ValueError("generator names must be distinct")
        self.rank = rank
        self.names = tuple(names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeGroup) and self.rank == other.rank and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.rank, self.names))

    def __repr__(self) -> str:
        return f"FreeGroup({', '.join(self.names)})" if self.rank else "FreeGroup()"

    def word(self, letters: Iterable[int] = ()) -> Word:
        return Word(self, letters)

    def generator(self, index: int) -> Word:
        """The one-letter word for generator ``index`` (0-based)."""
        if not 0 <= index < self.rank:
            raise ValueError(f"generator index {index} out of range for rank {self.rank}")
        return Word(self, (index + 1,))

    def generators(self) -> list[Word]:
        return [self.generator(i) for i in range(self.rank)]

    @property
    def identity(self) -> Word:
        return Word(self, ())


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence; cancels every adjacent ``k, -k`` pair."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class Word:
    """An element of a free group, always freely reduced.

    >>> F = FreeGroup(2, ("x", "y"))
    >>> x, y = F.generators()
    >>> x * y * y.inverse()
    Word('x')
    >>> (x * y).inverse()
    Word('y^-1 x^-1')
    """

    __slots__ = ("group", "letters")

    def __init__(self, group: FreeGroup, letters: Iterable[int] = ()):
        letters = tuple(letters)
        for x in letters:
            if x == 0 or abs(x) > group.rank:
                raise ValueError(f"letter {x} out of range for rank {group.rank}")
        self.group = group
        self.letters = free_reduce(letters)

    # -- basic protocol ------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.group == other.group and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.group.rank, self.letters))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        names = self.group.names
        parts = []
        for gen, exp in self.syllables():
            parts.append(names[gen] if exp == 1 else f"{names[gen]}^{exp}")
        return " ".join(parts)

    # -- group operations ----------------------------------------------

    def _check_group(self, other: Word) -> None:
        if self.group != other.group:
            raise ValueError("words live in different free groups")

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        self._check_group(other)
        return Word(self.group, self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(self.group, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.group, self.letters * n)

    def conjugate(self, by: Word) -> Word:
        """Return ``by * self * by^-1``."""
        self._check_group(by)
        return Word(self.group, by.letters + self.letters + tuple(-x for x in reversed(by.letters)))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    # -- structure -----------------------------------------------------

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs as ``(generator index, exponent)`` pairs."""
        out: list[tuple[int, int]] = []
        for x in self.letters:
            gen, sign = abs(x) - 1, (1 if x > 0 else -1)
            if out and out[-1][0] == gen:
                out[-1] = (gen, out[-1][1] + sign)
            else:
                out.append((gen, sign))
        return out

    def exponent_sum(self, index: int) -> int:
        """Total signed exponent of generator ``index``."""
        if not 0 <= index < self.group.rank:
            raise ValueError(f"generator index {index} out of range")
        target = index + 1
        return sum(1 if x == target else -1 for x in self.letters if abs(x) == target)

    def exponent_vector(self) -> tuple[int, ...]:
        """Image in the abelianization Z^rank."""
        vec = [0] * self.group.rank
        for x in self.letters:
            vec[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(vec)

    def cyclic_reduction(self) -> Word:
        letters = self.letters
        lo, hi = 0, len(letters)
        while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
            lo += 1
            hi -= 1
        return Word(self.group, letters[lo:hi])


def substitute(word: Word, images: Sequence[Word], target: FreeGroup | None = None) -> Word:
    """Apply the homomorphism sending generator ``i`` to ``images[i]``.

    The target group defaults to the group of the image words.
    """
    if len(images) != word.group.rank:
        raise ValueError("need one image word per generator")
    if target is None:
        target = images[0].group if images else word.group
    letters: list[int] = []
    for x in word.letters:
        img = images[abs(x) - 1]
        letters.extend(img.letters if x > 0 else (-y for y in reversed(img.letters)))
    return Word(target, letters)


def are_conjugate(u: Word, v: Word) -> bool:
    """Conjugacy test: equal cyclic reductions up to rotation."""
    if u.group != v.group:
        raise ValueError("words live in different free groups")
    a = u.cyclic_reduction().letters
    b = v.cyclic_reduction().letters
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = b + b
    n = len(a)
    return any(doubled[i:i + n] == a for i in range(n))
