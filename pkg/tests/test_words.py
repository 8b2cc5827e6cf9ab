import random

import pytest

from conftest import random_word
from palfkit.words import FreeGroup, Word, are_conjugate, free_reduce, substitute

F2 = FreeGroup(2, ("x", "y"))
X, Y = F2.generators()


def test_multiply_cancels():
    assert X * Y * Y.inverse() == X


def test_identity_is_neutral():
    w = F2.word([1, 2, 1, -2])
    assert F2.identity * w == w
    assert w * F2.identity == w


def test_relator_assembles_by_reduction():
    # (xy) x times (xy)^-1 y^-1 reduces to x y x y^-1 x^-1 y^-1
    left = (X * Y) * X
    right = (X * Y).inverse() * Y.inverse()
    assert (left * right).letters == (1, 2, 1, -2, -1, -2)


def test_invert_examples():
    assert (X * Y).inverse().letters == (-2, -1)
    assert F2.identity.inverse() == F2.identity
    w = F2.word([1, 2, 1, -2, -1, -2])
    assert w.inverse().letters == (2, 1, 2, -1, -2, -1)


def test_inverse_is_involution_and_kills():
    rng = random.Random(11)
    for _ in range(200):
        w = random_word(rng, F2, 20)
        assert w.inverse().inverse() == w
        assert (w * w.inverse()).is_identity


def test_multiplication_is_associative():
    rng = random.Random(12)
    for _ in range(200):
        a, b, c = (random_word(rng, F2, 12) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_mismatched_groups_rejected():
    other = FreeGroup(3)
    with pytest.raises(ValueError):
        X * other.generator(0)


def test_letters_validated():
    with pytest.raises(ValueError):
        Word(F2, [3])
    with pytest.raises(ValueError):
        Word(F2, [0])


def _reduce_random_order(letters, rng):
    # cancel adjacent inverse pairs in random order until none remain
    out = list(letters)
    while True:
        spots = [i for i in range(len(out) - 1) if out[i] == -out[i + 1]]
        if not spots:
            return tuple(out)
        i = rng.choice(spots)
        del out[i:i + 2]


def test_free_reduction_confluent():
    rng = random.Random(13)
    for _ in range(500):
        raw = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(30))]
        expected = free_reduce(raw)
        assert _reduce_random_order(raw, rng) == expected
        # idempotent
        assert free_reduce(expected) == expected


def test_exponent_vectors():
    w = F2.word([1, 2, -1, 2, 2])
    assert w.exponent_vector() == (0, 3)
    assert w.exponent_sum(0) == 0
    assert w.exponent_sum(1) == 3


def test_syllables_and_str():
    w = F2.word([1, 1, -2, -2, -2, 1])
    assert w.syllables() == [(0, 2), (1, -3), (0, 1)]
    assert str(w) == "x^2 y^-3 x"
    assert str(F2.identity) == "1"


def test_powers():
    w = X * Y
    assert w ** 3 == w * w * w
    assert w ** -2 == (w * w).inverse()
    assert w ** 0 == F2.identity


def test_cyclic_reduction():
    w = F2.word([1, 2, -1])  # x y x^-1
    assert w.cyclic_reduction() == Y
    assert F2.word([1, 2]).cyclic_reduction() == X * Y


def test_conjugacy():
    rng = random.Random(14)
    for _ in range(300):
        w = random_word(rng, F2, 10)
        u = random_word(rng, F2, 10)
        assert are_conjugate(w, w.conjugate(u))
    assert not are_conjugate(X, Y)
    assert not are_conjugate(X, X * X)
    assert are_conjugate(F2.identity, F2.word([1, -1]))


def test_substitute_is_homomorphism():
    rng = random.Random(15)
    target = FreeGroup(3)
    images = [random_word(rng, target, 6) for _ in range(2)]
    for _ in range(200):
        a = random_word(rng, F2, 10)
        b = random_word(rng, F2, 10)
        assert substitute(a * b, images) == substitute(a, images) * substitute(b, images)
    assert substitute(F2.identity, images) == target.identity
