import random

import pytest

from conftest import minor_gcd_cokernel, random_word
from palfkit.intmatrix import IntMatrix, cokernel_invariants
from palfkit.lefschetz import (
    HomologyResult,
    PALFSpec,
    allowable,
    boundary_is_homology_sphere,
    boundary_matrix,
    family_curves,
    family_fiber,
    family_twists,
    homology,
    mazur_family,
    pi1_presentation,
    total_monodromy,
)
from palfkit.surface import Curve, MappingClass, PlanarSurface, apply, compose, power, standard_curve, dehn_twist

S4 = PlanarSurface(4)


def random_spec(rng, max_holes=5, max_cycles=4) -> PALFSpec:
    surface = PlanarSurface(rng.randrange(2, max_holes + 1))
    cycles = []
    for _ in range(rng.randrange(max_cycles + 1)):
        word = random_word(rng, surface.group, 6)
        cycles.append(Curve(surface, word))
    return PALFSpec(surface, cycles)


# -- allowability -------------------------------------------------------------

def test_boundary_parallel_is_allowable():
    spec = PALFSpec(S4, [standard_curve(S4, (1,))])
    assert allowable(spec) == (True, None)


def test_nullhomotopic_cycle_flagged():
    spec = PALFSpec(S4, [standard_curve(S4, (1, 2)), Curve(S4, S4.group.identity)])
    assert allowable(spec) == (False, 1)


def test_family_allowable_up_to_ten():
    for n in range(11):
        assert allowable(mazur_family(n)) == (True, None)


def test_nullhomologous_but_nontrivial_word():
    commutator = S4.group.word([1, 2, -1, -2])
    spec = PALFSpec(S4, [Curve(S4, commutator)])
    ok, witness = allowable(spec)
    assert not ok and witness == 0


def test_allowable_invariant_under_conjugation():
    rng = random.Random(75)
    for _ in range(200):
        spec = random_spec(rng)
        conjugated = PALFSpec(
            spec.fiber,
            [Curve(spec.fiber, c.word.conjugate(random_word(rng, spec.fiber.group, 5))) for c in spec.cycles],
        )
        assert allowable(spec)[0] == allowable(conjugated)[0]


# -- boundary matrix and homology ---------------------------------------------

def test_empty_monodromy_matrix():
    m = boundary_matrix(PALFSpec(S4, []))
    assert m.shape == (3, 0)


def test_single_cycle_column():
    spec = PALFSpec(S4, [standard_curve(S4, (1, 2))])
    assert boundary_matrix(spec).column(0) == (1, 1, 0)


def test_family_matrix_constant_in_n():
    expected = IntMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    for n in range(1, 6):
        assert boundary_matrix(mazur_family(n)) == expected


def test_family_homology_is_point():
    for n in range(1, 11):
        h = homology(mazur_family(n))
        assert h.is_point
        assert h.h0 == (1, ()) and h.h1 == (0, ()) and h.h2 == (0, ())
        assert h.euler == 1


def test_empty_monodromy_homology():
    h = homology(PALFSpec(S4, []))
    assert h.h1 == (3, ())
    assert h.h2 == (0, ())
    assert h.euler == 1 - 3 + 0


def test_single_cycle_homology():
    h = homology(PALFSpec(S4, [standard_curve(S4, (1, 2))]))
    assert h.h1 == (2, ())
    assert h.h2 == (0, ())


def test_euler_characteristic_formula():
    rng = random.Random(71)
    for _ in range(300):
        spec = random_spec(rng)
        h = homology(spec)
        assert h.euler == 1 - spec.fiber.rank + len(spec.cycles)


def test_homology_against_minor_gcd_oracle():
    rng = random.Random(72)
    for _ in range(200):
        nrows = rng.randrange(1, 4)
        ncols = rng.randrange(0, 5)
        rows = [[rng.randrange(-2, 3) for _ in range(ncols)] for _ in range(nrows)]
        surface = PlanarSurface(nrows + 1)
        cycles = []
        for j in range(ncols):
            letters = []
            for i in range(nrows):
                e = rows[i][j]
                letters.extend([i + 1] * e if e > 0 else [-(i + 1)] * (-e))
            cycles.append(Curve(surface, surface.group.word(letters)))
        spec = PALFSpec(surface, cycles)
        assert homology(spec).h1 == minor_gcd_cokernel(rows)


# -- homology sphere certification ---------------------------------------------

def test_family_boundary_is_homology_sphere():
    for n in range(1, 11):
        assert boundary_is_homology_sphere(mazur_family(n))


def test_empty_monodromy_not_homology_sphere():
    assert not boundary_is_homology_sphere(PALFSpec(S4, []))


def test_degenerate_determinant():
    c = standard_curve(S4, (1, 2))
    x3_cycle = standard_curve(S4, (3,))
    assert not boundary_is_homology_sphere(PALFSpec(S4, [c, c, x3_cycle]))


def test_sphere_iff_point_homology_for_square_specs():
    rng = random.Random(73)
    for _ in range(200):
        spec = random_spec(rng)
        sphere = boundary_is_homology_sphere(spec)
        point = homology(spec).is_point
        if sphere:
            assert point
        if point and len(spec.cycles) == spec.fiber.rank:
            assert sphere


# -- fundamental group ----------------------------------------------------------

def test_pi1_free_for_empty_monodromy():
    p = pi1_presentation(PALFSpec(S4, []))
    assert p.rank == 3 and p.relators == ()


def test_pi1_single_cycle():
    p = pi1_presentation(PALFSpec(S4, [standard_curve(S4, (1, 2))]))
    assert str(p) == "x1 x2 x3 | x1 x2"


def test_pi1_abelianization_matches_boundary_matrix():
    rng = random.Random(74)
    for _ in range(200):
        spec = random_spec(rng)
        p = pi1_presentation(spec)
        assert p.exponent_matrix() == boundary_matrix(spec)
        assert p.abelianization_invariants() == cokernel_invariants(boundary_matrix(spec))


def test_family_pi1_trivial_abelianization():
    p = pi1_presentation(mazur_family(1))
    assert p.rank == 3 and len(p.relators) == 3
    assert p.abelianization_invariants() == (0, ())


# -- monodromy ---------------------------------------------------------------

def test_total_monodromy_empty_is_identity():
    assert total_monodromy(PALFSpec(S4, [])).is_identity


def test_total_monodromy_order_convention():
    alpha, beta, _ = family_curves()
    spec = PALFSpec(S4, [alpha, beta])
    assert total_monodromy(spec) == compose(dehn_twist(alpha), dehn_twist(beta))


def test_family_total_monodromy_composition():
    t_a, t_b, t_g = family_twists()
    phi = compose(t_g, t_b)
    for n in range(4):
        expected = compose(compose(t_a, t_b), compose(compose(power(phi, n), t_g), power(phi, n).inverse()))
        assert total_monodromy(mazur_family(n)) == expected


def test_total_monodromy_fixes_delta():
    for n in range(4):
        spec = mazur_family(n)
        mono = total_monodromy(spec)
        assert mono(S4.delta) == S4.delta


# -- the family ----------------------------------------------------------------

def test_family_cycles():
    spec = mazur_family(1)
    alpha, beta, gamma = family_curves()
    assert spec.cycles[0] == alpha
    assert spec.cycles[1] == beta
    t_a, t_b, t_g = family_twists()
    phi = compose(t_g, t_b)
    assert spec.cycles[2].word == phi(gamma.word)


def test_family_degenerate_index():
    spec = mazur_family(0)
    assert spec.cycles[2].word == family_curves()[2].word


def test_family_class_constant():
    classes = {mazur_family(n).cycles[2].homology_class for n in range(6)}
    assert classes == {(0, 1, 1)}


def test_family_negative_index_rejected():
    with pytest.raises(ValueError):
        mazur_family(-1)


def test_family_cycle_matches_sequential_application():
    # the n-th cycle from binary powering equals applying the composite n times
    t_a, t_b, t_g = family_twists()
    phi = compose(t_g, t_b)
    current = family_curves()[2]
    for n in range(8):
        assert mazur_family(n).cycles[2].word == current.word
        current = apply(phi, current)


def test_family_depends_on_n():
    words = {mazur_family(n).cycles[2].word.letters for n in range(6)}
    assert len(words) == 6


def test_family_open_books_depend_on_n():
    # not just the cycle words: the twists about them, and hence the total
    # monodromies of the boundary open books, must differ in n
    twists = [dehn_twist(mazur_family(n).cycles[2]) for n in range(4)]
    assert len({t.images for t in twists}) == 4
    monodromies = [total_monodromy(mazur_family(n)) for n in range(4)]
    assert len({m.images for m in monodromies}) == 4


def test_cycles_must_live_on_fiber():
    other = PlanarSurface(5)
    with pytest.raises(ValueError):
        PALFSpec(S4, [standard_curve(other, (1, 2))])
