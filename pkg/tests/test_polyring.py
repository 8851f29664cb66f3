import itertools
import random

import pytest

from coxsph.polyring import (
    Poly,
    SplitSet,
    d_schur,
    demazure_pi,
    expand_in_keys,
    is_D_multiplicity_free,
    is_split_symmetric,
    key_polynomial,
    key_via_kohnert,
    schur,
    split_expand,
    split_expand_via_solver,
    staircase_composition,
    staircase_test,
)
from coxsph import typea as ta

from golden_data import KEY_15243_D24_EXPANSION


def _worked_example_poly():
    return (
        Poly.monomial((1, 2, 0, 1))
        + Poly.monomial((2, 1, 0, 1))
        + Poly.monomial((1, 2, 1, 0))
        + Poly.monomial((2, 1, 1, 0))
        + Poly.monomial((2, 2, 0, 0))
    )


def _random_poly(rng, n, nterms=6, maxdeg=3):
    f = Poly.zero(n)
    for _ in range(nterms):
        exps = tuple(rng.randint(0, maxdeg) for _ in range(n))
        f = f + Poly.monomial(exps, rng.randint(-3, 3))
    return f


# -- Demazure operators ------------------------------------------------------


def test_demazure_basic_values():
    assert demazure_pi(1, Poly.variable(1, 2)) == Poly.monomial((1, 0)) + Poly.monomial((0, 1))
    got = demazure_pi(1, Poly.monomial((2, 0)))
    assert got == Poly.monomial((2, 0)) + Poly.monomial((1, 1)) + Poly.monomial((0, 2))
    assert demazure_pi(1, Poly.variable(2, 2)) == Poly.zero(2)


def test_demazure_idempotent_and_fixes_symmetric():
    rng = random.Random(0)
    for _ in range(60):
        n = rng.randint(2, 5)
        f = _random_poly(rng, n)
        j = rng.randint(1, n - 1)
        pf = demazure_pi(j, f)
        assert demazure_pi(j, pf) == pf
        assert pf.is_symmetric_in(j)
        if f.is_symmetric_in(j):
            assert pf == f


# -- key polynomials ---------------------------------------------------------


def test_key_of_weakly_decreasing_is_monomial():
    assert key_polynomial((3, 1, 0)) == Poly.monomial((3, 1, 0))
    assert key_via_kohnert((3, 1, 0)) == Poly.monomial((3, 1, 0))


def test_key_02_both_rules():
    expected = Poly.monomial((2, 0)) + Poly.monomial((1, 1)) + Poly.monomial((0, 2))
    assert key_polynomial((0, 2)) == expected
    assert key_via_kohnert((0, 2)) == expected


def test_key_worked_identity():
    g = _worked_example_poly()
    assert key_polynomial((1, 2, 0, 1)) + key_polynomial((2, 2, 0, 0)) == g


def test_key_leading_coefficient_is_one():
    for alpha in itertools.product(range(4), repeat=3):
        assert key_polynomial(alpha).coeff(alpha) == 1


def test_key_independent_of_sorting_order():
    def key_last_ascent(alpha):
        alpha = tuple(alpha)
        js = [i for i in range(len(alpha) - 1) if alpha[i] < alpha[i + 1]]
        if not js:
            return Poly.monomial(alpha)
        j = js[-1]
        hat = list(alpha)
        hat[j], hat[j + 1] = hat[j + 1], hat[j]
        return demazure_pi(j + 1, key_last_ascent(tuple(hat)))

    rng = random.Random(2)
    for _ in range(25):
        alpha = tuple(rng.randint(0, 4) for _ in range(rng.randint(2, 5)))
        assert key_polynomial(alpha) == key_last_ascent(alpha)


def test_antidominant_key_is_schur():
    assert key_polynomial((0, 1, 2)) == schur((2, 1), 3)
    assert key_polynomial((0, 0, 1, 1)) == schur((1, 1), 4)


def test_demazure_equals_kohnert_sweep():
    # every composition with at most 5 parts and weight at most 8
    for length in range(1, 6):
        cache = {}
        for alpha in itertools.product(range(9), repeat=length):
            if sum(alpha) > 8:
                continue
            assert key_polynomial(alpha, cache) == key_via_kohnert(alpha)


def test_kohnert_agrees_on_large_key():
    assert key_via_kohnert((1, 5, 2, 4, 3)) == key_polynomial((1, 5, 2, 4, 3))


def test_key_factorization_by_row_of_boxes():
    rng = random.Random(4)
    for _ in range(15):
        n = rng.randint(2, 4)
        alpha = tuple(rng.randint(0, 3) for _ in range(n))
        for r in range(1, 4):
            shifted = tuple(a + r for a in alpha)
            assert key_polynomial(shifted) == Poly.monomial((r,) * n) * key_polynomial(alpha)


# -- Schur polynomials ----------------------------------------------------------


def test_schur_basics():
    n = 4
    s1 = schur((1,), n)
    assert s1 == sum((Poly.variable(i, n) for i in range(2, n + 1)), Poly.variable(1, n))
    assert schur((2, 1), 3).coeff((1, 1, 1)) == 2
    assert schur((), 3) == Poly.one(3)
    with pytest.raises(ValueError):
        schur((1, 1, 1), 2)
    with pytest.raises(ValueError):
        schur((1, 2), 3)


def test_schur_symmetric_and_padded():
    s = schur((3, 1), 3)
    for j in (1, 2):
        assert s.is_symmetric_in(j)
    # adding r to every part multiplies by (x1...xd)^r
    assert schur((4, 2), 2) == Poly.monomial((2, 2)) * schur((2,), 2)
    assert schur((3, 2, 1), 3) == Poly.monomial((1, 1, 1)) * schur((2, 1), 3)


def test_schur_dimension_staircase():
    # number of monomials counted with multiplicity for (2,1) in 3 variables
    assert sum(schur((2, 1), 3).terms.values()) == 8


# -- split sets and expansions -----------------------------------------------------


def test_split_set_blocks():
    split = SplitSet(5, (2, 4))
    assert split.blocks == ((1, 2), (3, 4), (5, 5))
    assert split.block_sizes() == (2, 2, 1)
    with pytest.raises(ValueError):
        SplitSet(3, (3,))


def test_split_symmetry_checks():
    g = _worked_example_poly()
    assert is_split_symmetric(g, SplitSet(4, (2,)))
    assert not is_split_symmetric(Poly.variable(1, 2), SplitSet(2, ()))
    s = schur((2, 1), 4)
    for D in ((), (1,), (2,), (1, 2, 3)):
        assert is_split_symmetric(s, SplitSet(4, D))
    kappa = key_polynomial((1, 5, 2, 4, 3))
    assert is_split_symmetric(kappa, SplitSet(5, (2, 4)))
    assert not is_split_symmetric(kappa, SplitSet(5, (2,)))


def test_split_expand_worked_example():
    g = _worked_example_poly()
    expansion = split_expand(g, SplitSet(4, (2,)))
    assert expansion.coefficients == {
        ((2, 1), (1, 0)): 1,
        ((2, 2), (0, 0)): 1,
    }
    assert expansion.reconstruct() == g
    assert expansion.is_multiplicity_free()


def test_worked_example_key_basis():
    g = _worked_example_poly()
    assert expand_in_keys(g) == {(1, 2, 0, 1): 1, (2, 2, 0, 0): 1}


def test_expand_in_keys_roundtrip_random():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(2, 4)
        picks = {}
        for _ in range(rng.randint(1, 4)):
            alpha = tuple(rng.randint(0, 3) for _ in range(n))
            picks[alpha] = picks.get(alpha, 0) + rng.choice((-2, -1, 1, 2, 3))
        f = Poly.zero(n)
        for alpha, c in picks.items():
            f = f + key_polynomial(alpha).scale(c)
        got = expand_in_keys(f)
        assert got == {a: c for a, c in picks.items() if c}


def test_reference_17_term_expansion():
    kappa = key_polynomial((1, 5, 2, 4, 3))
    expansion = split_expand(kappa, SplitSet(5, (2, 4)))
    assert expansion.coefficients == KEY_15243_D24_EXPANSION
    assert len(expansion.coefficients) == 17
    assert sorted(expansion.coefficients.values()).count(2) == 2
    assert expansion.reconstruct() == kappa
    assert not is_D_multiplicity_free(kappa, SplitSet(5, (2, 4)))


def test_schur_is_single_basis_element():
    s = schur((2, 1), 4)
    expansion = split_expand(s, SplitSet(4, ()))
    assert expansion.coefficients == {((2, 1, 0, 0),): 1}


def test_littlewood_richardson_split_nonnegative():
    for mu, m, a in (((2, 1), 4, 2), ((3, 1), 4, 1), ((2, 2), 4, 2), ((3, 2, 1), 5, 3)):
        s = schur(mu, m)
        expansion = split_expand(s, SplitSet(m, (a,)))
        assert all(c > 0 for c in expansion.coefficients.values())
        assert expansion.reconstruct() == s


def test_multiplicity_free_examples():
    assert is_D_multiplicity_free(key_polynomial((0, 0, 1, 1)), SplitSet(4, (1, 2, 3)))
    assert not is_D_multiplicity_free(key_polynomial((0, 1, 2)), SplitSet(3, (1, 2)))
    assert not is_D_multiplicity_free(key_polynomial((1, 5, 2, 4, 3)), SplitSet(5, (2, 4)))


def test_split_expand_rejects_asymmetric_input():
    with pytest.raises(ValueError):
        split_expand(Poly.variable(1, 3), SplitSet(3, (2,)))


def test_peel_matches_solver_on_random_instances():
    rng = random.Random(42)
    for trial in range(200):
        n = rng.randint(2, 5)
        nodes = list(range(1, n))
        rng.shuffle(nodes)
        D = tuple(sorted(nodes[: rng.randint(0, n - 1)]))
        split = SplitSet(n, D)
        sizes = split.block_sizes()
        f = Poly.zero(n)
        expected = {}
        for _ in range(rng.randint(1, 4)):
            lams = tuple(
                tuple(sorted((rng.randint(0, 3) for _ in range(size)), reverse=True))
                for size in sizes
            )
            c = rng.choice((1, 1, 2, 3, -1))
            expected[lams] = expected.get(lams, 0) + c
        expected = {k: v for k, v in expected.items() if v}
        for lams, c in expected.items():
            f = f + d_schur(split, lams).scale(c)
        peeled = split_expand(f, split)
        solved = split_expand_via_solver(f, split)
        assert peeled.coefficients == expected
        assert solved.coefficients == expected


def test_split_coefficients_of_staircase_keys_nonnegative():
    rng = random.Random(17)
    lines = list(itertools.permutations(range(1, 6)))
    for _ in range(25):
        line = rng.choice(lines)
        alpha = staircase_composition(line)
        J = ta.left_descents(line)
        Isub = tuple(j for j in J if rng.random() < 0.5)
        D = tuple(j for j in range(1, 5) if j not in Isub)
        expansion = split_expand(key_polynomial(alpha), SplitSet(5, D))
        assert all(c > 0 for c in expansion.coefficients.values())


# -- staircase test ---------------------------------------------------------------


def test_staircase_examples():
    assert not staircase_test((2, 4, 5, 3, 1), (1, 3))
    assert staircase_test((1, 2, 3, 4), ())
    for line in itertools.permutations((1, 2, 3, 4)):
        assert staircase_test(line, ta.left_descents(line))
    with pytest.raises(ValueError):
        staircase_test((2, 4, 5, 3, 1), (2,))


def test_staircase_composition():
    assert staircase_composition((2, 4, 5, 3, 1)) == (1, 5, 2, 4, 3)
    assert staircase_composition((1, 2, 3)) == (3, 2, 1)


# -- multiplicity-free classification --------------------------------------------


def test_km_avoidance_matches_full_split_small():
    for length in range(1, 5):
        cache = {}
        full = SplitSet(length, tuple(range(1, length)))
        for alpha in itertools.product(range(4), repeat=length):
            mf = is_D_multiplicity_free(key_polynomial(alpha, cache), full)
            assert mf == ta.avoids_km(alpha), alpha


def test_sufficient_conditions_for_descent_split():
    """KM-avoiding with distinct parts, or additionally (0,0,1,1)-avoiding,
    implies multiplicity-freeness at the descent split."""
    for length in range(2, 6):
        cache = {}
        for alpha in itertools.product(range(5), repeat=length):
            if sum(alpha) > 12 or not ta.avoids_km(alpha):
                continue
            distinct = len(set(alpha)) == len(alpha)
            extra = not ta.contains_comp_pattern(alpha, (0, 0, 1, 1))
            if not (distinct or extra):
                continue
            D = tuple(ta.descents(alpha))
            split = SplitSet(length, D)
            assert is_D_multiplicity_free(key_polynomial(alpha, cache), split), alpha
