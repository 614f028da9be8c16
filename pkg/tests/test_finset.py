"""Pointed-set combinatorics: composition, smash, wedge, and the circle functor."""

import itertools
import math

import pytest

from f1deloop.finset import (
    DeltaMap,
    circle_level,
    circle_map,
    coface,
    compose,
    compose_delta,
    delta_identity,
    delta_map,
    enumerate_delta_maps,
    enumerate_ptd_maps,
    gamma_face,
    identity_map,
    ptd_map,
    smash,
    wedge,
    zero_map,
)


# ---------------------------------------------------------------------------
# pointed maps
# ---------------------------------------------------------------------------

def test_identity_is_left_unit():
    for f in enumerate_ptd_maps(2, 3):
        assert compose(identity_map(3), f) == f
        assert compose(f, identity_map(2)) == f


def test_compose_direct_evaluation():
    f = ptd_map(1, 2, (2,))
    g = ptd_map(2, 1, (1, 0))
    fg = compose(f, g)  # f after g
    assert fg.assignment == (2, 0)


def test_zero_map_absorbs():
    for f in enumerate_ptd_maps(2, 2):
        assert compose(f, zero_map(3, 2)) == zero_map(3, 2)
        assert compose(zero_map(2, 3), f) == zero_map(2, 3)


def test_compose_associative_exhaustive():
    sizes = range(3)
    for a, b, c, d in itertools.product(sizes, repeat=4):
        for f in enumerate_ptd_maps(a, b):
            for g in enumerate_ptd_maps(b, c):
                for h in enumerate_ptd_maps(c, d):
                    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_compose_mismatch_rejected():
    with pytest.raises(ValueError):
        compose(ptd_map(1, 1, (1,)), ptd_map(1, 2, (2,)))


def test_enumerate_counts_and_order():
    assert len(enumerate_ptd_maps(1, 1)) == 2
    assert len(enumerate_ptd_maps(2, 2)) == 9
    assert len(enumerate_ptd_maps(0, 5)) == 1
    maps = enumerate_ptd_maps(2, 1)
    assert [f.assignment for f in maps] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(set(maps)) == len(maps)


# ---------------------------------------------------------------------------
# smash and wedge
# ---------------------------------------------------------------------------

def test_smash_with_zero_absorbs():
    for k in range(4):
        out = smash(identity_map(k), identity_map(0))
        assert out.domain.size == 0 and out.codomain.size == 0


def test_smash_unit_is_strict_both_sides():
    one = identity_map(1)
    for a in range(4):
        for b in range(4):
            for f in enumerate_ptd_maps(a, b):
                assert smash(one, f) == f
                assert smash(f, one) == f


def test_smash_of_identities_with_encoding():
    out = smash(identity_map(2), identity_map(3))
    assert out == identity_map(6)
    # the pair (2, 1) is encoded as (2-1)*3 + 1 = 4
    assert out((2 - 1) * 3 + 1) == 4


def test_smash_functorial_exhaustive_small():
    maps = {
        (a, b): enumerate_ptd_maps(a, b)
        for a in range(3) for b in range(3)
    }
    pairs = [
        (f, g)
        for (a, b), fs in maps.items()
        for f in fs
        for g in maps[(b, a)]  # only a sample of codomains, swap keeps it square
    ]
    for a, b, c in itertools.product(range(3), repeat=3):
        for f in maps[(a, b)]:
            for g in maps[(b, c)]:
                for h in maps[(a, b)]:
                    for k in maps[(b, c)]:
                        lhs = smash(compose(g, f), compose(k, h))
                        rhs = compose(smash(g, k), smash(f, h))
                        assert lhs == rhs
    assert pairs  # sanity: the sweep above was not vacuous


def test_smash_strictly_associative():
    for a, b, c in itertools.product(range(3), repeat=3):
        for f in enumerate_ptd_maps(a, a):
            for g in enumerate_ptd_maps(b, b):
                for h in enumerate_ptd_maps(c, c):
                    assert smash(smash(f, g), h) == smash(f, smash(g, h))


def test_wedge_objects_and_identities():
    assert wedge(identity_map(1), identity_map(1)) == identity_map(2)
    assert wedge(identity_map(2), identity_map(3)) == identity_map(5)
    assert wedge(zero_map(2, 2), zero_map(1, 3)) == zero_map(3, 5)


def test_wedge_blocks():
    f = ptd_map(2, 1, (1, 0))
    g = ptd_map(1, 2, (2,))
    out = wedge(f, g)
    assert out.assignment == (1, 0, 1 + 2)


# ---------------------------------------------------------------------------
# faces in the gamma direction
# ---------------------------------------------------------------------------

def test_gamma_face_tables():
    assert gamma_face(0, 2).assignment == (0, 1)
    assert gamma_face(1, 2).assignment == (1, 1)
    assert gamma_face(2, 2).assignment == (1, 0)


def test_gamma_face_range_checked():
    with pytest.raises(ValueError):
        gamma_face(3, 2)


def test_gamma_face_agrees_with_circle_on_cofaces():
    for k in range(1, 6):
        for i in range(k + 1):
            assert gamma_face(i, k) == circle_map(coface(i, k))


# ---------------------------------------------------------------------------
# the simplex category
# ---------------------------------------------------------------------------

def test_delta_map_monotone_enforced():
    with pytest.raises(ValueError):
        delta_map(1, 1, (1, 0))


def test_enumerate_delta_count_matches_binomial():
    for a in range(5):
        for b in range(5):
            expected = math.comb(a + b + 1, a + 1)
            assert len(enumerate_delta_maps(a, b)) == expected


def test_delta_composition():
    alpha = coface(0, 2)          # [1] -> [2], skipping 0
    beta = coface(2, 3)           # [2] -> [3]
    composed = compose_delta(beta, alpha)
    assert composed.assignment == tuple(beta(alpha(t)) for t in range(2))


# ---------------------------------------------------------------------------
# the circle functor against a from-scratch quotient oracle
# ---------------------------------------------------------------------------

def _oracle_circle_map(alpha: DeltaMap):
    """Quotient-simplicial-set model: element i of <b> is the monotone map
    [b] -> [1] jumping at i; act by precomposition, constants to basepoint."""
    b, a = alpha.codomain, alpha.domain
    values = []
    for i in range(1, b + 1):
        composite = [1 if alpha(t) >= i else 0 for t in range(a + 1)]
        if all(v == 0 for v in composite) or all(v == 1 for v in composite):
            values.append(0)
        else:
            values.append(composite.index(1))
    return ptd_map(b, a, values)


def test_circle_levels():
    # level m is the set of monotone maps [m] -> [1] with constants collapsed
    for m in range(4):
        monotone = [w for w in itertools.product((0, 1), repeat=m + 1)
                    if all(x <= y for x, y in zip(w, w[1:]))]
        constants = [w for w in monotone if len(set(w)) == 1]
        assert circle_level(m).size == len(monotone) - len(constants) == m


def test_circle_map_named_values():
    sigma = delta_map(1, 0, (0, 0))
    assert circle_map(sigma) == zero_map(0, 1)
    delta0 = delta_map(1, 2, (1, 2))
    assert circle_map(delta0).assignment == (0, 1)


def test_circle_map_matches_oracle_exhaustively():
    for a in range(6):
        for b in range(6):
            for alpha in enumerate_delta_maps(a, b):
                assert circle_map(alpha) == _oracle_circle_map(alpha)


def test_circle_functor_laws_exhaustive():
    """Contravariant functoriality for every composable pair with a, b <= 5."""
    tables = {}
    for a in range(6):
        for b in range(6):
            for alpha in enumerate_delta_maps(a, b):
                tables[(a, b, alpha.assignment)] = circle_map(alpha).assignment
    for m in range(6):
        assert circle_map(delta_identity(m)) == identity_map(m)
    for b in range(6):
        betas = [beta for c in range(6) for beta in enumerate_delta_maps(b, c)]
        alphas = [alpha for a in range(6) for alpha in enumerate_delta_maps(a, b)]
        for beta in betas:
            s_beta = tables[(beta.domain, beta.codomain, beta.assignment)]
            for alpha in alphas:
                s_alpha = tables[(alpha.domain, alpha.codomain, alpha.assignment)]
                composite = tuple(beta(v) for v in alpha.assignment)
                expected = tables[(alpha.domain, beta.codomain, composite)]
                assert expected == tuple(
                    s_alpha[v - 1] if v else 0 for v in s_beta
                )


def test_simplicial_identities_through_circle():
    # d_i d_j = d_{j-1} d_i for i < j follows from contravariance; spot-check
    for q in range(2, 6):
        for j in range(q + 1):
            for i in range(j):
                lhs = compose(circle_map(coface(i, q - 1)), circle_map(coface(j, q)))
                rhs = compose(circle_map(coface(j - 1, q - 1)), circle_map(coface(i, q)))
                assert lhs == rhs
