"""Orbifold side: the Euler-number double sum, the mirror-Hodge generating
polynomial, the mirror-transformed orbifold E-function, and the structural
identity between its two sector representations."""

from fractions import Fraction

import pytest

from stringymirror import (
    BiPoly,
    EFunction,
    RationalT,
    mirror_orbifold_e,
    q_identity_check,
    stringy_e,
    stringy_euler,
    vafa_euler,
    vafa_poincare,
    validate,
)
from stringymirror.errors import NonIntegerCoefficient
from stringymirror.orbifold import _sector_bipoly

QUINTIC = (1, 1, 1, 1, 1)
K3 = (1, 5, 12, 18)
OCTIC = (1, 1, 2, 2, 2)
FERMAT_LIKE = (1, 1, 2, 4, 5)


# ---------------------------------------------------------------------------
# Euler numbers


def test_vafa_euler_quintic():
    # only (l, r) = (0, 0) contributes a nonempty product: ((-4)^5 + 24)/5
    assert vafa_euler(validate(QUINTIC)) == Fraction((-4) ** 5 + 24, 5) == -200


def test_vafa_euler_octic():
    assert vafa_euler(validate(OCTIC)) == -168


def test_vafa_euler_k3():
    assert vafa_euler(validate(K3)) == 24


@pytest.mark.parametrize("ws", [QUINTIC, K3, OCTIC, FERMAT_LIKE])
def test_euler_sign_rule(ws):
    # chi_str of the mirror = (-1)^(d-1) chi_orb of the hypersurface
    wv = validate(ws)
    assert stringy_euler(wv) == (-1) ** (wv.d - 1) * vafa_euler(wv)


# ---------------------------------------------------------------------------
# mirror Hodge generating polynomial


def test_vafa_poincare_quintic():
    p = vafa_poincare(validate(QUINTIC))
    assert p == BiPoly(
        {
            (0, 0): 1,
            (1, 1): 101,
            (2, 2): 101,
            (3, 3): 1,
            (3, 0): 1,
            (2, 1): 1,
            (1, 2): 1,
            (0, 3): 1,
        }
    )


def test_vafa_poincare_quintic_sectors():
    wv = validate(QUINTIC)
    assert _sector_bipoly(wv, 0) == BiPoly(
        {(0, 0): 1, (1, 1): 101, (2, 2): 101, (3, 3): 1}
    )
    twisted = [_sector_bipoly(wv, l).terms for l in range(1, 5)]
    assert sorted(twisted, key=str) == sorted(
        [{(3, 0): 1}, {(2, 1): 1}, {(1, 2): 1}, {(0, 3): 1}], key=str
    )


def test_vafa_poincare_octic_sectors():
    wv = validate(OCTIC)
    assert _sector_bipoly(wv, 0) == BiPoly(
        {(0, 0): 1, (1, 1): 83, (2, 2): 83, (3, 3): 1}
    )
    assert _sector_bipoly(wv, 4) == BiPoly({(1, 1): 3, (2, 2): 3})


def test_vafa_poincare_octic_total():
    p = vafa_poincare(validate(OCTIC))
    assert p == BiPoly(
        {
            (0, 0): 1,
            (1, 1): 86,
            (2, 1): 2,
            (1, 2): 2,
            (3, 0): 1,
            (0, 3): 1,
            (2, 2): 86,
            (3, 3): 1,
        }
    )


def test_vafa_poincare_symmetric_nonnegative():
    for ws in (QUINTIC, K3, OCTIC):
        p = vafa_poincare(validate(ws))
        for (a, b), c in p.terms.items():
            assert c > 0
            assert p.coefficient(b, a) == c


def test_vafa_poincare_rejects_non_transverse():
    with pytest.raises(NonIntegerCoefficient):
        vafa_poincare(validate(FERMAT_LIKE))


# ---------------------------------------------------------------------------
# mirror-transformed orbifold E-function


def test_mirror_orbifold_octic():
    res = mirror_orbifold_e(validate(OCTIC))
    assert res.value.to_bipoly() == BiPoly(
        {
            (0, 0): 1,
            (1, 1): 86,
            (3, 0): -1,
            (2, 1): -2,
            (1, 2): -2,
            (0, 3): -1,
            (2, 2): 86,
            (3, 3): 1,
        }
    )
    assert res.euler == 168


def test_mirror_orbifold_k3():
    res = mirror_orbifold_e(validate(K3))
    assert res.value.to_bipoly() == BiPoly(
        {(0, 0): 1, (2, 0): 1, (1, 1): 20, (0, 2): 1, (2, 2): 1}
    )
    assert res.per_l_terms[0] == EFunction(2, [(0, 0, RationalT([1, 10, 1]))])


def test_mirror_orbifold_fermat_like_formal():
    res = mirror_orbifold_e(validate(FERMAT_LIKE))
    assert not res.value.is_polynomial()
    assert res.euler == Fraction(1032, 5)


@pytest.mark.parametrize("ws", [QUINTIC, K3, OCTIC, FERMAT_LIKE])
def test_orbifold_result_internal_consistency(ws):
    res = mirror_orbifold_e(validate(ws))
    total = None
    for term in res.per_l_terms.values():
        total = term if total is None else total + term
    assert total == res.value
    assert res.value.value_at_one() == res.euler


@pytest.mark.parametrize("ws", [K3, OCTIC])
def test_per_l_inverse_pairing(ws):
    # the l and w - l sectors differ by swapping u and v
    wv = validate(ws)
    per_l = mirror_orbifold_e(wv).per_l_terms
    for l in range(1, wv.w):
        mine = per_l[l].terms
        theirs = per_l[wv.w - l].terms
        assert mine == {(b, a): r for (a, b), r in theirs.items()}


@pytest.mark.parametrize("ws", [QUINTIC, K3, OCTIC])
def test_mirror_orbifold_equals_stringy(ws):
    wv = validate(ws)
    assert mirror_orbifold_e(wv).value == stringy_e(wv)


# ---------------------------------------------------------------------------
# the two sector representations agree


@pytest.mark.parametrize("ws", [QUINTIC, K3, OCTIC, FERMAT_LIKE])
def test_q_identity(ws):
    assert q_identity_check(validate(ws))
