"""End-to-end duality reports: the face-assembled stringy E-function against
the orbifold sector sum, globally, per group element, and at the Hodge
level."""

from fractions import Fraction

import pytest

from stringymirror import per_l_check, validate, verify
from stringymirror.errors import NotIP, OutOfRange

QUINTIC = (1, 1, 1, 1, 1)
K3 = (1, 5, 12, 18)
OCTIC = (1, 1, 2, 2, 2)
FERMAT_LIKE = (1, 1, 2, 4, 5)


def test_verify_k3():
    report = verify(validate(K3))
    assert report.passed
    assert report.global_identity
    assert report.per_l_failures == ()
    assert report.transverse
    assert report.stringy_polynomial
    assert report.hodge_pairs_match
    assert report.euler_stringy == 24
    assert report.euler_orbifold == 24


def test_verify_octic():
    report = verify(validate(OCTIC))
    assert report.passed
    assert report.euler_stringy == 168
    assert report.euler_orbifold == -168
    assert report.stringy_polynomial


def test_verify_quintic():
    report = verify(validate(QUINTIC))
    assert report.passed
    assert report.hodge_pairs_match
    assert (report.euler_stringy, report.euler_orbifold) == (200, -200)


def test_verify_fermat_like_identity_without_mirror():
    # the identity holds as rational functions even though no polynomial
    # (hence no mirror Calabi-Yau) comes out
    report = verify(validate(FERMAT_LIKE))
    assert report.global_identity
    assert report.passed
    assert not report.stringy_polynomial
    assert not report.transverse
    assert report.euler_stringy == Fraction(1032, 5)
    assert report.euler_orbifold == Fraction(-1032, 5)


def test_verify_requires_ip():
    with pytest.raises(NotIP):
        verify(validate((1, 1, 4)))


def test_verify_transverse_members_are_polynomial():
    for ws in (QUINTIC, K3, OCTIC):
        report = verify(validate(ws))
        assert report.transverse and report.stringy_polynomial


def test_per_l_check_untwisted():
    assert per_l_check(validate(K3), 0)


def test_per_l_check_top_size_element():
    # size d + 1 collapses both sides to a single monomial
    assert per_l_check(validate(K3), 1)


def test_per_l_check_all_octic():
    wv = validate(OCTIC)
    assert all(per_l_check(wv, l) for l in range(wv.w))


def test_per_l_check_guards():
    wv = validate(K3)
    with pytest.raises(OutOfRange):
        per_l_check(wv, 36)
    with pytest.raises(NotIP):
        per_l_check(validate((1, 1, 4)), 0)


def test_global_identity_is_per_l_aggregate():
    report = verify(validate(OCTIC))
    assert report.global_identity == (not report.per_l_failures)
