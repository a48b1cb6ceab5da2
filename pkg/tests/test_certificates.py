import dataclasses

import pytest

from steinberg import (
    Conclusion,
    IrreducibilityCertificate,
    QuadraticCharacter,
    TheoremVerdict,
    a_p,
    certify_congruence,
    check_theorem_a,
    conductor,
    irreducibility_certificate,
    kronecker,
    make_model,
    primes_up_to,
    reverify_verdict,
    unramified_at,
    validate_pair,
    verify_irreducibility_certificate,
)


@pytest.fixture(scope="module")
def isogeny_curve():
    # admits a rational 5-isogeny, so the mod-5 representation is reducible
    return make_model(0, -1, 1, -10, -20)


# -- irreducibility ------------------------------------------------------------

def test_irreducibility_certificate_golden(E):
    cert = irreducibility_certificate(E, 5, 100)
    assert cert is not None
    assert cert.q == 3
    assert cert.a_q == 2
    assert (cert.trace_mod_ell, cert.det_mod_ell) == (2, 3)
    assert cert.disc_mod_ell == 2
    assert cert.nonresidue_witness
    assert verify_irreducibility_certificate(E, cert)


def test_irreducibility_witness_is_least(E):
    cert = irreducibility_certificate(E, 5, 100)
    N = conductor(E)
    for q in primes_up_to(cert.q - 1):
        valid = (5 * N) % q != 0 and kronecker((a_p(E, q) ** 2 - 4 * q) % 5, 5) == -1
        assert not valid, q


def test_irreducibility_absent_for_reducible_curve(isogeny_curve):
    assert irreducibility_certificate(isogeny_curve, 5, 1000) is None


def test_irreducibility_empty_search_range(E):
    assert irreducibility_certificate(E, 5, 2) is None


def test_irreducibility_rejects_bad_ell(E):
    with pytest.raises(ValueError):
        irreducibility_certificate(E, 2, 100)
    with pytest.raises(ValueError):
        irreducibility_certificate(E, 9, 100)


def test_verify_rejects_tampered_certificate(E, Eprime):
    cert = irreducibility_certificate(E, 5, 100)
    assert not verify_irreducibility_certificate(Eprime, cert)
    for field, value in (("q", 7), ("a_q", 1), ("disc_mod_ell", 1), ("det_mod_ell", 4)):
        broken = dataclasses.replace(cert, **{field: value})
        assert not verify_irreducibility_certificate(E, broken), field


def test_irreducibility_serialization_round_trip(E):
    cert = irreducibility_certificate(E, 5, 100)
    assert IrreducibilityCertificate.from_dict(cert.to_dict()) == cert


# -- unramifiedness --------------------------------------------------------------

def test_unramified_at_golden(E):
    assert unramified_at(E, 19, 5)  # v_19 = 5 and 5 | 5
    assert not unramified_at(E, 37, 5)  # v_37 = 1
    assert unramified_at(E, 2, 5)  # v_2 = 5


def test_unramified_at_rejects_bad_inputs(E):
    with pytest.raises(ValueError):
        unramified_at(E, 5, 5)  # p = ell
    with pytest.raises(ValueError):
        unramified_at(E, 3, 5)  # good reduction at 3
    with pytest.raises(ValueError):
        unramified_at(make_model(0, 0, 0, 0, 1), 2, 5)  # additive at 2
    with pytest.raises(ValueError):
        unramified_at(E, 19, 6)


# -- main verdict ----------------------------------------------------------------

def test_verdict_certified(E):
    v = check_theorem_a(E, 19, 5)
    assert v.conclusion is Conclusion.EXISTENCE_CERTIFIED
    assert v.failed_checks == ()
    assert v.steinberg_at_p and v.a_p == -1
    assert v.ell_not_2p and v.ell_coprime_level
    assert v.p_is_minus_one_mod_ell and v.unramified_at_p
    assert v.irreducibility is not None and v.irreducibility.q == 3
    assert (v.level, v.v_min_disc_at_p) == (1406, 5)


def test_verdict_fails_at_37_mod_5(E):
    v = check_theorem_a(E, 37, 5)
    assert v.conclusion is Conclusion.HYPOTHESIS_FAILED
    assert v.failed_checks == ("p_is_minus_one_mod_ell", "unramified_at_p")
    assert v.p % v.ell == 2  # 37 = 2 (mod 5), not -1
    assert v.v_min_disc_at_p == 1


def test_verdict_fails_at_19_mod_7(E):
    v = check_theorem_a(E, 19, 7)
    assert v.conclusion is Conclusion.HYPOTHESIS_FAILED
    assert v.failed_checks == ("p_is_minus_one_mod_ell", "unramified_at_p")
    assert v.p % v.ell == 5  # 19 = 5 (mod 7), not -1
    assert v.v_min_disc_at_p == 5  # but 7 does not divide 5


def test_verdict_inconclusive_when_search_exhausted(E):
    v = check_theorem_a(E, 19, 5, search_bound=2)
    assert v.conclusion is Conclusion.INCONCLUSIVE
    assert v.failed_checks == ()
    assert v.irreducibility is None


def test_verdict_steinberg_failure(E):
    v = check_theorem_a(E, 3, 5)  # good reduction at 3
    assert v.conclusion is Conclusion.HYPOTHESIS_FAILED
    assert "steinberg_at_p" in v.failed_checks


def test_verdict_rejects_composite_inputs(E):
    with pytest.raises(ValueError):
        check_theorem_a(E, 4, 5)
    with pytest.raises(ValueError):
        check_theorem_a(E, 19, 15)


def test_verdict_reverification(E):
    for p, ell in ((19, 5), (37, 5), (19, 7)):
        v = check_theorem_a(E, p, ell)
        assert reverify_verdict(v), (p, ell)
    tampered = dataclasses.replace(check_theorem_a(E, 19, 5), unramified_at_p=False)
    assert not reverify_verdict(tampered)


def test_verdict_serialization_round_trip(E):
    for p, ell in ((19, 5), (37, 5)):
        v = check_theorem_a(E, p, ell)
        assert TheoremVerdict.from_dict(v.to_dict()) == v


# -- pair validation ---------------------------------------------------------------

@pytest.fixture(scope="module")
def pair_certificate(E, Eprime):
    return certify_congruence(E, Eprime, 5, QuadraticCharacter(19))


def test_validate_pair_consistent(E, Eprime, pair_certificate):
    report = validate_pair(E, Eprime, 19, 5, pair_certificate)
    assert report.consistent
    assert report.p_is_minus_one_mod_ell and report.unramified_at_p
    assert report.inconsistencies == ()
    assert report.to_dict()["consistent"] is True


def test_validate_pair_rejects_equal_signs(E, Eprime, pair_certificate):
    with pytest.raises(ValueError, match="not opposite"):
        validate_pair(E, E, 19, 5, pair_certificate)
    with pytest.raises(ValueError, match="not opposite"):
        validate_pair(E, Eprime, 37, 5, pair_certificate)  # both nonsplit at 37


def test_validate_pair_rejects_wrong_certificate(E, Eprime, pair_certificate):
    swapped = dataclasses.replace(pair_certificate, curve_a=(0, -1, 1, -10, -20))
    with pytest.raises(ValueError, match="different curves"):
        validate_pair(E, Eprime, 19, 5, swapped)
    with pytest.raises(ValueError, match="does not match ell"):
        validate_pair(E, Eprime, 19, 7, pair_certificate)


def test_validate_pair_rejects_unexcluded_prime(E, Eprime, pair_certificate):
    # a certificate whose twist does not vanish at p says nothing about p
    retwisted = dataclasses.replace(pair_certificate, twist=QuadraticCharacter(5))
    with pytest.raises(ValueError, match="does not exclude"):
        validate_pair(E, Eprime, 19, 5, retwisted)


def test_validate_pair_rejects_failing_certificate(E, Eprime, isogeny_curve):
    failing = certify_congruence(E, isogeny_curve, 5, QuadraticCharacter(1))
    assert not failing.passed
    with pytest.raises(ValueError, match="not a passing"):
        validate_pair(E, Eprime, 19, 5, failing)
