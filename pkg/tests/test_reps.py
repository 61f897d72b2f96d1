import pytest
from hypothesis import given, settings, strategies as st

from idoneal.arith import DomainError, is_prime
from idoneal.reps import (
    CERTIFIED_PRIME,
    COMPOSITE,
    NOT_APPLICABLE,
    NOT_REPRESENTED,
    Representation,
    audit_form,
    certify,
    certify_form_value,
    criterion_status,
    enumerate_reps,
    factor_from_two_reps,
)
from oracles import brute_reps, brute_reps_table


def pairs(reps):
    return [(r.x, r.y) for r in reps]


@pytest.mark.parametrize(
    "n, m, expected",
    [
        (232, 16292201, [(265, 1), (256, 1043), (35, 4001), (34, 4003)]),
        (232, 233, [(1, 1)]),
        (232, 3713, [(4, 1), (1, 59)]),
    ],
)
def test_enumerate_reps(n, m, expected):
    assert pairs(enumerate_reps(n, m)) == expected


def test_enumerate_reps_brute_for_paper_example():
    assert pairs(enumerate_reps(232, 3713)) == brute_reps(232, 3713)


@pytest.mark.parametrize("n", [1, 2, 3, 232])
def test_exhaustive_small_range(n):
    limit = 2 * 10**4
    table = brute_reps_table(n, limit)
    for m in range(1, limit + 1):
        assert pairs(enumerate_reps(n, m)) == table.get(m, [])


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([1, 2, 3, 232]), st.integers(1, 10**6))
def test_exhaustive_sampled_to_a_million(n, m):
    assert pairs(enumerate_reps(n, m)) == brute_reps(n, m)


def test_vector_path_large_m():
    # exercises the numpy scan with many representations
    m = 5**4 * 13**2 * 17 * 29
    assert pairs(enumerate_reps(1, m)) == brute_reps(1, m)


def test_properness():
    assert Representation(4, 1).proper
    assert not Representation(0, 5).proper
    assert not Representation(6, 4).proper


@pytest.mark.parametrize(
    "n, m, status",
    [
        (232, 20741033, CERTIFIED_PRIME),
        (232, 3713, COMPOSITE),
        (11, 15, NOT_APPLICABLE),
        (232, 234, NOT_APPLICABLE),  # even
        (232, 29 * 3, NOT_APPLICABLE),  # shares 29 with n
        (232, 3, NOT_REPRESENTED),
    ],
)
def test_certify(n, m, status):
    assert certify(n, m).status == status


def test_certify_needs_m_at_least_two():
    with pytest.raises(DomainError):
        certify(232, 1)


def test_certify_form_value_overflow():
    with pytest.raises(OverflowError):
        certify_form_value(232, 2**31)


def test_lone_improper_representation_is_not_a_certificate():
    # 9 = 0*232 + 3^2 only
    status, reps = criterion_status(232, 9)
    assert pairs(reps) == [(0, 3)]
    assert status == NOT_REPRESENTED


def test_certificate_invariants():
    for a in range(1, 300):
        c = certify_form_value(232, a)
        if c.status == CERTIFIED_PRIME:
            assert len(c.representations) == 1 and c.representations[0].proper
        else:
            assert c.status == COMPOSITE and len(c.representations) >= 2


def test_criterion_agrees_with_oracle_to_2000():
    for a in range(1, 2001):
        m = 232 * a * a + 1
        assert (certify(232, m).status == CERTIFIED_PRIME) == is_prime(m), a
        assert (certify(232, m).status == COMPOSITE) == (not is_prime(m)), a


def test_factor_from_two_reps_small():
    assert factor_from_two_reps(232, 3713, Representation(4, 1), Representation(1, 59)) == 47


def test_factor_from_two_reps_paper():
    m = 16292201
    d = factor_from_two_reps(232, m, Representation(265, 1), Representation(34, 4003))
    assert d in {59, 461, 599, 59 * 461, 59 * 599, 461 * 599}
    assert m % d == 0


def test_factor_from_identical_reps_rejected():
    with pytest.raises(DomainError):
        factor_from_two_reps(232, 3713, Representation(4, 1), Representation(4, 1))


def test_factor_from_non_representation_rejected():
    with pytest.raises(DomainError):
        factor_from_two_reps(232, 3713, Representation(4, 1), Representation(2, 2))


def test_factor_from_every_pair_of_proper_reps():
    for a in range(1, 300):
        m = 232 * a * a + 1
        if is_prime(m):
            continue
        proper = [r for r in enumerate_reps(232, m) if r.proper]
        for i, r1 in enumerate(proper):
            for r2 in proper[i + 1 :]:
                d = factor_from_two_reps(232, m, r1, r2)
                assert 1 < d < m and m % d == 0


@pytest.mark.parametrize("n, m", [(11, 45), (14, 15)])
def test_non_idoneal_counterexamples(n, m):
    status, reps = criterion_status(n, m)
    assert status == CERTIFIED_PRIME and not is_prime(m)
    assert certify(n, m).status == NOT_APPLICABLE


def test_audit_records_counterexamples_for_non_idoneal():
    audit = audit_form(11, 10**5)
    assert not audit.idoneal
    assert audit.findings and not audit.unexplained
    assert audit.findings[0].m == 45


def test_audit_explains_swap_symmetry_for_n1():
    audit = audit_form(1, 10**5)
    assert audit.findings
    assert {f.explanation for f in audit.findings} == {"swap symmetry of x^2 + y^2"}
