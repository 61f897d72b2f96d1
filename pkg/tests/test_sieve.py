import json

import pytest
from hypothesis import given, settings, strategies as st

from idoneal.arith import DomainError, is_prime
from idoneal.reps import enumerate_reps
from idoneal.sieve import (
    MINUS,
    PLUS,
    SieveConfig,
    SieveReport,
    ZIndex,
    admissible_y,
    exclusions_for_y,
    per_z,
    run_sieve,
    survivors,
    y_limit,
    z_sign_of_y,
)
from oracles import brute_admissible_y, brute_exclusions


@pytest.fixture(scope="module")
def paper_report():
    return run_sieve(SieveConfig(232, 300))


@pytest.mark.parametrize(
    "n, limit, ys",
    [(232, 120, [57, 59, 115, 117]), (1, 5, [2, 3, 4, 5]), (232, 56, [])],
)
def test_admissible_y(n, limit, ys):
    assert admissible_y(n, limit) == ys


@given(st.integers(1, 400), st.integers(1, 3000))
def test_admissible_y_matches_filter(n, limit):
    assert admissible_y(n, limit) == brute_admissible_y(n, limit)


def test_admissible_y_for_232_is_58z_pm_1():
    ys = admissible_y(232, 20000)
    assert ys == sorted(y for z in range(1, 346) for y in (58 * z - 1, 58 * z + 1) if y <= 20000)


@pytest.mark.parametrize("y, z, sign", [(59, 1, PLUS), (57, 1, MINUS), (407, 7, PLUS), (811, 14, MINUS)])
def test_z_sign_of_y(y, z, sign):
    zi = z_sign_of_y(y)
    assert zi == ZIndex(z, sign)
    assert zi.y() == y


def test_z_sign_of_y_rejects_inadmissible():
    with pytest.raises(DomainError):
        z_sign_of_y(60)


def test_z_sign_round_trip():
    for y in admissible_y(232, 10**5):
        assert z_sign_of_y(y).y() == y


def test_exclusions_z1_plus():
    ws = exclusions_for_y(232, 59, 300)
    assert [(w.a, w.pair.r, w.pair.s) for w in ws] == [(8, 15, 1), (4, 5, 3)]


def test_exclusions_oddly_even_give_nothing():
    assert exclusions_for_y(232, 57, 300) == []
    # z = 7 plus: M = 714
    assert exclusions_for_y(232, 407, 300) == []


def test_exclusions_bound_filter_z7():
    assert [w.a for w in exclusions_for_y(232, 405, 10**6)] == [354, 54]
    assert [w.a for w in exclusions_for_y(232, 405, 300)] == [54]


def test_exclusions_reject_inadmissible_y():
    with pytest.raises(DomainError):
        exclusions_for_y(232, 60, 300)


def test_witness_identity_exhaustive(paper_report):
    n = paper_report.config.n
    ws = list(paper_report.witnesses())
    assert ws
    for w in ws:
        assert w.check(n)
        assert w.y > 1


def test_per_y_strictly_increasing(paper_report):
    ys = [y for y, _ in paper_report.per_y]
    assert ys == sorted(set(ys))


def test_witnesses_ordered_by_decreasing_r(paper_report):
    for _, ws in paper_report.per_y:
        rs = [w.pair.r for w in ws]
        assert rs == sorted(rs, reverse=True)


def test_partition_of_range(paper_report):
    top = paper_report.config.bound - 1
    exc = {a for a in paper_report.excluded if a <= top}
    assert exc.isdisjoint(paper_report.survivors)
    assert exc | set(paper_report.survivors) == set(range(1, top + 1))
    assert set(paper_report.occurrences) == set(paper_report.excluded)


def test_counts(paper_report):
    assert len(paper_report.survivors) == 124
    assert len([a for a in paper_report.excluded if a < 300]) == 175


def test_survivor_endpoints(paper_report):
    assert survivors(paper_report)[:11] == [1, 2, 3, 5, 6, 7, 9, 10, 12, 13, 15]
    assert survivors(paper_report)[-3:] == [291, 294, 299]


def test_survivors_bound_two():
    assert run_sieve(SieveConfig(232, 2)).survivors == [1]


def test_last_row_and_cutoff(paper_report):
    rows = per_z(paper_report)
    assert max(rows) == 78
    assert [w.a for w in rows[78]] == [298]
    top = y_limit(paper_report.config)
    assert z_sign_of_y(max(y for y in admissible_y(232, top))).z == 78
    # z = 79: both signs give M > 300^2
    assert (58 * 79 - 1) ** 2 - 1 > 232 * 300**2


def test_occurrences_265(paper_report):
    assert paper_report.occurrences[265] == 3
    zs = sorted(z_sign_of_y(w.y).z for w in paper_report.witnesses_of(265))
    assert zs == [18, 69, 69]


def test_matches_direct_second_representation_search(paper_report):
    assert paper_report.occurrences == brute_exclusions(232, 300)


def test_soundness_and_completeness_to_2000():
    report = run_sieve(SieveConfig(232, 2000))
    for a in report.excluded:
        assert not is_prime(232 * a * a + 1), a
    for a in report.survivors:
        assert is_prime(232 * a * a + 1), a


def test_witnesses_appear_among_representations(paper_report):
    for w in paper_report.witnesses():
        reps = enumerate_reps(232, 232 * w.a**2 + 1)
        assert (w.x, w.y) in {(r.x, r.y) for r in reps}


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 60), st.integers(1, 120))
def test_other_coefficients_agree_with_direct_search(n, bound):
    report = run_sieve(SieveConfig(n, bound))
    assert report.occurrences == brute_exclusions(n, bound)


def test_determinism_across_threads():
    cfg = SieveConfig(232, 3000)
    one = run_sieve(cfg).to_json()
    assert run_sieve(cfg).to_json() == one
    for t in (2, 4, 8):
        assert run_sieve(cfg, threads=t).to_json() == one


def test_json_round_trip(paper_report):
    back = SieveReport.from_dict(json.loads(paper_report.to_json()))
    assert back == paper_report


def test_config_validation():
    with pytest.raises(DomainError):
        SieveConfig(0, 10)
    with pytest.raises(OverflowError):
        SieveConfig(232, 2**31)
