from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebdisc.muttjeff import jeff, jeff_shift, mutt, uprime_sqrt
from chebdisc.polycore import RatPoly
from chebdisc.rootiso import (
    NotSquarefreeError,
    count_roots,
    isolate_roots,
    pair_roots,
    refine_root,
    round_root,
    sturm_chain,
)

SQRT2 = RatPoly([-2, 0, 1])


def _brute_count(rs, lo, hi):
    return sum(lo < r <= hi for r in rs)


def from_roots(rs):
    p = RatPoly([1])
    for r in rs:
        p = p * RatPoly([-r, 1])
    return p


class TestSturm:
    def test_sqrt2_chain(self):
        assert sturm_chain(SQRT2) == [SQRT2, RatPoly([0, 2]), RatPoly([2])]
        assert count_roots(SQRT2, 0, 2) == 1
        assert count_roots(SQRT2, -2, 2) == 2

    def test_mutt_jeff_counts(self):
        assert count_roots(mutt(6)[1], 0, 1) == 5
        assert count_roots(jeff(6), 0, 1) == 5

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            sturm_chain(RatPoly([1, 2, 1]))

    @given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=6, unique=True),
           st.fractions(min_value=-4, max_value=4, max_denominator=7),
           st.fractions(min_value=0, max_value=4, max_denominator=7))
    def test_count_matches_known_roots(self, rs, lo, span):
        # counting on (lo, hi], including hi landing exactly on a root
        p = from_roots(rs)
        assert count_roots(p, lo, lo + span) == _brute_count(rs, lo, lo + span)


class TestIsolate:
    def test_sqrt2(self):
        (iv,) = isolate_roots(SQRT2, (0, 2))
        assert iv.lo < F(14142, 10000) < F(14143, 10000) <= iv.hi or iv.lo < F(14142, 10000)
        fine = refine_root(iv, F(1, 10**6))
        assert fine.lo**2 < 2 <= fine.hi**2
        assert fine.width <= F(1, 10**6)
        assert round_root(fine, 7) == "1.414214"

    def test_default_domain(self):
        assert len(isolate_roots(SQRT2)) == 2

    @given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=8), min_size=1, max_size=6, unique=True))
    @settings(max_examples=60)
    def test_isolation_invariants(self, rs):
        p = from_roots(rs)
        ivs = isolate_roots(p)
        assert len(ivs) == len(rs)
        for a, b in zip(ivs, ivs[1:]):
            assert a.hi <= b.lo
        for iv, r in zip(ivs, sorted(rs)):
            assert count_roots(p, iv.lo, iv.hi) == 1
            assert iv.lo < r <= iv.hi
            fine = refine_root(iv, F(1, 1000))
            assert iv.lo <= fine.lo < fine.hi <= iv.hi
            assert fine.lo < r <= fine.hi

    def test_refine_noop_when_wide(self):
        (iv,) = isolate_roots(SQRT2, (0, 2))
        assert refine_root(iv, 1) == iv or refine_root(iv, 1).width <= 1

    def test_mutt6_rounding(self):
        got = [round_root(iv) for iv in isolate_roots(mutt(6)[1], (0, 1))]
        assert got == ["0.13438", "0.36174", "0.62420", "0.85150", "0.98272"]

    def test_jeff6_smallest(self):
        iv = refine_root(isolate_roots(jeff(6), (0, 1))[0], F(1, 10**7))
        assert iv.lo < F(32902, 10**7) < iv.hi or round_root(iv) == "0.0032902"
        assert round_root(iv) == "0.0032902"

    def test_shift_of_isolation(self):
        c = jeff_shift(6)
        up = isolate_roots(uprime_sqrt(6), (0, 1))
        jr = isolate_roots(jeff(6), (-c, 1 - c))
        assert len(up) == len(jr) == 5
        for a, b in zip(up, jr):
            assert (a.lo, a.hi) == (b.lo + c, b.hi + c)


@pytest.mark.parametrize("n", range(2, 21))
def test_root_counts(n):
    c = jeff_shift(n)
    for p in (jeff(n), mutt(n)[0], uprime_sqrt(n)):
        assert len(isolate_roots(p)) == n - 1
        assert count_roots(p, -c, 1) == n - 1
        assert p.evaluate(1) != 0


@pytest.mark.parametrize("n", range(2, 16))
def test_shift_consistency(n):
    c = jeff_shift(n)
    w = F(1, 10**30)
    up = [refine_root(iv, w) for iv in isolate_roots(uprime_sqrt(n), (-1, 1))]
    jr = [refine_root(iv, w) for iv in isolate_roots(jeff(n), (-1, 1))]
    for a, b in zip(up, jr):
        # intervals for zeta^2 - c and the J root must overlap
        assert a.lo - c < b.hi and b.lo < a.hi - c


class TestPairing:
    def test_n6(self):
        rep = pair_roots(6)
        assert len(rep.pairs) == 4
        assert all(p.in_window and p.gap_ok for p in rep.pairs)
        want = [("0.13452", "0.13438"), ("0.36181", "0.36174"), ("0.62428", "0.62420"), ("0.85163", "0.85150")]
        assert [(round_root(p.j_root), round_root(p.m_root)) for p in rep.pairs] == want
        assert round_root(rep.unpaired_j) == "0.0032902"
        assert round_root(rep.unpaired_m) == "0.98272"
        assert rep.passed

    def test_n2(self):
        rep = pair_roots(2)
        assert rep.pairs == [] and rep.passed
        assert rep.to_json()["pairs"] == []

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            pair_roots(1)

    def test_json_shape(self):
        d = pair_roots(7).to_json()
        assert set(d) >= {"n", "pairs", "unpaired_j", "unpaired_m"}
        p = d["pairs"][0]
        assert set(p) >= {"j", "m", "in_window", "gap_le"}
        assert all(isinstance(s, str) for s in p["j"] + p["m"])

    def test_custom_width(self):
        rep = pair_roots(8, F(1, 10**9))
        assert all(p.j_root.width <= F(1, 10**9) for p in rep.pairs)

    def test_intervals_certified(self):
        rep = pair_roots(9)
        for p in rep.pairs:
            assert count_roots(jeff(9), p.j_root.lo, p.j_root.hi) == 1
            assert count_roots(mutt(9)[0], p.m_root.lo, p.m_root.hi) == 1
