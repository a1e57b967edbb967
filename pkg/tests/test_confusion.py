import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fstar_metrics import (
    ConfusionMatrix,
    ScoredRecord,
    from_counts,
    from_scored,
    swap_classes,
)

from conftest import FOUR_RECORDS, records


class TestScoredRecord:
    def test_accepts_finite_scores(self):
        r = ScoredRecord(0.25, 1)
        assert r.score == 0.25 and r.label == 1

    @pytest.mark.parametrize("score", [float("nan"), float("inf"), float("-inf")])
    def test_rejects_non_finite_scores(self, score):
        with pytest.raises(ValueError, match="finite"):
            ScoredRecord(score, 0)

    @pytest.mark.parametrize("label", [2, -1, 0.5, "1", True])
    def test_rejects_bad_labels(self, label):
        with pytest.raises(ValueError, match="label"):
            ScoredRecord(0.5, label)


class TestFromCounts:
    def test_hand_sum(self):
        m = from_counts(8, 3, 1, 5)
        assert (m.tp, m.fp, m.fn, m.tn) == (8, 3, 1, 5)
        assert m.n == 17  # 8+3+1+5 by hand

    def test_empty(self):
        assert from_counts(0, 0, 0, 0).n == 0

    def test_single_correct_positive(self):
        m = from_counts(1, 0, 0, 0)
        assert m.n == 1 and m.tp == 1

    def test_negative_names_field(self):
        with pytest.raises(ValueError, match="fn"):
            from_counts(1, 2, -3, 4)

    @pytest.mark.parametrize("bad", [1.5, "3", None, True])
    def test_non_integer_rejected(self, bad):
        with pytest.raises(ValueError, match="tp"):
            from_counts(bad, 0, 0, 0)

    def test_exact_large_totals(self):
        # integer arithmetic, no precision loss at 2**53 scale
        big = 2**53
        assert from_counts(big, big, big, big).n == 4 * big


class TestFromScored:
    def test_four_record_example(self):
        # by hand: 0.9>0.5 true 1 -> tp; 0.2 -> tn; 0.6>0.5 true 0 -> fp; 0.7 -> tp
        m = from_scored(records(FOUR_RECORDS), 0.5)
        assert (m.tp, m.fp, m.tn, m.fn) == (2, 1, 1, 0)

    def test_nothing_exceeds_top_threshold(self):
        m = from_scored(records(FOUR_RECORDS), 1.0)
        assert m.tp == 0 and m.fp == 0
        assert m.fn == 2 and m.tn == 2

    def test_tie_predicts_class_zero(self):
        # strict inequality: a score equal to t does not exceed it
        m = from_scored(records([(0.5, 1)]), 0.5)
        assert m.fn == 1 and m.tp == 0

    def test_empty_records_legal(self):
        assert from_scored([], 0.5).n == 0

    @pytest.mark.parametrize("t", [float("nan"), float("inf")])
    def test_non_finite_threshold_rejected(self, t):
        with pytest.raises(ValueError, match="threshold"):
            from_scored(records(FOUR_RECORDS), t)


_record_lists = st.lists(
    st.tuples(
        st.floats(min_value=-10, max_value=10, allow_nan=False),
        st.integers(min_value=0, max_value=1),
    ),
    max_size=60,
)
_thresholds = st.floats(min_value=-12, max_value=12, allow_nan=False)


class TestScoredProperties:
    @given(_record_lists, _thresholds)
    def test_row_sums_match_label_counts(self, pairs, t):
        m = from_scored(records(pairs), t)
        assert m.tp + m.fn == sum(1 for _, lab in pairs if lab == 1)
        assert m.tn + m.fp == sum(1 for _, lab in pairs if lab == 0)
        assert m.n == len(pairs)

    @given(_record_lists, _thresholds, _thresholds)
    def test_monotone_in_threshold(self, pairs, t1, t2):
        lo, hi = min(t1, t2), max(t1, t2)
        m_lo = from_scored(records(pairs), lo)
        m_hi = from_scored(records(pairs), hi)
        assert m_hi.tp <= m_lo.tp and m_hi.fp <= m_lo.fp
        assert m_hi.fn >= m_lo.fn and m_hi.tn >= m_lo.tn


class TestSwapClasses:
    def test_hand_example(self):
        m = swap_classes(ConfusionMatrix(tp=8, fp=3, fn=1, tn=5))
        assert (m.tp, m.fp, m.fn, m.tn) == (5, 1, 3, 8)

    @given(st.tuples(*[st.integers(min_value=0, max_value=10**6)] * 4))
    def test_involution_preserves_n(self, counts):
        m = ConfusionMatrix(*counts)
        assert swap_classes(swap_classes(m)) == m
        assert swap_classes(m).n == m.n

    def test_empty(self):
        z = ConfusionMatrix(0, 0, 0, 0)
        assert swap_classes(z) == z
