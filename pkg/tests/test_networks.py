import math

import pytest

from wordposets import (
    BudgetError,
    CoxeterGraph,
    INFINITY,
    SearchResult,
    count_classes,
    is_reduced,
    limit_lower_bound,
    p_n,
    p_sequence,
    search_M,
    w0_word,
)


def test_w0_word_examples():
    assert w0_word(1) == ()
    assert w0_word(2) == (1,)
    assert w0_word(4) == (1, 2, 1, 3, 2, 1)


def test_w0_word_is_reduced_of_full_length():
    for n in range(2, 7):
        word = w0_word(n)
        assert len(word) == n * (n - 1) // 2
        assert is_reduced(CoxeterGraph.type_a(n - 1), word)


def test_w0_word_rejects_bad_n():
    with pytest.raises(ValueError):
        w0_word(0)
    with pytest.raises(ValueError):
        w0_word(2.5)


def test_p_n_small_values():
    assert [p_n(n) for n in range(1, 6)] == [1, 1, 2, 8, 62]


def test_p_sequence():
    assert p_sequence(3) == [1, 1, 2]
    assert p_sequence(6) == [1, 1, 2, 8, 62, 908]


def test_p_sequence_nondecreasing():
    seq = p_sequence(6)
    assert all(a <= b for a, b in zip(seq, seq[1:]))


def test_p_sequence_rejects_bad_n():
    with pytest.raises(ValueError):
        p_sequence(0)


def test_limit_lower_bound_examples():
    assert limit_lower_bound(2, 1) == 0.0
    assert limit_lower_bound(8, 1232944) == pytest.approx(0.50089, abs=1e-5)
    assert limit_lower_bound(12, 2894710651370536) == pytest.approx(0.53941, abs=1e-4)


def test_limit_lower_bound_is_log_over_crossings():
    assert limit_lower_bound(5, 62) == pytest.approx(math.log(62) / 10)


def test_limit_lower_bound_monotone_in_p():
    assert limit_lower_bound(6, 908) < limit_lower_bound(6, 909)


def test_limit_lower_bound_rejects_bad_inputs():
    with pytest.raises(ValueError):
        limit_lower_bound(1, 10)
    with pytest.raises(ValueError):
        limit_lower_bound(6, 0)


def test_search_small_values():
    values = [search_M(k, max_rank=k).value for k in range(6)]
    assert values == [1, 1, 1, 2, 2, 3]


def test_search_k0():
    result = search_M(0)
    assert isinstance(result, SearchResult)
    assert result.value == 1
    assert result.word == ()


def test_search_witnesses_attain_their_value():
    for k in range(1, 6):
        result = search_M(k, max_rank=k)
        assert len(result.word) == k
        assert result.graph.rank <= k
        assert is_reduced(result.graph, result.word)
        assert count_classes(result.graph, result.word) == result.value


def test_search_no_gap_label_set():
    # without label 2 the whole length must sit on one connected support
    result = search_M(3, labels={3}, max_rank=3)
    assert result.value == 2
    assert count_classes(result.graph, result.word) == 2


def test_search_only_commuting_label():
    # label set {2}: every element is a product of distinct commuting
    # generators, one class each
    result = search_M(3, labels={2}, max_rank=3)
    assert result.value == 1
    assert sorted(result.word) == [1, 2, 3]
    assert result.graph.edges() == []


def test_search_infinite_label_only():
    result = search_M(4, labels={INFINITY}, max_rank=2)
    assert result.value == 1
    assert len(result.word) == 4


def test_search_rank_shortfall_is_an_error():
    # rank-1 groups stop at length 1, so k=2 with max_rank=1 has no element
    with pytest.raises(ValueError):
        search_M(2, labels={2}, max_rank=1)


def test_search_input_validation():
    with pytest.raises(ValueError):
        search_M(-1)
    with pytest.raises(ValueError):
        search_M(2, max_rank=3)
    with pytest.raises(ValueError):
        search_M(1, max_rank=0)
    with pytest.raises(ValueError):
        search_M(3, labels={1, 3})


def test_search_budget():
    with pytest.raises(BudgetError):
        search_M(5, budget=10)


def test_p_n_never_beats_search():
    # P(n) <= M(k_n): the staircase element lives inside the search space
    assert p_n(3) <= search_M(3, max_rank=3).value
    assert p_n(4) <= search_M(6, max_rank=4).value
