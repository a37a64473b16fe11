import itertools
import math

import pytest

from pogp.enumeration import (
    MAX_N, EnumerationLimitError, avoider_sets, avoiders, count_avoiders, count_sequence,
    first_in_difference, max_n, witness_difference,
)
from pogp.pattern import Pogp, avoids
from pogp.perm import Permutation, lmax_decomposition, psi, split_at_max

from conftest import P, naive_avoiders

Q = Permutation.parse


def test_avoiders_examples():
    assert list(avoiders([P("12")], 3)) == [Q("321")]
    assert list(avoiders([P("2-1-2")], 3)) == [Q(s) for s in ["123", "132", "231", "321"]]
    av = list(avoiders([P("3-12-3")], 4))
    assert len(av) == 22
    missing = set(itertools.permutations(range(1, 5))) - set(av)
    assert missing == {Q("3124"), Q("4123")}


def test_avoiders_lexicographic_and_unique():
    av = list(avoiders([P("3-12")], 6))
    assert av == sorted(av) and len(av) == len(set(av))


@pytest.mark.parametrize("texts,n,expected", [
    (["3-12"], 4, 15), (["3-12-3"], 5, 94), (["3-121-3"], 5, 116),
])
def test_count_examples(texts, n, expected):
    assert count_avoiders([P(t) for t in texts], n) == expected


def test_count_sequence_examples():
    assert count_sequence([P("121")], 5) == (1, 1, 2, 4, 8, 16)
    assert count_sequence([P("3-12")], 5) == (1, 1, 2, 5, 15, 52)


def test_block_size_restriction_via_partitions():
    from pogp.bijections import set_partitions

    expected = tuple(sum(all(len(b) < 4 for b in sp.blocks) for sp in set_partitions(n)) for n in range(8))
    assert count_sequence([P("3-12"), P("4-321")], 7) == expected


@pytest.mark.parametrize("texts", [["3-12"], ["2-1-2"], ["3-121-3"], ["12", "2-1"], ["1-1"], ["3-12", "3-12"]])
def test_matches_naive_filter(texts):
    pats = [P(t) for t in texts]
    for n in range(7):
        assert list(avoiders(pats, n)) == naive_avoiders(pats, n)


def test_duplicates_after_canonicalization():
    assert count_avoiders([P("3-12"), Pogp((5, 2, 4), (True, False))], 6) == 203


def test_countseq_invariants():
    for text in ["1", "12", "3-12-3", "1-1", "121"]:
        seq = count_sequence([P(text)], 7)
        assert seq[0] == 1
        assert all(a <= math.factorial(n) for n, a in enumerate(seq))


def test_witness_examples():
    assert witness_difference(P("3-2-1"), P("32-1"), 5) == Q("4132")
    assert witness_difference(P("1-2"), P("12"), 8) is None
    w = witness_difference(P("11-22"), P("1122"), 6)
    assert len(w) == 6
    for cand in (w, Q("236145")):
        assert avoids(cand, P("11-22")) != avoids(cand, P("1122"))


def test_first_in_difference_matches_witness():
    a, b = P("21-3"), P("213")
    assert first_in_difference(avoider_sets(a, 5), avoider_sets(b, 5)) == witness_difference(a, b, 5)


SIGMAS = ["12", "21", "121", "212", "132"]


def _k(sigma):
    return max(P(sigma).letters) + 1


@pytest.mark.parametrize("sigma", SIGMAS)
def test_split_at_max_for_k_sigma(sigma):
    k = _k(sigma)
    s, ks, sk, ksk = P(sigma), P(f"{k}-{sigma}"), P(f"{sigma}-{k}"), P(f"{k}-{sigma}-{k}")
    for n in range(1, 8):
        for p in itertools.permutations(range(1, n + 1)):
            left, right = split_at_max(p)
            assert avoids(p, ks) == (avoids(left, ks) and avoids(right, s))
            assert avoids(p, ksk) == (avoids(left, ks) and avoids(right, sk))
            blocks = [b for _, b in lmax_decomposition(p).items]
            assert avoids(p, ks) == all(avoids(b, s) for b in blocks)
            assert avoids(p, ks) == avoids(psi(p), sk)


def _decreasing_runs_with_rising_heads(p):
    runs, cur = [], []
    for v in p:
        if cur and v > cur[-1]:
            runs.append(cur)
            cur = []
        cur.append(v)
    if cur:
        runs.append(cur)
    heads = [r[0] for r in runs]
    return heads == sorted(heads) and all(r[0] == max(r) for r in runs)


@pytest.mark.parametrize("n", range(8))
def test_3_12_avoiders_are_decreasing_runs(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert avoids(p, P("3-12")) == _decreasing_runs_with_rising_heads(p)


def test_deterministic_and_parallel():
    pats = [P("3-12-3")]
    seq = count_sequence(pats, 8)
    assert count_sequence(pats, 8) == seq
    assert count_sequence(pats, 8, workers=2) == seq
    assert list(avoiders(pats, 6)) == list(avoiders(pats, 6))


def test_ceiling(monkeypatch):
    assert max_n() == MAX_N
    with pytest.raises(EnumerationLimitError):
        count_avoiders([P("12")], MAX_N + 1)
    monkeypatch.setenv("POGP_MAX_N", "5")
    assert max_n() == 5
    with pytest.raises(EnumerationLimitError):
        list(avoiders([P("12")], 6))
    monkeypatch.setenv("POGP_MAX_N", "50")
    assert max_n() == MAX_N
