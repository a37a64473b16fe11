import itertools

import pytest
from hypothesis import given, strategies as st

from pogp.perm import (
    Permutation, PermutationError, complement, ins, lmax, lmax_decomposition, psi,
    reverse, rmax, rmax_decomposition, split_at_max,
)

Q = Permutation.parse


def perms(max_n=8):
    return st.integers(0, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation))


def test_maxima_examples():
    p = Q("637529184")
    assert lmax(p) == {6, 7, 9}
    assert rmax(p) == {4, 8, 9}
    assert lmax(Q("")) == set() and rmax(Q("")) == set()
    assert lmax(Q("123")) == {1, 2, 3}
    assert rmax(Q("321")) == {1, 2, 3}


def test_split_at_max():
    assert split_at_max(Q("637529184")) == ((6, 3, 7, 5, 2), (1, 8, 4))
    assert split_at_max(Q("1")) == ((), ())
    assert split_at_max(Q("312")) == ((), (1, 2))
    with pytest.raises(PermutationError, match="cannot split empty permutation"):
        split_at_max(Q(""))


def test_ins():
    assert ins(Q("321"), 2, 2) == Q("4231")
    assert ins(Q(""), 1, 1) == Q("1")
    assert ins(Q("321"), 1, 4) == Q("4321")
    for bad in [(0, 1), (5, 1), (1, 0), (1, 5)]:
        with pytest.raises(PermutationError):
            ins(Q("321"), *bad)


def _psi_closed_form(p):
    # reverse the LMAX blocks, each maximum moved behind its block
    out = []
    for m, block in reversed(lmax_decomposition(p).items):
        out.extend(block)
        out.append(m)
    return tuple(out)


def test_psi_examples():
    assert psi(Q("12")) == Q("21") and psi(Q("21")) == Q("12")
    assert psi(Q("637529184")) == Q("184952736")
    assert _psi_closed_form(Q("637529184")) == Q("184952736")
    assert psi(Q("631879542")) == Q("542978316")
    assert psi(Q("")) == Q("")


def test_decompositions():
    d = lmax_decomposition(Q("637529184"))
    assert d.items == ((6, (3,)), (7, (5, 2)), (9, (1, 8, 4)))
    assert lmax_decomposition(Q("")).items == ()
    r = rmax_decomposition(Q("4132"))
    assert r.items == ((4, ()), (3, (1,)), (2, ()))
    assert r.flatten() == Q("4132")


def test_symmetries():
    assert complement(Q("132")) == Q("312")
    assert reverse(Q("132")) == Q("231")
    assert complement(complement(Q("637529184"))) == Q("637529184")


@pytest.mark.parametrize("n", range(0, 9))
def test_psi_bijective_and_length_preserving(n):
    images = {psi(p) for p in itertools.permutations(range(1, n + 1))}
    assert len(images) == len(list(itertools.permutations(range(n))))
    assert all(len(p) == n for p in images)


@given(perms())
def test_psi_transports_maxima(p):
    assert lmax(p) == rmax(psi(p))
    assert psi(p) == _psi_closed_form(p)


@given(perms())
def test_recomposition(p):
    d = lmax_decomposition(p)
    assert d.flatten() == p
    assert all(v < m for m, block in d.items for v in block)
    assert list(d.maxima()) == sorted(d.maxima())
    assert rmax_decomposition(p).flatten() == p


@given(perms(7))
def test_append_max_then_split(p):
    q = ins(p, len(p) + 1, len(p) + 1)
    assert split_at_max(q) == (tuple(p), ())


@given(perms(8).filter(len))
def test_split_maxima_identities(p):
    left, right = split_at_max(p)
    n = len(p)
    assert lmax(p) == lmax(left) | {n}
    assert rmax(p) == rmax(right) | {n}


def test_text_format():
    assert str(Q("637529184")) == "637529184"
    long = Q("6 1 9 4 2 12 3 11 8 5 10 7")
    assert str(long) == "6 1 9 4 2 12 3 11 8 5 10 7"
    assert Q("6,1,9,4,2,12,3,11,8,5,10,7") == long
    assert Q(str(long)) == long
    for bad in ["122", "1a2", "0 1", "13"]:
        with pytest.raises(PermutationError):
            Q(bad)
