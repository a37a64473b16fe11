"""Quick table of the worked examples and identities; backs ``--seed-paper-examples``."""

from __future__ import annotations

from pogp import bijections as bij
from pogp import enumeration as en
from pogp import series
from pogp.equivalence import equivalent
from pogp.pattern import Pogp, count_occurrences, linearize
from pogp.perm import Permutation, lmax, psi, rmax

P = Pogp.parse
Q = Permutation.parse


def _checks():
    yield "maxima of 637529184", lambda: (lmax(Q("637529184")), rmax(Q("637529184"))) == ({6, 7, 9}, {4, 8, 9})
    yield "314 is an occurrence of 21-3 in 3124", lambda: count_occurrences(Q("3124"), P("21-3")) == 1
    yield "3-121-3 linearizes into four patterns", lambda: {str(p) for p in linearize(P("3-121-3"))} == {
        "4-132-5", "4-231-5", "5-132-4", "5-231-4"}
    yield "set partition to 3-12 avoider", lambda: str(
        bij.partition_to_av312(bij.SetPartition.parse("{6,3,1}{8,7}{9,5,4,2}"))) == "631879542"
    yield "set partition to 12-3 avoider", lambda: str(
        bij.partition_to_av123r(bij.SetPartition.parse("{5,4,2,9}{7,8}{3,1,6}"))) == "542978316"
    yield "psi links the two partition encodings", lambda: str(psi(Q("631879542"))) == "542978316"
    yield "3-12-3 avoider to bicolored partition", lambda: bij.av3123_to_bicolored(
        Q("6 1 9 4 2 12 3 11 8 5 10 7")) == bij.BicoloredSetPartition.parse("L{6,1}L{9,4,2}R{3,11}R{8,5,10}R{7}")
    yield "labeled set to 121 avoider", lambda: bij.labeled_set_to_av121(bij.LabeledBlock.of(
        {1: 0, 2: 1, 3: 0, 4: 0, 5: 1, 6: 0, 7: 0, 8: 1, 9: 1})) == (7, 6, 4, 3, 1, 2, 5, 8, 9)
    yield "3-121-3 avoider to partial Z2-partition", lambda: bij.av31213_to_gpartition(
        Q("7 9 4 2 5 10 8 1 6 3")) == bij.PartialGPartition.parse("[7:0][2:0,4:0,5:1,9:0][1:0,6:1] n=9")
    yield "Bell numbers from 3-12", lambda: en.count_sequence([P("3-12")], 7) == series.exp_integral(
        (1,) * 7) == (1, 1, 2, 5, 15, 52, 203, 877)
    yield "bicolored Bell numbers from 3-12-3", lambda: en.count_sequence([P("3-12-3")], 7)[1:] == series.bicolored_bell(6)
    yield "Dowling numbers from 3-121-3", lambda: en.count_sequence([P("3-121-3")], 6) == series.k_sigma_k_counts(
        en.count_sequence([P("121")], 4)) == (1, 1, 2, 6, 24, 116, 648)
    yield "121 avoiders number 2^(n-1)", lambda: en.count_sequence([P("121")], 8)[1:] == tuple(
        2 ** (n - 1) for n in range(1, 9))
    for a, b in [("1-2", "12"), ("2-1-3", "2-13"), ("2-1-2", "21-2"), ("21-2", "212"),
                 ("12-12", "1-2-12"), ("1-2-12", "1-2-1-2"), ("1-2-1-2", "1-21-2")]:
        yield f"Av({a}) = Av({b})", lambda a=a, b=b: equivalent(P(a), P(b)).equivalent
    for a, b, w in [("3-2-1", "32-1", "4132"), ("3-2-1", "3-21", "3241"), ("1-3-2-2", "13-2-2", "13542"),
                    ("21-3", "213", "3124"), ("31-3-2", "313-2", "51243"), ("1-32", "132", "1342"),
                    ("1-31-2", "131-2", "14523"), ("11-22", "1122", "236145")]:
        yield f"{w} separates {a} and {b}", lambda a=a, b=b, w=w: (
            en.avoids_one(Q(w), P(a), P(b)) and not equivalent(P(a), P(b)).equivalent)


def run_all() -> int:
    failed = 0
    for name, check in _checks():
        try:
            ok = bool(check())
        except Exception as exc:  # report, keep going
            ok, name = False, f"{name} ({exc})"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    print(f"{failed} failed")
    return 1 if failed else 0
