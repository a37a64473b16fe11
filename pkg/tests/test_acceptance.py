"""Acceptance gate.  Each test records one PASS/FAIL line in the terminal summary."""

import itertools
import random
import time

import pytest

from pogp.bijections import (
    av121_to_labeled_set, av123r_to_partition, av312_to_partition, av3123_to_bicolored,
    av31213_to_gpartition, bicolored_partitions, bicolored_to_av3123, gpartition_to_av31213,
    gpartitions, labeled_set_to_av121, partition_to_av123r, partition_to_av312, set_partitions,
    LabeledBlock,
)
from pogp.enumeration import avoiders, count_avoiders, count_sequence
from pogp.equivalence import brute_equivalent, dashings, equivalent
from pogp.pattern import Pogp, avoids, count_occurrences, linearize
from pogp.perm import complement, lmax, lmax_decomposition, psi, rmax
from pogp.series import bicolored_bell, exp_integral, k_sigma_k_counts

from conftest import P


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_01_bell_numbers(report):
    def work():
        seq = count_sequence([P("3-12")], 8)
        return seq == (1, 1, 2, 5, 15, 52, 203, 877, 4140) and seq == exp_integral((1,) * 8)
    ok, secs = _timed(work)
    ok = report(1, "3-12 avoiders are Bell numbers up to n=8", ok and secs < 60, f"{secs:.1f}s")
    assert ok


def test_02_bicolored(report):
    def work():
        brute = tuple(count_avoiders([P("3-12-3")], n + 1) for n in range(8))
        return brute == bicolored_bell(7) and brute[:6] == (1, 2, 6, 22, 94, 454)
    ok, secs = _timed(work)
    ok = report(2, "3-12-3 avoiders of [n+1] match bicolored partitions, n<=7", ok and secs < 120, f"{secs:.1f}s")
    assert ok


def test_03_dowling(report):
    def work():
        f = count_sequence([P("121")], 7)
        h = k_sigma_k_counts(f)
        brute = tuple(count_avoiders([P("3-121-3")], n + 1) for n in range(8))
        return brute == h[1:9] and brute[:5] == (1, 2, 6, 24, 116)
    ok, secs = _timed(work)
    ok = report(3, "3-121-3 avoiders of [n+1] match Dowling counts, n<=7", ok, f"{secs:.1f}s")
    assert ok


def test_04_recurrence_sweep(report):
    def work():
        bad = []
        for sigma in ["1", "12", "21", "121", "212", "132"]:
            k = max(P(sigma).letters) + 1
            f = count_sequence([P(sigma)], 8)
            if exp_integral(f, length=9) != count_sequence([P(f"{k}-{sigma}")], 8):
                bad.append(f"{k}-{sigma}")
            if k_sigma_k_counts(f, length=9) != count_sequence([P(f"{k}-{sigma}-{k}")], 8):
                bad.append(f"{k}-{sigma}-{k}")
        return bad
    bad, secs = _timed(work)
    ok = report(4, "EGF recurrences match brute force for k-sigma and k-sigma-k, n<=8",
                not bad, ",".join(bad) or f"{secs:.1f}s")
    assert ok


@pytest.mark.xfail(strict=True, reason="213 avoids 121 but contains 2-1-2; the sets agree only after complement")
def test_05_121_closed_form(report):
    counts = all(count_avoiders([P("121")], n) == 2 ** (n - 1) for n in range(1, 10))
    literal = all(set(avoiders([P("121")], n)) == set(avoiders([P("2-1-2")], n)) for n in range(9))
    via_complement = all(
        {complement(p) for p in avoiders([P("121")], n)} == set(avoiders([P("2-1-2")], n))
        == set(avoiders([P("212")], n))
        for n in range(9)
    )
    detail = (f"counts 2^(n-1): {'ok' if counts else 'BAD'}; "
              f"Av(121)=Av(2-1-2) literally: {'ok' if literal else 'false (213)'}; "
              f"complement(Av(121))=Av(2-1-2)=Av(212): {'ok' if via_complement else 'BAD'}")
    ok = report(5, "121 avoiders number 2^(n-1) and coincide with 2-1-2 avoiders", counts and literal, detail)
    assert ok


def test_06_bijections(report):
    def work():
        problems = []
        for n in range(9):
            img312, img123r = set(), set()
            for sp in set_partitions(n):
                p, r = partition_to_av312(sp), partition_to_av123r(sp)
                if av312_to_partition(p) != sp or av123r_to_partition(r) != sp:
                    problems.append(f"partition round trip n={n}")
                if not len(sp.blocks) == len(lmax(p)) == len(rmax(r)):
                    problems.append(f"partition block count n={n}")
                img312.add(p)
                img123r.add(r)
            if img312 != set(avoiders([P("3-12")], n)) or img123r != set(avoiders([P("12-3")], n)):
                problems.append(f"partition image n={n}")

            image = set()
            for b in bicolored_partitions(n):
                p = bicolored_to_av3123(b)
                if av3123_to_bicolored(p) != b:
                    problems.append(f"bicolored round trip n={n}")
                if len(b.left) != len(lmax(p)) - 1 or len(b.right) != len(rmax(p)) - 1:
                    problems.append(f"bicolored block count n={n}")
                image.add(p)
            if image != set(avoiders([P("3-12-3")], n + 1)):
                problems.append(f"bicolored image n={n}")

            image = set()
            for g in gpartitions(n):
                p = gpartition_to_av31213(g)
                if av31213_to_gpartition(p) != g:
                    problems.append(f"G-partition round trip n={n}")
                image.add(p)
            if image != set(avoiders([P("3-121-3")], n + 1)):
                problems.append(f"G-partition image n={n}")

            if n >= 1:
                words = set()
                for labels in itertools.product((0, 1), repeat=n - 1):
                    block = LabeledBlock(tuple(zip(range(1, n + 1), (0,) + labels)))
                    w = labeled_set_to_av121(block)
                    if av121_to_labeled_set(w) != block:
                        problems.append(f"labeled round trip n={n}")
                    words.add(w)
                if words != set(avoiders([P("121")], n)):
                    problems.append(f"labeled image n={n}")
        return problems
    problems, secs = _timed(work)
    ok = report(6, "all bijections round-trip and hit exactly their avoider classes, n<=8",
                not problems and secs < 300, "; ".join(problems[:3]) or f"{secs:.1f}s")
    assert ok


def test_07_block_sizes(report):
    def work():
        problems = []
        for k in (2, 3, 4):
            dec = "".join(str(v) for v in range(k - 1, 0, -1))
            for n in range(8):
                small = sum(all(len(b) < k for b in sp.blocks) for sp in set_partitions(n))
                if count_avoiders([P("3-12"), P(f"{k}-{dec}")], n) != small:
                    problems.append(f"partitions k={k} n={n}")
                small_b = sum(all(len(x) < k for x in b.left | b.right) for b in bicolored_partitions(n))
                if count_avoiders([P("3-12-3"), P(f"{k}-{dec}-{k}")], n + 1) != small_b:
                    problems.append(f"bicolored k={k} n={n}")
        if count_avoiders([P("3-12-3"), P("2-1-2")], 3) != 4:
            problems.append("spot value")
        return problems
    problems, secs = _timed(work)
    ok = report(7, "block-size restricted classes match restricted partition counts",
                not problems, "; ".join(problems) or f"{secs:.1f}s")
    assert ok


def _psi_closed_form(p):
    out = []
    for m, block in reversed(lmax_decomposition(p).items):
        out.extend(block)
        out.append(m)
    return tuple(out)


def test_08_psi(report):
    def work():
        problems = []
        for n in range(8):
            perms = list(itertools.permutations(range(1, n + 1)))
            if len({psi(p) for p in perms}) != len(perms):
                problems.append(f"not bijective n={n}")
            for p in perms:
                q = psi(p)
                if lmax(p) != rmax(q) or _psi_closed_form(p) != q:
                    problems.append(f"transport/closed form {p}")
                for sigma in ("12", "121", "132"):
                    k = max(P(sigma).letters) + 1
                    if avoids(p, P(f"{k}-{sigma}")) != avoids(q, P(f"{sigma}-{k}")):
                        problems.append(f"avoidance {sigma} {p}")
        return problems
    problems, secs = _timed(work)
    ok = report(8, "psi is a bijection carrying LMAX to RMAX and k-sigma to sigma-k",
                not problems, "; ".join(problems[:3]) or f"{secs:.1f}s")
    assert ok


def test_09_equivalence(report):
    def work():
        problems = []
        for m in range(1, 5):
            for w in itertools.product((1, 2, 3), repeat=m):
                if sorted(set(w)) != list(range(1, max(w) + 1)):
                    continue
                for a, b in itertools.combinations(dashings(w), 2):
                    oracle = brute_equivalent(a, b, len(w) + 2).witness is None
                    if equivalent(a, b).equivalent != oracle:
                        problems.append(f"{a} vs {b}")
        groups = [["1-2", "12"], ["2-1-3", "2-13"], ["2-1-2", "21-2", "212"],
                  ["12-12", "1-2-12", "1-2-1-2", "1-21-2"]]
        for group in groups:
            for a, b in itertools.combinations(group, 2):
                if not equivalent(P(a), P(b)).equivalent:
                    problems.append(f"identity {a}={b}")
        witnesses = [("3-2-1", "32-1", "4132"), ("3-2-1", "3-21", "3241"),
                     ("1-3-2-2", "13-2-2", "13542"), ("21-3", "213", "3124"),
                     ("31-3-2", "313-2", "51243"), ("1-32", "132", "1342"),
                     ("1-31-2", "131-2", "14523"), ("11-22", "1122", "236145")]
        for a, b, w in witnesses:
            perm = tuple(int(c) for c in w)
            if avoids(perm, P(a)) == avoids(perm, P(b)) or equivalent(P(a), P(b)).equivalent:
                problems.append(f"witness {w}")
        return problems
    problems, secs = _timed(work)
    ok = report(9, "single-dash classification agrees with the oracle on all words of length <= 4",
                not problems and secs < 600, "; ".join(problems[:3]) or f"{secs:.1f}s")
    assert ok


def test_10_linearization(report):
    rng = random.Random(20061)
    bad = 0
    for _ in range(1000):
        n = rng.randint(0, 7)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        m = rng.randint(1, 5)
        letters = tuple(rng.randint(1, 4) for _ in range(m))
        dashes = tuple(rng.random() < 0.5 for _ in range(m - 1))
        pat = Pogp(letters, dashes)
        if count_occurrences(perm, pat) != sum(count_occurrences(perm, q) for q in linearize(pat)):
            bad += 1
    expansion = {str(q) for q in linearize(P("3-121-3"))}
    ok = bad == 0 and expansion == {"4-132-5", "4-231-5", "5-132-4", "5-231-4"}
    ok = report(10, "occurrence counts split over linear extensions (1000 random pairs)", ok,
                f"{bad} mismatches")
    assert ok
