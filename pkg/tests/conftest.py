import itertools

import pytest

from pogp.pattern import Pogp

ACCEPTANCE_RESULTS = []


def naive_occurrences(perm, pat):
    """Occurrence count straight from the definition: every index subset, every relation."""
    letters, m = pat.letters, len(pat.letters)
    total = 0
    for idx in itertools.combinations(range(len(perm)), m):
        if any(not d and idx[t + 1] != idx[t] + 1 for t, d in enumerate(pat.dashes)):
            continue
        ok = True
        for s, t in itertools.combinations(range(m), 2):
            if letters[s] < letters[t] and not perm[idx[s]] < perm[idx[t]]:
                ok = False
            if letters[s] > letters[t] and not perm[idx[s]] > perm[idx[t]]:
                ok = False
        total += ok
    return total


def naive_avoiders(pats, n):
    return [p for p in itertools.permutations(range(1, n + 1))
            if all(naive_occurrences(p, q) == 0 for q in pats)]


def naive_set_partitions(n):
    """Set partitions of [n] from all block-label functions, deduplicated."""
    seen = set()
    for labels in itertools.product(range(n), repeat=n):
        blocks = {}
        for e, b in zip(range(1, n + 1), labels):
            blocks.setdefault(b, set()).add(e)
        seen.add(frozenset(frozenset(b) for b in blocks.values()))
    return seen


def P(text):
    return Pogp.parse(text)


@pytest.fixture
def report():
    def _report(number, description, ok, detail=""):
        ACCEPTANCE_RESULTS.append((number, description, ok, detail))
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        extra = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {number:>2}. {description}{extra}")
