import random
from itertools import combinations, permutations

import pytest

from springer_pinball.combinatorics import Permutation, reduced_word


def all_perms(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def subword_bruhat(v: Permutation, w: Permutation) -> bool:
    """Reference order: v <= w iff some reduced subword of a reduced word of w gives v."""
    word = reduced_word(w)
    lv = v.length()
    for pos in combinations(range(len(word)), lv):
        if Permutation.from_word([word[j] for j in pos], w.n) == v:
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(20261017)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
