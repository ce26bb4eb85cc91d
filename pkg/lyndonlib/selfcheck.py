# -*- coding: utf-8 -*-
"""
Oracle suites run by `lyndon check`.

Each suite compares a linear construction with its brute-force counterpart
on an exhaustive class of words and returns a SuiteResult. Suites share no
state, so they can run on any pool; the results are merged by addition.
"""
import functools

from lyndonlib import oracle
from lyndonlib.core_order import is_lyndon
from lyndonlib.lyndon_scan import (lyndon_factorize, lyndon_suffix_table,
    lyndon_suffix_table_lyndon)
from lyndonlib.lyndon_tree import left_lyndon_forest, left_lyndon_tree
from lyndonlib.prefix_order import (check_cartesian, check_creation_order,
    prefix_standard_permutation)
from lyndonlib.psp_inverse import (inverse_psp_binary, periods_from_psp,
    word_from_psp)


MAX_EXAMPLES = 5


class SuiteResult(object):
    """Pass and fail counts of one suite, with a few failing inputs."""

    def __init__(self, name, passed=0, failed=0, examples=None):
        self.name = name
        self.passed = passed
        self.failed = failed
        self.examples = list(examples or [])

    def record(self, ok, example):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(str(example))

    @property
    def ok(self):
        return self.failed == 0

    def __add__(self, other):
        return SuiteResult(self.name,
            self.passed + other.passed, self.failed + other.failed,
            (self.examples + other.examples)[:MAX_EXAMPLES])

    def __repr__(self):
        return "SuiteResult(%r, passed=%d, failed=%d)" % (self.name,
            self.passed, self.failed)


def _lyndon(sigma, maxlen, minlen=1):
    return [y for y in oracle.enumerate_lyndon(sigma, maxlen)
            if len(y) >= minlen]


def suite_lyns(sigma, maxlen, word_maxlen):
    """Lyndon suffix table and factorization of all words."""
    result = SuiteResult('lyns')
    for y in oracle.enumerate_words(sigma, min(maxlen, word_maxlen)):
        lyns = lyndon_suffix_table(y)
        starts = lyndon_factorize(y, lyns)
        factors = [y[a:b] for a, b in zip(starts, starts[1:] + (len(y),))]
        ok = lyns == oracle.naive_lyns(y) and \
            all(f >= g for f, g in zip(factors, factors[1:])) and \
            all(is_lyndon(f) for f in factors)
        result.record(ok, y)
    return result


def suite_lyns_lyndon(sigma, maxlen, word_maxlen):
    """Lyndon suffix table and prefix periods of Lyndon words."""
    result = SuiteResult('lyns-lyndon')
    for y in _lyndon(sigma, maxlen):
        lyns, period = lyndon_suffix_table_lyndon(y)
        ok = lyns == lyndon_suffix_table(y) == oracle.naive_lyns(y) and \
            period == oracle.naive_periods(y)
        result.record(ok, y)
    return result


def suite_tree(sigma, maxlen, word_maxlen):
    """Left Lyndon tree against the recursive standard factorization."""
    result = SuiteResult('tree')
    for y in _lyndon(sigma, maxlen):
        tree = left_lyndon_tree(y)
        forest = left_lyndon_forest(y)
        ok = tree.nested() == oracle.naive_left_tree(y).nested() and \
            len(forest) == 1 and forest[0] == tree
        result.record(ok, y)
    return result


def suite_forest(sigma, maxlen, word_maxlen):
    """Left Lyndon forest of all words: one tree per factor."""
    result = SuiteResult('forest')
    for y in oracle.enumerate_words(sigma, min(maxlen, word_maxlen)):
        forest = left_lyndon_forest(y)
        starts = lyndon_factorize(y)
        ok = forest.starts == starts and \
            forest.internal_count == len(y) - len(starts) and \
            all(t == left_lyndon_tree(t.word) for t in forest)
        result.record(ok, y)
    return result


def suite_psp(sigma, maxlen, word_maxlen):
    """Prefix standard permutation, creation order and Cartesian shape."""
    result = SuiteResult('psp')
    for y in _lyndon(sigma, maxlen, 2):
        ok = prefix_standard_permutation(y) == oracle.naive_psp(y) and \
            check_creation_order(y) and check_cartesian(y)
        result.record(ok, y)
    return result


def suite_inverse(sigma, maxlen, word_maxlen):
    """Binary words are recovered from their PSP."""
    result = SuiteResult('inverse-psp')
    for y in _lyndon(2, maxlen, 2):
        outcome = inverse_psp_binary(prefix_standard_permutation(y))
        result.record(outcome.accepted and outcome.word == y, y)
    return result


def suite_periods(sigma, maxlen, word_maxlen):
    """Prefix periods read from the PSP."""
    result = SuiteResult('periods-from-psp')
    for y in _lyndon(sigma, maxlen, 2):
        per = periods_from_psp(prefix_standard_permutation(y), len(y))
        result.record(per == oracle.naive_periods(y), y)
    return result


def suite_word_from_psp(sigma, maxlen, word_maxlen):
    """
    Smallest word of a PSP: fixed point, lexicographic minimum of the
    enumerated fibre and bound on the number of letters.
    """
    result = SuiteResult('word-from-psp')
    fibres = {}
    for y in _lyndon(sigma, maxlen, 2):
        fibres.setdefault((len(y), prefix_standard_permutation(y)),
            []).append(y)
    for (n, p), words in sorted(fibres.items(), key=lambda kv: kv[0][0]):
        z = word_from_psp(p, n)
        bound = (n + 1).bit_length()
        smallest = min(words)
        ok = prefix_standard_permutation(z) == p and z <= smallest and \
            len(set(z)) <= bound
        if len(set(z)) <= sigma:
            ok = ok and z == smallest
        result.record(ok, smallest)
    return result


SUITES = [
    suite_lyns,
    suite_lyns_lyndon,
    suite_tree,
    suite_forest,
    suite_psp,
    suite_inverse,
    suite_periods,
    suite_word_from_psp,
]


def _run_suite(sigma, maxlen, word_maxlen, suite):
    return suite(sigma, maxlen, word_maxlen)


def run_suites(sigma, maxlen, word_maxlen, pool, suites=None):
    """
    Run the suites on `pool` and return the list of their results, in the
    order of `suites`. Suites and results travel to worker processes, so
    both stay picklable module-level objects.
    """
    suites = SUITES if suites is None else suites
    return list(pool.map(
        functools.partial(_run_suite, sigma, maxlen, word_maxlen), suites))


def total(results):
    return functools.reduce(lambda a, b: a + b, results,
        SuiteResult('total'))
