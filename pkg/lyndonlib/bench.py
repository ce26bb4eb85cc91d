# -*- coding: utf-8 -*-
"""
Counters and timings run by `lyndon bench`.

The counters of ComparisonBudget are checked against the linear bounds of
the constructions on random inputs; the timings are medians over the
trials, measured with time.perf_counter.
"""
import collections
import random
import statistics
import time

from lyndonlib.core_order import Word
from lyndonlib.log import logger
from lyndonlib.lyndon_scan import ComparisonBudget, lyndon_suffix_table
from lyndonlib.lyndon_tree import left_lyndon_forest, left_lyndon_tree
from lyndonlib.prefix_order import prefix_standard_permutation


SCALING_FACTOR = 10
SCALING_TOLERANCE = 15.0


def random_word(n, rng, letters='ab'):
    return Word(rng.choices(letters, k=n))


def random_lyndon_word(n, rng, letters='bc'):
    """'a' followed by letters larger than 'a' is always a Lyndon word."""
    return Word(['a'] + rng.choices(letters, k=n - 1))


def _timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


class BenchReport(object):
    """Timings (median seconds) and the outcome of every bound check."""

    def __init__(self, n, trials, seed):
        self.n = n
        self.trials = trials
        self.seed = seed
        self.timings = {}
        self.counters = {}
        self.checks = collections.OrderedDict()

    def check(self, name, ok):
        """Record a bound check; a name fails once any of its runs fails."""
        self.checks[name] = self.checks.get(name, True) and bool(ok)
        if not ok:
            logger.debug("Bench check failed: %s" % name)

    @property
    def ok(self):
        return all(self.checks.values())

    def lines(self):
        lines = ['n=%d trials=%d seed=%d' % (self.n, self.trials, self.seed)]
        for name in sorted(self.counters):
            counters = self.counters[name]
            lines.append('%s: %s' % (name, ' '.join('%s=%d' % item
                for item in sorted(counters.items()))))
        for name in sorted(self.timings):
            lines.append('%s: median %.4fs' % (name, self.timings[name]))
        return lines


def _bench_suffix_table(report, n, trials, rng):
    times = []
    for _ in range(trials):
        y = random_word(n, rng)
        budget = ComparisonBudget()
        _, elapsed = _timed(lyndon_suffix_table, y, budget)
        times.append(elapsed)
        report.check('lyns iterations <= 2n-2',
            budget.loop_iterations <= max(2 * n - 2, 0))
        report.check('lyns comparisons <= 2n',
            budget.letter_comparisons <= 2 * n)
    report.counters['lyns'] = budget.as_dict()
    report.timings['lyns'] = statistics.median(times)


def _bench_tree(report, n, trials, rng):
    times = []
    for _ in range(trials):
        y = random_lyndon_word(n, rng)
        budget = ComparisonBudget()
        _, elapsed = _timed(left_lyndon_tree, y, budget)
        times.append(elapsed)
        report.check('tree nodes == n-1', budget.nodes_created == n - 1)
        report.check('tree bundle iterations == n-1',
            budget.bundle_iterations == n - 1)
    report.counters['tree'] = budget.as_dict()
    report.timings['tree'] = statistics.median(times)


def _bench_forest(report, n, trials, rng):
    times = []
    for _ in range(trials):
        y = random_word(n, rng)
        budget = ComparisonBudget()
        forest, elapsed = _timed(left_lyndon_forest, y, budget)
        times.append(elapsed)
        report.check('forest iterations <= 2n-2',
            budget.loop_iterations <= max(2 * n - 2, 0))
        report.check('forest nodes == n-k',
            budget.nodes_created == n - len(forest))
    report.counters['forest'] = budget.as_dict()
    report.timings['forest'] = statistics.median(times)


def _bench_psp(report, n, trials, rng):
    times = []
    for _ in range(trials):
        y = random_lyndon_word(n, rng)
        budget = ComparisonBudget()
        _, elapsed = _timed(prefix_standard_permutation, y, budget)
        times.append(elapsed)
        report.check('psp comparisons <= 2n',
            budget.letter_comparisons <= 2 * n)
    report.counters['psp'] = budget.as_dict()
    report.timings['psp'] = statistics.median(times)


def run_bench(n, trials, seed, scaling=False):
    """
    Run every benchmark on inputs of length n.

    Args:
        n: Input length, at least 2.
        trials: Number of random inputs per construction.
        seed: Seed of the random generator; equal seeds give equal inputs.
        scaling: Also time the tree construction on inputs ten times longer
            and check that the time grows at most fifteen-fold.
    """
    rng = random.Random(seed)
    report = BenchReport(n, trials, seed)
    logger.debug("Benchmarking on n=%d, %d trials, seed %d." % (n, trials,
        seed))
    _bench_suffix_table(report, n, trials, rng)
    _bench_tree(report, n, trials, rng)
    _bench_forest(report, n, trials, rng)
    _bench_psp(report, n, trials, rng)
    if scaling:
        big = BenchReport(n * SCALING_FACTOR, trials, seed)
        _bench_tree(big, n * SCALING_FACTOR, trials, rng)
        ratio = big.timings['tree'] / max(report.timings['tree'], 1e-9)
        report.timings['tree x%d' % SCALING_FACTOR] = big.timings['tree']
        for name, ok in big.checks.items():
            report.check(name, ok)
        report.check('tree time x%d within %.0fx' % (SCALING_FACTOR,
            SCALING_TOLERANCE), ratio <= SCALING_TOLERANCE)
    return report
