# -*- coding: utf-8 -*-
"""
Online left-to-right scans in the letter-comparison model.

All scans share the state of the Lyndon-prefix test: `per` is the period of
the part scanned so far, `i` the position compared with the incoming
position `j` (y[i] = y[j - per]) and, in the scan of arbitrary words, `h`
the start of the Lyndon factor under construction. A three-way comparison
of two letters counts as one letter comparison.
"""
from lyndonlib.core_order import as_word
from lyndonlib.exceptions import DomainError, NotLyndonError


class ComparisonBudget(object):
    """
    Counters filled in by the scans and the tree constructions.

    Pass an instance through the `budget` argument; the counters only grow.
    """

    def __init__(self):
        self.reset()

    def reset(self):
        self.letter_comparisons = 0
        self.loop_iterations = 0
        self.nodes_created = 0
        self.bundle_iterations = 0

    def charge(self, comparisons=0, iterations=0, nodes=0, bundles=0):
        self.letter_comparisons += comparisons
        self.loop_iterations += iterations
        self.nodes_created += nodes
        self.bundle_iterations += bundles

    def as_dict(self):
        return {
            'letter_comparisons': self.letter_comparisons,
            'loop_iterations': self.loop_iterations,
            'nodes_created': self.nodes_created,
            'bundle_iterations': self.bundle_iterations,
        }

    def __repr__(self):
        return "ComparisonBudget(%s)" % ', '.join(
            '%s=%d' % item for item in sorted(self.as_dict().items()))


def _symbols(y):
    s = as_word(y).symbols
    if not s:
        raise DomainError("The input word must not be empty.")
    return s


def lyndon_word_prefix(y, budget=None):
    """
    Test whether y is a prefix of a Lyndon word.

    Returns:
        A pair (is_prefix, final_period). final_period is only meaningful
        when is_prefix is True; y is then a Lyndon word iff final_period
        equals |y|.
    """
    s = _symbols(y)
    n = len(s)
    per, i = 1, 0
    for j in range(1, n):
        a, b = s[j], s[i]
        if a > b:
            per, i = j + 1, 0
        elif a < b:
            if budget is not None:
                budget.charge(comparisons=j, iterations=j)
            return False, None
        else:
            i = (i + 1) % per
    if budget is not None:
        budget.charge(comparisons=n - 1, iterations=n - 1)
    return True, per


def is_lyndon_word(y):
    """Linear Lyndon test."""
    is_prefix, per = lyndon_word_prefix(y)
    return is_prefix and per == len(as_word(y))


def lyndon_suffix_table_lyndon(y, budget=None):
    """
    Lyndon suffix table and prefix periods of a Lyndon word.

    Returns:
        A pair of tuples (lyns, period): lyns[j] is the length of the
        longest Lyndon suffix of y[0..j] and period[j] the smallest period
        of y[0..j].
    Raises:
        NotLyndonError, if y is not a Lyndon word.
    """
    s = _symbols(y)
    n = len(s)
    lyns = [1] * n
    period = [1] * n
    per, i = 1, 0
    for j in range(1, n):
        a, b = s[j], s[i]
        if a != b:
            if a < b:
                raise NotLyndonError("Not a Lyndon word: letter at %d is"
                    " smaller than the letter at %d." % (j, i))
            lyns[j] = j + 1
            per, i = j + 1, 0
        else:
            lyns[j] = lyns[i]
            i = (i + 1) % per
        period[j] = per
    if per != n:
        raise NotLyndonError("Not a Lyndon word: prefix of a Lyndon word"
            " with period %d < %d." % (per, n))
    if budget is not None:
        budget.charge(comparisons=n - 1, iterations=n - 1)
    return tuple(lyns), tuple(period)


def lyndon_suffix_table(y, budget=None):
    """
    Lyndon suffix table of an arbitrary non-empty word.

    When the letter at j is smaller than its periodic counterpart, the
    factorisation of y[0..h-1] is final; the scan restarts at the first
    position after the last complete period of y[h..j-1]. h + j strictly
    grows, so the main loop runs at most 2n - 2 times.
    """
    s = _symbols(y)
    n = len(s)
    lyns = [1] * n
    per, h, i, j = 1, 0, 0, 1
    iterations = 0
    while j < n:
        iterations += 1
        a, b = s[j], s[i]
        if a < b:
            h = j - (i - h)
            lyns[h] = 1
            per, i, j = 1, h, h + 1
        elif a > b:
            lyns[j] = j - h + 1
            j += 1
            per, i = j - h, h
        else:
            lyns[j] = lyns[i]
            i, j = h + (i - h + 1) % per, j + 1
    if budget is not None:
        budget.charge(comparisons=iterations, iterations=iterations)
    return tuple(lyns)


def lyndon_factorize(y, lyns=None):
    """
    Starting positions of the factors of the Lyndon factorisation of y, in
    increasing order.

    The last factor is the longest Lyndon suffix of y, so the positions are
    traced back from the end of the word with the Lyndon suffix table.

    Args:
        y: A non-empty word.
        lyns: Its Lyndon suffix table, when already computed.
    """
    s = _symbols(y)
    if lyns is None:
        lyns = lyndon_suffix_table(s)
    elif len(lyns) != len(s):
        raise DomainError("The Lyndon suffix table has length %d, expected"
            " %d." % (len(lyns), len(s)))
    else:
        for j, v in enumerate(lyns):
            if not 1 <= v <= j + 1:
                raise DomainError("lyns[%d] = %r is outside 1..%d." % (
                    j, v, j + 1))
    starts = []
    end = len(s)
    while end > 0:
        end -= lyns[end - 1]
        starts.append(end)
    starts.reverse()
    return tuple(starts)


def lyndon_factors(y, lyns=None):
    """The factors of the Lyndon factorisation of y as words."""
    y = as_word(y)
    starts = lyndon_factorize(y, lyns)
    ends = starts[1:] + (len(y),)
    return [y[a:b] for a, b in zip(starts, ends)]
