# -*- coding: utf-8 -*-
"""
Brute-force reference implementations.

Everything here is built on core_order only and is at least quadratic. The
tests and the `check` command compare the linear constructions against
these functions on exhaustive word classes.
"""
import functools

from lyndonlib.core_order import Word, as_word, compare_infinite, is_lyndon
from lyndonlib.exceptions import DomainError, NotLyndonError
from lyndonlib.lyndon_tree import LyndonTree
from lyndonlib.prefix_order import Permutation


def alphabet(sigma):
    """The first sigma letters a, b, c, ..."""
    if not 1 <= sigma <= 26:
        raise DomainError("The alphabet size must be in 1..26, got %d."
            % sigma)
    return tuple(chr(ord('a') + k) for k in range(sigma))


class WordEnumerator(object):
    """
    All the words of length 1..max_length over the first sigma letters, in
    lexicographic order, optionally restricted to Lyndon words.
    """

    def __init__(self, sigma, max_length, lyndon_only=False):
        self.letters = alphabet(sigma)
        self.sigma = sigma
        self.max_length = max_length
        self.lyndon_only = lyndon_only

    def __iter__(self):
        # Depth first: a word comes right before its extensions.
        stack = [(c,) for c in reversed(self.letters)]
        while stack:
            symbols = stack.pop()
            word = Word(symbols)
            if not self.lyndon_only or is_lyndon(word):
                yield word
            if len(symbols) < self.max_length:
                stack.extend(symbols + (c,) for c in reversed(self.letters))

    def __repr__(self):
        return "WordEnumerator(sigma=%d, max_length=%d%s)" % (self.sigma,
            self.max_length, ', lyndon_only' if self.lyndon_only else '')


def enumerate_words(sigma, max_length):
    return iter(WordEnumerator(sigma, max_length))


def enumerate_lyndon(sigma, max_length):
    return iter(WordEnumerator(sigma, max_length, lyndon_only=True))


def naive_lyns(y):
    """Try all the suffix lengths of every prefix, longest first."""
    y = as_word(y)
    if not len(y):
        raise DomainError("The input word must not be empty.")
    lyns = []
    for j in range(len(y)):
        for length in range(j + 1, 0, -1):
            if is_lyndon(y[j - length + 1:j + 1]):
                lyns.append(length)
                break
    return tuple(lyns)


def naive_periods(y):
    """Smallest period of every prefix, by direct comparison."""
    s = as_word(y).symbols
    if not s:
        raise DomainError("The input word must not be empty.")
    periods = []
    for j in range(len(s)):
        for p in range(1, j + 2):
            if all(s[k] == s[k - p] for k in range(p, j + 1)):
                periods.append(p)
                break
    return tuple(periods)


def _require_lyndon(y, minimum):
    y = as_word(y)
    if len(y) < minimum:
        raise DomainError("A word of length at least %d is required, got %d."
            % (minimum, len(y)))
    if not is_lyndon(y):
        raise NotLyndonError("%s is not a Lyndon word." % y)
    return y


def naive_psp(y):
    """Sort the proper prefixes with the infinite order as comparator."""
    y = _require_lyndon(y, 2)
    key = functools.cmp_to_key(
        lambda a, b: int(compare_infinite(y[:a + 1], y[:b + 1])))
    return Permutation(sorted(range(len(y) - 1), key=key))


def naive_left_tree(y):
    """
    Left Lyndon tree by recursion on the left standard factorisation, the
    longest proper Lyndon prefix being found by trying the lengths in
    decreasing order. Internal ids follow a left-to-right postorder.
    """
    y = _require_lyndon(y, 1)
    n = len(y)
    left, right = [], []

    def build(lo, hi):
        if lo == hi:
            return lo
        for k in range(hi - lo, 0, -1):
            if is_lyndon(y[lo:lo + k]):
                break
        p = build(lo, lo + k - 1)
        q = build(lo + k, hi)
        left.append(p)
        right.append(q)
        return n + len(left) - 1

    build(0, n - 1)
    return LyndonTree(y, left, right)


def _mu(n):
    """Moebius function by trial division."""
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def count_lyndon(sigma, n):
    """Number of Lyndon words of length n over sigma letters."""
    if sigma < 1 or n < 1:
        raise DomainError("The alphabet size and the length must be"
            " positive.")
    total = sum(_mu(d) * sigma ** (n // d)
                for d in range(1, n + 1) if n % d == 0)
    return total // n


def naive_fiber(p, n, sigma):
    """
    All the Lyndon words of length n over sigma letters whose prefix
    standard permutation is p, in lexicographic order.
    """
    p = p if isinstance(p, Permutation) else Permutation(p)
    if n < 2 or len(p) != n - 1:
        raise DomainError("A PSP of a word of length %d has %d values, got"
            " %d." % (n, n - 1, len(p)))
    return [z for z in enumerate_lyndon(sigma, n)
            if len(z) == n and naive_psp(z) == p]
