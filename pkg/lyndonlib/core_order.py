# -*- coding: utf-8 -*-
"""
Words over a totally ordered alphabet and the three orderings used across
the package: the lexicographic order, the strongly-less relation and the
infinite order.

Symbols are opaque comparable values. The command line feeds single
lowercase letters, but nothing here assumes a particular alphabet.
"""
import enum

from lyndonlib.exceptions import DomainError


class OrderVerdict(enum.IntEnum):
    """Outcome of a comparison, usable as a cmp() result."""
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Condition(enum.Enum):
    """The equivalent characterisations of Lyndon words."""
    ROTATION = 'i'      # w < vu for every factorisation w = uv
    SUFFIX = 'ii'       # w < v for every proper non-empty suffix v
    PREFIX = 'iii'      # u^inf < w^inf for every proper non-empty prefix u


class Word(object):
    """
    Immutable finite sequence of symbols.

    Indexing with an integer returns a symbol, slicing returns a Word.
    Equality, hashing and ordering depend only on the symbol sequence, and
    the ordering is the lexicographic one.
    """
    __slots__ = ('symbols',)

    def __init__(self, symbols=()):
        if isinstance(symbols, Word):
            symbols = symbols.symbols
        object.__setattr__(self, 'symbols', tuple(symbols))

    def __setattr__(self, name, value):
        raise AttributeError("Word objects are immutable")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index])
        return self.symbols[index]

    def __add__(self, other):
        return Word(self.symbols + as_word(other).symbols)

    def __mul__(self, times):
        return Word(self.symbols * times)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.symbols == other.symbols
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        return compare_lex(self, other) == OrderVerdict.LESS

    def __le__(self, other):
        return compare_lex(self, other) != OrderVerdict.GREATER

    def __gt__(self, other):
        return compare_lex(self, other) == OrderVerdict.GREATER

    def __ge__(self, other):
        return compare_lex(self, other) != OrderVerdict.LESS

    def __hash__(self):
        return hash(self.symbols)

    def __str__(self):
        return ''.join(str(s) for s in self.symbols)

    def __repr__(self):
        return "%s(%r)" % (self.__class__.__name__, str(self))

    def is_prefix_of(self, other):
        other = as_word(other)
        return len(self) <= len(other) and \
            other.symbols[:len(self)] == self.symbols


def as_word(value):
    """Return `value` as a Word. Strings are split into single letters."""
    if isinstance(value, Word):
        return value
    return Word(value)


def _non_empty(*words):
    for w in words:
        if not len(w):
            raise DomainError("The infinite order is defined on non-empty"
                " words only.")


def compare_lex(u, v):
    """
    Compare u and v lexicographically: u < v if u is strongly less than v
    or a proper prefix of v.
    """
    u, v = as_word(u).symbols, as_word(v).symbols
    for a, b in zip(u, v):
        if a < b:
            return OrderVerdict.LESS
        if b < a:
            return OrderVerdict.GREATER
    if len(u) < len(v):
        return OrderVerdict.LESS
    if len(u) > len(v):
        return OrderVerdict.GREATER
    return OrderVerdict.EQUAL


def is_strongly_less(u, v):
    """True iff u = ras and v = rbt for letters a < b."""
    u, v = as_word(u).symbols, as_word(v).symbols
    for a, b in zip(u, v):
        if a < b:
            return True
        if b < a:
            return False
    return False


def compare_powers(u, v):
    """
    Compare the infinite words u^inf and v^inf.

    By the periodicity lemma two such words that agree on their first
    |u|+|v| letters are equal, so only that window is inspected.
    """
    u, v = as_word(u).symbols, as_word(v).symbols
    _non_empty(u, v)
    lu, lv = len(u), len(v)
    for k in range(lu + lv):
        a, b = u[k % lu], v[k % lv]
        if a < b:
            return OrderVerdict.LESS
        if b < a:
            return OrderVerdict.GREATER
    return OrderVerdict.EQUAL


def compare_infinite(u, v):
    """
    The infinite order: u precedes v iff u^inf < v^inf, or the two infinite
    words are equal and u is the longer word.
    """
    verdict = compare_powers(u, v)
    if verdict != OrderVerdict.EQUAL:
        return verdict
    lu, lv = len(u), len(v)
    if lu > lv:
        return OrderVerdict.LESS
    if lu < lv:
        return OrderVerdict.GREATER
    return OrderVerdict.EQUAL


def is_lyndon(w):
    """
    Reference Lyndon test: a single letter is a Lyndon word, a longer word
    is a Lyndon word iff it is smaller than all its proper non-empty
    suffixes.

    The test is quadratic; lyndon_scan.is_lyndon_word is the linear one.
    """
    w = as_word(w)
    if not len(w):
        raise DomainError("The empty word is not a Lyndon word candidate.")
    if len(w) == 1:
        return True
    return is_lyndon_by_condition(w, Condition.SUFFIX)


def is_lyndon_by_condition(w, which):
    """
    Evaluate one of the equivalent Lyndon conditions by direct enumeration.

    Args:
        w: A word of length at least 2.
        which: A Condition member (or its value 'i', 'ii', 'iii').
    Raises:
        DomainError, if |w| <= 1.
    """
    w = as_word(w)
    which = Condition(which)
    n = len(w)
    if n <= 1:
        raise DomainError("The Lyndon conditions apply to words of length"
            " at least 2, got %d." % n)
    less = OrderVerdict.LESS
    if which is Condition.ROTATION:
        return all(compare_lex(w, w[k:] + w[:k]) == less
                   for k in range(1, n))
    if which is Condition.SUFFIX:
        return all(compare_lex(w, w[k:]) == less for k in range(1, n))
    return all(compare_powers(w[:k], w) == less for k in range(1, n))
