# -*- coding: utf-8 -*-
"""
Prefix standard permutation (PSP) of a Lyndon word: its proper non-empty
prefixes, named by their end positions, sorted by the infinite order.

The left Lyndon tree construction creates its internal nodes in the order
of the ranks of their prefixes, so the PSP falls out of the same scan
without building the tree.
"""
from lyndonlib.core_order import as_word
from lyndonlib.exceptions import (DomainError, InvalidPermutationError,
    NotLyndonError)
from lyndonlib.lyndon_tree import left_lyndon_tree


class Permutation(object):
    """
    A permutation of 0..m-1, checked on construction.

    It behaves as an immutable sequence; `inverse()` returns the inverse
    permutation, so the PSP and the rank table of a word are inverse of
    each other.
    """
    __slots__ = ('values',)

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        seen = [False] * len(values)
        for v in values:
            if not 0 <= v < len(values) or seen[v]:
                raise InvalidPermutationError("%s is not a permutation of"
                    " 0..%d." % (','.join(map(str, values)),
                    len(values) - 1))
            seen[v] = True
        object.__setattr__(self, 'values', values)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation objects are immutable")

    @classmethod
    def parse(cls, text):
        """Build a permutation from comma separated decimals, e.g. '1,0,2'."""
        text = text.strip()
        if not text:
            raise InvalidPermutationError("Empty permutation.")
        tokens = text.split(',')
        if not all(t.isdigit() and t.isascii() for t in tokens):
            raise InvalidPermutationError("Malformed permutation: %r" % text)
        return cls(int(t) for t in tokens)

    def inverse(self):
        inv = [0] * len(self.values)
        for r, j in enumerate(self.values):
            inv[j] = r
        return Permutation(inv)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return self.values == tuple(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.values)

    def __str__(self):
        return ','.join(str(v) for v in self.values)

    def __repr__(self):
        return "Permutation((%s))" % str(self)


def prefix_standard_permutation(y, budget=None):
    """
    Sort the proper non-empty prefixes of the Lyndon word y by the infinite
    order, in linear time.

    Returns:
        The Permutation psp with psp[r] = end position of the prefix of
        rank r.
    Raises:
        DomainError, if |y| < 2; NotLyndonError, if y is not Lyndon.
    """
    s = as_word(y).symbols
    n = len(s)
    if n < 2:
        raise DomainError("The prefix standard permutation needs a Lyndon"
            " word of length at least 2, got %d." % n)
    lyns = [1] * n
    psp = []
    per, i = 1, 0
    bundles = 0
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
        m, k = 1, j - 1
        while m < lyns[j]:
            psp.append(j - m)
            m += lyns[k]
            k -= lyns[k]
            bundles += 1
    if per != n:
        raise NotLyndonError("Not a Lyndon word: prefix of a Lyndon word"
            " with period %d < %d." % (per, n))
    if budget is not None:
        budget.charge(comparisons=n - 1, iterations=n - 1, bundles=bundles)
    return Permutation(psp)


def prefix_rank_table(y):
    """rank[j] = rank of the prefix ending at j under the infinite order."""
    return prefix_standard_permutation(y).inverse()


def check_creation_order(y):
    """
    True iff the left Lyndon tree construction creates its internal nodes
    in the order of the ranks of their prefixes, i.e. the prefix ends of
    the nodes in creation order are the PSP.
    """
    tree = left_lyndon_tree(y)
    if tree.n < 2:
        raise DomainError("The check needs a word of length at least 2.")
    psp = prefix_standard_permutation(y)
    return tuple(tree.prefix_end(q) for q in tree.creation_order) == \
        psp.values


def cartesian_parents(labels):
    """
    Max-rooted Cartesian tree of a sequence of distinct labels, built with
    the usual stack in linear time.

    Returns:
        (root, left, right): positions, None for a missing child.
    """
    m = len(labels)
    left = [None] * m
    right = [None] * m
    stack = []
    for k in range(m):
        last = None
        while stack and labels[stack[-1]] < labels[k]:
            last = stack.pop()
        left[k] = last
        if stack:
            right[stack[-1]] = k
        stack.append(k)
    root = stack[0] if stack else None
    return root, left, right


def check_cartesian(y):
    """
    True iff the internal nodes of the left Lyndon tree of y, each placed
    at the end position of its prefix and labelled by the rank of that
    prefix, form the max-rooted Cartesian tree of the rank table.
    """
    tree = left_lyndon_tree(y)
    if tree.n < 2:
        raise DomainError("The check needs a word of length at least 2.")
    rank = prefix_rank_table(y)
    c_root, c_left, c_right = cartesian_parents(rank.values)

    def position(q):
        if tree.is_leaf(q):
            return None
        return tree.prefix_end(q)

    if position(tree.root) != c_root:
        return False
    for q in tree.internal_nodes():
        j = tree.prefix_end(q)
        p, r = tree.children(q)
        if (position(p), position(r)) != (c_left[j], c_right[j]):
            return False
    return True
