# -*- coding: utf-8 -*-
"""
Recovering words from prefix standard permutations.

On the binary alphabet a PSP determines its Lyndon word: the word is read
off the Cartesian tree of the rank table completed with leaves. On larger
alphabets the PSP still determines the prefix periods, and from them the
lexicographically smallest Lyndon word over a, b, c, ... with that PSP.
"""
from lyndonlib.core_order import Word
from lyndonlib.exceptions import (AlphabetExhaustedError, DomainError,
    NotLyndonError, NotPspError)
from lyndonlib.log import logger
from lyndonlib.prefix_order import (Permutation, cartesian_parents,
    prefix_standard_permutation)


LEFT, RIGHT = 'left', 'right'


def _permutation(p):
    if isinstance(p, Permutation):
        return p
    return Permutation(p)


class CartesianTree(object):
    """
    Max-rooted Cartesian tree over a sequence of distinct labels: the
    in-order traversal gives the positions 0..m-1 and every label exceeds
    the labels of its descendants.
    """

    def __init__(self, labels):
        self.labels = tuple(labels)
        self.root, left, right = cartesian_parents(self.labels)
        self.left = tuple(left)
        self.right = tuple(right)

    def __len__(self):
        return len(self.labels)

    def inorder(self):
        stack, node = [], self.root
        while stack or node is not None:
            if node is not None:
                stack.append(node)
                node = self.left[node]
            else:
                node = stack.pop()
                yield node
                node = self.right[node]

    def leaf_parents(self):
        """
        Complete the tree with m + 1 leaves. Internal node j sits between
        leaves j and j + 1: a missing left child is replaced by leaf j and a
        missing right child by leaf j + 1.

        Returns:
            For every leaf, the pair (parent position, LEFT or RIGHT).
        """
        m = len(self.labels)
        parents = [None] * (m + 1)
        for j in range(m):
            if self.left[j] is None:
                parents[j] = (j, LEFT)
            if self.right[j] is None:
                parents[j + 1] = (j, RIGHT)
        return parents


class InverseOutcome(object):
    """
    Result of inverse_psp_binary. `word` is the recovered binary Lyndon
    word, or None when the permutation is rejected; `candidate` and
    `candidate_psp` describe the word that was built and tested.
    """

    def __init__(self, permutation, candidate, candidate_psp):
        self.permutation = permutation
        self.candidate = candidate
        self.candidate_psp = candidate_psp

    @property
    def accepted(self):
        return self.candidate_psp == self.permutation

    @property
    def word(self):
        return self.candidate if self.accepted else None

    def __bool__(self):
        return self.accepted

    __nonzero__ = __bool__

    def __repr__(self):
        if self.accepted:
            return "InverseOutcome(%r)" % str(self.candidate)
        return "InverseOutcome(rejected, candidate=%r)" % str(self.candidate)


def inverse_psp_binary(p):
    """
    Recover the binary Lyndon word whose PSP is p, if there is one.

    The leaves of the completed Cartesian tree of the rank table are
    labelled 'a' when they are left children and 'b' otherwise; the word
    read on the leaves is accepted iff its own PSP is p.
    """
    p = _permutation(p)
    if not len(p):
        raise DomainError("The permutation must cover at least one prefix.")
    tree = CartesianTree(p.inverse().values)
    letters = ['a' if side == LEFT else 'b'
               for _, side in tree.leaf_parents()]
    candidate = Word(letters)
    try:
        candidate_psp = prefix_standard_permutation(candidate)
    except NotLyndonError:
        candidate_psp = None
    outcome = InverseOutcome(p, candidate, candidate_psp)
    if not outcome.accepted:
        logger.debug("Candidate %s has psp %s, not %s." % (candidate,
            candidate_psp, p))
    return outcome


def periods_from_psp(p, n):
    """
    Smallest periods of the prefixes of a Lyndon word of length n, given
    its PSP p.

    Scanning p from right to left, a decrease p[j] < p[j-1] reveals a
    non-empty border and sets the period to p[j] + 1, which then holds for
    all shorter prefixes down to that length.
    """
    p = _permutation(p)
    if n < 2 or len(p) != n - 1:
        raise DomainError("A PSP of a word of length %d has %d values, got"
            " %d." % (n, n - 1, len(p)))
    per = [0] * n
    q = n
    for j in range(n - 2, 0, -1):
        if j >= q:
            per[j] = q
        elif p[j] < p[j - 1]:
            q = p[j] + 1
            per[j] = q
        else:
            per[j] = j + 1
    per[0] = 1
    per[n - 1] = n
    return tuple(per)


def lyndon_prefix_ends(p):
    """
    End positions of the proper Lyndon prefixes of a Lyndon word, given its
    PSP: the positions whose rank exceeds the ranks of all shorter
    prefixes. They are the prefix ends met going up the left Lyndon tree
    from its leftmost leaf to its root.
    """
    rank = _permutation(p).inverse().values
    if not rank:
        return ()
    ends = [0]
    r = rank[0]
    for j in range(1, len(rank)):
        if rank[j] > r:
            ends.append(j)
            r = rank[j]
    return tuple(ends)


def _successor(letter):
    if not 'a' <= letter < 'z':
        raise AlphabetExhaustedError("No letter larger than %r in a..z."
            % letter)
    return chr(ord(letter) + 1)


def word_from_psp(p, n):
    """
    Lexicographically smallest Lyndon word over a, b, c, ... whose PSP is p.

    The rank table is scanned online keeping r, the highest rank met, and
    q, the current period: a prefix whose rank does not exceed r repeats
    the letter one period back, a new highest rank breaks the period with
    the next letter.

    Raises:
        NotPspError, if p is not the PSP of a Lyndon word of length n.
    """
    p = _permutation(p)
    if n < 2 or len(p) != n - 1:
        raise DomainError("A PSP of a word of length %d has %d values, got"
            " %d." % (n, n - 1, len(p)))
    rank = p.inverse().values
    y = ['a']
    r, q = rank[0], 1
    for j in range(1, n - 1):
        if rank[j] <= r:
            y.append(y[j - q])
        else:
            y.append(_successor(y[j - q]))
            r, q = rank[j], j + 1
    y.append(_successor(y[n - 1 - q]))
    word = Word(y)
    try:
        psp = prefix_standard_permutation(word)
    except NotLyndonError:
        raise NotPspError("%s is not the PSP of a Lyndon word of length %d."
            % (p, n), candidate=word)
    if psp != p:
        raise NotPspError("%s is not the PSP of a Lyndon word of length %d."
            % (p, n), candidate=word, candidate_psp=psp)
    return word


def half_zimin(i):
    """
    Half Zimin word of order i over a, b, c, ...: Z(i-1) followed by the
    i-th letter, where Z(0) is empty and Z(k) = Z(k-1) a_k Z(k-1).
    """
    if i < 0:
        raise DomainError("The order must be non-negative.")
    if i > 26:
        raise AlphabetExhaustedError("Order %d needs more than 26 letters."
            % i)
    z = ''
    for k in range(1, i):
        z = z + chr(ord('a') + k - 1) + z
    if i == 0:
        return Word()
    return Word(z + chr(ord('a') + i - 1))
