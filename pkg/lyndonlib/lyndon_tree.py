# -*- coding: utf-8 -*-
"""
Left Lyndon trees of Lyndon words and left Lyndon forests of arbitrary
words.

Trees live in a flat arena: leaves are the positions 0..n-1 of the word and
internal nodes get the ids n, n+1, ... in the order the construction
creates them, so the creation index of node q is q - n. The subtree whose
rightmost leaf is position j has root root[j] and width lyns[j]; bundling
joins such subtrees from right to left until the width reaches lyns[j].
"""
from lyndonlib.core_order import Word, as_word
from lyndonlib.exceptions import DomainError, InternalError, NotLyndonError
from lyndonlib.log import logger


class _Arena(object):
    """Growable storage of internal nodes over n leaves."""

    def __init__(self, n):
        self.n = n
        self.left = []
        self.right = []
        self.lo = []
        self.hi = []

    def __len__(self):
        return len(self.left)

    def join(self, p, q):
        n = self.n
        self.left.append(p)
        self.right.append(q)
        self.lo.append(p if p < n else self.lo[p - n])
        self.hi.append(q if q < n else self.hi[q - n])
        return n + len(self.left) - 1

    def truncate(self, count):
        del self.left[count:]
        del self.right[count:]
        del self.lo[count:]
        del self.hi[count:]


def _bundle(arena, lyns, root, j, floor):
    """Aggregate the subtrees ending before j into the one ending at j.

    Returns the number of nodes created.
    """
    p, m, k = root[j], 1, j - 1
    width = lyns[j]
    created = 0
    while m < width:
        if k < floor:
            raise InternalError("Bundling at position %d reached position"
                " %d, before the current factor start %d." % (j, k, floor))
        p = arena.join(root[k], p)
        created += 1
        m += lyns[k]
        k -= lyns[k]
    root[j] = p
    return created


class LyndonTree(object):
    """
    Left Lyndon tree of a Lyndon word.

    `left` and `right` hold the children of the internal nodes in creation
    order (index q - n for node q). `roots`, when known, is the root[] array
    of the construction and `lyns` the Lyndon suffix table it used. `start`
    is the offset of the word inside an enclosing word (forest factors).
    """

    def __init__(self, word, left, right, roots=None, lyns=None, start=0):
        self.word = as_word(word)
        self.n = n = len(self.word)
        if not n:
            raise DomainError("A Lyndon tree needs a non-empty word.")
        self.left = tuple(left)
        self.right = tuple(right)
        if len(self.left) != n - 1 or len(self.right) != n - 1:
            raise InternalError("A tree over %d leaves has %d internal"
                " nodes, got %d." % (n, n - 1, len(self.left)))
        self.roots = tuple(roots) if roots is not None else None
        self.lyns = tuple(lyns) if lyns is not None else None
        self.start = start
        lo, hi = [], []
        for k, (p, q) in enumerate(zip(self.left, self.right)):
            if not (p < n + k and q < n + k):
                raise InternalError("Node %d has a child created after it."
                    % (n + k))
            p_lo, p_hi = (p, p) if p < n else (lo[p - n], hi[p - n])
            q_lo, q_hi = (q, q) if q < n else (lo[q - n], hi[q - n])
            if p_hi + 1 != q_lo:
                raise InternalError("Children of node %d do not cover"
                    " adjacent spans." % (n + k))
            lo.append(p_lo)
            hi.append(q_hi)
        self._lo = tuple(lo)
        self._hi = tuple(hi)
        if n > 1 and (lo[-1], hi[-1]) != (0, n - 1):
            raise InternalError("The root does not cover the whole word.")

    @property
    def root(self):
        return 2 * self.n - 2

    @property
    def creation_order(self):
        return tuple(range(self.n, 2 * self.n - 1))

    def internal_nodes(self):
        return range(self.n, 2 * self.n - 1)

    def is_leaf(self, q):
        return q < self.n

    def children(self, q):
        if self.is_leaf(q):
            return None
        return self.left[q - self.n], self.right[q - self.n]

    def span(self, q):
        """Interval [i, j] of the leaf positions covered by node q."""
        if self.is_leaf(q):
            return q, q
        return self._lo[q - self.n], self._hi[q - self.n]

    def width(self, q):
        lo, hi = self.span(q)
        return hi - lo + 1

    def rank(self, q):
        """Creation index of internal node q."""
        return q - self.n

    def prefix_end(self, q):
        """End position of the prefix identified with internal node q, that
        is the end of the span of its left child."""
        return self.span(self.left[q - self.n])[1]

    def factor(self, q):
        lo, hi = self.span(q)
        return self.word[lo:hi + 1]

    def standard_factorisation(self):
        if self.n < 2:
            raise DomainError("A single letter has no standard"
                " factorisation.")
        k = self.prefix_end(self.root) + 1
        return self.word[:k], self.word[k:]

    def nested(self):
        """Shape of the tree as nested pairs of leaf positions. Independent
        of the node ids."""
        n = self.n
        shapes = []
        for p, q in zip(self.left, self.right):
            shapes.append((p if p < n else shapes[p - n],
                           q if q < n else shapes[q - n]))
        return shapes[-1] if shapes else 0

    def __eq__(self, other):
        if not isinstance(other, LyndonTree):
            return NotImplemented
        return (self.word, self.left, self.right) == \
            (other.word, other.left, other.right)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.word, self.left, self.right))

    def __repr__(self):
        return "LyndonTree(%r, %d internal nodes)" % (str(self.word),
            self.n - 1)


class LyndonForest(object):
    """
    Left Lyndon forest: the left Lyndon trees of the factors of the Lyndon
    factorisation, from left to right. Each tree uses ids local to its
    factor and records the factor offset in `start`.
    """

    def __init__(self, word, trees, lyns=None):
        self.word = as_word(word)
        self.trees = list(trees)
        self.lyns = tuple(lyns) if lyns is not None else None

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __getitem__(self, index):
        return self.trees[index]

    @property
    def starts(self):
        return tuple(t.start for t in self.trees)

    @property
    def factors(self):
        return [t.word for t in self.trees]

    @property
    def internal_count(self):
        return sum(t.n - 1 for t in self.trees)

    def __repr__(self):
        return "LyndonForest(%s)" % ' | '.join(str(w) for w in self.factors)


def left_lyndon_tree(y, budget=None):
    """
    Build the left Lyndon tree of the Lyndon word y in linear time.

    The Lyndon suffix table is computed on the fly as in
    lyndon_scan.lyndon_suffix_table_lyndon, and every position with
    lyns[j] > 1 bundles the subtrees ending before it.

    Raises:
        NotLyndonError, if y is not a Lyndon word.
    """
    s = as_word(y).symbols
    n = len(s)
    if not n:
        raise DomainError("The input word must not be empty.")
    lyns = [1] * n
    root = list(range(n))
    arena = _Arena(n)
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
        bundles += _bundle(arena, lyns, root, j, 0)
    if per != n:
        raise NotLyndonError("Not a Lyndon word: prefix of a Lyndon word"
            " with period %d < %d." % (per, n))
    if budget is not None:
        budget.charge(comparisons=n - 1, iterations=n - 1, nodes=len(arena),
            bundles=bundles)
    logger.debug("Left Lyndon tree over %d letters: %d internal nodes."
        % (n, len(arena)))
    return LyndonTree(Word(s), arena.left, arena.right, roots=root,
        lyns=lyns)


def standard_factorisation(y):
    """
    Left standard factorisation (u, v) of the Lyndon word y: u is the
    longest proper Lyndon prefix of y, and v is then a Lyndon word.
    """
    y = as_word(y)
    if len(y) < 2:
        raise DomainError("The standard factorisation needs a word of length"
            " at least 2, got %d." % len(y))
    return left_lyndon_tree(y).standard_factorisation()


def left_lyndon_forest(y, budget=None):
    """
    Build the left Lyndon forest of an arbitrary non-empty word.

    This is the scan of lyndon_scan.lyndon_suffix_table with bundling after
    every position that extends the current factor. When the scan restarts
    at a later factor start, the nodes built for the abandoned part of the
    tentative factor are discarded so that every node created belongs to
    the final forest.
    """
    s = as_word(y).symbols
    n = len(s)
    if not n:
        raise DomainError("The input word must not be empty.")
    lyns = [1] * n
    root = list(range(n))
    mark = [0] * n
    arena = _Arena(n)
    per, h, i, j = 1, 0, 0, 1
    iterations = bundles = rollbacks = 0
    while j < n:
        iterations += 1
        a, b = s[j], s[i]
        if a < b:
            restart = j - (i - h)
            if restart < j:
                arena.truncate(mark[restart])
                rollbacks += 1
            h = restart
            lyns[h], root[h] = 1, h
            per, i, j = 1, h, h + 1
            continue
        mark[j] = len(arena)
        root[j] = j
        if a > b:
            lyns[j] = j - h + 1
            per, i = j - h + 1, h
        else:
            lyns[j] = lyns[i]
            i = h + (i - h + 1) % per
        bundles += _bundle(arena, lyns, root, j, h)
        j += 1

    trees = _split_forest(Word(s), arena, lyns, root)
    if budget is not None:
        budget.charge(comparisons=iterations, iterations=iterations,
            nodes=len(arena), bundles=bundles)
    logger.debug("Left Lyndon forest over %d letters: %d trees, %d internal"
        " nodes, %d restarts." % (n, len(trees), len(arena), rollbacks))
    return LyndonForest(Word(s), trees, lyns)


def _split_forest(word, arena, lyns, root):
    """Cut the global arena into one tree per Lyndon factor, with ids local
    to each factor."""
    n = len(word)
    starts = []
    end = n
    while end > 0:
        end -= lyns[end - 1]
        starts.append(end)
    starts.reverse()
    ends = starts[1:] + [n]

    trees = []
    for f, (a, b) in enumerate(zip(starts, ends)):
        m = b - a
        base = a - f
        if arena.lo[base:base + m - 1] and (min(arena.lo[base:base + m - 1])
                < a or max(arena.hi[base:base + m - 1]) >= b):
            raise InternalError("Nodes of factor %d..%d are not contiguous."
                % (a, b - 1))

        def local(q, a=a, m=m, base=base):
            if q < n:
                return q - a
            return q - n - base + m

        left = [local(q) for q in arena.left[base:base + m - 1]]
        right = [local(q) for q in arena.right[base:base + m - 1]]
        trees.append(LyndonTree(word[a:b], left, right,
            roots=[local(q) for q in root[a:b]], lyns=lyns[a:b], start=a))
    if sum(t.n - 1 for t in trees) != len(arena):
        raise InternalError("The forest has %d internal nodes, expected %d."
            % (len(arena), sum(t.n - 1 for t in trees)))
    return trees
