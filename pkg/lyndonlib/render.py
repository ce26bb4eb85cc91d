# -*- coding: utf-8 -*-
"""
Output formats of the `lyndon` command: text, tsv, json and dot.

Every renderer returns the whole output as a string without the trailing
newline; the commands hand it to utils.MSG.
"""
from lyndonlib.utils import compile_json


TEXT, TSV, JSON, DOT = 'text', 'tsv', 'json', 'dot'
TABLE_FORMATS = (TEXT, TSV, JSON)
TREE_FORMATS = (TEXT, TSV, JSON, DOT)


def _json(data):
    return compile_json(data, sort_keys=True)


def _spaced(values):
    return ' '.join(str(v) for v in values)


def position_table(word, columns, fmt=TEXT):
    """
    Per-position tables, such as lyns and period.

    Args:
        word: The word the table is about.
        columns: A list of (name, values) pairs, each with one value per
            position.
    """
    if fmt == TEXT:
        return '\n'.join(_spaced(values) for _, values in columns)
    if fmt == TSV:
        header = ['j', 'y[j]'] + ['%s[j]' % name for name, _ in columns]
        rows = ['\t'.join(header)]
        for j, letter in enumerate(word):
            rows.append('\t'.join([str(j), str(letter)] +
                [str(values[j]) for _, values in columns]))
        return '\n'.join(rows)
    if fmt == JSON:
        return _json(dict((name, list(values)) for name, values in columns))
    raise ValueError("Unsupported format for a table: %s" % fmt)


def permutation(name, perm, fmt=TEXT):
    """A psp or rank permutation, comma separated in text mode so that it can
    be fed back to the inverse commands."""
    if fmt == TEXT:
        return str(perm)
    if fmt == TSV:
        index = 'r' if name == 'psp' else 'j'
        rows = ['%s\t%s[%s]' % (index, name, index)]
        rows.extend('%d\t%d' % (k, v) for k, v in enumerate(perm))
        return '\n'.join(rows)
    if fmt == JSON:
        return _json({name: list(perm)})
    raise ValueError("Unsupported format for a permutation: %s" % fmt)


def factorization(word, starts, fmt=TEXT):
    ends = list(starts[1:]) + [len(word)]
    factors = [str(word[a:b]) for a, b in zip(starts, ends)]
    if fmt == TEXT:
        return '%s\n%s' % (_spaced(starts), ' | '.join(factors))
    if fmt == TSV:
        rows = ['start\tfactor']
        rows.extend('%d\t%s' % item for item in zip(starts, factors))
        return '\n'.join(rows)
    if fmt == JSON:
        return _json({'factors': factors, 'starts': list(starts)})
    raise ValueError("Unsupported format for a factorization: %s" % fmt)


def _tree_nodes(tree):
    return [{'id': q, 'left': tree.left[q - tree.n],
             'right': tree.right[q - tree.n]} for q in tree.internal_nodes()]


def _tree_lines(tree, offset=0):
    lines = []
    for q in tree.internal_nodes():
        p, r = tree.children(q)
        lo, hi = tree.span(q)
        lines.append('%d: %d %d [%d..%d] %s' % (q, p, r, lo + offset,
            hi + offset, tree.factor(q)))
    return lines


def _dot_body(tree, prefix='', offset=0, indent='  '):
    lines = []
    for q in range(tree.n):
        lines.append('%s%s%d [shape=box, label="%d:%s"];' % (indent, prefix,
            q, q + offset, tree.word[q]))
    for q in tree.internal_nodes():
        lines.append('%s%s%d [shape=circle, label="%d"];' % (indent, prefix,
            q, tree.rank(q)))
    for q in tree.internal_nodes():
        p, r = tree.children(q)
        lines.append('%s%s%d -> %s%d;' % (indent, prefix, q, prefix, p))
        lines.append('%s%s%d -> %s%d;' % (indent, prefix, q, prefix, r))
    return lines


def lyndon_tree(tree, fmt=TEXT):
    """Left Lyndon tree. Leaves are positions, internal nodes are listed in
    creation order."""
    if fmt == TEXT:
        return '\n'.join(['%s' % tree.word] + _tree_lines(tree))
    if fmt == TSV:
        rows = ['id\tleft\tright\tlo\thi']
        for q in tree.internal_nodes():
            p, r = tree.children(q)
            lo, hi = tree.span(q)
            rows.append('%d\t%d\t%d\t%d\t%d' % (q, p, r, lo, hi))
        return '\n'.join(rows)
    if fmt == JSON:
        return _json({'word': str(tree.word), 'tree': _tree_nodes(tree)})
    if fmt == DOT:
        return '\n'.join(['digraph "%s" {' % tree.word] + _dot_body(tree) +
            ['}'])
    raise ValueError("Unsupported format for a tree: %s" % fmt)


def lyndon_forest(forest, fmt=TEXT):
    """Left Lyndon forest, one tree per factor; node ids are local to their
    tree."""
    if fmt == TEXT:
        lines = []
        for t in forest:
            lines.append('%d %s' % (t.start, t.word))
            lines.extend('  ' + line for line in _tree_lines(t, t.start))
        return '\n'.join(lines)
    if fmt == TSV:
        rows = ['tree\tid\tleft\tright\tlo\thi']
        for f, t in enumerate(forest):
            for q in t.internal_nodes():
                p, r = t.children(q)
                lo, hi = t.span(q)
                rows.append('%d\t%d\t%d\t%d\t%d\t%d' % (f, q, p, r,
                    lo + t.start, hi + t.start))
        return '\n'.join(rows)
    if fmt == JSON:
        return _json({
            'factors': [str(w) for w in forest.factors],
            'starts': list(forest.starts),
            'trees': [_tree_nodes(t) for t in forest],
        })
    if fmt == DOT:
        lines = ['digraph "%s" {' % forest.word]
        for f, t in enumerate(forest):
            lines.append('  subgraph cluster_%d {' % f)
            lines.append('    label="%s";' % t.word)
            lines.extend(_dot_body(t, 't%d_' % f, t.start, '    '))
            lines.append('  }')
        lines.append('}')
        return '\n'.join(lines)
    raise ValueError("Unsupported format for a forest: %s" % fmt)
