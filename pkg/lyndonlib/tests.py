# -*- coding: utf-8 -*-

import os
import io
import json
import logging
import shutil
import tempfile
import unittest

from mock import patch
from hypothesis import given, settings, strategies as st

from lyndonlib import config, log, oracle, render, selfcheck, utils
from lyndonlib.bench import run_bench
from lyndonlib.cli import run
from lyndonlib.core_order import (Condition, OrderVerdict, Word,
    compare_infinite, compare_lex, compare_powers, is_lyndon,
    is_lyndon_by_condition, is_strongly_less)
from lyndonlib.exceptions import (AlphabetExhaustedError, DomainError,
    InvalidPermutationError, NotLyndonError, NotPspError)
from lyndonlib.log import set_log_level
from lyndonlib.lyndon_scan import (ComparisonBudget, is_lyndon_word,
    lyndon_factorize, lyndon_factors, lyndon_suffix_table,
    lyndon_suffix_table_lyndon, lyndon_word_prefix)
from lyndonlib.lyndon_tree import (LyndonTree, left_lyndon_forest,
    left_lyndon_tree, standard_factorisation)
from lyndonlib.prefix_order import (Permutation, cartesian_parents,
    check_cartesian, check_creation_order, prefix_rank_table,
    prefix_standard_permutation)
from lyndonlib.psp_inverse import (CartesianTree, half_zimin,
    inverse_psp_binary, lyndon_prefix_ends, periods_from_psp, word_from_psp)


RUNNING = 'ababbababbabac'
GENERAL = 'babbababbaabb'

settings.register_profile('lyndonlib', deadline=None)
settings.load_profile('lyndonlib')


def _lyndon_rotation(text):
    """Smallest rotation of text, a Lyndon word when text is primitive."""
    return min(text[k:] + text[:k] for k in range(len(text)))


words = st.text(alphabet='abc', min_size=1, max_size=40)
lyndon_words = st.text(alphabet='abcd', min_size=2, max_size=40).map(
    _lyndon_rotation).filter(is_lyndon_word)


class TestCoreOrder(unittest.TestCase):

    def test_word_behaves_as_sequence(self):
        w = Word('abc')
        self.assertEqual(len(w), 3)
        self.assertEqual(w[1], 'b')
        self.assertEqual(w[1:], Word('bc'))
        self.assertEqual(w + 'a', Word('abca'))
        self.assertEqual(Word('ab') * 2, Word('abab'))
        self.assertEqual(str(w), 'abc')
        self.assertEqual(repr(w), "Word('abc')")
        self.assertRaises(AttributeError, setattr, w, 'symbols', ())

    def test_words_are_hashable(self):
        self.assertEqual(len(set([Word('ab'), Word('ab'), Word('ba')])), 2)

    def test_compare_lex(self):
        self.assertEqual(compare_lex('ab', 'b'), OrderVerdict.LESS)
        self.assertEqual(compare_lex('ab', 'aba'), OrderVerdict.LESS)
        self.assertEqual(compare_lex('aba', 'ab'), OrderVerdict.GREATER)
        self.assertEqual(compare_lex('ab', 'ab'), OrderVerdict.EQUAL)
        self.assertTrue(Word('ab') < Word('b'))

    def test_is_strongly_less(self):
        self.assertTrue(is_strongly_less('ab', 'b'))
        self.assertFalse(is_strongly_less('ab', 'aba'))
        self.assertFalse(is_strongly_less('abc', 'ab'))

    def test_compare_infinite(self):
        self.assertEqual(compare_infinite('aba', 'ab'), OrderVerdict.LESS)
        self.assertEqual(compare_infinite('aa', 'a'), OrderVerdict.LESS)
        self.assertEqual(compare_infinite('ab', 'ab'), OrderVerdict.EQUAL)
        self.assertEqual(compare_infinite('ababb', 'ababba'),
            OrderVerdict.GREATER)
        self.assertEqual(compare_powers('ab', 'abab'), OrderVerdict.EQUAL)
        self.assertEqual(compare_infinite('abab', 'ab'), OrderVerdict.LESS)

    def test_compare_infinite_rejects_empty_words(self):
        self.assertRaises(DomainError, compare_infinite, '', 'a')
        self.assertRaises(DomainError, compare_infinite, 'a', '')

    def test_is_lyndon(self):
        self.assertTrue(is_lyndon(RUNNING))
        self.assertFalse(is_lyndon(GENERAL))
        self.assertTrue(is_lyndon('a'))
        self.assertRaises(DomainError, is_lyndon, '')

    def test_conditions(self):
        self.assertTrue(is_lyndon_by_condition('aabb', Condition.ROTATION))
        self.assertFalse(is_lyndon_by_condition('abab', Condition.SUFFIX))
        self.assertTrue(is_lyndon_by_condition('ab', 'iii'))
        self.assertRaises(DomainError, is_lyndon_by_condition, 'a',
            Condition.SUFFIX)

    def test_conditions_agree(self):
        for w in oracle.enumerate_words(3, 10):
            if len(w) < 2:
                continue
            verdicts = set(is_lyndon_by_condition(w, c) for c in Condition)
            self.assertEqual(len(verdicts), 1, str(w))

    def test_infinite_order_is_a_total_order(self):
        ws = list(oracle.enumerate_words(2, 5))
        less = {}
        for u in ws:
            for v in ws:
                uv = compare_infinite(u, v)
                self.assertEqual(uv, -compare_infinite(v, u))
                self.assertEqual(uv == OrderVerdict.EQUAL, u == v)
                less[u, v] = uv == OrderVerdict.LESS
        for u in ws:
            for v in ws:
                if not less[u, v]:
                    continue
                for t in ws:
                    if less[v, t]:
                        self.assertTrue(less[u, t], (u, v, t))

    def test_lex_is_strongly_less_or_prefix(self):
        for u in oracle.enumerate_words(2, 4):
            for v in oracle.enumerate_words(2, 4):
                expected = is_strongly_less(u, v) or \
                    (u.is_prefix_of(v) and u != v)
                self.assertEqual(compare_lex(u, v) == OrderVerdict.LESS,
                    expected)


class TestLyndonScan(unittest.TestCase):

    def test_lyndon_word_prefix(self):
        self.assertEqual(lyndon_word_prefix('ba'), (False, None))
        self.assertEqual(lyndon_word_prefix('aab'), (True, 3))
        self.assertEqual(lyndon_word_prefix('ababb'), (True, 5))
        self.assertEqual(lyndon_word_prefix('abab'), (True, 2))
        self.assertRaises(DomainError, lyndon_word_prefix, '')

    def test_is_lyndon_word(self):
        self.assertTrue(is_lyndon_word(RUNNING))
        self.assertFalse(is_lyndon_word('abab'))
        self.assertFalse(is_lyndon_word(GENERAL))

    def test_suffix_table_of_lyndon_word(self):
        lyns, period = lyndon_suffix_table_lyndon(RUNNING)
        self.assertEqual(lyns, (1, 2, 1, 2, 5, 1, 2, 1, 2, 5, 1, 2, 1, 14))
        self.assertEqual(period, (1, 2, 2, 2, 5, 5, 5, 5, 5, 5, 5, 5, 5, 14))
        self.assertEqual(lyndon_suffix_table_lyndon('a'), ((1,), (1,)))

    def test_suffix_table_of_lyndon_word_rejects_other_words(self):
        self.assertRaises(NotLyndonError, lyndon_suffix_table_lyndon, 'ba')
        self.assertRaises(NotLyndonError, lyndon_suffix_table_lyndon, 'abab')

    def test_suffix_table(self):
        self.assertEqual(lyndon_suffix_table(GENERAL),
            (1, 1, 2, 3, 1, 2, 1, 2, 5, 1, 1, 3, 4))
        self.assertEqual(lyndon_suffix_table(RUNNING),
            lyndon_suffix_table_lyndon(RUNNING)[0])
        self.assertEqual(lyndon_suffix_table('bbbb'), (1, 1, 1, 1))
        self.assertRaises(DomainError, lyndon_suffix_table, '')

    def test_factorize(self):
        self.assertEqual(lyndon_factorize(GENERAL), (0, 1, 4, 9))
        self.assertEqual(lyndon_factorize(RUNNING), (0,))
        self.assertEqual(lyndon_factorize('aaa'), (0, 1, 2))
        self.assertEqual([str(f) for f in lyndon_factors(GENERAL)],
            ['b', 'abb', 'ababb', 'aabb'])
        self.assertRaises(DomainError, lyndon_factorize, 'ab', (1,))
        self.assertRaises(DomainError, lyndon_factorize, 'ab', (1, 0))
        self.assertRaises(DomainError, lyndon_factorize, 'ab', (2, 1))
        self.assertEqual(lyndon_factorize('ba', (1, 1)), (0, 1))

    def test_budget_counts_iterations(self):
        budget = ComparisonBudget()
        lyndon_suffix_table(GENERAL, budget)
        n = len(GENERAL)
        self.assertTrue(0 < budget.loop_iterations <= 2 * n - 2)
        self.assertEqual(budget.letter_comparisons, budget.loop_iterations)
        budget.reset()
        self.assertEqual(budget.as_dict()['loop_iterations'], 0)

    def test_suffix_table_against_oracle(self):
        for sigma, maxlen in ((2, 10), (3, 6)):
            for y in oracle.enumerate_words(sigma, maxlen):
                self.assertEqual(lyndon_suffix_table(y), oracle.naive_lyns(y),
                    str(y))

    def test_periods_against_oracle(self):
        for y in oracle.enumerate_lyndon(2, 12):
            self.assertEqual(lyndon_suffix_table_lyndon(y)[1],
                oracle.naive_periods(y), str(y))

    @given(words)
    def test_random_suffix_table_is_linear(self, text):
        budget = ComparisonBudget()
        lyns = lyndon_suffix_table(text, budget)
        n = len(text)
        self.assertTrue(budget.loop_iterations <= max(2 * n - 2, 0))
        self.assertTrue(budget.letter_comparisons <= 2 * n)
        for j, length in enumerate(lyns):
            self.assertTrue(1 <= length <= j + 1)

    @settings(max_examples=50)
    @given(st.text(alphabet='abc', min_size=1, max_size=10))
    def test_random_suffix_table_against_oracle(self, text):
        self.assertEqual(lyndon_suffix_table(text), oracle.naive_lyns(text))

    @given(words)
    def test_random_factorization(self, text):
        factors = lyndon_factors(text)
        self.assertEqual(''.join(str(f) for f in factors), text)
        for f, g in zip(factors, factors[1:]):
            self.assertTrue(f >= g)
        for f in factors:
            self.assertTrue(is_lyndon_word(f))


class TestLyndonTree(unittest.TestCase):

    def test_running_example(self):
        tree = left_lyndon_tree(RUNNING)
        self.assertEqual(tree.n, 14)
        self.assertEqual(len(tree.creation_order), 13)
        self.assertEqual(tree.span(tree.root), (0, 13))
        left, right = tree.children(tree.root)
        self.assertEqual(tree.span(left), (0, 4))
        self.assertEqual(tree.span(right), (5, 13))

    def test_small_trees(self):
        tree = left_lyndon_tree('ab')
        self.assertEqual(tree.children(tree.root), (0, 1))
        self.assertEqual(left_lyndon_tree('aab').nested(), (0, (1, 2)))
        self.assertEqual(left_lyndon_tree('a').nested(), 0)

    def test_standard_factorisation(self):
        self.assertEqual(standard_factorisation(RUNNING),
            (Word('ababb'), Word('ababbabac')))
        self.assertEqual(standard_factorisation('ab'), (Word('a'), Word('b')))
        self.assertEqual(standard_factorisation('aab'),
            (Word('a'), Word('ab')))
        self.assertRaises(DomainError, standard_factorisation, 'a')

    def test_rejects_non_lyndon_words(self):
        self.assertRaises(NotLyndonError, left_lyndon_tree, 'ba')
        self.assertRaises(NotLyndonError, left_lyndon_tree, 'abab')
        self.assertRaises(DomainError, left_lyndon_tree, '')

    def test_tree_invariants(self):
        for y in oracle.enumerate_lyndon(3, 7):
            tree = left_lyndon_tree(y)
            for q in tree.internal_nodes():
                self.assertTrue(is_lyndon(tree.factor(q)))
                p, r = tree.children(q)
                self.assertTrue(tree.rank(q) > max(
                    tree.rank(c) if not tree.is_leaf(c) else -1
                    for c in (p, r)))
                lo, hi = tree.span(q)
                u = tree.factor(p)
                longest = max(k for k in range(1, hi - lo + 1)
                              if is_lyndon(y[lo:lo + k]))
                self.assertEqual(len(u), longest)
            for j in range(tree.n):
                self.assertEqual(tree.width(tree.roots[j]), tree.lyns[j])

    def test_tree_against_oracle(self):
        for sigma, maxlen in ((2, 12), (3, 7)):
            for y in oracle.enumerate_lyndon(sigma, maxlen):
                self.assertEqual(left_lyndon_tree(y).nested(),
                    oracle.naive_left_tree(y).nested(), str(y))

    def test_budget_of_tree(self):
        budget = ComparisonBudget()
        left_lyndon_tree(RUNNING, budget)
        self.assertEqual(budget.nodes_created, 13)
        self.assertEqual(budget.bundle_iterations, 13)

    def test_forest_of_general_word(self):
        forest = left_lyndon_forest(GENERAL)
        self.assertEqual([str(w) for w in forest.factors],
            ['b', 'abb', 'ababb', 'aabb'])
        self.assertEqual(forest.starts, (0, 1, 4, 9))
        self.assertEqual(forest.internal_count, 9)
        for tree in forest:
            self.assertEqual(tree, left_lyndon_tree(tree.word))

    def test_forest_of_lyndon_word(self):
        forest = left_lyndon_forest(RUNNING)
        self.assertEqual(len(forest), 1)
        self.assertEqual(forest[0], left_lyndon_tree(RUNNING))

    def test_forest_of_decreasing_word(self):
        forest = left_lyndon_forest('cba')
        self.assertEqual(len(forest), 3)
        self.assertEqual(forest.internal_count, 0)

    def test_forest_node_count(self):
        for y in oracle.enumerate_words(2, 10):
            budget = ComparisonBudget()
            forest = left_lyndon_forest(y, budget)
            k = len(lyndon_factorize(y))
            self.assertEqual(forest.internal_count, len(y) - k)
            self.assertEqual(budget.nodes_created, len(y) - k)

    @given(words)
    def test_random_forest(self, text):
        budget = ComparisonBudget()
        forest = left_lyndon_forest(text, budget)
        self.assertEqual(''.join(str(w) for w in forest.factors), text)
        self.assertTrue(budget.loop_iterations <= max(2 * len(text) - 2, 0))
        for tree in forest:
            self.assertEqual(tree, left_lyndon_tree(tree.word))

    def test_tree_checks_its_structure(self):
        self.assertRaises(Exception, LyndonTree, 'ab', [0], [0])
        self.assertRaises(Exception, LyndonTree, 'abb', [0], [1])


class TestPrefixOrder(unittest.TestCase):

    def test_permutation(self):
        p = Permutation.parse('1,0,2')
        self.assertEqual(p, (1, 0, 2))
        self.assertEqual(str(p), '1,0,2')
        self.assertEqual(p.inverse(), Permutation([1, 0, 2]))
        self.assertRaises(InvalidPermutationError, Permutation, [0, 0])
        self.assertRaises(InvalidPermutationError, Permutation, [1, 2])
        self.assertRaises(InvalidPermutationError, Permutation.parse, '1,x')
        self.assertRaises(InvalidPermutationError, Permutation.parse, '')
        self.assertRaises(InvalidPermutationError, Permutation.parse, ' 1, 0')
        self.assertRaises(InvalidPermutationError, Permutation.parse, '1,+0')
        self.assertEqual(Permutation.parse('1,0\n'), (1, 0))

    def test_running_example(self):
        psp = prefix_standard_permutation(RUNNING)
        self.assertEqual(psp, (0, 2, 3, 1, 5, 7, 8, 6, 10, 12, 11, 9, 4))
        self.assertEqual(prefix_rank_table(RUNNING),
            (0, 3, 1, 2, 12, 4, 7, 5, 6, 11, 8, 10, 9))
        self.assertEqual(prefix_standard_permutation('ab'), (0,))
        self.assertEqual(prefix_standard_permutation('aabb'),
            oracle.naive_psp('aabb'))

    def test_rank_is_inverse_of_psp(self):
        psp = prefix_standard_permutation(RUNNING)
        rank = prefix_rank_table(RUNNING)
        self.assertEqual([rank[psp[r]] for r in range(len(psp))],
            list(range(len(psp))))

    def test_domain(self):
        self.assertRaises(DomainError, prefix_standard_permutation, 'a')
        self.assertRaises(NotLyndonError, prefix_standard_permutation, 'ba')

    def test_checks_on_running_example(self):
        self.assertTrue(check_creation_order(RUNNING))
        self.assertTrue(check_cartesian(RUNNING))
        self.assertTrue(check_creation_order('ab'))
        self.assertTrue(check_cartesian('ab'))
        root, _, _ = cartesian_parents(prefix_rank_table(RUNNING).values)
        self.assertEqual(root, 4)

    def test_against_oracle(self):
        for sigma, maxlen in ((2, 12), (3, 7)):
            for y in oracle.enumerate_lyndon(sigma, maxlen):
                if len(y) < 2:
                    continue
                self.assertEqual(prefix_standard_permutation(y),
                    oracle.naive_psp(y), str(y))
                self.assertTrue(check_creation_order(y), str(y))
                self.assertTrue(check_cartesian(y), str(y))

    @settings(max_examples=50)
    @given(lyndon_words)
    def test_random_psp(self, text):
        budget = ComparisonBudget()
        psp = prefix_standard_permutation(text, budget)
        self.assertEqual(psp, oracle.naive_psp(text))
        self.assertTrue(budget.letter_comparisons <= 2 * len(text))


class TestPspInverse(unittest.TestCase):

    def test_inverse_psp_binary(self):
        outcome = inverse_psp_binary((1, 0, 4, 3, 5, 2, 6))
        self.assertTrue(outcome.accepted)
        self.assertEqual(outcome.word, Word('aabaabbb'))
        self.assertEqual(inverse_psp_binary([0]).word, Word('ab'))

    def test_inverse_psp_binary_rejects(self):
        outcome = inverse_psp_binary((1, 0, 5, 3, 2, 4, 6))
        self.assertFalse(outcome)
        self.assertEqual(outcome.word, None)
        self.assertEqual(outcome.candidate, Word('aabababb'))
        self.assertEqual(outcome.candidate_psp, (1, 0, 3, 2, 5, 4, 6))

    def test_inverse_psp_binary_domain(self):
        self.assertRaises(InvalidPermutationError, inverse_psp_binary, [1, 1])
        self.assertRaises(DomainError, inverse_psp_binary, [])

    def test_binary_round_trip(self):
        for y in oracle.enumerate_lyndon(2, 12):
            if len(y) < 2:
                continue
            outcome = inverse_psp_binary(prefix_standard_permutation(y))
            self.assertEqual(outcome.word, y)

    @given(st.integers(min_value=1, max_value=9).flatmap(
        lambda m: st.permutations(list(range(m)))))
    def test_inverse_is_sound(self, values):
        outcome = inverse_psp_binary(values)
        if outcome.accepted:
            self.assertTrue(is_lyndon(outcome.word))
            self.assertTrue(set(outcome.word) <= set('ab'))
            self.assertEqual(oracle.naive_psp(outcome.word), values)

    def test_cartesian_tree(self):
        tree = CartesianTree((1, 0, 5, 3, 2, 4, 6))
        self.assertEqual(tree.root, 6)
        self.assertEqual(list(tree.inorder()), list(range(7)))
        leaves = tree.leaf_parents()
        self.assertEqual(len(leaves), 8)
        self.assertEqual(leaves[7], (6, 'right'))

    def test_periods_from_psp(self):
        p = (0, 2, 1, 4, 6, 5, 3, 7)
        self.assertEqual(periods_from_psp(p, 9), (1, 2, 2, 4, 4, 4, 4, 8, 9))
        self.assertEqual(periods_from_psp((0,), 2), (1, 2))
        self.assertRaises(DomainError, periods_from_psp, p, 8)

    def test_periods_from_psp_against_oracle(self):
        for y in oracle.enumerate_lyndon(4, 7):
            if len(y) < 2:
                continue
            self.assertEqual(
                periods_from_psp(prefix_standard_permutation(y), len(y)),
                oracle.naive_periods(y), str(y))

    def test_lyndon_prefix_ends(self):
        self.assertEqual(lyndon_prefix_ends((0, 2, 1, 4, 6, 5, 3, 7)),
            (0, 1, 3, 7))
        tree = left_lyndon_tree(RUNNING)
        ends = lyndon_prefix_ends(prefix_standard_permutation(RUNNING))
        # the walk from the leftmost leaf to the root
        walk, q = [], tree.root
        while not tree.is_leaf(q):
            walk.append(tree.prefix_end(q))
            q = tree.children(q)[0]
        self.assertEqual(ends, tuple(reversed(walk)))

    def test_word_from_psp(self):
        self.assertEqual(word_from_psp((0, 2, 1, 4, 6, 5, 3, 7), 9),
            Word('abacabadb'))
        self.assertEqual(word_from_psp((0, 1, 2, 3), 5), Word('abbbb'))
        self.assertRaises(DomainError, word_from_psp, (0, 1), 4)

    def test_word_from_psp_rejects(self):
        with self.assertRaises(NotPspError) as cm:
            word_from_psp((1, 0, 5, 3, 2, 4, 6), 8)
        self.assertTrue(cm.exception.candidate is not None)

    def test_word_from_psp_minimality(self):
        fibres = {}
        for y in oracle.enumerate_lyndon(4, 6):
            if len(y) >= 2:
                key = (len(y), prefix_standard_permutation(y))
                fibres.setdefault(key, []).append(y)
        for (n, p), ys in fibres.items():
            self.assertEqual(word_from_psp(p, n), min(ys))

    def test_fibre(self):
        fibre = oracle.naive_fiber((0, 2, 3, 1, 4), 6, 3)
        self.assertEqual(fibre, [Word('ababbb'), Word('ababbc'),
            Word('ababcb'), Word('ababcc')])
        self.assertEqual(word_from_psp((0, 2, 3, 1, 4), 6), fibre[0])

    def test_half_zimin(self):
        self.assertEqual([str(half_zimin(i)) for i in range(5)],
            ['', 'a', 'ab', 'abac', 'abacabad'])
        for i in range(2, 6):
            z = half_zimin(i)
            self.assertEqual(
                word_from_psp(prefix_standard_permutation(z), len(z)), z)
        self.assertRaises(DomainError, half_zimin, -1)
        self.assertRaises(AlphabetExhaustedError, half_zimin, 27)

    def test_alphabet_bound(self):
        for y in oracle.enumerate_lyndon(3, 8):
            if len(y) < 2:
                continue
            z = word_from_psp(prefix_standard_permutation(y), len(y))
            self.assertTrue(z <= y)
            self.assertTrue(len(set(z)) <= (len(y) + 1).bit_length())


class TestOracle(unittest.TestCase):

    def test_enumerate_lyndon(self):
        self.assertEqual(set(str(w) for w in oracle.enumerate_lyndon(2, 3)),
            set(['a', 'b', 'ab', 'aab', 'abb']))
        self.assertEqual([str(w) for w in oracle.enumerate_lyndon(1, 3)],
            ['a'])

    def test_enumeration_is_ordered_and_complete(self):
        ws = list(oracle.enumerate_words(3, 4))
        self.assertEqual(len(ws), 3 + 9 + 27 + 81)
        self.assertEqual(ws, sorted(ws))

    def test_count_lyndon(self):
        self.assertEqual(oracle.count_lyndon(2, 14), 1161)
        counts = {}
        for w in oracle.enumerate_lyndon(2, 10):
            counts[len(w)] = counts.get(len(w), 0) + 1
        for n in range(1, 11):
            self.assertEqual(counts[n], oracle.count_lyndon(2, n))

    def test_enumerated_words_satisfy_all_conditions(self):
        for w in oracle.enumerate_lyndon(3, 6):
            if len(w) > 1:
                for c in Condition:
                    self.assertTrue(is_lyndon_by_condition(w, c))

    def test_naive_oracles(self):
        self.assertEqual(oracle.naive_lyns(GENERAL),
            (1, 1, 2, 3, 1, 2, 1, 2, 5, 1, 1, 3, 4))
        self.assertEqual(oracle.naive_lyns('a'), (1,))
        self.assertEqual(oracle.naive_psp(RUNNING),
            (0, 2, 3, 1, 5, 7, 8, 6, 10, 12, 11, 9, 4))
        self.assertEqual(oracle.naive_psp('aabab'),
            prefix_standard_permutation('aabab'))
        self.assertEqual(oracle.naive_left_tree('ab').nested(), (0, 1))
        self.assertRaises(NotLyndonError, oracle.naive_left_tree, 'ba')


class TestSelfCheck(unittest.TestCase):

    def test_suites_pass(self):
        results = selfcheck.run_suites(2, 8, 6, utils.Pool())
        self.assertEqual(len(results), len(selfcheck.SUITES))
        for result in results:
            self.assertTrue(result.ok, result)
            self.assertTrue(result.passed > 0, result)
        summary = selfcheck.total(results)
        self.assertEqual(summary.passed, sum(r.passed for r in results))

    def test_suites_on_worker_processes(self):
        self.assertTrue(isinstance(utils.get_pool(1), utils.Pool))
        with utils.get_pool(2) as pool:
            results = selfcheck.run_suites(2, 5, 4, pool)
        self.assertEqual([r.name for r in results],
            [r.name for r in selfcheck.run_suites(2, 5, 4, utils.Pool())])
        self.assertTrue(selfcheck.total(results).ok)

    def test_suite_result_records_examples(self):
        result = selfcheck.SuiteResult('x')
        for k in range(10):
            result.record(False, k)
        self.assertEqual(result.failed, 10)
        self.assertEqual(len(result.examples), selfcheck.MAX_EXAMPLES)


class TestBench(unittest.TestCase):

    def test_small_bench(self):
        report = run_bench(2000, 2, 7)
        self.assertTrue(report.ok, report.checks)
        self.assertEqual(report.counters['tree']['nodes_created'], 1999)
        self.assertTrue(report.lines()[0].startswith('n=2000'))


class TestRender(unittest.TestCase):

    def test_tsv_table(self):
        out = render.position_table(Word('ab'), [('lyns', (1, 2))],
            render.TSV)
        self.assertEqual(out, 'j\ty[j]\tlyns[j]\n0\ta\t1\n1\tb\t2')

    def test_json_tree(self):
        data = json.loads(render.lyndon_tree(left_lyndon_tree('ab'),
            render.JSON))
        self.assertEqual(data['tree'], [{'id': 2, 'left': 0, 'right': 1}])

    def test_dot_tree(self):
        out = render.lyndon_tree(left_lyndon_tree('ab'), render.DOT)
        self.assertEqual(out.splitlines(), [
            'digraph "ab" {',
            '  0 [shape=box, label="0:a"];',
            '  1 [shape=box, label="1:b"];',
            '  2 [shape=circle, label="0"];',
            '  2 -> 0;',
            '  2 -> 1;',
            '}',
        ])

    def test_dot_forest(self):
        out = render.lyndon_forest(left_lyndon_forest(GENERAL), render.DOT)
        self.assertEqual(out.count('subgraph'), 4)
        self.assertTrue('t3_0 [shape=box, label="9:a"];' in out)


class TestConfig(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_settings_fall_back_to_defaults(self):
        path = os.path.join(self.tmp, config.RC_NAME)
        with open(path, 'w') as fh:
            fh.write("[check]\nsigma = 3\n")
        s = config.Settings(path)
        self.assertEqual(s.getint('check', 'sigma'), 3)
        self.assertEqual(s.getint('check', 'maxlen'), 14)
        self.assertEqual(config.Settings().getint('bench', 'n'), 1000000)

    def test_settings_reject_non_integers(self):
        path = os.path.join(self.tmp, config.RC_NAME)
        with open(path, 'w') as fh:
            fh.write("[bench]\nn = many\n")
        self.assertRaises(ValueError, config.Settings(path).getint,
            'bench', 'n')

    def test_malformed_file(self):
        path = os.path.join(self.tmp, config.RC_NAME)
        with open(path, 'w') as fh:
            fh.write("sigma = 3\n")
        self.assertRaises(ValueError, config.Settings, path)

    def test_missing_file(self):
        self.assertRaises(IOError, config.Settings,
            os.path.join(self.tmp, 'nope'))

    def test_find_rc(self):
        nested = os.path.join(self.tmp, 'a', 'b')
        os.makedirs(nested)
        path = os.path.join(self.tmp, config.RC_NAME)
        config.write_skeleton(path)
        self.assertEqual(config.find_rc(nested), path)
        self.assertEqual(config.resolve_rc(cwd=nested), path)
        self.assertEqual(config.resolve_rc('other'), 'other')

    def test_skeleton_is_sorted(self):
        path = os.path.join(self.tmp, config.RC_NAME)
        config.write_skeleton(path)
        with open(path) as fh:
            content = fh.read()
        self.assertTrue(content.startswith('[bench]\nn = 1000000\n'))
        parser = config.OrderedRawConfigParser()
        parser.read(path)
        self.assertEqual(parser.sections(), ['bench', 'check', 'main'])


class TestLog(unittest.TestCase):

    def test_unknown_level(self):
        self.assertRaises(ValueError, set_log_level, 'chatty')


class TestCommands(unittest.TestCase):
    """Run the command line and capture what it prints."""

    def setUp(self):
        patcher = patch('lyndonlib.config.resolve_rc', return_value=None)
        patcher.start()
        self.addCleanup(patcher.stop)
        self.tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.tmp)

    def _run(self, *argv):
        with patch('lyndonlib.utils.MSG') as msg:
            with patch('lyndonlib.utils.ERRMSG') as errmsg:
                status = run(list(argv))
        self.errors = [c[0][0] for c in errmsg.call_args_list]
        return status, [c[0][0] for c in msg.call_args_list]

    def test_lyns(self):
        status, out = self._run('lyns', GENERAL)
        self.assertEqual(status, 0)
        self.assertEqual(out, ['1 1 2 3 1 2 1 2 5 1 1 3 4'])

    def test_lyns_with_periods(self):
        status, out = self._run('lyns', '--periods', RUNNING)
        self.assertEqual(out, ['1 2 1 2 5 1 2 1 2 5 1 2 1 14\n'
                               '1 2 2 2 5 5 5 5 5 5 5 5 5 14'])
        status, out = self._run('lyns', '--periods', GENERAL)
        self.assertEqual(status, 2)

    def test_lyns_tsv_and_count(self):
        status, out = self._run('lyns', '--format', 'tsv', '--count', 'ab')
        self.assertEqual(status, 0)
        self.assertEqual(out[0].splitlines()[0], 'j\ty[j]\tlyns[j]')
        self.assertTrue(out[1].startswith('# '))

    def test_lyns_from_file_and_stdin(self):
        path = os.path.join(self.tmp, 'word')
        with open(path, 'w') as fh:
            fh.write(GENERAL + '\n')
        status, out = self._run('lyns', '--file', path)
        self.assertEqual(out, ['1 1 2 3 1 2 1 2 5 1 1 3 4'])
        with patch('sys.stdin', io.StringIO(u'bbbb\n')):
            status, out = self._run('lyns', '-')
        self.assertEqual(out, ['1 1 1 1'])

    def test_malformed_word(self):
        status, out = self._run('lyns', 'abC')
        self.assertEqual(status, 2)
        self.assertTrue(self.errors)

    def test_dot_only_for_trees(self):
        status, out = self._run('lyns', '--format', 'dot', 'ab')
        self.assertEqual(status, 2)

    def test_tree_and_forest(self):
        status, out = self._run('tree', '--dot', 'ab')
        self.assertEqual(status, 0)
        self.assertTrue(out[0].startswith('digraph "ab" {'))
        status, out = self._run('forest', '--format', 'json', GENERAL)
        self.assertEqual(json.loads(out[0])['starts'], [0, 1, 4, 9])
        status, out = self._run('tree', GENERAL)
        self.assertEqual(status, 2)

    def test_psp_and_rank(self):
        status, out = self._run('psp', RUNNING)
        self.assertEqual(out, ['0,2,3,1,5,7,8,6,10,12,11,9,4'])
        status, out = self._run('rank', '--format', 'json', RUNNING)
        self.assertEqual(json.loads(out[0])['rank'],
            [0, 3, 1, 2, 12, 4, 7, 5, 6, 11, 8, 10, 9])

    def test_factorize(self):
        status, out = self._run('factorize', GENERAL)
        self.assertEqual(out, ['0 1 4 9\nb | abb | ababb | aabb'])

    def test_is_lyndon(self):
        self.assertEqual(self._run('is-lyndon', RUNNING)[0], 0)
        self.assertEqual(self._run('is-lyndon', GENERAL)[0], 1)

    def test_inverse_psp(self):
        status, out = self._run('inverse-psp', '1,0,4,3,5,2,6')
        self.assertEqual((status, out), (0, ['aabaabbb']))
        status, out = self._run('inverse-psp', '1,0,5,3,2,4,6')
        self.assertEqual(status, 1)
        self.assertEqual(out, ['REJECT: not a PSP of a binary Lyndon word'])
        status, out = self._run('inverse-psp', '1,1')
        self.assertEqual(status, 2)

    def test_periods_and_word_from_psp(self):
        status, out = self._run('periods-from-psp', '0,2,1,4,6,5,3,7', '9')
        self.assertEqual(out, ['1 2 2 4 4 4 4 8 9'])
        status, out = self._run('periods-from-psp', '--prefix-ends',
            '0,2,1,4,6,5,3,7', '9')
        self.assertEqual(out, ['0 1 3 7'])
        status, out = self._run('word-from-psp', '0,2,1,4,6,5,3,7', '9')
        self.assertEqual((status, out), (0, ['abacabadb']))
        status, out = self._run('word-from-psp', '1,0,5,3,2,4,6', '8')
        self.assertEqual(status, 1)
        status, out = self._run('word-from-psp', '0,1', '9')
        self.assertEqual(status, 2)

    def test_check(self):
        status, out = self._run('check', '--sigma', '2', '--maxlen', '6',
            '--word-maxlen', '5')
        self.assertEqual(status, 0)
        self.assertTrue(out[-1].startswith('total'))
        status, out = self._run('check', '--suite', 'psp', '--maxlen', '5')
        self.assertEqual(status, 0)
        self.assertEqual(len(out), 2)
        status, out = self._run('check', '--suite', 'nope')
        self.assertEqual(status, 2)

    def test_bench(self):
        status, out = self._run('bench', '--n', '500', '--trials', '1')
        self.assertEqual(status, 0)
        self.assertEqual(out[0], 'n=500 trials=1 seed=0')

    def test_init(self):
        status, out = self._run('init', self.tmp)
        self.assertEqual(status, 0)
        self.assertTrue(os.path.isfile(os.path.join(self.tmp,
            config.RC_NAME)))
        self.assertEqual(self._run('init', self.tmp)[0], 1)
        self.assertEqual(self._run('init', '--force', self.tmp)[0], 0)

    def test_config_option(self):
        path = os.path.join(self.tmp, 'rc')
        with open(path, 'w') as fh:
            fh.write("[check]\nmaxlen = 4\nword_maxlen = 3\n")
        status, out = self._run('--config', path, 'check', '--suite', 'lyns')
        self.assertEqual(status, 0)
        # words of length 1..3 over two letters
        self.assertTrue(' 14 ' in out[0])
        self.assertEqual(self._run('--config', os.path.join(self.tmp, 'x'),
            'lyns', 'ab')[0], 2)

    def test_quiet_keeps_results(self):
        stream = io.StringIO()
        handler = logging.StreamHandler(stream)
        log.output.addHandler(handler)
        self.addCleanup(log.output.removeHandler, handler)
        self.addCleanup(set_log_level, 'INFO')
        self.assertEqual(run(['-q', 'lyns', GENERAL]), 0)
        self.assertEqual(stream.getvalue(), '1 1 2 3 1 2 1 2 5 1 1 3 4\n')
        self.assertFalse(log.logger.isEnabledFor(logging.INFO))

    def test_unreadable_file(self):
        status, out = self._run('lyns', '--file',
            os.path.join(self.tmp, 'missing'))
        self.assertEqual((status, out), (2, []))
        path = os.path.join(self.tmp, 'binary')
        with open(path, 'wb') as fh:
            fh.write(b'ab\xff')
        status, out = self._run('lyns', '--file', path)
        self.assertEqual((status, out), (2, []))
        self.assertTrue('UTF-8' in self.errors[0])

    def test_zero_options_are_not_defaults(self):
        self.assertEqual(self._run('check', '--sigma', '0', '--maxlen', '3',
            '--word-maxlen', '3')[0], 2)
        self.assertEqual(self._run('check', '--maxlen', '0')[0], 2)
        self.assertEqual(self._run('bench', '--n', '0')[0], 2)
        self.assertEqual(self._run('bench', '--n', '50', '--trials',
            '0')[0], 2)

    def test_malformed_config(self):
        path = os.path.join(self.tmp, 'rc')
        with open(path, 'w') as fh:
            fh.write("no section header\n")
        self.assertEqual(self._run('--config', path, 'lyns', 'ab')[0], 2)

    def test_help_and_unknown_command(self):
        status, out = self._run('help')
        self.assertEqual(status, 0)
        self.assertTrue(any('inverse-psp' in line for line in out))
        self.assertEqual(self._run('frobnicate')[0], 2)
        self.assertEqual(self._run()[0], 2)


if __name__ == '__main__':
    unittest.main()
