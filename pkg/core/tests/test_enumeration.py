import itertools
import math

from django.test import SimpleTestCase
from hypothesis import given, settings

from core.classify import is_inhabited
from core.enumeration import (
    ONE, PAIR_TYPE, THREE, TWO, EnumerationCursor, church, count_inhabitants, enumerate_inhabitants,
    enumerate_substitutions, first_inhabitant, inhabitants_of_size, pair, parse_tree, projection,
    tree, tree_nodes, word, word_list,
)
from core.exceptions import BadIndex
from core.lambda_core import BASE, EMPTY, Context, Free, SimpleType, app, lam, long_normal_form, typecheck

from .strategies import naturals, simple_types

WORDS = SimpleType((ONE, ONE, BASE))
THREE_PROJECTIONS = SimpleType((BASE, BASE, BASE))

f, c = Free('f', ONE), Free('c', BASE)


class EnumerateInhabitantsTests(SimpleTestCase):
    def test_projections(self):
        terms = enumerate_inhabitants(EMPTY, THREE_PROJECTIONS, 10)
        self.assertEqual(terms, [projection(3, 1), projection(3, 2), projection(3, 3)])

    def test_base_type_is_empty(self):
        self.assertEqual(enumerate_inhabitants(EMPTY, BASE, 10), [])

    def test_words_up_to_length_four(self):
        self.assertEqual(count_inhabitants(EMPTY, WORDS, 12), 31)
        self.assertEqual(len(enumerate_inhabitants(EMPTY, WORDS, 12)), 31)

    def test_sizes_nondecreasing(self):
        sizes = [t.size for t in enumerate_inhabitants(EMPTY, WORDS, 12)]
        self.assertEqual(sizes, sorted(sizes))

    def test_no_duplicates(self):
        terms = enumerate_inhabitants(EMPTY, SimpleType((TWO,)), 14)
        self.assertEqual(len(terms), len(set(terms)))

    def test_limit(self):
        self.assertEqual(len(enumerate_inhabitants(EMPTY, WORDS, 12, limit=5)), 5)

    def test_terms_over_a_context(self):
        ctx = Context.of(('f', ONE), ('c', BASE))
        terms = enumerate_inhabitants(ctx, BASE, 5)
        self.assertEqual(terms, [c, app(f, c), app(f, app(f, c))])

    def test_bound_must_be_positive(self):
        with self.assertRaises(ValueError):
            enumerate_inhabitants(EMPTY, WORDS, 0)

    def test_first_inhabitant(self):
        x = Free('x', BASE)
        self.assertEqual(first_inhabitant(EMPTY, ONE), lam(x, x))
        self.assertIsNone(first_inhabitant(EMPTY, BASE, max_size=6))

    def test_cursor(self):
        cursor = EnumerationCursor(THREE_PROJECTIONS, 10)
        self.assertEqual(next(cursor), projection(3, 1))
        self.assertEqual(cursor.position, 1)
        self.assertEqual(len(list(cursor)), 2)

    @settings(max_examples=30, deadline=None)
    @given(naturals)
    def test_numerals_are_enumerated(self, n):
        numerals = enumerate_inhabitants(EMPTY, SimpleType((ONE, BASE)), 2 * n + 3)
        self.assertEqual(numerals[-1], church(n))
        self.assertEqual(len(numerals), n + 1)


class ShorthandTests(SimpleTestCase):
    def test_church_zero(self):
        self.assertEqual(church(0), lam(f, c, c))

    def test_pair(self):
        F = Free('F', TWO)
        x1, x2, x3 = (Free(f'x{i}', BASE) for i in (1, 2, 3))
        expected = lam(F, app(F, lam(x1, app(F, lam(x2, app(F, lam(x3, x1)))))))
        self.assertEqual(pair(3, 1), expected)

    def test_size_model(self):
        self.assertEqual(church(4).size, 11)
        self.assertEqual(pair(3, 2).size, 11)

    def test_single_leaf(self):
        b = Free('b', PAIR_TYPE)
        self.assertEqual(tree(None), lam(b, c, c))

    def test_tree_shapes(self):
        shape = parse_tree('bbcbccbcc')
        self.assertEqual(tree_nodes(shape), 4)
        self.assertEqual(typecheck(tree(shape)), SimpleType((PAIR_TYPE, BASE)))

    def test_word_list(self):
        term = word_list([[1], [2, 1]])
        self.assertEqual(typecheck(term), SimpleType((SimpleType((TWO,)), BASE)))

    def test_bad_indices(self):
        for build in (lambda: pair(1, 2), lambda: church(-1), lambda: projection(2, 3),
                      lambda: word('fh'), lambda: word_list([[2]]), lambda: parse_tree('bc')):
            with self.assertRaises(BadIndex):
                build()


class EnumerateSubstitutionsTests(SimpleTestCase):
    def test_numerals_into_one_variable(self):
        source = Context.of(('f', ONE), ('c', BASE))
        target = Context.of(('x', BASE))
        y, x = Free('y', BASE), Free('x', BASE)
        subs = enumerate_substitutions(source, target, 5)
        self.assertEqual(len(subs), 2)
        self.assertEqual({s['f'] for s in subs}, {lam(y, y), lam(y, x)})
        self.assertTrue(all(s['c'] == x for s in subs))

    def test_empty_source(self):
        subs = enumerate_substitutions(EMPTY, Context.of(('x', BASE)), 3)
        self.assertEqual(len(subs), 1)
        self.assertEqual(subs[0].assignment, ())

    def test_pairs_into_numerals(self):
        source = Context.of(('F', TWO))
        target = Context.of(('f', ONE), ('c', BASE))
        g = Free('g', ONE)
        images = {s['F'] for s in enumerate_substitutions(source, target, 7)}
        self.assertIn(lam(g, app(f, app(g, c))), images)
        self.assertIn(lam(g, c), images)


def tree_shapes(nodes):
    if nodes == 0:
        return [None]
    return [
        (left, right)
        for k in range(nodes)
        for left in tree_shapes(k)
        for right in tree_shapes(nodes - 1 - k)
    ]


TREES = SimpleType((PAIR_TYPE, BASE))
PAIRS = SimpleType((TWO,))


class CountingTests(SimpleTestCase):
    def test_trees_are_counted_by_catalan_numbers(self):
        for n in range(9):
            terms = inhabitants_of_size(EMPTY, TREES, 4 * n + 3)
            self.assertEqual(len(terms), math.comb(2 * n, n) // (n + 1), n)
        self.assertEqual(count_inhabitants(EMPTY, TREES, 35), sum(math.comb(2 * n, n) // (n + 1) for n in range(9)))

    def test_trees_match_the_shorthand(self):
        for n in range(6):
            terms = set(inhabitants_of_size(EMPTY, TREES, 4 * n + 3))
            self.assertEqual(terms, {tree(shape) for shape in tree_shapes(n)}, n)

    def test_words_of_each_length(self):
        for n in range(11):
            terms = inhabitants_of_size(EMPTY, WORDS, 2 * n + 4)
            self.assertEqual(len(terms), 2 ** n, n)
            self.assertEqual(inhabitants_of_size(EMPTY, WORDS, 2 * n + 5), ())

    def test_words_match_the_shorthand(self):
        for n in range(7):
            terms = set(inhabitants_of_size(EMPTY, WORDS, 2 * n + 4))
            letters = {word(''.join(w)) for w in itertools.product('fg', repeat=n)}
            self.assertEqual(terms, letters, n)

    def test_pairs_match_the_shorthand(self):
        for i in range(1, 8):
            terms = inhabitants_of_size(EMPTY, PAIRS, 3 * i + 2)
            self.assertEqual(set(terms), {pair(i, j) for j in range(1, i + 1)}, i)

    def test_finite_types_have_k_inhabitants(self):
        for k in range(7):
            ty = SimpleType((BASE,) * k)
            terms = enumerate_inhabitants(EMPTY, ty, 20)
            self.assertEqual(terms, [projection(k, i) for i in range(1, k + 1)], k)

    def test_every_term_is_a_typed_long_normal_form(self):
        types = [WORDS, TREES, PAIRS, THREE_PROJECTIONS, SimpleType((THREE, BASE)), SimpleType((ONE, BASE))]
        for ty in types:
            for term in enumerate_inhabitants(EMPTY, ty, 14, limit=200):
                self.assertEqual(typecheck(term), ty)
                self.assertEqual(long_normal_form(term), term)

    @settings(max_examples=100, deadline=None)
    @given(simple_types)
    def test_inhabitation_agrees_with_enumeration(self, ty):
        if is_inhabited(ty):
            found = first_inhabitant(EMPTY, ty)
            self.assertEqual(typecheck(found), ty)
        else:
            self.assertIsNone(first_inhabitant(EMPTY, ty, max_size=10))
