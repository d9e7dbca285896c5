from django.test import SimpleTestCase
from hypothesis import given, settings

from core.arithmetic import NUMERAL
from core.enumeration import ONE, PAIR_TYPE, THREE, TWO, church, word
from core.exceptions import ParseError, TermTypeError, UnboundVariable
from core.lambda_core import BASE, Context, SimpleType
from core.syntax import parse_context, parse_term, parse_type, print_context, print_term, print_type

from .strategies import simple_types


class ParseTypeTests(SimpleTestCase):
    def test_numeral_sugar(self):
        self.assertEqual(parse_type('0'), BASE)
        self.assertEqual(parse_type('1'), ONE)
        self.assertEqual(parse_type('2'), TWO)
        self.assertEqual(parse_type('3'), THREE)

    def test_canonical_types(self):
        self.assertEqual(parse_type('[1,0]'), NUMERAL)
        self.assertEqual(parse_type('[[0,0],0]'), SimpleType((PAIR_TYPE, BASE)))

    def test_arrows_flatten(self):
        self.assertEqual(parse_type('0->0->0'), PAIR_TYPE)
        self.assertEqual(parse_type('1 -> 0 -> 0'), NUMERAL)
        self.assertEqual(parse_type('(0 -> 0) -> 0'), TWO)

    def test_repetition(self):
        self.assertEqual(parse_type('[0^3]'), SimpleType((BASE, BASE, BASE)))
        self.assertEqual(parse_type('[1,0^2]'), SimpleType((ONE, BASE, BASE)))

    def test_empty_bracket_is_base(self):
        self.assertEqual(parse_type('[]'), BASE)

    def test_error_position(self):
        with self.assertRaises(ParseError) as caught:
            parse_type('[1,')
        self.assertIsNotNone(caught.exception.column)
        self.assertIsInstance(caught.exception, ValueError)

    def test_printing_uses_brackets(self):
        self.assertEqual(print_type(parse_type('0->0->0')), '[0,0]')
        self.assertEqual(print_type(parse_type('3')), '[[[0]]]')

    @settings(max_examples=100, deadline=None)
    @given(simple_types)
    def test_printed_types_reparse(self, ty):
        self.assertEqual(parse_type(print_type(ty)), ty)


class ParseContextTests(SimpleTestCase):
    def test_context(self):
        ctx = parse_context('f:1, c:0')
        self.assertEqual(ctx, Context.of(('f', ONE), ('c', BASE)))
        self.assertEqual(print_context(ctx), 'f:[0], c:0')

    def test_empty_context(self):
        self.assertEqual(len(parse_context('')), 0)


class ParseTermTests(SimpleTestCase):
    def test_church_numeral(self):
        self.assertEqual(parse_term('\\f:1. \\c:0. f (f c)'), church(2))

    def test_free_names_resolve_in_context(self):
        ctx = Context.of(('f', ONE), ('g', ONE), ('c', BASE))
        term = parse_term('f (g c)', ctx)
        self.assertEqual(term.ty, BASE)

    def test_unknown_name(self):
        with self.assertRaises(UnboundVariable):
            parse_term('\\x:0. y')

    def test_ill_typed(self):
        with self.assertRaises(TermTypeError):
            parse_term('\\x:0. x x')

    def test_printed_terms_reparse(self):
        for term in (church(0), church(3), word('fgfg')):
            self.assertEqual(parse_term(print_term(term)), term)

    def test_printed_open_terms_reparse(self):
        ctx = Context.of(('x1', BASE), ('x2', ONE))
        term = parse_term('\\y:0. x2 (x2 x1)', ctx)
        self.assertEqual(parse_term(print_term(term), ctx), term)
