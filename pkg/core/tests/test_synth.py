from django.test import SimpleTestCase

from core.certificates import Strength, identity
from core.classify import Derivative, HierarchyClass, is_fat
from core.enumeration import ONE, PAIR_TYPE, THREE, TWO, church, enumerate_inhabitants, pair, projection
from core.exceptions import (
    BadPermutation, CertificateError, NotAtomic, NotDerivative, NotLarge, NotSubcontext,
    TargetMismatch,
)
from core.lambda_core import BASE, Context, Free, SimpleType, app, bohm_transform, lam, long_normal_form
from core.syntax import parse_type
from core.synth import (
    atomic_pair, bitw, canonical_context, collapse, congruence, derivative_lift, double_embed, embed,
    inhabitant_reduction, inner_permute, large_pairing, numeral_chain, numeral_lift, omega_family,
    omega_splits, pair_cap, pairing, permute, recursion_cap, sametrick, separator, separators, split, sum_all,
    sum_reductions, tuple_merge, word_reduction,
)
from core.verify import Outcome, check_atomic_pair, check_injective, check_strong, validate_certificate

NUMERALS = canonical_context(HierarchyClass.omega_plus(0))
WORDS = canonical_context(HierarchyClass.omega_plus(2))
TREES = canonical_context(HierarchyClass.omega_plus(4))

f, g, c = Free('f', ONE), Free('g', ONE), Free('c', BASE)
x, y = Free('x', BASE), Free('y', BASE)


class CanonicalContextTests(SimpleTestCase):
    def test_finite(self):
        self.assertEqual(canonical_context(HierarchyClass.finite(3)).names, ('x1', 'x2', 'x3'))
        self.assertEqual(len(canonical_context(HierarchyClass.finite(0))), 0)

    def test_brackets_are_canonical(self):
        self.assertEqual(NUMERALS.bracket(), parse_type('[1,0]'))
        self.assertEqual(canonical_context(HierarchyClass.omega_plus(1)).bracket(), parse_type('[2]'))
        self.assertEqual(TREES.bracket(), parse_type('[[0,0],0]'))


class StructuralLemmaTests(SimpleTestCase):
    def assertValid(self, cert):
        report = validate_certificate(cert)
        self.assertTrue(report.passed, report.as_text())

    def test_embed_keeps_names(self):
        cert = embed(Context.of(('c', BASE)), NUMERALS)
        self.assertEqual(cert.substitution['c'], c)
        self.assertIs(cert.strength, Strength.ATOMIC)

    def test_embed_by_type(self):
        cert = embed(Context.of(('x', BASE), ('h', ONE)), WORDS)
        self.assertEqual(cert.substitution['x'], c)
        self.assertEqual(cert.substitution['h'], lam(y, app(f, y)))

    def test_embed_needs_room(self):
        with self.assertRaises(NotSubcontext):
            embed(Context.of(('g', ONE), ('h', ONE)), NUMERALS)

    def test_permute(self):
        cert = permute(NUMERALS, (1, 0))
        self.assertEqual(cert.target.names, ('c', 'f'))
        self.assertEqual(cert.target_type, parse_type('[0,1]'))
        self.assertValid(cert)

    def test_bad_permutation(self):
        with self.assertRaises(BadPermutation):
            permute(NUMERALS, (0, 0))
        with self.assertRaises(BadPermutation):
            inner_permute(parse_type('[1,0]'), (0, 1, 2))

    def test_inner_permute(self):
        cert = inner_permute(parse_type('[1,0]'), (1, 0))
        self.assertEqual(cert.target_type, SimpleType((parse_type('[0,1]'),)))
        self.assertValid(cert)

    def test_congruence(self):
        cert = congruence(numeral_lift(), rest=(BASE,))
        self.assertEqual(cert.source_type, SimpleType((parse_type('[[1,0],0]'),)))
        self.assertEqual(cert.target_type, SimpleType((parse_type('[[2,0],0]'),)))
        self.assertIs(cert.strength, Strength.ATOMIC)
        self.assertEqual(len(cert.derivation), 2)
        self.assertValid(cert)

    def test_double_embed(self):
        cert = double_embed(NUMERALS)
        self.assertEqual(cert.target_type, SimpleType((SimpleType((NUMERALS.bracket(),)),)))
        self.assertValid(cert)

    def test_split(self):
        cert = split(parse_type('[1,0]'))
        expected = SimpleType((SimpleType((ONE,)), SimpleType((BASE,)), PAIR_TYPE))
        self.assertEqual(cert.target_type, expected)
        self.assertValid(cert)

    def test_tuple_merge(self):
        cert = tuple_merge(SimpleType((PAIR_TYPE,)))
        self.assertEqual(cert.target_type, SimpleType((TWO,)))
        self.assertValid(cert)
        with self.assertRaises(CertificateError):
            tuple_merge(PAIR_TYPE)

    def test_recursion_cap(self):
        cert = recursion_cap(BASE)
        self.assertEqual(cert.source_type, parse_type('[2]'))
        self.assertEqual(cert.target_type, SimpleType((THREE, BASE)))
        report = check_injective(cert, sample_size=11)
        self.assertTrue(report.passed, report.as_text())

    def test_pair_cap(self):
        cert = pair_cap(ONE)
        self.assertEqual(cert.target_type, SimpleType((PAIR_TYPE, ONE, ONE)))
        self.assertValid(cert)

    def test_inhabitant_reduction(self):
        cert = inhabitant_reduction(NUMERALS)
        self.assertEqual(cert.substitution['c'], c)
        self.assertIs(cert.strength, Strength.STRONG)

    def test_collapse(self):
        cert = collapse(Context.of(('h', ONE)))
        self.assertEqual(len(cert.target), 0)
        self.assertEqual(cert.substitution['h'], lam(x, x))
        self.assertIs(cert.strength, Strength.HEAD)
        self.assertValid(cert)


class DerivativeLiftTests(SimpleTestCase):
    def test_pairing_in_place(self):
        cert = large_pairing(TREES)
        b = Free('b', PAIR_TYPE)
        self.assertEqual(cert.target, TREES)
        self.assertEqual(cert.substitution['b'], lam(x, y, app(b, x, y)))

    def test_pairing_through_a_derivative(self):
        ctx = Context.of(('Q', SimpleType((TREES.bracket(),))))
        self.assertFalse(any(is_fat(ty) for ty in ctx.types))
        cert = large_pairing(ctx)
        self.assertEqual(cert.target, ctx)
        self.assertEqual(cert.source_type, SimpleType((PAIR_TYPE,)))
        report = validate_certificate(cert)
        self.assertTrue(report.passed, report.as_text())

    def test_small_context(self):
        with self.assertRaises(NotLarge):
            large_pairing(canonical_context(HierarchyClass.omega_plus(3)))

    def test_target_must_be_the_derivative(self):
        with self.assertRaises(NotDerivative):
            derivative_lift(identity(NUMERALS), Derivative(Context.of(('F', TWO)), ()))


class AtomicPairTests(SimpleTestCase):
    def test_wide(self):
        found = atomic_pair(WORDS)
        self.assertEqual(found.kind, 'wide')
        self.assertEqual(found.first, lam(x, app(f, x)))
        self.assertEqual(found.second, lam(x, app(g, x)))
        self.assertTrue(check_atomic_pair(found, 7).passed)

    def test_fat(self):
        found = atomic_pair(TREES)
        self.assertEqual(found.kind, 'fat')
        b = Free('b', PAIR_TYPE)
        self.assertEqual(found.first, lam(x, app(b, c, x)))
        self.assertEqual(found.second, lam(x, app(b, app(b, c, c), x)))
        report = check_atomic_pair(found, 7)
        self.assertTrue(report.passed, report.as_text())

    def test_fat_pair_grows_linearly(self):
        found = atomic_pair(TREES)
        terms = enumerate_inhabitants(TREES, BASE, 11)
        for member in (found.first, found.second):
            growth = {long_normal_form(app(member, m)).size - m.size for m in terms}
            self.assertEqual(len(growth), 1)

    def test_tall(self):
        found = atomic_pair(canonical_context(HierarchyClass.omega_plus(3)))
        self.assertEqual(found.kind, 'tall')
        self.assertEqual(found.first.ty, ONE)
        self.assertEqual(found.second.ty, ONE)

    def test_numerals_have_none(self):
        with self.assertRaises(NotAtomic):
            atomic_pair(NUMERALS)


class SumTests(SimpleTestCase):
    def test_sum_of_two_embeddings(self):
        first = embed(Context.of(('x', BASE)), WORDS)
        second = embed(Context.of(('y', ONE)), WORDS)
        cert = sum_reductions(first, second)
        self.assertEqual(cert.source.names, ('x', 'y'))
        self.assertEqual(cert.source_type, parse_type('[0,1]'))
        self.assertIs(cert.strength, Strength.STRONG)
        self.assertTrue(cert.derivation[-1].endswith('(wide)'))
        self.assertEqual(cert.substitution['x'], app(f, c))
        report = check_injective(cert, sample_size=9)
        self.assertTrue(report.passed, report.as_text())

    def test_empty_side(self):
        first = embed(Context.of(('x', BASE)), WORDS)
        cert = sum_reductions(embed(Context(()), WORDS), first)
        self.assertEqual(cert.source, first.source)
        self.assertIn('empty left', cert.derivation[-1])

    def test_targets_must_agree(self):
        with self.assertRaises(TargetMismatch):
            sum_reductions(embed(Context.of(('x', BASE)), NUMERALS), embed(Context.of(('x', BASE)), WORDS))

    def test_families_cannot_be_summed(self):
        with self.assertRaises(CertificateError):
            sum_reductions(omega_family(), omega_family())

    def test_sum_all(self):
        parts = [embed(Context.of((name, BASE)), WORDS) for name in ('x', 'y', 'z')]
        cert = sum_all(parts)
        self.assertEqual(cert.source.names, ('x', 'y', 'z'))
        with self.assertRaises(CertificateError):
            sum_all([])


class CanonicalReductionTests(SimpleTestCase):
    def test_word_reduction(self):
        cert = word_reduction()
        h = Free('h', ONE)
        self.assertEqual(cert.substitution['F'], lam(h, app(f, app(h, app(g, app(h, c))))))
        report = check_injective(cert, sample_size=11)
        self.assertTrue(report.passed, report.as_text())

    def test_numeral_chain(self):
        cert = numeral_chain(canonical_context(HierarchyClass.finite(3)))
        for k in (1, 2, 3):
            self.assertEqual(cert.images(projection(3, k)), (church(k - 1),))

    def test_bitw(self):
        source = Context.of(('f', ONE), ('x1', BASE), ('x2', BASE))
        cert = bitw(source)
        self.assertEqual(cert.substitution['f'], lam(x, app(f, app(f, x))))
        self.assertEqual(cert.substitution['x2'], app(f, c))
        report = check_injective(cert, sample_size=10, sample_limit=50)
        self.assertTrue(report.passed, report.as_text())
        with self.assertRaises(CertificateError):
            bitw(Context.of(('F', TWO), ('c', BASE)))

    def test_numeral_lift_is_strong(self):
        report = check_strong(numeral_lift(), Context.of(('h', ONE)), sample_limit=60, sample_size=11)
        self.assertTrue(report.passed, report.as_text())

    def test_sametrick(self):
        cert = sametrick(Context.of(('F', TWO), ('c', BASE)))
        self.assertEqual(cert.target_type, parse_type('[2]'))
        report = check_injective(cert, sample_size=12)
        self.assertTrue(report.passed, report.as_text())
        with self.assertRaises(CertificateError):
            sametrick(NUMERALS)

    def test_pairing(self):
        cert = pairing(2)
        b = Free('b', PAIR_TYPE)
        self.assertEqual(cert.substitution['p'], lam(x, y, app(b, x, app(b, y, y))))
        with self.assertRaises(CertificateError):
            pairing(0)

    def test_separators(self):
        cert = separators(4)
        self.assertEqual(cert.kind, 'family')
        self.assertEqual(len(cert.substitutions), 4)
        report = check_injective(cert)
        self.assertTrue(report.passed, report.as_text())
        self.assertEqual(report.samples_tested, 4)
        with self.assertRaises(CertificateError):
            separators(1)

    def test_separator_members_are_head_only(self):
        for i in range(3):
            member = separator(3, i)
            self.assertIs(member.strength, Strength.HEAD)
            self.assertTrue(validate_certificate(member).passed)
        report = check_injective(separator(3, 0))
        self.assertIs(report.outcome, Outcome.COLLISION)
        self.assertEqual(separators(3).substitutions[1], separator(3, 1).substitution)

    def test_omega_splits(self):
        rho, sigma = omega_splits()
        self.assertEqual(bohm_transform(rho.substitution, pair(3, 1)), church(3))
        self.assertEqual(bohm_transform(sigma.substitution, pair(3, 1)), church(6))
        self.assertEqual(bohm_transform(sigma.substitution, pair(3, 3)), church(4))
