import json
import tempfile
from io import StringIO
from pathlib import Path

from django.test import SimpleTestCase, TestCase

from core.certificates import to_document
from core.cli import run
from core.enumeration import church
from core.models import StoredCertificate
from core.syntax import parse_term
from core.lambda_core import BASE
from core.synth import congruence, numeral_lift, omega_splits


class CommandMixin:
    def call(self, *argv):
        stdout, stderr = StringIO(), StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def write_document(self, document):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        path = Path(directory.name) / 'cert.json'
        path.write_text(json.dumps(document))
        return str(path)


class RunTests(CommandMixin, SimpleTestCase):
    def test_unknown_command(self):
        code, _, err = self.call('migrate')
        self.assertEqual(code, 2)
        self.assertIn('usage', err)

    def test_no_command(self):
        self.assertEqual(self.call()[0], 2)


class ClassifyCommandTests(CommandMixin, SimpleTestCase):
    def test_class(self):
        self.assertEqual(self.call('classify', '[3,0]'), (0, 'omega+3\n', ''))
        self.assertEqual(self.call('classify', '0->0->0')[1], '2\n')

    def test_verbose(self):
        code, out, _ = self.call('classify', '[1,0]', '-v', '2')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ['omega', 'type [[0],0]: rank 2, inhabited, small'])

    def test_parse_error(self):
        code, out, err = self.call('classify', '[1,')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertTrue(err)


class InhabitedCommandTests(CommandMixin, SimpleTestCase):
    def test_inhabited(self):
        self.assertEqual(self.call('inhabited', '[1,0]')[:2], (0, 'yes\n'))

    def test_uninhabited(self):
        self.assertEqual(self.call('inhabited', '[2]')[:2], (1, 'no\n'))

    def test_show(self):
        code, out, _ = self.call('inhabited', '[1,0]', '--show')
        self.assertEqual(code, 0)
        verdict, term = out.splitlines()
        self.assertEqual(verdict, 'yes')
        self.assertEqual(parse_term(term), church(0))


class DecideCommandTests(CommandMixin, SimpleTestCase):
    def test_yes(self):
        self.assertEqual(self.call('decide', '--rel', 'h', '[1,0]', '[2]')[:2], (0, 'yes\n'))
        self.assertEqual(self.call('decide', '--rel', 'be', '[2]', '[1,0]')[:2], (0, 'yes\n'))
        self.assertEqual(self.call('decide', '--rel', 'hp', '[0,0,0]', '[0,0]')[:2], (0, 'yes\n'))

    def test_no(self):
        self.assertEqual(self.call('decide', '--rel', 'be', '[1,1,0]', '[1,0]')[:2], (1, 'no\n'))
        self.assertEqual(self.call('decide', '--rel', 'h', '[2]', '[1,0]')[:2], (1, 'no\n'))

    def test_bad_relation(self):
        self.assertEqual(self.call('decide', '--rel', 'x', '[2]', '[1,0]')[0], 2)

    def test_missing_argument(self):
        self.assertEqual(self.call('decide', '--rel', 'h', '[2]')[0], 2)


class EnumerateCommandTests(CommandMixin, SimpleTestCase):
    def test_count(self):
        self.assertEqual(self.call('enumerate', '[1,1,0]', '--max-size', '12', '--count-only')[1], '31\n')

    def test_count_with_limit(self):
        out = self.call('enumerate', '[1,1,0]', '--max-size', '12', '--count-only', '--limit', '5')[1]
        self.assertEqual(out, '5\n')

    def test_listing(self):
        code, out, _ = self.call('enumerate', '[0,0,0]', '--max-size', '10')
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 3)

    def test_context(self):
        out = self.call('enumerate', '0', '--context', 'f:1, c:0', '--max-size', '5')[1]
        self.assertEqual(out.splitlines(), ['c', 'f c', 'f (f c)'])

    def test_size_must_be_positive(self):
        self.assertEqual(self.call('enumerate', '[1,0]', '--max-size', '0')[0], 2)


class NormalizeCommandTests(CommandMixin, SimpleTestCase):
    def test_normal_form(self):
        code, out, _ = self.call('normalize', '\\f:1. \\x:0. f (f x)', '--type', '[1,0]')
        self.assertEqual(code, 0)
        self.assertEqual(out, '\\x0:[0]. \\x1:0. x0 (x0 x1)\n')

    def test_eta_expansion(self):
        out = self.call('normalize', 'f', '--type', '1', '--context', 'f:1')[1]
        self.assertEqual(out, '\\x0:0. f x0\n')

    def test_wrong_type(self):
        self.assertEqual(self.call('normalize', '\\x:0. x', '--type', '[1,0]')[0], 2)

    def test_unbound_name(self):
        self.assertEqual(self.call('normalize', 'g', '--type', '0')[0], 2)


class WitnessCommandTests(CommandMixin, SimpleTestCase):
    def test_substitution_document(self):
        code, out, _ = self.call('witness', '--rel', 'h', '[1,0]', '[2]')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['relation'], 'h')
        self.assertEqual(document['witness']['kind'], 'substitution')
        self.assertEqual(document['source'], '[[0],0]')

    def test_family_with_verification(self):
        code, out, err = self.call('witness', '--rel', 'hp', '[2]', '[1,0]', '--verify', '200')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['certificate']['witness']['kind'], 'family')
        self.assertEqual(document['report']['outcome'], 'pass')
        self.assertTrue(document['report']['passed'])
        self.assertIn('pass', err)

    def test_not_reducible(self):
        code, out, _ = self.call('witness', '--rel', 'h', '[1,1,0]', '[2]')
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith('no: '))
        self.assertEqual(len(out.splitlines()), 1)

    def test_out_file_verifies(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        path = str(Path(directory.name) / 'lift.json')
        code, out, _ = self.call('witness', '--rel', 'h', '[1,0]', '[2,0]', '--out', path)
        self.assertEqual(code, 0)
        self.assertIn(path, out)
        self.assertEqual(self.call('verify', '--cert', path, '--samples', '30')[0], 0)


class VerifyCommandTests(CommandMixin, SimpleTestCase):
    def test_pass(self):
        path = self.write_document(to_document(numeral_lift()))
        code, out, _ = self.call('verify', '--cert', path, '--samples', '40')
        self.assertEqual(code, 0)
        self.assertIn('pass', out)

    def test_nested_derivation(self):
        cert = congruence(numeral_lift(), rest=(BASE,))
        path = self.write_document(to_document(cert))
        code, out, _ = self.call('verify', '--cert', path, '--samples', '20')
        self.assertEqual(code, 0, out)

    def test_wrapped_document(self):
        path = self.write_document({'certificate': to_document(numeral_lift()), 'report': None})
        self.assertEqual(self.call('verify', '--cert', path, '--samples', '20')[0], 0)

    def test_collision(self):
        rho, _ = omega_splits()
        path = self.write_document(to_document(rho))
        code, out, _ = self.call('verify', '--cert', path)
        self.assertEqual(code, 1)
        self.assertIn('collision', out)

    def test_malformed(self):
        path = self.write_document({'relation': 'h'})
        self.assertEqual(self.call('verify', '--cert', path)[0], 2)

    def test_ill_typed_witness(self):
        document = to_document(numeral_lift())
        document['witness']['substitutions'] = [{'f': '\\x:0. x', 'c': 'F'}]
        self.assertEqual(self.call('verify', '--cert', self.write_document(document))[0], 2)

    def test_missing_file(self):
        self.assertEqual(self.call('verify', '--cert', '/nonexistent/cert.json')[0], 2)


class SaveWitnessTests(CommandMixin, TestCase):
    def test_save(self):
        code, _, err = self.call('witness', '--rel', 'h', '[1,0]', '[2]', '--save', '--verify', '20')
        self.assertEqual(code, 0)
        stored = StoredCertificate.objects.get()
        self.assertIn(f'stored certificate {stored.pk}', err)
        self.assertTrue(stored.verified)
        self.assertEqual(stored.kind, 'substitution')
        self.assertEqual(stored.certificate().source_type, numeral_lift().source_type)
