from core.exceptions import TermTypeError
from core.lambda_core import EMPTY, long_normal_form, typecheck
from core.management.base import HierarchyCommand
from core.syntax import parse_context, parse_term, parse_type, print_term


class Command(HierarchyCommand):
    help = 'Print the long normal form of a term of the given type'

    def add_arguments(self, parser):
        parser.add_argument('term', help='e.g. "\\f:1. \\x:0. f (f x)"')
        parser.add_argument('--type', required=True, dest='type')
        parser.add_argument('--context', default=None, help='free variables, e.g. "f:1, c:0"')

    def handle(self, *args, **options):
        expected = parse_type(options['type'])
        ctx = parse_context(options['context']) if options['context'] else EMPTY
        term = parse_term(options['term'], ctx)
        actual = typecheck(term, ctx)
        if actual != expected:
            raise TermTypeError(f"term has type {actual}, expected {expected}", subterm=term)
        self.stdout.write(print_term(long_normal_form(term)))
