from core.enumeration import count_inhabitants, iter_inhabitants
from core.lambda_core import EMPTY
from core.management.base import HierarchyCommand, usage_error
from core.syntax import parse_context, parse_type, print_term


class Command(HierarchyCommand):
    help = 'List the long normal inhabitants of a type up to a size bound'

    def add_arguments(self, parser):
        parser.add_argument('type')
        parser.add_argument('--max-size', type=int, required=True, dest='max_size')
        parser.add_argument('--count-only', action='store_true', dest='count_only')
        parser.add_argument('--limit', type=int, default=None, help='stop after this many terms')
        parser.add_argument('--context', default=None, help='free variables, e.g. "f:1, c:0"')

    def handle(self, *args, **options):
        ty = parse_type(options['type'])
        ctx = parse_context(options['context']) if options['context'] else EMPTY
        if options['max_size'] < 1:
            raise usage_error('--max-size must be at least 1')
        if options['count_only'] and options['limit'] is None:
            self.stdout.write(str(count_inhabitants(ctx, ty, options['max_size'])))
            return
        terms = iter_inhabitants(ctx, ty, options['max_size'], options['limit'])
        if options['count_only']:
            self.stdout.write(str(sum(1 for _ in terms)))
            return
        for term in terms:
            self.stdout.write(print_term(term))
