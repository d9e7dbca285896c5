from core.classify import is_inhabited, smallest_inhabitant
from core.management.base import HierarchyCommand
from core.syntax import parse_type, print_term


class Command(HierarchyCommand):
    help = 'Answer whether a simple type has a closed inhabitant'

    def add_arguments(self, parser):
        parser.add_argument('type')
        parser.add_argument(
            '--show', action='store_true',
            help='also print the smallest inhabitant',
        )

    def handle(self, *args, **options):
        ty = parse_type(options['type'])
        inhabited = is_inhabited(ty)
        self.verdict(inhabited)
        if options['show']:
            self.stdout.write(print_term(smallest_inhabitant(ty)))
