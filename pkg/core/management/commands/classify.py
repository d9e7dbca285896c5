from core.classify import hierarchy_class, is_inhabited, is_large, rank
from core.management.base import HierarchyCommand
from core.syntax import parse_type


class Command(HierarchyCommand):
    help = 'Print the hierarchy class of a simple type'

    def add_arguments(self, parser):
        parser.add_argument('type', help='a type such as "[1,0]" or "0->0->0"')

    def handle(self, *args, **options):
        ty = parse_type(options['type'])
        self.stdout.write(str(hierarchy_class(ty)))
        if options['verbosity'] > 1:
            self.stdout.write(
                f"type {ty}: rank {rank(ty)}, "
                f"{'inhabited' if is_inhabited(ty) else 'uninhabited'}, "
                f"{'large' if is_large(ty) else 'small'}"
            )
