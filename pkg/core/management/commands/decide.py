from core.decide import Relation, decide
from core.management.base import HierarchyCommand
from core.syntax import parse_type


class Command(HierarchyCommand):
    help = 'Decide whether SOURCE reduces to TARGET under a relation'

    def add_arguments(self, parser):
        self.add_relation_argument(parser)
        parser.add_argument('source')
        parser.add_argument('target')

    def handle(self, *args, **options):
        relation = Relation.parse(options['rel'])
        source = parse_type(options['source'])
        target = parse_type(options['target'])
        self.verdict(decide(relation, source, target))
