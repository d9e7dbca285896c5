import logging

from django.core.management.base import BaseCommand, CommandError

from core.decide import Relation
from core.exceptions import HierarchyError

logger = logging.getLogger(__name__)

USAGE_ERROR = 2


def usage_error(message):
    return CommandError(message, returncode=USAGE_ERROR)


class HierarchyCommand(BaseCommand):
    """Base for the engine's commands

    Engine errors become exit code 2. A negative answer is printed as a
    single line and ends the command with exit code 1.
    """

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CommandError as exc:
            if exc.returncode != USAGE_ERROR:
                raise usage_error(str(exc)) from exc
            raise
        except HierarchyError as exc:
            raise usage_error(str(exc)) from exc
        except (OSError, ValueError) as exc:
            logger.error(f"{self.__class__.__module__} failed: {exc}")
            raise usage_error(str(exc)) from exc

    def verdict(self, answer, yes='yes', no='no'):
        if answer:
            self.stdout.write(yes)
            return
        self.stdout.write(no)
        raise SystemExit(1)

    def add_relation_argument(self, parser):
        parser.add_argument(
            '--rel', required=True, choices=[str(r) for r in Relation],
            help='h (head), be (beta-eta) or hp (multi-head)',
        )
