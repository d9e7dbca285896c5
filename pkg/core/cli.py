"""
In-process front end for the engine's management commands.

    run(['decide', '--rel', 'be', '[1,1,0]', '[1,0]'])  ->  1

Exit codes: 0 yes or pass, 1 no or fail, 2 usage, parse or type error.
"""

import os
import sys

from django.core.management import call_command
from django.core.management.base import CommandError

COMMANDS = ('classify', 'inhabited', 'decide', 'witness', 'enumerate', 'verify', 'normalize')


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in COMMANDS:
        stderr.write(f"usage: hierarchy {{{','.join(COMMANDS)}}} ...\n")
        return 2
    try:
        call_command(argv[0], *argv[1:], stdout=stdout, stderr=stderr)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except CommandError as exc:
        stderr.write(f"{exc}\n")
        return 2
    return 0


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'hierarchy_project.settings')
    import django
    django.setup()
    sys.exit(run(sys.argv[1:]))
