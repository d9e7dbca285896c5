"""
Verification bounds.

Read from settings.HIERARCHY_VERIFICATION; the defaults apply when
Django settings are not configured (plain library use).
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULT_BOUNDS = {
    'DERIVATIVE_DEPTH': 2,
    'SUBSTITUTION_TERM_BOUND': 9,
    'SAMPLE_LIMIT': 200,
    'SAMPLE_SIZE': 14,
    'COLLISION_SEARCH_DEPTH': 6,
}


def verification_bounds():
    bounds = dict(DEFAULT_BOUNDS)
    try:
        configured = getattr(settings, 'HIERARCHY_VERIFICATION', {})
    except ImproperlyConfigured:
        configured = {}
    bounds.update({k: int(v) for k, v in configured.items() if k in DEFAULT_BOUNDS})
    return bounds


def bound(name, value=None):
    """`value` when given, else the configured bound `name`"""
    return verification_bounds()[name] if value is None else value
