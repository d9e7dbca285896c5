"""
Church numeral arithmetic on N = [1,0].

Addition and multiplication are represented by closed terms. The
Cantor pairing P(n,m) = (n+m)(n+m+1)/2 + m halves, which no term over
N can do, since the representable functions are the extended
polynomials. The pairing term therefore computes 2*P(n,m) =
(n+m)(n+m+1) + 2m, which is just as injective.
"""

import logging
import math

from .enumeration import ONE, church
from .exceptions import BadIndex
from .lambda_core import BASE, App, Free, Lam, SimpleType, Var, app, lam, long_normal_form

logger = logging.getLogger(__name__)

NUMERAL = SimpleType((ONE, BASE))


def church_add():
    """M+ = lambda a b f c. a f (b f c)"""
    a, b = Free('a', NUMERAL), Free('b', NUMERAL)
    f, c = Free('f', ONE), Free('c', BASE)
    return long_normal_form(lam(a, b, f, c, app(a, f, app(b, f, c))))


def church_mul():
    """M* = lambda a b f c. a (b f) c"""
    a, b = Free('a', NUMERAL), Free('b', NUMERAL)
    f, c = Free('f', ONE), Free('c', BASE)
    return long_normal_form(lam(a, b, f, c, app(a, app(b, f), c)))


def cantor_pair_term():
    """M_p with M_p c_n c_m = c_(2 P(n,m))

    Twice the Cantor pairing: M_p c1 c2 = c16, while P(1,2) = 8.
    """
    n, m = Free('n', NUMERAL), Free('m', NUMERAL)
    add, mul = church_add(), church_mul()
    total = app(add, n, m)
    body = app(
        add,
        app(mul, total, app(add, total, church(1))),
        app(add, m, m),
    )
    return long_normal_form(lam(n, m, body))


def cantor_pair(n, m):
    if n < 0 or m < 0:
        raise BadIndex(f"cantor pairing needs naturals, got ({n}, {m})")
    return (n + m) * (n + m + 1) // 2 + m


def cantor_unpair(k):
    if k < 0:
        raise BadIndex(f"cantor unpairing needs a natural, got {k}")
    w = (math.isqrt(8 * k + 1) - 1) // 2
    m = k - w * (w + 1) // 2
    return w - m, m


def numeral_value(term):
    """n for the lnf numeral c_n; None for any other term"""
    term = long_normal_form(term)
    if term.ty != NUMERAL or not isinstance(term, Lam) or not isinstance(term.body, Lam):
        return None
    body = term.body.body
    count = 0
    while isinstance(body, App):
        if body.fun != Var(1, ONE):
            return None
        count += 1
        body = body.arg
    return count if body == Var(0, BASE) else None


def apply_numerals(term, *numerals):
    """Normalize term c_n1 ... c_nk and read the result back"""
    return numeral_value(app(term, *(church(n) for n in numerals)))
