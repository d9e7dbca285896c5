"""
Deterministic enumeration of long-normal-form inhabitants.

An lnf inhabitant of [C1,...,Ck] over an environment is
lambda y1...yk. h M1 ... Mm, where h is any variable in scope and the Mi
are lnf inhabitants of h's components. Terms come out in nondecreasing
size; within one size the head runs from the outermost variable inwards,
then argument sizes and argument choices in order.

Also holds the shorthand constructors for the inhabitants of the
canonical types: Church numerals, pairs, projections, words, word lists
and binary trees.
"""

import itertools
import logging
from functools import lru_cache

from .exceptions import BadIndex
from .lambda_core import (
    BASE, App, Context, EMPTY, Free, Lam, SimpleType, Substitution, Var,
    app, lam, numeral_type,
)

logger = logging.getLogger(__name__)

ONE = numeral_type(1)
TWO = numeral_type(2)
THREE = numeral_type(3)
PAIR_TYPE = SimpleType((BASE, BASE))


def _min_size(ty):
    """Size of the smallest lnf term shape of type `ty` (ignoring inhabitation)"""
    return ty.arity + 1


def _splits(total, minimums):
    """All tuples of sizes >= minimums summing to total, in lexicographic order"""
    if not minimums:
        if total == 0:
            yield ()
        return
    first, rest = minimums[0], minimums[1:]
    rest_min = sum(rest)
    for size in range(first, total - rest_min + 1):
        for tail in _splits(total - size, rest):
            yield (size,) + tail


@lru_cache(maxsize=None)
def _exact(env, ty, size):
    """lnf terms of type `ty` in environment `env` (index 0 innermost) of exactly `size`"""
    arity = ty.arity
    if size <= arity:
        return ()
    inner = tuple(reversed(ty.components)) + env
    results = []
    for body in _body(inner, size - arity):
        term = body
        for c in reversed(ty.components):
            term = Lam(c, term)
        results.append(term)
    return tuple(results)


@lru_cache(maxsize=None)
def _body(env, size):
    """Base-type lnf terms headed by a variable of `env`, of exactly `size`"""
    results = []
    for index in reversed(range(len(env))):
        head_ty = env[index]
        arg_types = head_ty.components
        budget = size - 1 - len(arg_types)
        if budget < sum(_min_size(c) for c in arg_types):
            continue
        head = Var(index, head_ty)
        for sizes in _splits(budget, tuple(_min_size(c) for c in arg_types)):
            choices = [_exact(env, c, s) for c, s in zip(arg_types, sizes)]
            if any(not options for options in choices):
                continue
            for args in itertools.product(*choices):
                results.append(app(head, *args))
    return tuple(results)


def _instantiate_outer(term, frees, depth=0):
    """Replace loose index depth+j by frees[j]"""
    if isinstance(term, Var):
        if term.index >= depth:
            return frees[term.index - depth]
        return term
    if isinstance(term, App):
        return App(_instantiate_outer(term.fun, frees, depth), _instantiate_outer(term.arg, frees, depth))
    if isinstance(term, Lam):
        return Lam(term.binder, _instantiate_outer(term.body, frees, depth + 1))
    return term


def _context_env(ctx):
    return tuple(reversed(ctx.types))


def inhabitants_of_size(ctx, ty, size):
    """lnf inhabitants of `ty` over `ctx` of exactly the given size"""
    terms = _exact(_context_env(ctx), ty, size)
    if not len(ctx):
        return terms
    frees = tuple(reversed(ctx.variables()))
    return tuple(_instantiate_outer(t, frees) for t in terms)


def iter_inhabitants(ctx, ty, size_bound, limit=None):
    produced = 0
    for size in range(1, size_bound + 1):
        for term in inhabitants_of_size(ctx, ty, size):
            yield term
            produced += 1
            if limit is not None and produced >= limit:
                return


class EnumerationCursor:
    """Single-owner iterator over the inhabitants of a type, smallest first"""

    def __init__(self, target, size_bound, ctx=EMPTY, limit=None):
        self.target = target
        self.ctx = ctx
        self.size_bound = size_bound
        self.position = 0
        self._terms = iter_inhabitants(ctx, target, size_bound, limit)

    def __iter__(self):
        return self

    def __next__(self):
        term = next(self._terms)
        self.position += 1
        return term


def enumerate_inhabitants(ctx, ty, size_bound, limit=None):
    """All lnf inhabitants of `ty` over `ctx` with size at most `size_bound`"""
    if size_bound < 1:
        raise ValueError("size bound must be at least 1")
    return list(iter_inhabitants(ctx, ty, size_bound, limit))


def count_inhabitants(ctx, ty, size_bound):
    env = _context_env(ctx)
    return sum(len(_exact(env, ty, size)) for size in range(1, size_bound + 1))


def first_inhabitant(ctx, ty, max_size=None):
    """The first inhabitant in enumeration order, or None if none exists up to max_size"""
    size = 1
    while max_size is None or size <= max_size:
        terms = inhabitants_of_size(ctx, ty, size)
        if terms:
            return terms[0]
        size += 1
    return None


def enumerate_substitutions(source, target, size_bound):
    """Every substitution source -> target with each assigned term of size <= size_bound"""
    if size_bound < 1:
        raise ValueError("size bound must be at least 1")
    choices = [enumerate_inhabitants(target, ty, size_bound) for ty in source.types]
    combos = sorted(itertools.product(*choices), key=lambda terms: sum(t.size for t in terms))
    return [Substitution(source, target, terms) for terms in combos]


# ---------------------------------------------------------------------------
# Canonical shorthands

def church(n):
    """c_n = lambda f c. f^n c"""
    if n < 0:
        raise BadIndex(f"no Church numeral {n}")
    f, c = Free('f', ONE), Free('c', BASE)
    body = c
    for _ in range(n):
        body = App(f, body)
    return lam(f, c, body)


def pair(i, j):
    """<i,j> = lambda F. F(lambda x1. F(lambda x2. ... F(lambda xi. xj)))"""
    if not 1 <= j <= i:
        raise BadIndex(f"pair needs 1 <= j <= i, got ({i}, {j})")
    F = Free('F', TWO)
    xs = [Free(f'x{k}', BASE) for k in range(1, i + 1)]
    body = xs[j - 1]
    for x in reversed(xs):
        body = App(F, lam(x, body))
    return lam(F, body)


def projection(k, i):
    """U^k_i = lambda x1...xk. xi"""
    if not 1 <= i <= k:
        raise BadIndex(f"projection needs 1 <= i <= k, got ({k}, {i})")
    xs = [Free(f'x{n}', BASE) for n in range(1, k + 1)]
    return lam(*xs, xs[i - 1])


def word(letters):
    """A word over {f, g} as an inhabitant of [1,1,0]; the first letter is outermost"""
    f, g, c = Free('f', ONE), Free('g', ONE), Free('c', BASE)
    heads = {'f': f, 'g': g}
    body = c
    for letter in reversed(letters):
        if letter not in heads:
            raise BadIndex(f"word letters must be f or g, got {letter!r}")
        body = App(heads[letter], body)
    return lam(f, g, c, body)


def word_list(words):
    """Inhabitant of [3,0]: Phi(lambda f1. w1 (Phi(lambda f2. w2 (... c))))

    Word i is a sequence over 1..i naming the bound f's.
    """
    phi, c = Free('Phi', THREE), Free('c', BASE)
    fs = [Free(f'f{k}', ONE) for k in range(1, len(words) + 1)]
    body = c
    for position in reversed(range(len(words))):
        letters = [int(letter) for letter in words[position]]
        for letter in reversed(letters):
            if not 1 <= letter <= position + 1:
                raise BadIndex(f"word {position + 1} may only use letters 1..{position + 1}")
            body = App(fs[letter - 1], body)
        body = App(phi, lam(fs[position], body))
    return lam(phi, c, body)


def tree(shape):
    """Inhabitant of [[0,0],0] for a binary tree: None is a leaf, (left, right) a node"""
    b, c = Free('b', PAIR_TYPE), Free('c', BASE)

    def build(node):
        if node is None:
            return c
        if not (isinstance(node, tuple) and len(node) == 2):
            raise BadIndex(f"tree nodes are None or pairs, got {node!r}")
        return app(b, build(node[0]), build(node[1]))

    return lam(b, c, build(shape))


def parse_tree(prefix):
    """Read a tree written in prefix form, e.g. 'bbcbccbcc'"""
    position = 0

    def read():
        nonlocal position
        if position >= len(prefix):
            raise BadIndex(f"truncated tree {prefix!r}")
        symbol = prefix[position]
        position += 1
        if symbol == 'c':
            return None
        if symbol == 'b':
            left = read()
            return (left, read())
        raise BadIndex(f"tree symbols are b and c, got {symbol!r}")

    shape = read()
    if position != len(prefix):
        raise BadIndex(f"trailing symbols in tree {prefix!r}")
    return shape


def tree_nodes(shape):
    if shape is None:
        return 0
    return 1 + tree_nodes(shape[0]) + tree_nodes(shape[1])
