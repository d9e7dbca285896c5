"""
Reduction combinators.

Each combinator builds a certificate for one reduction lemma: a
substitution from a source context to a target context together with
the derivation tag naming the step. Certificates chain with
`certificates.compose` and merge with `sum_reductions`.
"""

import logging
from dataclasses import dataclass, replace
from functools import reduce

from .certificates import (
    Strength, family, is_strong, nested, reducing_term, rename_source, rename_target, single, tag,
)
from .arithmetic import cantor_pair_term
from .classify import (
    Derivative, HierarchyClass, direct_step, find_fat_derivative, fresh_context, is_inhabited_over, is_large,
    rank, smallest_inhabitant,
)
from .enumeration import ONE, PAIR_TYPE, THREE, TWO
from .exceptions import (
    BadPermutation, CertificateError, NotAtomic, NotDerivative, NotLarge, NotSubcontext,
    SideConditionFails, TargetMismatch,
)
from .lambda_core import (
    BASE, Context, EMPTY, Free, SimpleType, app, bohm_term, double_bracket, fresh_names, lam,
    long_normal_form, rename_free, substitute_free,
)

logger = logging.getLogger(__name__)


_CANONICAL_CONTEXTS = {
    0: Context.of(('f', ONE), ('c', BASE)),
    1: Context.of(('F', TWO)),
    2: Context.of(('f', ONE), ('g', ONE), ('c', BASE)),
    3: Context.of(('Phi', THREE), ('c', BASE)),
    4: Context.of(('b', PAIR_TYPE), ('c', BASE)),
}


def canonical_context(cls):
    """Named context whose bracket is the representative of `cls`"""
    if cls.is_finite:
        return Context(tuple((f'x{i}', BASE) for i in range(1, cls.offset + 1)))
    return _CANONICAL_CONTEXTS[cls.offset]


def _iterate(f, times, base):
    for _ in range(times):
        base = app(f, base)
    return base


# ---------------------------------------------------------------------------
# Structural lemmas

def embed(source, target):
    """Inject the variables of `source` into `target` by type, keeping names where possible"""
    target_types = dict(target.entries)
    choice = {}
    for name, ty in source.entries:
        if target_types.get(name) == ty:
            choice[name] = name
    used = set(choice.values())
    for name, ty in source.entries:
        if name in choice:
            continue
        match = next((t for t, tty in target.entries if tty == ty and t not in used), None)
        if match is None:
            raise NotSubcontext(f"{source} does not embed into {target}")
        choice[name] = match
        used.add(match)
    assignment = {name: target.variable(choice[name]) for name in source.names}
    return single(source, target, assignment, Strength.ATOMIC, 'embed')


def _check_permutation(phi, size):
    if sorted(phi) != list(range(size)):
        raise BadPermutation(f"{list(phi)} is not a permutation of 0..{size - 1}")


def permute(ctx, phi):
    """ctx <= the reordered context whose i-th entry is ctx[phi[i]]"""
    _check_permutation(phi, len(ctx))
    target = Context(tuple(ctx.entries[i] for i in phi))
    return single(ctx, target, ctx.variables(), Strength.ATOMIC, 'permute')


def inner_permute(ty, phi, source_name='F', target_name='G'):
    """F : [C1..Cn] <= G : [C_phi(1)..C_phi(n)]"""
    _check_permutation(phi, ty.arity)
    source = Context.of((source_name, ty))
    target = Context.of((target_name, SimpleType(tuple(ty.components[i] for i in phi))))
    gamma = fresh_context(ty.components, {source_name, target_name}).variables()
    body = app(target.variable(target_name), *(gamma[i] for i in phi))
    return single(source, target, (lam(*gamma, body),), Strength.ATOMIC, 'inner-permute')


def congruence(cert, rest=(), source_name='F', target_name='G'):
    """From A <= B derive F : [A, rest] <= G : [B, rest]"""
    rest = tuple(rest)
    source = Context.of((source_name, SimpleType((cert.source_type,) + rest)))
    target = Context.of((target_name, SimpleType((cert.target_type,) + rest)))
    taken = {source_name, target_name}
    a = Free(fresh_names('a', 1, taken)[0], cert.source_type)
    gamma = fresh_context(rest, taken | {a.name}).variables()
    body = app(target.variable(target_name), app(cert.as_term(), a), *gamma)
    strength = Strength.ATOMIC if is_strong(cert.strength) else Strength.HEAD
    result = single(source, target, (lam(a, *gamma, body),), strength, 'congruence')
    return replace(result, derivation=nested(cert.derivation) + result.derivation)


def double_embed(source, target_name='F'):
    """Gamma <= F : [[Gamma]]"""
    target = Context.of((target_name, SimpleType((source.bracket(),))))
    F = target.variable(target_name)
    assignment = []
    for position, (name, ty) in enumerate(source.entries):
        taken = set(source.names) | {target_name}
        delta = fresh_context(ty.components, taken).variables()
        copy = fresh_context(source.types, taken | {d.name for d in delta}).variables()
        inner = lam(*copy, app(copy[position], *delta))
        assignment.append(lam(*delta, app(F, inner)))
    return single(source, target, assignment, Strength.ATOMIC, 'double-embed')


def split(ty, source_name='F'):
    """F : [A1..An] <= F1 : [A1], ..., Fn : [An], p : [0^n]"""
    k = ty.arity
    names = fresh_names('F', k)
    entries = [(n, SimpleType((c,))) for n, c in zip(names, ty.components)]
    entries.append(('p', SimpleType((BASE,) * k)))
    target = Context(tuple(entries))
    ms = [Free(n, c) for n, c in zip(fresh_names('m', k), ty.components)]
    body = app(
        target.variable('p'),
        *(app(target.variable(n), m) for n, m in zip(names, ms)),
    )
    source = Context.of((source_name, ty))
    return single(source, target, (lam(*ms, body),), Strength.ATOMIC, 'split')


def tuple_merge(ty, source_name='F'):
    """F : [[C1..Ck]] <= one G_A : [[A]] per distinct A among the Ci"""
    if ty.arity != 1:
        raise CertificateError(f"tuple merging needs a type [[C...]], got {ty}")
    inner = ty.components[0]
    distinct = list(dict.fromkeys(inner.components))
    target = Context(tuple(
        (name, double_bracket(a)) for name, a in zip(fresh_names('G', len(distinct)), distinct)
    ))
    heads = {a: Free(name, double_bracket(a)) for name, a in zip(target.names, distinct)}
    m = Free('m', inner)
    cs = [Free(n, c) for n, c in zip(fresh_names('c', inner.arity), inner.components)]
    body = app(m, *cs)
    for c in reversed(cs):
        body = app(heads[c.ty], lam(c, body))
    source = Context.of((source_name, ty))
    return single(source, target, (lam(m, body),), Strength.ATOMIC, 'tuple-merge')


def recursion_cap(ty, source_name='F'):
    """F : [[A]] <= Phi : 3, a : A, sending m to Phi (lambda f. m (lambda Delta. f (a Delta)))"""
    target = Context.of(('Phi', THREE), ('a', ty))
    m, f = Free('m', SimpleType((ty,))), Free('f', ONE)
    delta = fresh_context(ty.components, {'m', 'f', 'a', 'Phi'}).variables()
    argument = lam(*delta, app(f, app(target.variable('a'), *delta)))
    rho = lam(m, app(target.variable('Phi'), lam(f, app(m, argument))))
    source = Context.of((source_name, double_bracket(ty)))
    return single(source, target, (rho,), Strength.ATOMIC, 'recursion-cap')


def pair_cap(ty, source_name='F'):
    """F : [[A]] <= b : [0,0], c : A, d : A, sending m to b (m c) (m d)"""
    target = Context.of(('b', PAIR_TYPE), ('c', ty), ('d', ty))
    m = Free('m', SimpleType((ty,)))
    b, c, d = target.variables()
    rho = lam(m, app(b, app(m, c), app(m, d)))
    source = Context.of((source_name, double_bracket(ty)))
    return single(source, target, (rho,), Strength.ATOMIC, 'pair-cap')


def inhabitant_reduction(target, name='c'):
    """x : 0 <= target, sending x to the smallest base inhabitant over target"""
    term = smallest_inhabitant(BASE, target)
    return single(Context.of((name, BASE)), target, (term,), Strength.STRONG, 'inhabitant')


def collapse(source):
    """source <= the empty context, every variable sent to a closed inhabitant"""
    assignment = [smallest_inhabitant(ty) for ty in source.types]
    return single(source, EMPTY, assignment, Strength.HEAD, 'uninhabited')


# ---------------------------------------------------------------------------
# Derivatives

def _previous_contexts(derivative):
    contexts = [derivative.context]
    for step in reversed(derivative.steps):
        current = contexts[-1]
        if any(name not in current for name in step.added.names):
            raise NotDerivative(f"{step.added} is not part of {current}")
        previous = Context(tuple(e for e in current.entries if e[0] not in step.added.names))
        if step.variable not in previous:
            raise NotDerivative(f"{step.variable} is not bound before its step")
        ty = previous.type_of(step.variable)
        if not 0 <= step.component < ty.arity:
            raise NotDerivative(f"{step.variable} : {ty} has no component {step.component}")
        if ty.components[step.component].components != step.added.types:
            raise NotDerivative(f"step on {step.variable} does not bind {step.added}")
        contexts.append(previous)
    return contexts


def _lift_term(term, step, current, previous):
    delta = fresh_context(term.ty.components, current.names)
    head = previous.variable(step.variable)
    args = []
    for index, component in enumerate(head.ty.components):
        if index == step.component:
            body = long_normal_form(app(term, *delta.variables()))
            args.append(lam(*step.added.variables(), body))
            continue
        gamma = fresh_context(component.components, set(current.names) | set(delta.names))
        scope = previous + delta + gamma
        if not is_inhabited_over(scope, BASE):
            raise SideConditionFails(f"no base inhabitant over {scope}")
        args.append(lam(*gamma.variables(), smallest_inhabitant(BASE, scope)))
    return lam(*delta.variables(), app(head, *args))


def derivative_lift(cert, derivative):
    """Carry a reduction into a derivative of a context back to the context itself"""
    if cert.target != derivative.context:
        raise NotDerivative(f"{cert.target} is not the derivative context {derivative.context}")
    contexts = _previous_contexts(derivative)
    assignment = cert.substitution.assignment
    steps = tuple(reversed(derivative.steps))
    for step, current, previous in zip(steps, contexts, contexts[1:]):
        assignment = tuple(_lift_term(t, step, current, previous) for t in assignment)
    result = single(
        cert.source, contexts[-1], assignment, cert.strength,
        'derivative-lift', note=f"{len(steps)} steps",
    )
    return replace(result, derivation=nested(cert.derivation) + result.derivation)


def large_pairing(ctx, name='b'):
    """b : [0,0] <= ctx for a large [ctx]"""
    found = find_fat_derivative(ctx)
    if found is None:
        raise NotLarge(f"[{ctx}] is small")
    derivative, fat = found
    scope = derivative.context
    p = scope.variable(fat)
    x, y = (Free(n, BASE) for n in fresh_names('x', 2, scope.names))
    args = []
    for index, component in enumerate(p.ty.components):
        gamma = fresh_context(component.components, set(scope.names) | {x.name, y.name})
        args.append(lam(*gamma.variables(), x if index == 0 else y))
    rho = lam(x, y, app(p, *args))
    cert = single(Context.of((name, PAIR_TYPE)), scope, (rho,), Strength.ATOMIC,
                  'large-pairing', note=f"via {fat}")
    return derivative_lift(cert, derivative)


# ---------------------------------------------------------------------------
# Atomic pairs and sums

@dataclass(frozen=True)
class AtomicPair:
    """Two terms of type 1 over `context` that keep summed reductions apart"""
    context: Context
    first: object
    second: object
    kind: str

    def renamed(self, ctx):
        mapping = dict(zip(self.context.names, ctx.names))
        return AtomicPair(ctx, rename_free(self.first, mapping), rename_free(self.second, mapping), self.kind)


def _wide_pair(ctx, first, second):
    z = Free(fresh_names('z', 1, ctx.names)[0], BASE)
    terms = []
    for name in (first, second):
        head = ctx.variable(name)
        gamma = fresh_context(head.ty.components[0].components, set(ctx.names) | {z.name})
        terms.append(long_normal_form(lam(z, app(head, lam(*gamma.variables(), z)))))
    return AtomicPair(ctx, terms[0], terms[1], 'wide')


def _fat_pair(ctx):
    """X1 = lambda z. rho_b k z and X2 = lambda z. rho_b (s k) z with s = lambda x. rho_b x x

    Both members use their argument once, so nested sums grow linearly.
    Without a base term k the pair falls back to X1 = s, X2 = lambda z. rho_b z (s z).
    """
    rho = large_pairing(ctx).substitution.assignment[0]
    x = Free(fresh_names('z', 1, ctx.names)[0], BASE)
    if is_inhabited_over(ctx, BASE):
        k = smallest_inhabitant(BASE, ctx)
        first = lam(x, app(rho, k, x))
        second = lam(x, app(rho, app(rho, k, k), x))
    else:
        first = lam(x, app(rho, x, x))
        second = lam(x, app(rho, x, app(rho, x, x)))
    return AtomicPair(ctx, long_normal_form(first), long_normal_form(second), 'fat')


def _tall_pair(ctx):
    outer = next(name for name, ty in ctx.entries if rank(ty) >= 3)
    step = direct_step(ctx, outer, 0)
    scope = ctx + step.added
    inner = next(name for name, ty in step.added.entries if rank(ty) >= 1)
    wide = _wide_pair(scope, outer, inner)
    pair_ctx = Context.of(('f1', ONE), ('f2', ONE))
    cert = single(pair_ctx, scope, (wide.first, wide.second), Strength.ATOMIC, 'atomic-pair')
    first, second = derivative_lift(cert, Derivative(scope, (step,))).substitution.assignment
    return AtomicPair(ctx, first, second, 'tall')


def atomic_pair(ctx):
    """An atomic pair over ctx, or NotAtomic when [ctx] has none"""
    unary = [name for name, ty in ctx.entries if ty.arity == 1]
    bracket = ctx.bracket()
    if len(unary) >= 2:
        pair = _wide_pair(ctx, unary[0], unary[1])
    elif is_large(bracket):
        pair = _fat_pair(ctx)
    elif rank(bracket) >= 4:
        pair = _tall_pair(ctx)
    else:
        raise NotAtomic(f"[{ctx}] has no atomic pair")
    logger.debug(f"{pair.kind} atomic pair over {ctx}")
    return pair


def _wrapping(theta, x):
    mapping = {}
    for name, ty in theta.entries:
        gamma = fresh_context(ty.components, theta.names).variables()
        mapping[name] = lam(*gamma, app(x, app(theta.variable(name), *gamma)))
    return mapping


def _summed_with_empty(cert, note):
    step = tag('sum', cert.source_type, cert.target_type, note)
    return replace(cert, derivation=nested(cert.derivation) + (step,))


def sum_reductions(first, second, pair=None):
    """From Gamma <= Theta and Delta <= Theta, both strong, derive Gamma,Delta <= Theta"""
    for cert in (first, second):
        if cert.kind != 'substitution' or not is_strong(cert.strength):
            raise CertificateError(f"only strong substitution reductions can be summed, got {cert}")
    if first.target_type != second.target_type:
        raise TargetMismatch(f"cannot sum reductions into {first.target_type} and {second.target_type}")
    second = rename_target(second, first.target)
    theta = first.target
    if not len(first.source):
        return _summed_with_empty(second, 'empty left')
    if not len(second.source):
        return _summed_with_empty(first, 'empty right')
    renamed, _ = second.source.rename_apart(first.source.names)
    second = rename_source(second, renamed)
    if pair is None:
        pair = atomic_pair(theta)
    elif pair.context != theta:
        if pair.context.bracket() != theta.bracket():
            raise TargetMismatch(f"atomic pair over {pair.context} does not fit {theta}")
        pair = pair.renamed(theta)
    assignment = []
    for cert, x in ((first, pair.first), (second, pair.second)):
        mapping = _wrapping(theta, x)
        assignment.extend(substitute_free(t, mapping) for t in cert.substitution.assignment)
    result = single(first.source + second.source, theta, assignment, Strength.STRONG,
                    'sum', note=pair.kind)
    premises = nested(first.derivation) + nested(second.derivation)
    return replace(result, derivation=premises + result.derivation)


def sum_all(certs, pair=None):
    """Left fold of `sum_reductions` over certificates sharing one target"""
    certs = list(certs)
    if not certs:
        raise CertificateError("nothing to sum")
    if pair is None and len(certs) > 1:
        pair = atomic_pair(certs[0].target)
    return reduce(lambda acc, cert: sum_reductions(acc, cert, pair), certs)


# ---------------------------------------------------------------------------
# Reductions between canonical types

def word_reduction(source_name='F'):
    """F : 2 <= f : 1, g : 1, c : 0, sending F to lambda h. f (h (g (h c)))"""
    target = canonical_context(HierarchyClass.omega_plus(2))
    f, g, c = target.variables()
    h = Free('h', ONE)
    rho = lam(h, app(f, app(h, app(g, app(h, c)))))
    return single(Context.of((source_name, TWO)), target, (rho,), Strength.STRONG, 'word-reduction')


def bitw(source):
    """[1, 0^k] <= [1, 0]: the unary variable goes to f^k, the i-th base variable to f^i c"""
    unary = [name for name, ty in source.entries if ty == ONE]
    bases = [name for name, ty in source.entries if ty == BASE]
    if len(unary) != 1 or not bases or len(unary) + len(bases) != len(source):
        raise CertificateError(f"expected a context of type [1, 0^k], got {source}")
    target = canonical_context(HierarchyClass.omega_plus(0))
    f, c = target.variables()
    x = Free('x', BASE)
    assignment = {unary[0]: lam(x, _iterate(f, len(bases), x))}
    for i, name in enumerate(bases):
        assignment[name] = _iterate(f, i, c)
    return single(source, target, assignment, Strength.ATOMIC, 'bitw')


def numeral_chain(source):
    """[0^k] <= [1, 0], sending the i-th variable to f^i c"""
    target = canonical_context(HierarchyClass.omega_plus(0))
    f, c = target.variables()
    assignment = [_iterate(f, i, c) for i in range(len(source))]
    return single(source, target, assignment, Strength.ATOMIC, 'numeral-chain')


def numeral_lift():
    """[1, 0] <= [2, 0], sending f to lambda x. F (lambda y. x)"""
    source = canonical_context(HierarchyClass.omega_plus(0))
    target = Context.of(('F', TWO), ('c', BASE))
    F, c = target.variables()
    x, y = Free('x', BASE), Free('y', BASE)
    assignment = (lam(x, app(F, lam(y, x))), c)
    return single(source, target, assignment, Strength.STRONG, 'numeral-lift')


def sametrick(source):
    """[2, 0^l] <= [2]: the base variables become pairs <i,1> placed after F's own pairs"""
    second = [name for name, ty in source.entries if ty == TWO]
    bases = [name for name, ty in source.entries if ty == BASE]
    if len(second) != 1 or len(second) + len(bases) != len(source):
        raise CertificateError(f"expected a context of type [2, 0^l], got {source}")
    target = canonical_context(HierarchyClass.omega_plus(1))
    F = target.variable('F')
    xs = [Free(n, BASE) for n in fresh_names('x', len(bases))]
    f, z = Free('f', ONE), Free('z', BASE)

    def nest(binders, body):
        for x in reversed(binders):
            body = app(F, lam(x, body))
        return body

    assignment = {second[0]: lam(f, app(F, lam(z, nest(xs, app(f, z)))))}
    for i, name in enumerate(bases, start=1):
        assignment[name] = nest(xs[:i], xs[0])
    return single(source, target, assignment, Strength.STRONG, 'sametrick')


def pairing(k, source_name='p', target_name='b'):
    """p : [0^k] <= b : [0,0], sending p to lambda x1..xk. b x1 (b x2 (... (b xk xk)))"""
    if k < 1:
        raise CertificateError("pairing needs at least one argument")
    xs = [Free(n, BASE) for n in fresh_names('x', k)]
    b = Free(target_name, PAIR_TYPE)
    body = app(b, xs[-1], xs[-1])
    for x in reversed(xs[:-1]):
        body = app(b, x, body)
    source = Context.of((source_name, SimpleType((BASE,) * k)))
    return single(source, Context.of((target_name, PAIR_TYPE)), (lam(*xs, body),),
                  Strength.STRONG, 'pairing')


def separator(k, i):
    """[0^k] <= [0,0] sending x_i to x1 and every other variable to x2

    Not strong: the images of two distinct closed terms may agree.
    """
    source = canonical_context(HierarchyClass.finite(k))
    target = canonical_context(HierarchyClass.finite(2))
    x1, x2 = target.variables()
    return single(source, target, [x1 if l == i else x2 for l in range(k)],
                  Strength.HEAD, 'separator', note=f"member {i}")


def separators(k):
    """Family [0^k] <= [0,0]: member i sends x_i to x1 and every other variable to x2"""
    if k < 2:
        raise CertificateError("separating needs at least two variables")
    members = [separator(k, i) for i in range(k)]
    first = members[0]
    return family(first.source, first.target, [m.substitution for m in members],
                  'separators', note=f"{k} members")


def omega_splits():
    """The two substitutions [2] <= [1,0] taking <i,j> to c_i and to c_(2i-j+1)"""
    source = canonical_context(HierarchyClass.omega_plus(1))
    target = canonical_context(HierarchyClass.omega_plus(0))
    f, c = target.variables()
    h = Free('h', ONE)
    rho = single(source, target, (lam(h, app(f, app(h, c))),), Strength.HEAD, 'omega-split', 'length')
    sigma = single(source, target, (lam(h, app(f, app(h, app(f, app(h, c))))),),
                   Strength.HEAD, 'omega-split', 'doubling')
    return rho, sigma


def omega_family():
    rho, sigma = omega_splits()
    return family(rho.source, rho.target, (rho.substitution, sigma.substitution), 'omega-family')


def cantor_bridge():
    """Reducing term [2] -> [1,0]: lambda m. M_p (S_rho m) (S_sigma m)"""
    rho, sigma = omega_splits()
    m = Free('m', rho.source_type)
    body = app(
        cantor_pair_term(),
        app(bohm_term(rho.substitution), m),
        app(bohm_term(sigma.substitution), m),
    )
    return reducing_term(rho.source, rho.target, lam(m, body), 'cantor')
