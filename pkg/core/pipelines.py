"""
Witness pipelines.

Every type reduces to and from the representative of its class:

    canonical_into(A)             H_alpha <= A
    into_canonical(A)             A <= H_alpha
    canonical_chain(alpha, beta)  H_alpha <= H_beta for alpha <= beta

`witness` assembles them, adding the bridges that only exist for the
weaker relations.
"""

import logging
from dataclasses import replace

from .certificates import compose, compose_all, identity, nested, relabel, reorder_source, tag
from .classify import OMEGA, HierarchyClass, fresh_context, hierarchy_class, rank
from .decide import Relation, decide_classes
from .enumeration import ONE, PAIR_TYPE, THREE, TWO
from .exceptions import NotLE, NotReducible
from .lambda_core import BASE, Context, EMPTY, extend_substitution
from .synth import (
    atomic_pair, bitw, canonical_context, cantor_bridge, collapse, congruence, double_embed,
    embed, inhabitant_reduction, large_pairing, numeral_chain, numeral_lift, omega_family,
    pair_cap, pairing, recursion_cap, sametrick, separators, split, sum_all, tuple_merge,
    word_reduction,
)

logger = logging.getLogger(__name__)


def type_context(ty):
    """A context with fresh names whose bracket is `ty`"""
    return fresh_context(ty.components, ())


def _extended(cert, xi, source):
    rho = extend_substitution(cert.substitution, xi)
    step = tag('extend', rho.source.bracket(), rho.target.bracket())
    wide = replace(
        cert, source=rho.source, target=rho.target, substitutions=(rho,),
        derivation=nested(cert.derivation) + (step,),
    )
    return reorder_source(wide, source)


def _unary_into(target, component, source_name):
    """v : 1 <= target through the unary variable `component` : [Y]"""
    inner = target.type_of(component).components[0]
    cong = congruence(embed(EMPTY, type_context(inner)), (), source_name, component)
    return compose(cong, embed(cong.target, target))


# ---------------------------------------------------------------------------
# H_alpha <= A

def _omega_into(target):
    return embed(canonical_context(OMEGA), target)


def _omega1_into(target):
    name = next(n for n, t in target.entries if rank(t) >= 1)
    inner = target.type_of(name).components[0]
    cong = congruence(embed(Context.of(('x', BASE)), type_context(inner)), (), 'F', name)
    return compose(cong, embed(cong.target, target))


def _omega2_into(target):
    raised = [n for n, t in target.entries if rank(t) >= 1]
    parts = [
        _unary_into(target, raised[0], 'f'),
        _unary_into(target, raised[1], 'g'),
        inhabitant_reduction(target, 'c'),
    ]
    return sum_all(parts, atomic_pair(target))


def _omega3_into(target):
    outer = next(n for n, t in target.entries if rank(t) >= 3)
    outer_ctx = Context.of((outer, target.type_of(outer)))
    middle = type_context(target.type_of(outer).components[0])
    inner = next(n for n, t in middle.entries if rank(t) >= 1)
    lifted = congruence(_unary_into(middle, inner, 'f'), (), 'Phi', outer)
    parts = [compose(lifted, embed(outer_ctx, target)), inhabitant_reduction(target, 'c')]
    return sum_all(parts, atomic_pair(target))


def _omega4_into(target):
    parts = [large_pairing(target, 'b'), inhabitant_reduction(target, 'c')]
    return sum_all(parts, atomic_pair(target))


_INTO = {0: _omega_into, 1: _omega1_into, 2: _omega2_into, 3: _omega3_into, 4: _omega4_into}


def canonical_into(ty):
    """H_alpha <= ty for alpha the class of ty"""
    cls = hierarchy_class(ty)
    target = type_context(ty)
    if cls.is_finite:
        return embed(canonical_context(cls), target)
    cert = _INTO[cls.offset](target)
    logger.debug(f"H_{cls} <= {ty} in {len(cert.derivation)} steps")
    return cert


# ---------------------------------------------------------------------------
# A <= H_alpha

def _components_into(source, canon, component, pair):
    parts = [component(Context.of(entry), canon, pair) for entry in source.entries]
    return reorder_source(sum_all(parts, pair), source)


def _omega1_to_canonical(source):
    name = next(n for n, t in source.entries if rank(t) >= 1)
    merge = tuple_merge(source.type_of(name), name)
    merged = _extended(merge, source.without(name), source)
    return compose(merged, sametrick(merged.target))


def _word_component(one, canon, pair):
    name, ty = one.entries[0]
    if ty in (BASE, ONE):
        return embed(one, canon)
    return compose(tuple_merge(ty, name), word_reduction())


def _small_component(one, canon, pair):
    name, ty = one.entries[0]
    if ty in (BASE, THREE):
        return embed(one, canon)
    if ty == ONE:
        return compose(double_embed(one, 'Phi'), embed(Context.of(('Phi', THREE)), canon))
    merge = tuple_merge(ty, name)
    parts = []
    for merged_name, merged_ty in merge.target.entries:
        component = merged_ty.components[0].components[0]
        pieces = [
            embed(Context.of(('Phi', THREE)), canon),
            _small_component(Context.of(('a', component)), canon, pair),
        ]
        parts.append(compose(recursion_cap(component, merged_name), sum_all(pieces, pair)))
    return compose(merge, sum_all(parts, pair))


def _pairing_into(name, k, canon):
    return compose(pairing(k, name), embed(Context.of(('b', PAIR_TYPE)), canon))


def _top_component(one, canon, pair):
    name, ty = one.entries[0]
    if ty == BASE:
        return embed(one, canon)
    splitting = split(ty, name)
    parts = []
    for part_name, part_ty in splitting.target.entries:
        if part_name == 'p':
            parts.append(_pairing_into('p', ty.arity, canon))
            continue
        component = part_ty.components[0]
        if component == BASE:
            parts.append(_pairing_into(part_name, 1, canon))
            continue
        merge = tuple_merge(part_ty, part_name)
        capped = []
        for merged_name, merged_ty in merge.target.entries:
            inner = merged_ty.components[0].components[0]
            pieces = [
                embed(Context.of(('b', PAIR_TYPE)), canon),
                _top_component(Context.of(('c', inner)), canon, pair),
                _top_component(Context.of(('d', inner)), canon, pair),
            ]
            capped.append(compose(pair_cap(inner, merged_name), sum_all(pieces, pair)))
        parts.append(compose(merge, sum_all(capped, pair)))
    return compose(splitting, sum_all(parts, pair))


def _into_words(source):
    canon = canonical_context(HierarchyClass.omega_plus(2))
    return _components_into(source, canon, _word_component, atomic_pair(canon))


def _into_small(source):
    canon = canonical_context(HierarchyClass.omega_plus(3))
    return _components_into(source, canon, _small_component, atomic_pair(canon))


def _into_top(source):
    canon = canonical_context(HierarchyClass.omega_plus(4))
    return _components_into(source, canon, _top_component, atomic_pair(canon))


def into_canonical(ty):
    """ty <= H_alpha for alpha the class of ty"""
    cls = hierarchy_class(ty)
    source = type_context(ty)
    if cls.is_finite:
        if cls.offset == 0:
            return collapse(source)
        return embed(source, canonical_context(cls))
    if cls.offset == 0:
        return bitw(source)
    if cls.offset == 1:
        return _omega1_to_canonical(source)
    cert = {2: _into_words, 3: _into_small, 4: _into_top}[cls.offset](source)
    logger.debug(f"{ty} <= H_{cls} in {len(cert.derivation)} steps")
    return cert


# ---------------------------------------------------------------------------
# H_alpha <= H_beta

def _omega_step():
    lift = numeral_lift()
    return compose(lift, sametrick(lift.target))


_CHAIN_STEPS = {
    0: _omega_step,
    1: word_reduction,
    2: lambda: _into_small(canonical_context(HierarchyClass.omega_plus(2))),
    3: lambda: _into_top(canonical_context(HierarchyClass.omega_plus(3))),
}


def canonical_chain(alpha, beta):
    """H_alpha <= H_beta, built step by step up the hierarchy"""
    if alpha > beta:
        raise NotLE(f"{alpha} is above {beta}")
    source = canonical_context(alpha)
    if alpha == beta:
        return identity(source)
    if beta.is_finite:
        return embed(source, canonical_context(beta))
    steps = []
    current = alpha
    if alpha.is_finite:
        omega = canonical_context(OMEGA)
        steps.append(embed(source, omega) if alpha.offset == 0 else numeral_chain(source))
        current = OMEGA
    while current < beta:
        steps.append(_CHAIN_STEPS[current.offset]())
        current = HierarchyClass.omega_plus(current.offset + 1)
    return compose_all(*steps)


# ---------------------------------------------------------------------------
# Witnesses

def _bridge(relation, alpha, beta):
    if alpha <= beta:
        return relabel(canonical_chain(alpha, beta), relation)
    if relation is Relation.BETA_ETA:
        return cantor_bridge()
    if alpha == HierarchyClass.omega_plus(1):
        return omega_family()
    return compose(
        separators(alpha.offset),
        embed(canonical_context(HierarchyClass.finite(2)), canonical_context(beta)),
    )


def witness(relation, source, target):
    """Evidence for source <=relation target

    A substitution for h, a closed reducing term for be and a substitution
    family for hp.
    """
    alpha, beta = hierarchy_class(source), hierarchy_class(target)
    if not decide_classes(relation, alpha, beta):
        raise NotReducible(f"{source} ({alpha}) does not reduce to {target} ({beta}) under {relation}")
    cert = compose_all(into_canonical(source), _bridge(relation, alpha, beta), canonical_into(target))
    cert = relabel(cert, relation)
    logger.info(
        f"witness {source} <={relation} {target}: {alpha} -> {beta}, "
        f"{cert.kind} after {len(cert.derivation)} steps"
    )
    return cert
