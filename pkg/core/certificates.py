"""
Reduction certificates and their composition.

A certificate records a reduction from a source context to a target
context: one substitution, a closed reducing term, or a jointly
injective family of substitutions. The derivation lists the lemma steps
that built it. Unindented steps chain from source to target; the steps a
summed, lifted or extended reduction was built from sit indented above
the step that uses them.
"""

import enum
import logging
from dataclasses import dataclass, replace

from .decide import Relation
from .exceptions import CertificateError, ContextMismatch, HierarchyError
from .lambda_core import (
    Context, Free, Substitution, app, bohm_term, bohm_transform, compose_substitutions,
    fresh_names, lam, long_normal_form, rename_substitution,
)
from .syntax import parse_term, parse_type, print_term

logger = logging.getLogger(__name__)


class Strength(enum.Enum):
    ATOMIC = 'atomic'
    STRONG = 'strong'
    HEAD = 'head'
    BETA_ETA = 'beta-eta'
    FAMILY = 'family'

    def __str__(self):
        return self.value


_GRADE = {Strength.ATOMIC: 3, Strength.STRONG: 2, Strength.HEAD: 1}


def compose_strength(first, second):
    """Atomic steps chain to strong ones; otherwise the weaker step wins"""
    if first in _GRADE and second in _GRADE:
        if first is Strength.ATOMIC and second is Strength.ATOMIC:
            return Strength.STRONG
        return min(first, second, key=_GRADE.get)
    if Strength.FAMILY in (first, second):
        return Strength.FAMILY
    return Strength.BETA_ETA


def is_strong(strength):
    return strength in (Strength.ATOMIC, Strength.STRONG)


def tag(lemma, source, target, note=None):
    text = f"{lemma} {source} -> {target}"
    return f"{text} ({note})" if note else text


def tag_lemma(text):
    return text.strip().split(' ', 1)[0]


def nested(derivation):
    """Premise steps, indented one level under the step they support"""
    return tuple('  ' + text for text in derivation)


def is_premise(text):
    return text.startswith(' ')


@dataclass(frozen=True)
class ReductionCertificate:
    relation: Relation
    strength: Strength
    source: Context
    target: Context
    substitutions: tuple = ()
    term: object = None
    derivation: tuple = ()

    @property
    def source_type(self):
        return self.source.bracket()

    @property
    def target_type(self):
        return self.target.bracket()

    @property
    def kind(self):
        if self.term is not None:
            return 'term'
        return 'family' if self.strength is Strength.FAMILY else 'substitution'

    @property
    def substitution(self):
        if self.kind != 'substitution':
            raise CertificateError(f"a {self.kind} certificate has no single substitution")
        return self.substitutions[0]

    def as_term(self):
        """The closed reducing term source -> target"""
        if self.term is not None:
            return self.term
        return long_normal_form(bohm_term(self.substitution))

    def images(self, m):
        """Images of the closed inhabitant m, one per family member"""
        if self.term is not None:
            return (long_normal_form(app(self.term, m)),)
        return tuple(bohm_transform(rho, m) for rho in self.substitutions)

    def __str__(self):
        return f"{self.source_type} <={self.relation} {self.target_type} [{self.strength}]"


def single(source, target, assignment, strength, lemma, note=None):
    """Certificate for one substitution, every assigned term in lnf"""
    if isinstance(assignment, dict):
        assignment = tuple(assignment[name] for name in source.names)
    rho = Substitution(source, target, tuple(long_normal_form(t) for t in assignment))
    return ReductionCertificate(
        relation=Relation.HEAD,
        strength=strength,
        source=source,
        target=target,
        substitutions=(rho,),
        derivation=(tag(lemma, source.bracket(), target.bracket(), note),),
    )


def identity(ctx):
    return single(ctx, ctx, ctx.variables(), Strength.ATOMIC, 'identity')


def family(source, target, substitutions, lemma, note=None):
    return ReductionCertificate(
        relation=Relation.MULTI_HEAD,
        strength=Strength.FAMILY,
        source=source,
        target=target,
        substitutions=tuple(substitutions),
        derivation=(tag(lemma, source.bracket(), target.bracket(), note),),
    )


def reducing_term(source, target, term, lemma, note=None):
    return ReductionCertificate(
        relation=Relation.BETA_ETA,
        strength=Strength.BETA_ETA,
        source=source,
        target=target,
        term=long_normal_form(term),
        derivation=(tag(lemma, source.bracket(), target.bracket(), note),),
    )


def _combined_relation(first, second):
    relations = {first.relation, second.relation}
    if relations >= {Relation.BETA_ETA, Relation.MULTI_HEAD}:
        raise CertificateError("cannot compose a reducing term with a substitution family")
    if Relation.BETA_ETA in relations:
        return Relation.BETA_ETA
    if Relation.MULTI_HEAD in relations:
        return Relation.MULTI_HEAD
    return Relation.HEAD


def rename_source(cert, ctx):
    """Rename the source variables positionally to those of `ctx`"""
    if cert.source_type != ctx.bracket():
        raise ContextMismatch(f"cannot align {cert.source} with {ctx}")
    mapping = dict(zip(cert.source.names, ctx.names))
    subs = tuple(rename_substitution(rho, source_mapping=mapping) for rho in cert.substitutions)
    return replace(cert, source=ctx, substitutions=subs)


def rename_target(cert, ctx):
    """Rename the target variables positionally to those of `ctx`"""
    if cert.target_type != ctx.bracket():
        raise ContextMismatch(f"cannot align {cert.target} with {ctx}")
    mapping = dict(zip(cert.target.names, ctx.names))
    subs = tuple(rename_substitution(rho, target_mapping=mapping) for rho in cert.substitutions)
    return replace(cert, target=ctx, substitutions=subs)


def compose(first, second):
    """first : A <= B followed by second : B <= C"""
    if first.target_type != second.source_type:
        raise ContextMismatch(
            f"cannot compose {first.source_type} <= {first.target_type} "
            f"with {second.source_type} <= {second.target_type}"
        )
    relation = _combined_relation(first, second)
    derivation = first.derivation + second.derivation
    if first.term is not None or second.term is not None:
        outer = second.as_term()
        inner = first.as_term()
        m = Free(fresh_names('m', 1)[0], first.source_type)
        term = long_normal_form(lam(m, app(outer, app(inner, m))))
        return ReductionCertificate(
            relation=relation,
            strength=Strength.BETA_ETA,
            source=first.source,
            target=second.target,
            term=term,
            derivation=derivation,
        )
    second = rename_source(second, first.target)
    subs = tuple(
        compose_substitutions(rho, sigma)
        for rho in first.substitutions
        for sigma in second.substitutions
    )
    if len(subs) > 1 or Strength.FAMILY in (first.strength, second.strength):
        strength = Strength.FAMILY
    else:
        strength = compose_strength(first.strength, second.strength)
    return ReductionCertificate(
        relation=relation,
        strength=strength,
        source=first.source,
        target=second.target,
        substitutions=subs,
        derivation=derivation,
    )


def compose_all(*certs):
    result = certs[0]
    for cert in certs[1:]:
        result = compose(result, cert)
    return result


def relabel(cert, relation):
    """Present a head reduction as evidence for `relation`"""
    if relation is cert.relation:
        return cert
    if cert.relation is not Relation.HEAD:
        raise CertificateError(f"cannot present a {cert.relation} certificate as {relation}")
    if relation is Relation.BETA_ETA:
        return replace(
            cert, relation=relation, strength=Strength.BETA_ETA,
            term=cert.as_term(), substitutions=(),
        )
    return replace(cert, relation=relation, strength=Strength.FAMILY)


def reorder_source(cert, ctx):
    """Reorder the source of a substitution certificate to `ctx`, which holds the same variables"""
    if dict(cert.source.entries) != dict(ctx.entries):
        raise ContextMismatch(f"{ctx} is not a reordering of {cert.source}")
    derivation = cert.derivation
    if ctx.bracket() != cert.source_type:
        derivation = (tag('permute', ctx.bracket(), cert.source_type),) + derivation
    subs = tuple(
        Substitution(ctx, rho.target, tuple(rho[name] for name in ctx.names))
        for rho in cert.substitutions
    )
    return replace(cert, source=ctx, substitutions=subs, derivation=derivation)


# ---------------------------------------------------------------------------
# Documents

def _context_document(ctx):
    return [[name, str(ty)] for name, ty in ctx.entries]


def to_document(cert):
    """The JSON-ready document of a certificate"""
    return {
        'relation': str(cert.relation),
        'strength': str(cert.strength),
        'source': str(cert.source_type),
        'target': str(cert.target_type),
        'source_context': _context_document(cert.source),
        'target_context': _context_document(cert.target),
        'witness': {
            'kind': cert.kind,
            'substitutions': [
                {name: print_term(term) for name, term in rho.items()}
                for rho in cert.substitutions
            ],
            'term': print_term(cert.term) if cert.term is not None else None,
        },
        'derivation': list(cert.derivation),
    }


def _context_from(entries):
    return Context(tuple((name, parse_type(text)) for name, text in entries))


def from_document(document):
    """Rebuild a certificate; CertificateError on any malformed part"""
    try:
        source = _context_from(document['source_context'])
        target = _context_from(document['target_context'])
        if source.bracket() != parse_type(document['source']):
            raise CertificateError(f"source context {source} does not match {document['source']}")
        if target.bracket() != parse_type(document['target']):
            raise CertificateError(f"target context {target} does not match {document['target']}")
        witness = document['witness']
        substitutions = tuple(
            Substitution.from_mapping(
                source, target, {name: parse_term(text, target) for name, text in mapping.items()},
            )
            for mapping in witness.get('substitutions') or ()
        )
        term = witness.get('term')
        return ReductionCertificate(
            relation=Relation.parse(document['relation']),
            strength=Strength(document['strength']),
            source=source,
            target=target,
            substitutions=substitutions,
            term=parse_term(term) if term else None,
            derivation=tuple(document.get('derivation') or ()),
        )
    except CertificateError:
        raise
    except (HierarchyError, KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate document: {exc}") from exc
