"""
Certificate validation and bounded property suites.

Injectivity, joint injectivity and indiscernibility are checked over
enumerated inhabitants only; the underlying statements quantify over
infinite term sets. Semantic failures are reported, never raised.
"""

import enum
import logging
from dataclasses import dataclass, field

from .certificates import is_premise, tag_lemma
from .classify import HierarchyClass, canonical_type, derivatives, smallest_inhabitant
from .conf import bound
from .decide import Relation
from .enumeration import (
    ONE, count_inhabitants, enumerate_inhabitants, enumerate_substitutions, pair, parse_tree,
    tree, word, word_list,
)
from .exceptions import HierarchyError
from .lambda_core import (
    BASE, EMPTY, Free, app, arrow, bohm_term, bohm_transform,
    extend_substitution, format_term, lam, long_normal_form, spine, strip_lambdas,
    substitute_free, typecheck, Var,
)
from .arithmetic import numeral_value
from .synth import canonical_context
from .syntax import parse_type

logger = logging.getLogger(__name__)

KNOWN_LEMMAS = frozenset({
    'identity', 'embed', 'permute', 'inner-permute', 'congruence', 'double-embed', 'split',
    'tuple-merge', 'recursion-cap', 'pair-cap', 'inhabitant', 'uninhabited',
    'derivative-lift', 'large-pairing', 'atomic-pair', 'sum', 'word-reduction', 'bitw',
    'numeral-chain', 'numeral-lift', 'sametrick', 'pairing', 'separator', 'separators', 'extend',
    'omega-split', 'omega-family', 'cantor',
})


class Outcome(enum.Enum):
    PASS = 'pass'
    COLLISION = 'collision'
    TYPE_FAILURE = 'type_failure'
    COUNTEREXAMPLE = 'counterexample'

    def __str__(self):
        return self.value


@dataclass
class VerificationReport:
    subject: str
    outcome: Outcome = Outcome.PASS
    samples_tested: int = 0
    collision: tuple = None
    detail: str = ''
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return self.outcome is Outcome.PASS

    def merge(self, other):
        """Combine two reports; the first failure wins"""
        outcome, collision, detail = self.outcome, self.collision, self.detail
        if self.passed and not other.passed:
            outcome, collision, detail = other.outcome, other.collision, other.detail
        return VerificationReport(
            subject=self.subject,
            outcome=outcome,
            samples_tested=self.samples_tested + other.samples_tested,
            collision=collision,
            detail=detail,
            notes=self.notes + other.notes,
        )

    def as_text(self):
        lines = [f"{self.subject}: {self.outcome} ({self.samples_tested} samples)"]
        if self.collision:
            lines.extend(f"  {format_term(t)}" for t in self.collision)
        if self.detail:
            lines.append(f"  {self.detail}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return '\n'.join(lines)


def _failed(report, outcome, detail, collision=None):
    report.outcome = outcome
    report.detail = detail
    report.collision = collision
    logger.warning(f"{report.subject}: {outcome}: {detail}")
    return report


def _scan(cert, subject, sample_limit, sample_size):
    report = VerificationReport(subject=subject)
    sources = enumerate_inhabitants(
        EMPTY, cert.source_type,
        bound('SAMPLE_SIZE', sample_size), limit=bound('SAMPLE_LIMIT', sample_limit),
    )
    seen = {}
    for m in sources:
        try:
            image = cert.images(m)
        except HierarchyError as exc:
            return _failed(report, Outcome.TYPE_FAILURE, str(exc))
        report.samples_tested += 1
        if image in seen:
            return _failed(
                report, Outcome.COLLISION,
                f"{format_term(seen[image])} and {format_term(m)} have equal images",
                collision=(seen[image], m),
            )
        seen[image] = m
    return report


def check_injective(cert, sample_limit=None, sample_size=None):
    """Pairwise distinct images over enumerated source inhabitants"""
    if cert.kind == 'family':
        return check_jointly_injective(cert, sample_limit, sample_size)
    return _scan(cert, f"injectivity of {cert}", sample_limit, sample_size)


def check_jointly_injective(cert, sample_limit=None, sample_size=None):
    """Pairwise distinct image tuples over enumerated source inhabitants"""
    return _scan(cert, f"joint injectivity of {cert}", sample_limit, sample_size)


# ---------------------------------------------------------------------------
# Certificate validation

def is_bohm_shaped(term, source_arity, target_arity):
    """lambda m b1..bn. m N1 ... Nk with m the outermost binder"""
    binders, body = strip_lambdas(term)
    head, args = spine(body)
    return (
        len(binders) == target_arity + 1
        and isinstance(head, Var)
        and head.index == len(binders) - 1
        and len(args) == source_arity
    )


def _parse_tag(text):
    text = text.strip()
    lemma = tag_lemma(text)
    rest = text[len(lemma) + 1:]
    types = rest.split(' (', 1)[0]
    source, _, target = types.partition(' -> ')
    return lemma, parse_type(source), parse_type(target)


def _chain_break(steps, source, target):
    """Why the top-level steps fail to lead from source to target, or None"""
    if not steps:
        return None
    current = source
    for text, step_source, step_target in steps:
        if step_source != current:
            return f"step {text.strip()!r} starts at {step_source}, expected {current}"
        current = step_target
    if current != target:
        return f"derivation ends at {current}, expected {target}"
    return None


def validate_certificate(cert):
    """Typecheck every witness, shape-check head reductions and check the derivation tags"""
    report = VerificationReport(subject=f"validity of {cert}")
    expected = arrow(cert.source_type, cert.target_type)
    try:
        if cert.term is not None:
            if typecheck(cert.term) != expected:
                return _failed(report, Outcome.TYPE_FAILURE,
                               f"reducing term has type {cert.term.ty}, expected {expected}")
        elif not cert.substitutions:
            return _failed(report, Outcome.TYPE_FAILURE, "certificate carries no witness")
        for rho in cert.substitutions:
            if rho.source.bracket() != cert.source_type or rho.target.bracket() != cert.target_type:
                return _failed(report, Outcome.TYPE_FAILURE,
                               f"substitution {rho.source} -> {rho.target} does not match {cert}")
            for (name, ty), term in zip(rho.source.entries, rho.assignment):
                if typecheck(term, rho.target) != ty:
                    return _failed(report, Outcome.TYPE_FAILURE,
                                   f"{name} : {ty} assigned a term of type {term.ty}")
            if cert.relation is Relation.HEAD:
                shape = long_normal_form(bohm_term(rho))
                if not is_bohm_shaped(shape, cert.source_type.arity, cert.target_type.arity):
                    return _failed(report, Outcome.TYPE_FAILURE, "witness is not a Bohm term")
        steps = []
        for text in cert.derivation:
            lemma, source, target = _parse_tag(text)
            if lemma not in KNOWN_LEMMAS:
                return _failed(report, Outcome.TYPE_FAILURE, f"unknown derivation step {text!r}")
            if not is_premise(text):
                steps.append((text, source, target))
        broken = _chain_break(steps, cert.source_type, cert.target_type)
        if broken:
            return _failed(report, Outcome.TYPE_FAILURE, broken)
    except HierarchyError as exc:
        return _failed(report, Outcome.TYPE_FAILURE, str(exc))
    report.samples_tested = len(cert.substitutions) or 1
    return report


# ---------------------------------------------------------------------------
# Strength and atomic pairs

def check_strong(cert, xi, sample_limit=None, sample_size=None):
    """Injectivity of the extension rho^xi, for one caller-chosen context xi"""
    rho = cert.substitution
    taken = set(rho.source.names) | set(rho.target.names)
    xi, _ = xi.rename_apart(taken)
    extended = extend_substitution(rho, xi)
    report = VerificationReport(subject=f"strength of {cert} under [{xi}]")
    seen = {}
    sources = enumerate_inhabitants(
        EMPTY, extended.source.bracket(),
        bound('SAMPLE_SIZE', sample_size), limit=bound('SAMPLE_LIMIT', sample_limit),
    )
    for m in sources:
        image = bohm_transform(extended, m)
        report.samples_tested += 1
        if image in seen:
            return _failed(report, Outcome.COLLISION, "extension is not injective",
                           collision=(seen[image], m))
        seen[image] = m
    return report


def check_atomic_pair(pair, size_bound=None):
    """X_i M = X_j N only when i = j and M = N, over enumerated base terms M, N"""
    size_bound = bound('SUBSTITUTION_TERM_BOUND', size_bound)
    report = VerificationReport(subject=f"{pair.kind} atomic pair over {pair.context}")
    seen = {}
    for m in enumerate_inhabitants(pair.context, BASE, size_bound):
        for index, x in enumerate((pair.first, pair.second)):
            image = long_normal_form(app(x, m))
            report.samples_tested += 1
            if image in seen:
                return _failed(report, Outcome.COLLISION, f"X{index + 1} collides",
                               collision=(seen[image][1], m))
            seen[image] = (index, m)
    return report


def non_atomic_witness(rho):
    """Two distinct M, N : 1 with rho_F M = rho_F N, for rho from F : 2

    M is the identity and N the constant function returning what the
    outermost h-argument of rho_F becomes under the identity. Returns
    None when that pair does not collide.
    """
    (name, ty), = rho.source.entries
    target = rho.target
    term = rho[name]
    if ty.components != (ONE,):
        raise HierarchyError(f"{name} must have type 2, got {ty}")
    x = Free('x', BASE)
    identity = lam(x, x)
    h = Free('h', ONE)
    body = long_normal_form(app(term, h))
    argument = _outermost_argument(body, 'h')
    if argument is None:
        constant = smallest_inhabitant(BASE, target)
    else:
        constant = long_normal_form(substitute_free(argument, {'h': identity}))
    other = lam(x, constant)
    first = long_normal_form(app(term, identity))
    second = long_normal_form(app(term, other))
    if first != second:
        return None
    return identity, other


def _outermost_argument(term, name):
    stack = [term]
    while stack:
        t = stack.pop(0)
        head, args = spine(t)
        if isinstance(head, Free) and head.name == name:
            return args[0]
        for a in args:
            _, inner = strip_lambdas(a)
            stack.append(inner)
    return None


# ---------------------------------------------------------------------------
# Non-reducibility suites

@dataclass(frozen=True)
class IndiscerniblePair:
    """Distinct inhabitants of H_source that no Bohm transformation into H_target separates"""
    name: str
    source: HierarchyClass
    target: HierarchyClass
    first: object
    second: object


INDISCERNIBLE_CASES = (
    IndiscerniblePair(
        'omega-to-finite', HierarchyClass.omega_plus(0), HierarchyClass.finite(3),
        long_normal_form(lam(Free('f', ONE), Free('c', BASE), app(Free('f', ONE), Free('c', BASE)))),
        long_normal_form(lam(Free('f', ONE), Free('c', BASE),
                             app(Free('f', ONE), app(Free('f', ONE), Free('c', BASE))))),
    ),
    IndiscerniblePair(
        'words-to-pairs', HierarchyClass.omega_plus(2), HierarchyClass.omega_plus(1),
        long_normal_form(word('fgfg')), long_normal_form(word('fggf')),
    ),
    IndiscerniblePair(
        'word-lists-to-words', HierarchyClass.omega_plus(3), HierarchyClass.omega_plus(2),
        long_normal_form(word_list([[1], [2, 1]])), long_normal_form(word_list([[1], [2, 2]])),
    ),
    IndiscerniblePair(
        'trees-to-word-lists', HierarchyClass.omega_plus(4), HierarchyClass.omega_plus(3),
        long_normal_form(tree(parse_tree('bbcbccbcc'))), long_normal_form(tree(parse_tree('bbccbbccc'))),
    ),
)


def indiscernible_case(name):
    return next(case for case in INDISCERNIBLE_CASES if case.name == name)


def indiscernibility_suite(case, subst_bound=None, derivative_depth=None):
    """Every substitution into every derivative of H_target identifies the pair"""
    subst_bound = bound('SUBSTITUTION_TERM_BOUND', subst_bound)
    derivative_depth = bound('DERIVATIVE_DEPTH', derivative_depth)
    report = VerificationReport(subject=f"indiscernibility {case.name}")
    if case.first == case.second:
        return _failed(report, Outcome.TYPE_FAILURE, "the pair is not distinct")
    source = canonical_context(case.source)
    for derivative in derivatives(canonical_context(case.target), derivative_depth):
        for rho in enumerate_substitutions(source, derivative.context, subst_bound):
            report.samples_tested += 1
            first = bohm_transform(rho, case.first)
            second = bohm_transform(rho, case.second)
            if first != second:
                return _failed(
                    report, Outcome.COUNTEREXAMPLE,
                    f"{rho} separates the pair", collision=(first, second),
                )
    report.notes.append(f"bounds: terms <= {subst_bound}, derivative depth <= {derivative_depth}")
    return report


def pigeonhole_check(k):
    """[0^(k+1)] has k+1 inhabitants and [0^k] has k"""
    size_bound = k + 3
    larger = count_inhabitants(EMPTY, canonical_type(HierarchyClass.finite(k + 1)), size_bound)
    smaller = count_inhabitants(EMPTY, canonical_type(HierarchyClass.finite(k)), size_bound)
    return larger == k + 1 and smaller == k


# ---------------------------------------------------------------------------
# Collision search for [2] -> [1,0]

def word_exponents(term):
    """k0..kn for a term lambda g. f^k0 (g (f^k1 (g ... (f^kn c))))"""
    g = Free('g', ONE)
    body = long_normal_form(app(term, g))
    exponents, count = [], 0
    while True:
        head, args = spine(body)
        if not isinstance(head, Free) or not args:
            exponents.append(count)
            return exponents
        if head.name == 'g':
            exponents.append(count)
            count = 0
        else:
            count += 1
        body = args[0]


def collision_exponent(exponents, i, j):
    """Length of the image of <i,j> under the substitution with these exponents"""
    k0, n = exponents[0], len(exponents) - 1
    if n == 0:
        return k0
    return (j - 1) * k0 + n * (i - j) * k0 + sum(exponents)


def collision_search(size_bound=None, depth=None):
    """Every substitution F : 2 -> f : 1, c : 0 identifies two pairs <i,j>

    Images are cross-checked against `collision_exponent`.
    """
    size_bound = bound('SUBSTITUTION_TERM_BOUND', size_bound)
    depth = bound('COLLISION_SEARCH_DEPTH', depth)
    source = canonical_context(HierarchyClass.omega_plus(1))
    target = canonical_context(HierarchyClass.omega_plus(0))
    pairs = [(i, j) for i in range(1, depth + 1) for j in range(1, i + 1)]
    report = VerificationReport(subject=f"collision search [2] -> [1,0] up to <{depth},*>")
    for rho in enumerate_substitutions(source, target, size_bound):
        report.samples_tested += 1
        exponents = word_exponents(rho['F'])
        seen = {}
        collided = False
        for i, j in pairs:
            image = numeral_value(bohm_transform(rho, pair(i, j)))
            if image != collision_exponent(exponents, i, j):
                return _failed(report, Outcome.COUNTEREXAMPLE,
                               f"{rho} sends <{i},{j}> to c_{image}, formula disagrees")
            if image in seen:
                collided = True
                break
            seen[image] = (i, j)
        if not collided:
            return _failed(report, Outcome.COUNTEREXAMPLE, f"{rho} is injective up to <{depth},*>")
    return report


def verify_certificate(cert, sample_limit=None, sample_size=None):
    """Validity followed by (joint) injectivity, as one report"""
    report = validate_certificate(cert)
    if not report.passed:
        return report
    return report.merge(check_injective(cert, sample_limit, sample_size))
