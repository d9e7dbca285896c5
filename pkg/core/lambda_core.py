"""
Simply typed lambda calculus over a single base type.

Types are written with the bracket constructor only: [A1,...,An] stands
for A1 -> ... -> An -> 0 and the base type 0 is the empty bracket.
Terms are locally nameless: bound variables are de Bruijn indices
(0 is the innermost binder) and context variables are named. Alpha
equality is therefore structural equality.

The canonical form of a term is its long normal form (beta normal and
fully eta expanded), computed by normalization by evaluation.
"""

import logging
import sys
from dataclasses import dataclass, field

from .exceptions import (
    ContextMismatch, NameClash, SubstitutionError, TermTypeError,
    UnboundVariable,
)

logger = logging.getLogger(__name__)

# Normalization and printing recurse over the term structure.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


# ---------------------------------------------------------------------------
# Types

@dataclass(frozen=True)
class SimpleType:
    components: tuple = ()

    def __post_init__(self):
        if not isinstance(self.components, tuple):
            object.__setattr__(self, 'components', tuple(self.components))

    @property
    def arity(self):
        return len(self.components)

    @property
    def is_base(self):
        return not self.components

    def result_after(self, count):
        """Type left after applying a term of this type to `count` arguments"""
        return SimpleType(self.components[count:])

    def size(self):
        return 1 + sum(c.size() for c in self.components)

    def __str__(self):
        if not self.components:
            return '0'
        return '[' + ','.join(str(c) for c in self.components) + ']'

    def __repr__(self):
        return f"SimpleType({self})"


BASE = SimpleType(())


def numeral_type(n):
    """The type n: 0 for n = 0, and n+1 = [n]"""
    ty = BASE
    for _ in range(n):
        ty = SimpleType((ty,))
    return ty


def bracket(*components):
    return SimpleType(tuple(components))


def arrow(source, target):
    """source -> target, flattened into bracket form"""
    return SimpleType((source,) + target.components)


def double_bracket(*components):
    """The type [[C1,...,Ck]] of a variable taking one [C1,...,Ck] argument"""
    return SimpleType((SimpleType(tuple(components)),))


# ---------------------------------------------------------------------------
# Terms

class Term:
    """Base class for typed term nodes. Subclasses cache type, size and hash."""

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self) or self._hash != other._hash:
            return False
        return self._key() == other._key()

    def __str__(self):
        return format_term(self)

    def _finish(self, ty, size):
        object.__setattr__(self, 'ty', ty)
        object.__setattr__(self, 'size', size)
        object.__setattr__(self, '_hash', hash((type(self).__name__,) + self._key()))


@dataclass(frozen=True, eq=False)
class Var(Term):
    """Bound variable, de Bruijn index with the binder's type"""
    index: int
    ty: SimpleType
    size: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        self._finish(self.ty, 1)

    def _key(self):
        return (self.index, self.ty)


@dataclass(frozen=True, eq=False)
class Free(Term):
    """Named context variable"""
    name: str
    ty: SimpleType
    size: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        self._finish(self.ty, 1)

    def _key(self):
        return (self.name, self.ty)


@dataclass(frozen=True, eq=False)
class App(Term):
    fun: Term
    arg: Term
    ty: SimpleType = field(init=False, repr=False)
    size: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        fun_ty = self.fun.ty
        if not fun_ty.components or fun_ty.components[0] != self.arg.ty:
            raise TermTypeError(
                f"cannot apply {format_term(self.fun)} : {fun_ty} "
                f"to {format_term(self.arg)} : {self.arg.ty}",
                subterm=self.fun,
            )
        self._finish(fun_ty.result_after(1), 1 + self.fun.size + self.arg.size)

    def _key(self):
        return (self.fun, self.arg)


@dataclass(frozen=True, eq=False)
class Lam(Term):
    binder: SimpleType
    body: Term
    ty: SimpleType = field(init=False, repr=False)
    size: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        self._finish(SimpleType((self.binder,) + self.body.ty.components), 1 + self.body.size)

    def _key(self):
        return (self.binder, self.body)


def var(name, ty):
    return Free(name, ty)


def app(fun, *args):
    term = fun
    for arg in args:
        term = App(term, arg)
    return term


def _abstract(term, name, depth):
    if isinstance(term, Free):
        return Var(depth, term.ty) if term.name == name else term
    if isinstance(term, App):
        return App(_abstract(term.fun, name, depth), _abstract(term.arg, name, depth))
    if isinstance(term, Lam):
        return Lam(term.binder, _abstract(term.body, name, depth + 1))
    return term


def lam(*binders_and_body):
    """lam(x, y, body) abstracts the named variables x and y (outermost first)"""
    *binders, body = binders_and_body
    for binder in reversed(binders):
        body = Lam(binder.ty, _abstract(body, binder.name, 0))
    return body


def _instantiate(term, value, depth=0):
    """Replace index `depth` by `value`, which has no loose indices"""
    if isinstance(term, Var):
        return value if term.index == depth else term
    if isinstance(term, App):
        return App(_instantiate(term.fun, value, depth), _instantiate(term.arg, value, depth))
    if isinstance(term, Lam):
        return Lam(term.binder, _instantiate(term.body, value, depth + 1))
    return term


def spine(term):
    """Split a term into its head and argument list"""
    args = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fun
    args.reverse()
    return term, args


def strip_lambdas(term):
    binders = []
    while isinstance(term, Lam):
        binders.append(term.binder)
        term = term.body
    return binders, term


def free_names(term):
    names = set()
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Free):
            names.add(t.name)
        elif isinstance(t, App):
            stack.append(t.fun)
            stack.append(t.arg)
        elif isinstance(t, Lam):
            stack.append(t.body)
    return names


def loose_bound(term, depth=0):
    """1 + the largest loose index in `term`, 0 when it has none"""
    if isinstance(term, Var):
        return max(0, term.index - depth + 1)
    if isinstance(term, App):
        return max(loose_bound(term.fun, depth), loose_bound(term.arg, depth))
    if isinstance(term, Lam):
        return loose_bound(term.body, depth + 1)
    return 0


def rename_free(term, mapping):
    """Rename context variables; names missing from `mapping` are kept"""
    if isinstance(term, Free):
        new = mapping.get(term.name)
        return term if new is None else Free(new, term.ty)
    if isinstance(term, App):
        return App(rename_free(term.fun, mapping), rename_free(term.arg, mapping))
    if isinstance(term, Lam):
        return Lam(term.binder, rename_free(term.body, mapping))
    return term


# ---------------------------------------------------------------------------
# Printing

def _bound_prefix(names):
    for prefix in ('x', 'y', 'z', 'v', 'u'):
        if not any(n.startswith(prefix) and n[len(prefix):].isdigit() for n in names):
            return prefix
    prefix = 'x_'
    while any(n.startswith(prefix) for n in names):
        prefix += '_'
    return prefix


def format_term(term):
    """Print in the concrete syntax, naming binders by depth"""
    prefix = _bound_prefix(free_names(term))

    def fmt(t, depth, position):
        if isinstance(t, Var):
            return f"{prefix}{depth - 1 - t.index}"
        if isinstance(t, Free):
            return t.name
        if isinstance(t, Lam):
            text = f"\\{prefix}{depth}:{t.binder}. {fmt(t.body, depth + 1, 'top')}"
            return text if position == 'top' else f"({text})"
        head, args = spine(t)
        text = ' '.join([fmt(head, depth, 'fun')] + [fmt(a, depth, 'arg') for a in args])
        return f"({text})" if position == 'arg' else text

    return fmt(term, 0, 'top')


# ---------------------------------------------------------------------------
# Contexts and substitutions

def fresh_names(prefix, count, avoid=()):
    """The first `count` names prefix1, prefix2, ... not in `avoid`"""
    taken = set(avoid)
    names = []
    n = 1
    while len(names) < count:
        candidate = f"{prefix}{n}"
        if candidate not in taken:
            names.append(candidate)
            taken.add(candidate)
        n += 1
    return names


@dataclass(frozen=True)
class Context:
    """Ordered sequence of distinct typed variables"""
    entries: tuple = ()

    def __post_init__(self):
        entries = tuple((name, ty) for name, ty in self.entries)
        object.__setattr__(self, 'entries', entries)
        names = [name for name, _ in entries]
        if len(set(names)) != len(names):
            raise NameClash(f"duplicate variable in context: {names}")

    @classmethod
    def of(cls, *pairs):
        return cls(tuple(pairs))

    @classmethod
    def of_type(cls, ty, prefix='x', avoid=()):
        """A context whose bracket is `ty`, with fresh names"""
        names = fresh_names(prefix, ty.arity, avoid)
        return cls(tuple(zip(names, ty.components)))

    @property
    def names(self):
        return tuple(name for name, _ in self.entries)

    @property
    def types(self):
        return tuple(ty for _, ty in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, name):
        return name in self.names

    def type_of(self, name):
        for entry_name, ty in self.entries:
            if entry_name == name:
                return ty
        raise UnboundVariable(name)

    def variable(self, name):
        return Free(name, self.type_of(name))

    def variables(self):
        return tuple(Free(name, ty) for name, ty in self.entries)

    def bracket(self):
        return SimpleType(self.types)

    def concat(self, other):
        clash = set(self.names) & set(other.names)
        if clash:
            raise NameClash(f"contexts overlap on {sorted(clash)}")
        return Context(self.entries + other.entries)

    def __add__(self, other):
        return self.concat(other)

    def without(self, name):
        return Context(tuple(e for e in self.entries if e[0] != name))

    def renamed(self, mapping):
        return Context(tuple((mapping.get(n, n), ty) for n, ty in self.entries))

    def rename_apart(self, avoid, prefix=None):
        """Rename entries so that no name lies in `avoid`; returns (context, mapping)"""
        taken = set(avoid) | set(self.names)
        mapping = {}
        for name, _ in self.entries:
            if name in avoid:
                stem = prefix or name.rstrip('0123456789') or 'v'
                new = fresh_names(stem, 1, taken)[0]
                taken.add(new)
                mapping[name] = new
        return self.renamed(mapping), mapping

    def __str__(self):
        if not self.entries:
            return 'ε'
        return ', '.join(f"{name}:{ty}" for name, ty in self.entries)


EMPTY = Context(())


@dataclass(frozen=True)
class Substitution:
    """Assignment of terms over `target` to the variables of `source`"""
    source: Context
    target: Context
    assignment: tuple

    def __post_init__(self):
        assignment = tuple(self.assignment)
        object.__setattr__(self, 'assignment', assignment)
        if len(assignment) != len(self.source):
            raise SubstitutionError(
                f"substitution assigns {len(assignment)} terms to {len(self.source)} variables"
            )
        target_types = dict(self.target.entries)
        for (name, ty), term in zip(self.source.entries, assignment):
            if term.ty != ty:
                raise SubstitutionError(f"{name} : {ty} assigned {format_term(term)} : {term.ty}")
            if loose_bound(term):
                raise SubstitutionError(f"{name} assigned a term with loose indices")
            for free in _free_vars(term):
                if target_types.get(free.name) != free.ty:
                    raise SubstitutionError(
                        f"{name} assigned a term mentioning {free.name}, outside {self.target}"
                    )

    @classmethod
    def from_mapping(cls, source, target, mapping):
        missing = [name for name in source.names if name not in mapping]
        if missing:
            raise SubstitutionError(f"no assignment for {missing}")
        return cls(source, target, tuple(mapping[name] for name in source.names))

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, ctx, ctx.variables())

    def __getitem__(self, name):
        for entry_name, term in zip(self.source.names, self.assignment):
            if entry_name == name:
                return term
        raise UnboundVariable(name)

    def items(self):
        return zip(self.source.names, self.assignment)

    def as_mapping(self):
        return dict(self.items())

    def __str__(self):
        pairs = ', '.join(f"{name} := {format_term(term)}" for name, term in self.items())
        return f"{{{pairs}}} : {self.source} -> {self.target}"


def _free_vars(term):
    found = {}
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Free):
            found[(t.name, t.ty)] = t
        elif isinstance(t, App):
            stack.append(t.fun)
            stack.append(t.arg)
        elif isinstance(t, Lam):
            stack.append(t.body)
    return list(found.values())


# ---------------------------------------------------------------------------
# Typing

def typecheck(term, ctx=EMPTY):
    """Recompute the type of `term` over `ctx`"""
    binders = []

    def walk(t):
        if isinstance(t, Var):
            if t.index >= len(binders):
                raise TermTypeError(f"loose bound index {t.index}", subterm=t)
            if binders[-1 - t.index] != t.ty:
                raise TermTypeError(f"bound index {t.index} used at the wrong type", subterm=t)
            return t.ty
        if isinstance(t, Free):
            if t.name not in ctx:
                raise TermTypeError(f"unbound variable {t.name}", subterm=t)
            if ctx.type_of(t.name) != t.ty:
                raise TermTypeError(f"{t.name} used at {t.ty}, declared {ctx.type_of(t.name)}", subterm=t)
            return t.ty
        if isinstance(t, App):
            fun_ty = walk(t.fun)
            arg_ty = walk(t.arg)
            if not fun_ty.components or fun_ty.components[0] != arg_ty:
                raise TermTypeError(f"ill-typed application {format_term(t)}", subterm=t)
            return fun_ty.result_after(1)
        binders.append(t.binder)
        body_ty = walk(t.body)
        binders.pop()
        return SimpleType((t.binder,) + body_ty.components)

    return walk(term)


# ---------------------------------------------------------------------------
# Beta reduction and eta expansion

def shift(term, amount, cutoff=0):
    if isinstance(term, Var):
        return Var(term.index + amount, term.ty) if term.index >= cutoff else term
    if isinstance(term, App):
        return App(shift(term.fun, amount, cutoff), shift(term.arg, amount, cutoff))
    if isinstance(term, Lam):
        return Lam(term.binder, shift(term.body, amount, cutoff + 1))
    return term


def _substitute_top(body, value, depth=0):
    """body[0 := value], lowering the other loose indices"""
    if isinstance(body, Var):
        if body.index == depth:
            return shift(value, depth)
        if body.index > depth:
            return Var(body.index - 1, body.ty)
        return body
    if isinstance(body, App):
        return App(_substitute_top(body.fun, value, depth), _substitute_top(body.arg, value, depth))
    if isinstance(body, Lam):
        return Lam(body.binder, _substitute_top(body.body, value, depth + 1))
    return body


def beta_normalize(term):
    """Leftmost-outermost beta reduction to beta normal form"""
    binders, body = strip_lambdas(term)
    while True:
        head, args = spine(body)
        if isinstance(head, Lam) and args:
            body = app(_substitute_top(head.body, args[0]), *args[1:])
            continue
        if isinstance(head, Lam):
            inner_binders, body = strip_lambdas(head)
            binders.extend(inner_binders)
            continue
        break
    result = app(head, *[beta_normalize(a) for a in args])
    for binder in reversed(binders):
        result = Lam(binder, result)
    return result


def eta_long(term, at=None):
    """Fully eta-expand a beta normal term; redexes are contracted first"""
    if at is not None and term.ty != at:
        raise TermTypeError(f"{format_term(term)} has type {term.ty}, not {at}", subterm=term)
    return _eta(beta_normalize(term))


def _eta(term):
    binders, body = strip_lambdas(term)
    head, args = spine(body)
    args = [_eta(a) for a in args]
    missing = body.ty.components
    count = len(missing)
    head = shift(head, count)
    args = [shift(a, count) for a in args]
    extra = [_eta(Var(count - 1 - i, c)) for i, c in enumerate(missing)]
    result = app(head, *args, *extra)
    for c in reversed(missing):
        result = Lam(c, result)
    for binder in reversed(binders):
        result = Lam(binder, result)
    return result


# ---------------------------------------------------------------------------
# Normalization by evaluation

class _Level:
    __slots__ = ('level', 'ty')

    def __init__(self, level, ty):
        self.level = level
        self.ty = ty


class _Neutral:
    __slots__ = ('head', 'args')

    def __init__(self, head, args=()):
        self.head = head
        self.args = args


def _reflect(neutral, ty):
    if not ty.components:
        return neutral
    first = ty.components[0]
    rest = ty.result_after(1)

    def apply(value):
        return _reflect(_Neutral(neutral.head, neutral.args + ((value, first),)), rest)

    return apply


def _evaluate(term, env, free_env):
    if isinstance(term, Var):
        return env[term.index]
    if isinstance(term, Free):
        value = free_env.get(term.name) if free_env else None
        return _reflect(_Neutral(term), term.ty) if value is None else value
    if isinstance(term, App):
        return _evaluate(term.fun, env, free_env)(_evaluate(term.arg, env, free_env))
    body = term.body
    return lambda value: _evaluate(body, (value,) + env, free_env)


def _reify(value, ty, depth):
    components = ty.components
    for i, c in enumerate(components):
        value = value(_reflect(_Neutral(_Level(depth + i, c)), c))
    body = _reify_neutral(value, depth + len(components))
    for c in reversed(components):
        body = Lam(c, body)
    return body


def _reify_neutral(neutral, depth):
    head = neutral.head
    term = Var(depth - 1 - head.level, head.ty) if isinstance(head, _Level) else head
    for value, ty in neutral.args:
        term = App(term, _reify(value, ty, depth))
    return term


def long_normal_form(term):
    """The beta-normal, eta-long form of a term without loose indices"""
    if loose_bound(term):
        raise TermTypeError("cannot normalize a term with loose bound indices", subterm=term)
    return _reify(_evaluate(term, (), None), term.ty, 0)


lnf = long_normal_form


def beta_eta_eq(t1, t2, at=None):
    at = t1.ty if at is None else at
    for t in (t1, t2):
        if t.ty != at:
            raise TermTypeError(f"{format_term(t)} has type {t.ty}, not {at}", subterm=t)
    return long_normal_form(t1) == long_normal_form(t2)


def open_term(term, ctx):
    """Apply a term of type [ctx] to the variables of ctx and normalize"""
    if term.ty.components != ctx.types:
        raise TermTypeError(f"{format_term(term)} : {term.ty} does not match [{ctx}]", subterm=term)
    return long_normal_form(app(term, *ctx.variables()))


def close_term(body, ctx):
    return lam(*ctx.variables(), body)


# ---------------------------------------------------------------------------
# Substitution operations

def substitute_free(term, mapping):
    """Raw replacement of named variables by terms without loose indices"""
    if isinstance(term, Free):
        return mapping.get(term.name, term)
    if isinstance(term, App):
        return App(substitute_free(term.fun, mapping), substitute_free(term.arg, mapping))
    if isinstance(term, Lam):
        return Lam(term.binder, substitute_free(term.body, mapping))
    return term


def apply_substitution(rho, term):
    """Replace source variables simultaneously; the result is not normalized"""
    for free in _free_vars(term):
        if free.name not in rho.source or rho.source.type_of(free.name) != free.ty:
            raise UnboundVariable(free.name)
    return substitute_free(term, rho.as_mapping())


def bohm_transform(rho, m):
    """The induced map on closed inhabitants: lambda Source. N goes to lambda Target. N[rho]"""
    source_type = rho.source.bracket()
    if m.ty != source_type:
        raise TermTypeError(f"{format_term(m)} : {m.ty} is not an inhabitant of {source_type}", subterm=m)
    if loose_bound(m) or free_names(m):
        raise TermTypeError(f"{format_term(m)} is not closed", subterm=m)
    value = _evaluate(m, (), None)
    for term in rho.assignment:
        value = value(_evaluate(term, (), None))
    body = _reify_neutral(value, 0)
    return close_term(body, rho.target)


def bohm_term(rho, name='m'):
    """The closed term lambda m Target. m rho_1 ... rho_n"""
    source_type = rho.source.bracket()
    name = fresh_names(name, 1, rho.target.names)[0] if name in rho.target else name
    m = Free(name, source_type)
    return lam(m, *rho.target.variables(), app(m, *rho.assignment))


def extend_substitution(rho, xi):
    """rho^Xi : Xi,Source -> Xi,Target, fixing the variables of Xi"""
    clash = set(xi.names) & (set(rho.source.names) | set(rho.target.names))
    if clash:
        raise NameClash(f"extension context overlaps on {sorted(clash)}")
    return Substitution(xi.concat(rho.source), xi.concat(rho.target), xi.variables() + rho.assignment)


def compose_substitutions(rho, sigma):
    """sigma after rho, with every assigned term in long normal form"""
    if rho.target != sigma.source:
        raise ContextMismatch(f"cannot compose {rho.target} with {sigma.source}")
    mapping = sigma.as_mapping()
    assignment = tuple(long_normal_form(substitute_free(t, mapping)) for t in rho.assignment)
    return Substitution(rho.source, sigma.target, assignment)


def normalize_substitution(rho):
    return Substitution(rho.source, rho.target, tuple(long_normal_form(t) for t in rho.assignment))


def rename_substitution(rho, source_mapping=None, target_mapping=None):
    """Rename source and/or target variables consistently"""
    source_mapping = source_mapping or {}
    target_mapping = target_mapping or {}
    return Substitution(
        rho.source.renamed(source_mapping),
        rho.target.renamed(target_mapping),
        tuple(rename_free(t, target_mapping) for t in rho.assignment),
    )
