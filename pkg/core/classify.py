"""
Syntactic type analysis and hierarchy classes.

Every type over the base type falls in exactly one class:

    0        uninhabited
    k        inhabited, small, rank 1, k components
    omega    inhabited, small, rank 2, exactly one component of rank 1
    omega+1  inhabited, small, rank 3, exactly one component of rank >= 1
    omega+2  inhabited, small, rank 2 or 3, at least two components of rank >= 1
    omega+3  inhabited, small, rank > 3
    omega+4  inhabited and large
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from .enumeration import ONE, PAIR_TYPE, THREE, TWO, first_inhabitant
from .exceptions import Uninhabited
from .lambda_core import BASE, Context, EMPTY, SimpleType, fresh_names

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rank(ty):
    if not ty.components:
        return 0
    return max(rank(c) + 1 for c in ty.components)


def is_fat(ty):
    return ty.arity >= 2


@lru_cache(maxsize=None)
def is_large(ty):
    """A fat type sits at odd height in the tree of `ty`"""
    return any(
        is_fat(c) or any(is_large(cc) for cc in c.components)
        for c in ty.components
    )


def is_small(ty):
    return not is_large(ty)


@lru_cache(maxsize=None)
def is_inhabited(ty):
    """[A1,...,An] is inhabited iff some Ai is not"""
    return not all(is_inhabited(c) for c in ty.components)


def is_inhabited_over(ctx, ty):
    return is_inhabited(SimpleType(ctx.types + ty.components))


def smallest_inhabitant(ty, ctx=EMPTY):
    """First inhabitant of `ty` over `ctx` in enumeration order"""
    if not is_inhabited_over(ctx, ty):
        raise Uninhabited(f"{ty} has no inhabitant over {ctx}")
    return first_inhabitant(ctx, ty)


# ---------------------------------------------------------------------------
# Hierarchy classes

@dataclass(frozen=True, order=True)
class HierarchyClass:
    """An ordinal below omega+5: either k or omega+offset"""
    transfinite: bool
    offset: int

    @classmethod
    def finite(cls, k):
        if k < 0:
            raise ValueError(f"no finite class {k}")
        return cls(False, k)

    @classmethod
    def omega_plus(cls, j):
        if not 0 <= j <= 4:
            raise ValueError(f"no class omega+{j}")
        return cls(True, j)

    @classmethod
    def parse(cls, text):
        text = text.strip().replace('ω', 'omega')
        if text == 'omega':
            return cls.omega_plus(0)
        if text.startswith('omega+'):
            return cls.omega_plus(int(text[len('omega+'):]))
        return cls.finite(int(text))

    @property
    def is_finite(self):
        return not self.transfinite

    def __str__(self):
        if not self.transfinite:
            return str(self.offset)
        return 'omega' if self.offset == 0 else f'omega+{self.offset}'


OMEGA = HierarchyClass.omega_plus(0)


def all_classes(max_finite=10):
    return [HierarchyClass.finite(k) for k in range(max_finite + 1)] + [
        HierarchyClass.omega_plus(j) for j in range(5)
    ]


def hierarchy_class(ty):
    if not is_inhabited(ty):
        return HierarchyClass.finite(0)
    if is_large(ty):
        return HierarchyClass.omega_plus(4)
    r = rank(ty)
    if r <= 1:
        return HierarchyClass.finite(ty.arity)
    raised = sum(1 for c in ty.components if rank(c) >= 1)
    if r == 2:
        return HierarchyClass.omega_plus(0 if raised == 1 else 2)
    if r == 3:
        return HierarchyClass.omega_plus(1 if raised == 1 else 2)
    return HierarchyClass.omega_plus(3)


_CANONICAL = {
    0: SimpleType((ONE, BASE)),
    1: SimpleType((TWO,)),
    2: SimpleType((ONE, ONE, BASE)),
    3: SimpleType((THREE, BASE)),
    4: SimpleType((PAIR_TYPE, BASE)),
}


def canonical_type(cls):
    """The representative H_alpha of a class"""
    if cls.is_finite:
        return SimpleType((BASE,) * cls.offset)
    return _CANONICAL[cls.offset]


# ---------------------------------------------------------------------------
# Derivatives

_PREFIXES = {0: 'x', 1: 'f', 2: 'F', 3: 'Phi'}


def binder_prefix(ty):
    return _PREFIXES.get(rank(ty), 'v')


def fresh_context(types, avoid):
    """A context of the given types with names fresh for `avoid`"""
    taken = set(avoid)
    entries = []
    for ty in types:
        name = fresh_names(binder_prefix(ty), 1, taken)[0]
        taken.add(name)
        entries.append((name, ty))
    return Context(tuple(entries))


@dataclass(frozen=True)
class DerivativeStep:
    """Bind the context of component `component` of `variable`'s type"""
    variable: str
    component: int
    added: Context


@dataclass(frozen=True)
class Derivative:
    context: Context
    steps: tuple = ()


def direct_step(ctx, name, component):
    ty = ctx.type_of(name)
    added = fresh_context(ty.components[component].components, ctx.names)
    return DerivativeStep(name, component, added)


def direct_derivatives(ctx):
    """Contexts ctx,Gamma_i for each a:[[Gamma_1],...,[Gamma_k]] in ctx

    Steps that bind nothing give ctx itself, listed once.
    """
    results = []
    trivial_seen = False
    for name, ty in ctx.entries:
        for index, component in enumerate(ty.components):
            if not component.components:
                if not trivial_seen:
                    results.append(ctx)
                    trivial_seen = True
                continue
            results.append(ctx.concat(direct_step(ctx, name, index).added))
    return results


def _signature(ctx):
    return tuple(sorted(ctx.types, key=str))


def derivatives(ctx, depth):
    """Derivatives reachable in at most `depth` direct steps, one per type multiset"""
    start = Derivative(ctx)
    found = [start]
    seen = {_signature(ctx)}
    frontier = [start]
    for _ in range(depth):
        next_frontier = []
        for derivative in frontier:
            current = derivative.context
            for name, ty in current.entries:
                for index, component in enumerate(ty.components):
                    if not component.components:
                        continue
                    step = direct_step(current, name, index)
                    extended = current.concat(step.added)
                    signature = _signature(extended)
                    if signature in seen:
                        continue
                    seen.add(signature)
                    item = Derivative(extended, derivative.steps + (step,))
                    found.append(item)
                    next_frontier.append(item)
        frontier = next_frontier
    return found


def _leads_to_fat(ty):
    return is_fat(ty) or any(is_large(c) for c in ty.components)


def find_fat_derivative(ctx):
    """A derivative of ctx holding a variable of fat type, with that variable's name

    Returns None when [ctx] is small.
    """
    target = next((name for name, ty in ctx.entries if _leads_to_fat(ty)), None)
    if target is None:
        return None
    current = ctx
    steps = []
    while not is_fat(current.type_of(target)):
        ty = current.type_of(target)
        index = next(i for i, c in enumerate(ty.components) if is_large(c))
        step = direct_step(current, target, index)
        steps.append(step)
        current = current.concat(step.added)
        target = next(name for name, t in step.added.entries if _leads_to_fat(t))
    logger.debug(f"fat variable {target} found after {len(steps)} derivative steps of {ctx}")
    return Derivative(current, tuple(steps)), target
