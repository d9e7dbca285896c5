"""
Concrete syntax for types, contexts and terms.

    Type    ::= Nat | "[" (Item ("," Item)*)? "]" | Type "->" Type | "(" Type ")"
    Item    ::= Type ("^" Nat)?
    Term    ::= "\\" Name ":" Type "." Term | Term Term | Name | "(" Term ")"
    Context ::= (Name ":" Type ("," Name ":" Type)*)?

Numerals are sugar: 0 is the base type and n+1 is [n]. Inside brackets
0^k stands for k copies. "->" associates to the right and A -> [B...]
flattens to [A, B...]. Types always print in bracket form.
"""

import logging
from functools import lru_cache

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput

from .exceptions import ParseError, UnboundVariable
from .lambda_core import (
    BASE, App, Context, EMPTY, Free, Lam, SimpleType, Var, arrow,
    format_term, numeral_type,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    type_expr: type
    term_expr: term
    context_expr: (binding ("," binding)*)?

    ?type: atom
         | atom "->" type                -> arrow
    ?atom: NAT                           -> numeral
         | "[" "]"                       -> empty
         | "[" item ("," item)* "]"      -> bracket
         | "(" type ")"
    item: type ("^" NAT)?

    ?term: "\\" NAME ":" type "." term    -> abstraction
         | application
    ?application: application simple   -> apply
                | simple
    ?simple: NAME                        -> name
           | "(" term ")"

    binding: NAME ":" type

    NAT: /[0-9]+/
    NAME: /[A-Za-z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


@lru_cache(maxsize=1)
def _parser():
    return Lark(GRAMMAR, start=['type_expr', 'term_expr', 'context_expr'], parser='lalr')


class _TypeBuilder(Transformer):
    def type_expr(self, children):
        return children[0]

    def numeral(self, children):
        return numeral_type(int(children[0]))

    def empty(self, children):
        return BASE

    def item(self, children):
        count = int(children[1]) if len(children) > 1 else 1
        return [children[0]] * count

    def bracket(self, items):
        return SimpleType(tuple(ty for group in items for ty in group))

    def arrow(self, children):
        return arrow(children[0], children[1])

    def binding(self, children):
        return (str(children[0]), children[1])

    def context_expr(self, children):
        return Context(tuple(children))


class _TermBuilder(_TypeBuilder):
    """Builds resolvers: each node becomes a function of the binder scope"""

    def __init__(self, ctx):
        super().__init__()
        self.ctx = ctx

    def term_expr(self, children):
        return children[0]

    def abstraction(self, children):
        name, ty, body = children
        name = str(name)
        return lambda scope: Lam(ty, body(((name, ty),) + scope))

    def apply(self, children):
        fun, arg = children
        return lambda scope: App(fun(scope), arg(scope))

    def name(self, children):
        ident = str(children[0])
        ctx = self.ctx

        def resolve(scope):
            for index, (bound, ty) in enumerate(scope):
                if bound == ident:
                    return Var(index, ty)
            if ident in ctx:
                return Free(ident, ctx.type_of(ident))
            raise UnboundVariable(ident)

        return resolve


def _parse(text, start):
    try:
        return _parser().parse(text, start=start)
    except UnexpectedInput as exc:
        raise ParseError(f"cannot parse {text!r}", exc.line, exc.column) from exc


def parse_type(text):
    return _TypeBuilder().transform(_parse(text, 'type_expr'))


def parse_context(text):
    return _TypeBuilder().transform(_parse(text, 'context_expr'))


def parse_term(text, ctx=EMPTY):
    """Parse a term whose free names are resolved in `ctx`"""
    resolver = _TermBuilder(ctx).transform(_parse(text, 'term_expr'))
    return resolver(())


def print_type(ty):
    return str(ty)


def print_context(ctx):
    return ', '.join(f"{name}:{ty}" for name, ty in ctx.entries)


print_term = format_term
