"""Parser for the little expression language of the command line.

Grammar, with adjacency meaning multiplication and '-' a synonym of '+'
(the coefficient field has characteristic 2):

    expr   := term { ('+'|'-') term }
    term   := factor { ('*'|'/')? factor }
    factor := atom [ '^' nat ]
    atom   := '0' | '1' | 't' | 'X' | 'V' | '(' expr ')'

X and V both name the indeterminate of an XPoly but may not be mixed in
one expression.  A '/' denominator must elaborate to a nonzero field
element.  All errors carry the offending position.
"""

from dataclasses import dataclass

from .localfield import RatFunc
from .ivpoly import XPoly


class ExpressionError(ValueError):
    """Lexical, syntactic or elaboration failure, with its position."""

    def __init__(self, message, pos):
        super().__init__(f'{message} (at position {pos})')
        self.pos = pos


@dataclass(frozen=True)
class Atom:
    symbol: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    pos: int


@dataclass(frozen=True)
class Expression:
    """Parsed and elaborated expression: an AST plus its exact value."""

    source: str
    root: object
    variable: str | None
    value: object               # RatFunc when variable is None, else XPoly

    def to_ratfunc(self):
        if self.variable is not None:
            raise ExpressionError(
                f'expression contains the indeterminate {self.variable}', 0)
        return self.value

    def to_xpoly(self):
        if isinstance(self.value, XPoly):
            return self.value
        return XPoly((self.value,))


def _tokenize(src):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(('NAT', src[i:j], i))
            i = j
        elif ch in 'tXV':
            tokens.append(('SYM', ch, i))
            i += 1
        elif ch in '+-':
            tokens.append(('PLUS', '+', i))
            i += 1
        elif ch == '*':
            tokens.append(('STAR', ch, i))
            i += 1
        elif ch == '/':
            tokens.append(('SLASH', ch, i))
            i += 1
        elif ch == '^':
            tokens.append(('CARET', ch, i))
            i += 1
        elif ch == '(':
            tokens.append(('LPAREN', ch, i))
            i += 1
        elif ch == ')':
            tokens.append(('RPAREN', ch, i))
            i += 1
        else:
            raise ExpressionError(f'unexpected character {ch!r}', i)
    tokens.append(('END', '', n))
    return tokens


_FACTOR_START = ('NAT', 'SYM', 'LPAREN')


class _Parser:
    def __init__(self, src):
        self.src = src
        self.tokens = _tokenize(src)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def eat(self, kind):
        tok = self.tokens[self.k]
        if tok[0] != kind:
            raise ExpressionError(
                f'expected {kind}, found {tok[1]!r}' if tok[0] != 'END'
                else f'expected {kind}, found end of input', tok[2])
        self.k += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != 'END':
            raise ExpressionError(f'unexpected trailing {tok[1]!r}', tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == 'PLUS':
            tok = self.eat('PLUS')
            node = BinOp('+', node, self.term(), tok[2])
        return node

    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok[0] in ('STAR', 'SLASH'):
                self.k += 1
                node = BinOp('*' if tok[0] == 'STAR' else '/',
                             node, self.factor(), tok[2])
            elif tok[0] in _FACTOR_START:
                node = BinOp('*', node, self.factor(), tok[2])
            else:
                return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == 'CARET':
            tok = self.eat('CARET')
            nat = self.eat('NAT')
            node = Power(node, int(nat[1]), tok[2])
        return node

    def atom(self):
        kind, text, pos = self.peek()
        if kind == 'NAT':
            self.k += 1
            if text not in ('0', '1'):
                raise ExpressionError(
                    f'only the scalars 0 and 1 exist, found {text!r}', pos)
            return Atom(text, pos)
        if kind == 'SYM':
            self.k += 1
            return Atom(text, pos)
        if kind == 'LPAREN':
            self.k += 1
            node = self.expr()
            self.eat('RPAREN')
            return node
        raise ExpressionError(
            f'expected a value, found {text!r}' if kind != 'END'
            else 'expected a value, found end of input', pos)


_INDETERMINATES = ('X', 'V')


def _collect_variables(node, seen):
    if isinstance(node, Atom):
        if node.symbol in _INDETERMINATES:
            seen.setdefault(node.symbol, node.pos)
    elif isinstance(node, BinOp):
        _collect_variables(node.left, seen)
        _collect_variables(node.right, seen)
    elif isinstance(node, Power):
        _collect_variables(node.base, seen)


_ATOM_VALUES = {
    '0': XPoly(()),
    '1': XPoly((1,)),
    't': XPoly((RatFunc('t'),)),
    'X': XPoly((0, 1)),
    'V': XPoly((0, 1)),
}


def _elaborate(node):
    if isinstance(node, Atom):
        return _ATOM_VALUES[node.symbol]
    if isinstance(node, Power):
        return _elaborate(node.base) ** node.exponent
    left = _elaborate(node.left)
    right = _elaborate(node.right)
    if node.op == '+':
        return left + right
    if node.op == '*':
        return left * right
    if right.degree is not None and right.degree > 0:
        raise ExpressionError('denominator contains the indeterminate', node.pos)
    scalar = right.coeff(0)
    if not scalar:
        raise ExpressionError('division by zero', node.pos)
    return left * scalar.inv()


def parse_expression(source):
    """Parse and elaborate; ExpressionError carries the failing position."""
    root = _Parser(source).parse()
    seen = {}
    _collect_variables(root, seen)
    if len(seen) > 1:
        second = max(seen.values())
        raise ExpressionError('X and V mixed in one expression', second)
    value = _elaborate(root)
    variable = next(iter(seen)) if seen else None
    if variable is None:
        value = value.coeff(0)
    return Expression(source, root, variable, value)


def format_value(value, var='X'):
    """Grammar-valid rendering of a RatFunc or XPoly."""
    if isinstance(value, XPoly):
        return value.to_string(var)
    return str(value)
