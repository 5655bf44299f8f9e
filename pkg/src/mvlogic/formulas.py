"""Abstract syntax, parser and pretty-printer for propositional and
first-order formulas.

The connective set is strong conjunction ``&``, min-conjunction ``/\\``,
implication ``->`` and ``bot``, with derived ``~`` (negation), ``\\/``
(disjunction) and ``<->`` (biconditional) kept as AST nodes, plus the
unary ``!`` (delta) and the quantifiers ``forall v.`` / ``exists v.``.

Precedence, tightest first: {~, !} > & > /\\ > \\/ > -> > <->, with
quantifiers binding weakest (their body extends as far right as
possible).  ``->`` associates to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError, SignatureError


# ---------------------------------------------------------------------------
# AST


class Formula:
    """Base class of all formula nodes.  Nodes are immutable values."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Formula):
    """Propositional variable."""

    name: str


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Atom(Formula):
    """First-order atom; arguments are individual variables."""

    pred: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class And(Formula):
    """Min-conjunction (lattice meet)."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class StrongAnd(Formula):
    """Monoidal (strong) conjunction."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Delta(Formula):
    sub: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


BINARY = (And, StrongAnd, Implies, Or, Iff)
UNARY = (Not, Delta)
QUANT = (Forall, Exists)

BOT = Bottom()


def subformulas(phi: Formula) -> Iterator[Formula]:
    """All subformula occurrences of phi, phi included, preorder."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, BINARY):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, UNARY):
            stack.append(node.sub)
        elif isinstance(node, QUANT):
            stack.append(node.body)


def prop_variables(phi: Formula) -> list[str]:
    """Propositional variables in first-occurrence order."""
    seen: list[str] = []
    _walk_vars(phi, seen)
    return seen


def _walk_vars(phi: Formula, acc: list[str]) -> None:
    if isinstance(phi, Var):
        if phi.name not in acc:
            acc.append(phi.name)
    elif isinstance(phi, BINARY):
        _walk_vars(phi.left, acc)
        _walk_vars(phi.right, acc)
    elif isinstance(phi, UNARY):
        _walk_vars(phi.sub, acc)
    elif isinstance(phi, QUANT):
        _walk_vars(phi.body, acc)


def free_variables(phi: Formula) -> list[str]:
    """Free individual variables in first-occurrence order."""
    out: list[str] = []
    _walk_free(phi, frozenset(), out)
    return out


def _walk_free(phi: Formula, bound: frozenset[str], acc: list[str]) -> None:
    if isinstance(phi, Atom):
        for a in phi.args:
            if a not in bound and a not in acc:
                acc.append(a)
    elif isinstance(phi, BINARY):
        _walk_free(phi.left, bound, acc)
        _walk_free(phi.right, bound, acc)
    elif isinstance(phi, UNARY):
        _walk_free(phi.sub, bound, acc)
    elif isinstance(phi, QUANT):
        _walk_free(phi.body, bound | {phi.var}, acc)


def signature_of(phi: Formula) -> dict[str, int]:
    """Predicate -> arity map, in first-occurrence order.

    Raises SignatureError if a predicate occurs with two different arities.
    """
    sig: dict[str, int] = {}
    for node in _preorder(phi):
        if isinstance(node, Atom):
            arity = len(node.args)
            if node.pred in sig and sig[node.pred] != arity:
                raise SignatureError(
                    f"predicate {node.pred} used with arities "
                    f"{sig[node.pred]} and {arity}"
                )
            sig.setdefault(node.pred, arity)
    return sig


def _preorder(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, BINARY):
        yield from _preorder(phi.left)
        yield from _preorder(phi.right)
    elif isinstance(phi, UNARY):
        yield from _preorder(phi.sub)
    elif isinstance(phi, QUANT):
        yield from _preorder(phi.body)


def is_closed(phi: Formula) -> bool:
    return not free_variables(phi)


def has_delta(phi: Formula) -> bool:
    return any(isinstance(n, Delta) for n in subformulas(phi))


def is_propositional(phi: Formula) -> bool:
    return not any(isinstance(n, (Atom,) + QUANT) for n in subformulas(phi))


def is_first_order(phi: Formula) -> bool:
    return not any(isinstance(n, Var) for n in subformulas(phi))


def is_classical(phi: Formula) -> bool:
    """True iff phi uses only atoms, min-conjunction, disjunction,
    negation and the universal quantifier."""
    for node in subformulas(phi):
        if isinstance(node, (Atom, And, Or, Not, Forall)):
            continue
        return False
    return True


# ---------------------------------------------------------------------------
# Structural transformations


def desugar(phi: Formula) -> Formula:
    """Expand ~, \\/ and <-> into the primitive connectives.

    ~a becomes a -> bot; a \\/ b becomes ((a->b)->b) /\\ ((b->a)->a);
    a <-> b becomes (a->b) /\\ (b->a).  Idempotent.
    """
    if isinstance(phi, Not):
        return Implies(desugar(phi.sub), BOT)
    if isinstance(phi, Or):
        a, b = desugar(phi.left), desugar(phi.right)
        return And(Implies(Implies(a, b), b), Implies(Implies(b, a), a))
    if isinstance(phi, Iff):
        a, b = desugar(phi.left), desugar(phi.right)
        return And(Implies(a, b), Implies(b, a))
    if isinstance(phi, And):
        return And(desugar(phi.left), desugar(phi.right))
    if isinstance(phi, StrongAnd):
        return StrongAnd(desugar(phi.left), desugar(phi.right))
    if isinstance(phi, Implies):
        return Implies(desugar(phi.left), desugar(phi.right))
    if isinstance(phi, Delta):
        return Delta(desugar(phi.sub))
    if isinstance(phi, Forall):
        return Forall(phi.var, desugar(phi.body))
    if isinstance(phi, Exists):
        return Exists(phi.var, desugar(phi.body))
    return phi


def universal_closure(phi: Formula) -> Formula:
    """Prefix universal quantifiers over the free variables, in
    first-occurrence order.  Closed formulas are returned unchanged."""
    closed = phi
    for v in reversed(free_variables(phi)):
        closed = Forall(v, closed)
    return closed


def substitute_var(phi: Formula, old: str, new: str) -> Formula:
    """Rename free occurrences of individual variable old to new."""
    if isinstance(phi, Atom):
        if old in phi.args:
            return Atom(phi.pred, tuple(new if a == old else a for a in phi.args))
        return phi
    if isinstance(phi, BINARY):
        return type(phi)(
            substitute_var(phi.left, old, new), substitute_var(phi.right, old, new)
        )
    if isinstance(phi, UNARY):
        return type(phi)(substitute_var(phi.sub, old, new))
    if isinstance(phi, QUANT):
        if phi.var == old:
            return phi
        return type(phi)(phi.var, substitute_var(phi.body, old, new))
    return phi


# ---------------------------------------------------------------------------
# Pretty-printer

_BIN_SYMBOL = {And: "/\\", StrongAnd: "&", Implies: "->", Or: "\\/", Iff: "<->"}


def pretty(phi: Formula) -> str:
    """Fully parenthesized canonical form; parse(pretty(phi)) == phi."""
    if isinstance(phi, Var):
        return phi.name
    if isinstance(phi, Bottom):
        return "bot"
    if isinstance(phi, Atom):
        if phi.args:
            return f"{phi.pred}({','.join(phi.args)})"
        return phi.pred
    if isinstance(phi, Not):
        return f"~{pretty(phi.sub)}"
    if isinstance(phi, Delta):
        return f"!{pretty(phi.sub)}"
    if isinstance(phi, BINARY):
        return f"({pretty(phi.left)} {_BIN_SYMBOL[type(phi)]} {pretty(phi.right)})"
    if isinstance(phi, Forall):
        return f"(forall {phi.var}. {pretty(phi.body)})"
    if isinstance(phi, Exists):
        return f"(exists {phi.var}. {pretty(phi.body)})"
    raise TypeError(f"not a formula node: {phi!r}")


# ---------------------------------------------------------------------------
# Parser

_SYMBOLS = ["<->", "->", "/\\", "\\/", "&", "~", "!", "(", ")", ",", "."]
_KEYWORDS = {"forall", "exists", "bot"}


@dataclass(frozen=True)
class _Token:
    kind: str  # symbol text, "name" or "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        matched = None
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                matched = sym
                break
        if matched:
            tokens.append(_Token(matched, matched, line, col))
            i += len(matched)
            col += len(matched)
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            word = text[i:j]
            kind = word if word in _KEYWORDS else "name"
            tokens.append(_Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], kind: str):
        self.tokens = tokens
        self.pos = 0
        self.kind = kind  # "prop" or "fo"

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
            )
        return self.next()

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    # Quantifiers bind weakest: wherever an operand may start, a
    # quantifier swallows the whole remaining formula.
    def formula(self) -> Formula:
        return self.iff()

    def _quantifier(self) -> Formula:
        tok = self.next()
        if self.kind == "prop":
            raise ParseError(
                "quantifier in a propositional formula", tok.line, tok.column
            )
        var = self.expect("name").text
        self.expect(".")
        body = self.formula()
        return Forall(var, body) if tok.kind == "forall" else Exists(var, body)

    def iff(self) -> Formula:
        left = self.impl()
        while self.peek().kind == "<->":
            self.next()
            left = Iff(left, self.impl())
        return left

    def impl(self) -> Formula:
        left = self.disj()
        if self.peek().kind == "->":
            self.next()
            return Implies(left, self.impl())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.peek().kind == "\\/":
            self.next()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.strong()
        while self.peek().kind == "/\\":
            self.next()
            left = And(left, self.strong())
        return left

    def strong(self) -> Formula:
        left = self.unary()
        while self.peek().kind == "&":
            self.next()
            left = StrongAnd(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.next()
            return Not(self.unary())
        if tok.kind == "!":
            self.next()
            return Delta(self.unary())
        if tok.kind in ("forall", "exists"):
            return self._quantifier()
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "(":
            self.next()
            inner = self.formula()
            self.expect(")")
            return inner
        if tok.kind == "bot":
            self.next()
            return BOT
        if tok.kind == "name":
            self.next()
            if self.peek().kind == "(":
                if self.kind == "prop":
                    raise ParseError(
                        "predicate atom in a propositional formula",
                        tok.line,
                        tok.column,
                    )
                self.next()
                args = [self.expect("name").text]
                while self.peek().kind == ",":
                    self.next()
                    args.append(self.expect("name").text)
                self.expect(")")
                return Atom(tok.text, tuple(args))
            if self.kind == "fo":
                return Atom(tok.text, ())
            return Var(tok.text)
        raise self.fail(f"expected a formula, found {tok.text or 'end of input'!r}")


def parse(text: str, kind: str = "fo") -> Formula:
    """Parse a formula; kind is "prop" or "fo".

    In "fo" mode a bare name is a nullary atom; in "prop" mode it is a
    propositional variable and quantifiers/atoms are rejected.
    Arity consistency is checked on the result.
    """
    if kind not in ("prop", "fo"):
        raise ValueError(f"kind must be 'prop' or 'fo', got {kind!r}")
    parser = _Parser(_tokenize(text), kind)
    phi = parser.formula()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
    if kind == "fo":
        signature_of(phi)  # raises on inconsistent arities
    return phi
