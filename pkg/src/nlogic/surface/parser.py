"""Pratt parser for terms, types and sequents.

Priorities, high to low: postfix ``'``, application, ``~``, the equality
family (``= != .= .!= === !==``, non-associative), ``/\\``, ``\\/``, ``->``,
``<->``, binders.  ``/\\`` and ``\\/`` associate left, ``->`` and ``<->``
right; a binder body extends as far right as possible.
"""

from dataclasses import dataclass, field

from nlogic.errors import InvalidType, NLSyntaxError, UnknownIdentifier
from nlogic.surface.lexer import tokenize
from nlogic.types import IOTA, O, Fun

INFIX = {
    "<->": ("iff", 10, "right"),
    "->": ("imp", 20, "right"),
    "\\/": ("or", 30, "left"),
    "/\\": ("and", 40, "left"),
    "=": ("eq", 50, "none"),
    "!=": ("neq", 50, "none"),
    ".=": ("ideq", 50, "none"),
    ".!=": ("idneq", 50, "none"),
    "===": ("equiv", 50, "none"),
    "!==": ("nequiv", 50, "none"),
}
NEG_BP = 60
APP_BP = 70
POSTFIX_BP = 80
BINDERS = {"\\": "lambda", "ex": "exists", "all": "forall"}


@dataclass(frozen=True)
class Node:
    """Surface syntax tree node.

    ``op`` is one of: neg or and imp iff eq neq ideq idneq equiv nequiv
    exists forall lambda app succ numeral truth falsity var const.
    Binder nodes carry ``name`` and ``ty``; ``var``/``const`` carry ``name``
    (and ``ty`` for ``nex[...]``); ``numeral`` carries ``value``.
    """

    op: str
    args: tuple = ()
    span: tuple = (0, 0)
    name: str = None
    ty: object = None
    value: int = None
    ref: object = field(default=None, compare=False)


class _Parser:
    def __init__(self, text, prelude):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.prelude = prelude
        self.scope = []

    @property
    def tok(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.tok
        if t.text != text or t.kind not in ("sym", "kw"):
            found = t.text or "end of input"
            raise NLSyntaxError(f"expected {text!r}, found {found!r}", t.span)
        return self.advance()

    def at_end(self):
        if self.tok.kind != "eof":
            raise NLSyntaxError(f"unexpected {self.tok.text!r}", self.tok.span)

    # -- types --

    def type_starts(self):
        return self.tok.text in ("i", "o", "(") and self.tok.kind != "ident"

    def parse_type(self):
        start = self.tok.start
        parts = []
        while self.type_starts():
            t = self.advance()
            if t.text == "(":
                parts.append(self.parse_type())
                self.expect(")")
            else:
                parts.append(IOTA if t.text == "i" else O)
        if not parts:
            raise NLSyntaxError("expected a type", self.tok.span)
        result = parts[-1]
        for dom in reversed(parts[:-1]):
            try:
                result = Fun(dom, result)
            except InvalidType as e:
                raise InvalidType(str(e), (start, self.toks[self.i - 1].end)) from None
        return result

    # -- terms --

    def starts_atom(self):
        t = self.tok
        return t.kind in ("ident", "num") or t.text in ("(", "true", "false", "nor", "nex")

    def parse_expr(self, rbp=0):
        left = self.nud()
        last_eq = False
        while True:
            t = self.tok
            if t.kind == "sym" and t.text == "'":
                if POSTFIX_BP <= rbp:
                    break
                self.advance()
                left = Node("succ", (left,), (left.span[0], t.end))
                continue
            if self.starts_atom():
                if APP_BP <= rbp:
                    break
                arg = self.parse_expr(APP_BP)
                left = Node("app", (left, arg), (left.span[0], arg.span[1]))
                continue
            info = INFIX.get(t.text) if t.kind == "sym" else None
            if info is None:
                break
            op, bp, assoc = info
            if bp <= rbp:
                break
            if assoc == "none" and last_eq:
                raise NLSyntaxError(f"{t.text!r} is non-associative; add parentheses", t.span)
            self.advance()
            right = self.parse_expr(bp - 1 if assoc == "right" else bp)
            left = Node(op, (left, right), (left.span[0], right.span[1]))
            last_eq = assoc == "none"
        return left

    def nud(self):
        t = self.tok
        if t.kind == "eof":
            raise NLSyntaxError("unexpected end of input", t.span)
        if t.kind == "num":
            self.advance()
            return Node("numeral", span=t.span, value=int(t.text))
        if t.kind == "ident":
            self.advance()
            return self.resolve(t)
        if t.text in ("true", "false"):
            self.advance()
            return Node("truth" if t.text == "true" else "falsity", span=t.span)
        if t.text == "nor":
            self.advance()
            return Node("const", span=t.span, name="nor")
        if t.text == "nex":
            self.advance()
            ty, end = None, t.end
            if self.tok.text == "[":
                self.advance()
                ty = self.parse_type()
                end = self.expect("]").end
            return Node("const", span=(t.start, end), name="nex", ty=ty)
        if t.text == "(":
            self.advance()
            inner = self.parse_expr(0)
            close = self.expect(")")
            return Node(inner.op, inner.args, (t.start, close.end), inner.name,
                        inner.ty, inner.value, inner.ref)
        if t.text == "~":
            self.advance()
            arg = self.parse_expr(NEG_BP)
            return Node("neg", (arg,), (t.start, arg.span[1]))
        if t.text in BINDERS and t.kind in ("sym", "kw"):
            return self.binder()
        raise NLSyntaxError(f"unexpected {t.text!r}", t.span)

    def binder(self):
        t = self.advance()
        op = BINDERS[t.text]
        binders = []
        while self.tok.kind == "ident":
            name_tok = self.advance()
            self.expect(":")
            binders.append((name_tok, self.parse_type()))
        if not binders:
            raise NLSyntaxError("binder needs at least one 'name:type'", self.tok.span)
        self.expect(".")
        self.scope.extend((n.text, ty) for n, ty in binders)
        body = self.parse_expr(0)
        del self.scope[-len(binders):]
        for name_tok, ty in reversed(binders):
            body = Node(op, (body,), (name_tok.start, body.span[1]), name=name_tok.text, ty=ty)
        return Node(op, body.args, (t.start, body.span[1]), body.name, body.ty)

    def resolve(self, t):
        for name, ty in reversed(self.scope):
            if name == t.text:
                return Node("var", span=t.span, name=name, ty=ty, ref="bound")
        if self.prelude is not None and t.text in self.prelude:
            ref = self.prelude.lookup(t.text)
            kind = "var" if ref.__class__.__name__ == "Var" else "const"
            return Node(kind, span=t.span, name=t.text, ty=ref.ty, ref="prelude")
        raise UnknownIdentifier(f"unknown identifier {t.text!r}", t.span)


def parse_type(text):
    p = _Parser(text, None)
    ty = p.parse_type()
    p.at_end()
    return ty


def parse_term(text, prelude=None):
    p = _Parser(text, prelude)
    node = p.parse_expr(0)
    p.at_end()
    return node


def parse_sequent(text, prelude=None):
    """Parse ``A, B |- C, D`` into two lists of nodes."""
    p = _Parser(text, prelude)
    sides = [[], []]
    side = 0
    while True:
        if p.tok.text == "|-" and p.tok.kind == "sym":
            if side == 1:
                raise NLSyntaxError("second '|-'", p.tok.span)
            p.advance()
            side = 1
            continue
        if p.tok.kind == "eof":
            break
        sides[side].append(p.parse_expr(0))
        if p.tok.text == "," and p.tok.kind == "sym":
            p.advance()
            if p.tok.kind == "eof" or p.tok.text == "|-":
                raise NLSyntaxError("dangling ','", p.tok.span)
        elif p.tok.kind != "eof" and p.tok.text != "|-":
            raise NLSyntaxError(f"unexpected {p.tok.text!r}", p.tok.span)
    if side == 0:
        raise NLSyntaxError("sequent needs '|-'", p.tok.span)
    return sides[0], sides[1]
