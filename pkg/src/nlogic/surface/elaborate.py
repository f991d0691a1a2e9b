"""Expansion of surface syntax into kernel terms."""

from nlogic import abbrev
from nlogic.errors import IllTyped
from nlogic.surface.parser import parse_sequent, parse_term
from nlogic.term import NOR, App, Lam, Var, nex
from nlogic.typecheck import structural_type, try_structural_type
from nlogic.types import Fun, O

_BINARY = {
    "or": abbrev.or_,
    "and": abbrev.and_,
    "imp": abbrev.imp,
    "iff": abbrev.iff,
    "eq": abbrev.eq,
    "neq": abbrev.neq,
    "ideq": abbrev.ideq,
    "idneq": abbrev.idneq,
    "equiv": abbrev.equiv,
    "nequiv": abbrev.nequiv,
}
_QUANT = {"exists": abbrev.exists, "forall": abbrev.forall, "lambda": Lam}


def elaborate(node, prelude=None):
    return _elab(node, prelude, {})


def ill_typed_span(text, prelude=None):
    """Span of the smallest subterm of ``text`` with no structural type, or None."""
    seen = []
    _elab(parse_term(text, prelude), prelude, {}, seen)
    for term, span in seen:  # children precede their parents
        if try_structural_type(term) is None:
            return span
    return None


def _elab(node, prelude, env, seen=None):
    term = _elab_node(node, prelude, env, seen)
    if seen is not None:
        seen.append((term, node.span))
    return term


def _elab_node(node, prelude, env, seen):
    op = node.op
    try:
        if op == "var":
            if node.ref == "bound":
                return env[node.name]
            return prelude.lookup(node.name)
        if op == "const":
            if node.name == "nor":
                return NOR
            if node.name == "nex":
                if node.ty is None:
                    raise IllTyped("cannot infer the type of 'nex'; write nex[type]")
                return nex(node.ty)
            return prelude.lookup(node.name)
        if op == "app":
            fun, arg = node.args
            a = _elab(arg, prelude, env, seen)
            if fun.op == "const" and fun.name == "nex" and fun.ty is None:
                aty = structural_type(a)
                if not (isinstance(aty, Fun) and aty.cod == O):
                    raise IllTyped(f"'nex' needs an argument of type <t> o, got {aty}")
                return App(nex(aty.dom), a)
            return App(_elab(fun, prelude, env, seen), a)
        if op in _BINARY:
            s, t = (_elab(a, prelude, env, seen) for a in node.args)
            return _BINARY[op](s, t)
        if op == "neg":
            return abbrev.neg(_elab(node.args[0], prelude, env, seen))
        if op in _QUANT:
            v = Var(node.name, node.ty)
            inner = dict(env)
            inner[node.name] = v
            return _QUANT[op](v, _elab(node.args[0], prelude, inner, seen))
        if op == "succ":
            return abbrev.succ(_elab(node.args[0], prelude, env, seen))
        if op == "numeral":
            return abbrev.numeral(node.value)
        if op == "truth":
            return abbrev.TRUTH
        if op == "falsity":
            return abbrev.FALSITY
    except IllTyped as e:
        if e.span is None:
            e.span = node.span
        raise
    raise ValueError(f"unknown surface operator {op!r}")


def read_term(text, prelude=None):
    """Parse and elaborate in one go."""
    return elaborate(parse_term(text, prelude), prelude)


def read_sequent(text, prelude=None):
    left, right = parse_sequent(text, prelude)
    return ([elaborate(n, prelude) for n in left],
            [elaborate(n, prelude) for n in right])
