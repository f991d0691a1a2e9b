"""Printing kernel terms back to ASCII surface syntax.

Without resugaring the output is fully parenthesised kernel syntax.  With
resugaring, abbreviation shapes are recognised and printed with their
operators; a shape is only resugared when elaborating the printed form gives
the same term back.
"""

from nlogic import abbrev
from nlogic.errors import IllTyped
from nlogic.surface.lexer import KEYWORDS
from nlogic.term import App, Const, Lam, Var, fresh_var, names_in, substitute
from nlogic.typecheck import common_type, has_type
from nlogic.types import IOTA

ATOM = 90


def print_type(ty):
    return str(ty)


def _const_names(t, out):
    stack, seen = [t], set()
    while stack:
        t = stack.pop()
        if id(t) in seen:
            continue
        seen.add(id(t))
        if isinstance(t, Const):
            out.add(t.name)
        elif isinstance(t, App):
            stack += [t.fun, t.arg]
        elif isinstance(t, Lam):
            stack.append(t.body)
    return out


def _open_binder(v, body):
    """Rename ``v`` if printing it would capture a same-named free variable or
    constant of ``body``."""
    clash = v.name in KEYWORDS or v.name in _const_names(body, set()) or any(
        w.name == v.name and w != v for w in body.fv)
    if not clash:
        return v, body
    avoid = names_in(body) | _const_names(body, set()) | {w.name for w in body.fv}
    v2 = fresh_var(v, avoid)
    return v2, substitute(body, v2, v)


def _kernel(t):
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        if t.nex_arg is not None:
            return f"nex[{print_type(t.nex_arg)}]"
        return t.name
    if isinstance(t, App):
        return f"({_kernel(t.fun)} {_kernel(t.arg)})"
    v, body = _open_binder(t.var, t.body)
    return f"(\\{v.name}:{print_type(v.ty)}. {_kernel(body)})"


def print_term(t, resugar=False):
    if not resugar:
        return _kernel(t)
    return _sugar(t)[0]


def _wrap(part, need):
    text, prec = part
    return text if prec >= need else f"({text})"


def _infix(sym, bp, assoc, a, b):
    lneed = bp + 1 if assoc != "left" else bp
    rneed = bp + 1 if assoc != "right" else bp
    return f"{_wrap(_sugar(a), lneed)} {sym} {_wrap(_sugar(b), rneed)}", bp


def _binder(kw, v, body):
    v, body = _open_binder(v, body)
    return f"{kw}{v.name}:{print_type(v.ty)}. {_sugar(body)[0]}", 0


def _typed_ok(check):
    try:
        return check()
    except IllTyped:
        return False


def _sugar(t):
    n = abbrev.match_numeral(t)
    if n is not None:
        return str(n), ATOM
    if abbrev.alpha_eq(t, abbrev.TRUTH):
        return "true", ATOM
    if abbrev.alpha_eq(t, abbrev.FALSITY):
        return "false", ATOM
    m = abbrev.match_succ(t)
    if m is not None and has_type(m, IOTA):
        return _wrap(_sugar(m), ATOM) + "'", ATOM
    for matcher, sym in ((abbrev.match_nequiv, "!=="), (abbrev.match_equiv, "===")):
        m = matcher(t)
        if m is not None and _typed_ok(lambda: common_type(m[1], m[2]) == m[0]):
            return _infix(sym, 50, "none", m[1], m[2])
    for matcher, id_sym, sym in ((abbrev.match_eq, ".=", "="), (abbrev.match_neq, ".!=", "!=")):
        m = matcher(t)
        if m is None:
            continue
        ty, s, u = m
        if ty == IOTA and has_type(s, IOTA) and has_type(u, IOTA):
            return _infix(id_sym, 50, "none", s, u)
        if _typed_ok(lambda: common_type(s, u) == ty):
            return _infix(sym, 50, "none", s, u)
    m = abbrev.match_forall(t)
    if m is not None:
        return _binder("all ", *m)
    m = abbrev.match_exists(t)
    if m is not None:
        return _binder("ex ", *m)
    for matcher, sym, bp, assoc in (
        (abbrev.match_iff, "<->", 10, "right"),
        (abbrev.match_imp, "->", 20, "right"),
        (abbrev.match_and, "/\\", 40, "left"),
        (abbrev.match_or, "\\/", 30, "left"),
    ):
        m = matcher(t)
        if m is not None and not (sym == "\\/" and abbrev.alpha_eq(*m)):
            return _infix(sym, bp, assoc, *m)
    m = abbrev.match_neg(t)
    if m is not None:
        return "~" + _wrap(_sugar(m), 60), 60
    if isinstance(t, Lam):
        return _binder("\\", t.var, t.body)
    if isinstance(t, App):
        return f"{_wrap(_sugar(t.fun), 70)} {_wrap(_sugar(t.arg), 80)}", 70
    return _kernel(t), ATOM
