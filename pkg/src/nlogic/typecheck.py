"""The typing judgment ``t : tau`` with nominalization.

Variables and constants carry their types, so typing needs no context.  The
structural type is the one derived without ``nom`` at the root; ``nom`` is
only used at argument positions expecting ``i`` and, via ``has_type``, at
the top.
"""

from nlogic.errors import IllTyped
from nlogic.term import App, Const, Lam, Var
from nlogic.types import IOTA, O, Fun


def structural_type(t):
    """Return the structural type of ``t`` or raise IllTyped with the path to
    the offending node."""
    return _st(t, ())


def _st(t, path):
    # successful results are stored on the node itself; terms are immutable
    hit = t.__dict__.get("_stype")
    if hit is not None:
        return hit
    if isinstance(t, (Var, Const)):
        ty = t.ty
    elif isinstance(t, App):
        fty = _st(t.fun, path + (0,))
        if not isinstance(fty, Fun):
            raise IllTyped(f"cannot apply a term of type {fty}", path)
        aty = _st(t.arg, path + (1,))
        if aty != fty.dom and not (fty.dom == IOTA and _nominal(t.arg, aty)):
            if fty.dom == IOTA:
                reason = f"argument of type {aty} is not nominalizable"
            else:
                reason = f"expected argument of type {fty.dom}, got {aty}"
            raise IllTyped(reason, path + (1,))
        ty = fty.cod
    elif isinstance(t, Lam):
        bty = _st(t.body, path + (0,))
        if bty == IOTA:
            raise IllTyped("abstraction body has type i, not a predicate type", path + (0,))
        ty = Fun(t.var.ty, bty)
    else:
        raise TypeError(f"not a term: {t!r}")
    t.__dict__["_stype"] = ty
    return ty


def _nominal(t, sty):
    return sty != IOTA and all(v.ty == IOTA for v in t.fv)


def try_structural_type(t):
    try:
        return structural_type(t)
    except IllTyped:
        return None


def is_nominalizable(t):
    sty = try_structural_type(t)
    return sty is not None and _nominal(t, sty)


def has_type(t, ty):
    sty = try_structural_type(t)
    if sty is None:
        return False
    return ty == sty or (ty == IOTA and _nominal(t, sty))


def types_of(t):
    """All types of ``t``: the structural one, then ``i`` if nominalizable."""
    sty = structural_type(t)
    out = [sty]
    if _nominal(t, sty):
        out.append(IOTA)
    return out


def is_formula(t):
    return has_type(t, O)


def common_type(s, t):
    """The instance type for equality between ``s`` and ``t``.

    Equal structural types win (so two nominalizable predicates are compared
    at their predicate type); otherwise ``i`` when one side is an individual
    and the other nominalizable.  Raises IllTyped when neither applies.
    """
    a, b = structural_type(s), structural_type(t)
    if a == b:
        return a
    if a == IOTA and has_type(t, IOTA) or b == IOTA and has_type(s, IOTA):
        return IOTA
    raise IllTyped(f"operands have incompatible types {a} and {b}")
