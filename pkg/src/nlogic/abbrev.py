"""Defined connectives, quantifiers, equalities and numerals.

Each abbreviation has a builder producing the kernel term it stands for and
a matcher recognising that shape again (up to alpha).  Builders never reduce
the redexes their definitions introduce.
"""

from functools import lru_cache

from nlogic.errors import EquivOnIota, IllTyped
from nlogic.term import NOR, App, Const, Lam, Var, alpha_eq, lams, nex
from nlogic.typecheck import common_type, has_type
from nlogic.types import IOTA, O, Fun

# -- builders ---------------------------------------------------------------


def nor(p, q):
    return App(App(NOR, p), q)


def neg(p):
    return nor(p, p)


def or_(p, q):
    return neg(nor(p, q))


def and_(p, q):
    return neg(or_(neg(p), neg(q)))


def imp(p, q):
    return or_(neg(p), q)


def iff(p, q):
    return and_(imp(p, q), imp(q, p))


def exists(x, p):
    return neg(App(nex(x.ty), Lam(x, p)))


def forall(x, p):
    return neg(exists(x, neg(p)))


@lru_cache(maxsize=None)
def neq_template(ty):
    """``\\x y. ex z. z x /\\ ~ z y`` with x, y : ty and z : ty o."""
    x, y, z = Var("x", ty), Var("y", ty), Var("z", Fun(ty, O))
    return lams([x, y], exists(z, and_(App(z, x), neg(App(z, y)))))


def neq_at(ty, s, t):
    return App(App(neq_template(ty), s), t)


def eq_at(ty, s, t):
    return neg(neq_at(ty, s, t))


def neq(s, t):
    return neq_at(common_type(s, t), s, t)


def eq(s, t):
    return eq_at(common_type(s, t), s, t)


def _need_individual(*terms):
    for t in terms:
        if not has_type(t, IOTA):
            raise IllTyped(f"operand {t} does not have type i")


def ideq(s, t):
    _need_individual(s, t)
    return eq_at(IOTA, s, t)


def idneq(s, t):
    _need_individual(s, t)
    return neq_at(IOTA, s, t)


@lru_cache(maxsize=None)
def equiv_template(ty):
    """``\\x y. all z1 .. zn. x z1 .. zn <-> y z1 .. zn`` where n is the arity of ty."""
    x, y = Var("x", ty), Var("y", ty)
    zs = [Var(f"z{k}", d) for k, d in enumerate(ty.domains(), 1)]
    body = iff(x(*zs), y(*zs))
    for z in reversed(zs):
        body = forall(z, body)
    return lams([x, y], body)


def equiv(s, t):
    ty = common_type(s, t)
    if ty == IOTA:
        raise EquivOnIota("equivalence needs operands of a common predicate type")
    return App(App(equiv_template(ty), s), t)


def nequiv(s, t):
    return neg(equiv(s, t))


_X, _Y = Var("x", IOTA), Var("y", IOTA)
SUCC = lams([_X, _Y], eq_at(IOTA, _X, _Y))
ZERO = Lam(_X, neq_at(IOTA, _X, _X))
TRUTH = exists(Var("x", O), Var("x", O))
FALSITY = neg(TRUTH)


def succ(t):
    _need_individual(t)
    return App(SUCC, t)


@lru_cache(maxsize=None)
def numeral(n):
    if n < 0:
        raise ValueError("numerals are non-negative")
    return ZERO if n == 0 else App(SUCC, numeral(n - 1))


# -- matchers ---------------------------------------------------------------
# Each returns the operands of the abbreviation or None.


def match_nor(t):
    if isinstance(t, App) and isinstance(t.fun, App) and t.fun.fun == NOR:
        return t.fun.arg, t.arg
    return None


def match_neg(t):
    m = match_nor(t)
    if m and alpha_eq(*m):
        return m[0]
    return None


def match_or(t):
    inner = match_neg(t)
    return match_nor(inner) if inner is not None else None


def _negs(pair):
    if pair is None:
        return None
    a, b = match_neg(pair[0]), match_neg(pair[1])
    return (a, b) if a is not None and b is not None else None


def match_and(t):
    inner = match_neg(t)
    return _negs(match_or(inner)) if inner is not None else None


def match_imp(t):
    m = match_or(t)
    if m is None:
        return None
    p = match_neg(m[0])
    return (p, m[1]) if p is not None else None


def match_iff(t):
    m = match_and(t)
    if m is None:
        return None
    a, b = match_imp(m[0]), match_imp(m[1])
    if a and b and alpha_eq(a[0], b[1]) and alpha_eq(a[1], b[0]):
        return a
    return None


def match_exists(t):
    inner = match_neg(t)
    if (isinstance(inner, App) and isinstance(inner.fun, Const)
            and inner.fun.nex_arg is not None and isinstance(inner.arg, Lam)
            and inner.arg.var.ty == inner.fun.nex_arg):
        return inner.arg.var, inner.arg.body
    return None


def match_forall(t):
    inner = match_neg(t)
    m = match_exists(inner) if inner is not None else None
    if m is None:
        return None
    p = match_neg(m[1])
    return (m[0], p) if p is not None else None


def _match_template(t, template):
    if isinstance(t, App) and isinstance(t.fun, App) and isinstance(t.fun.fun, Lam):
        ty = t.fun.fun.var.ty
        if alpha_eq(t.fun.fun, template(ty)):
            return ty, t.fun.arg, t.arg
    return None


def match_neq(t):
    """``(ty, s, t)`` for an inequality instance at ``ty``."""
    return _match_template(t, neq_template)


def match_eq(t):
    inner = match_neg(t)
    return match_neq(inner) if inner is not None else None


def match_equiv(t):
    return _match_template(t, equiv_template)


def match_nequiv(t):
    inner = match_neg(t)
    return match_equiv(inner) if inner is not None else None


def match_succ(t):
    if isinstance(t, App) and alpha_eq(t.fun, SUCC):
        return t.arg
    return None


def match_numeral(t):
    n = 0
    while not alpha_eq(t, ZERO):
        t = match_succ(t)
        if t is None:
            return None
        n += 1
    return n


def match_n_axiom(f):
    """Recognise ``p = q <-> p .= q``; returns ``(p, q, ty)`` or None.

    ``ty`` is the instance type of ``=``, which must be the one the surface
    instance rule assigns to ``p``/``q``; both operands must have type i.
    Orientation is fixed: ``=`` on the left, ``.=`` on the right.
    """
    m = match_iff(f)
    if m is None:
        return None
    left, right = match_eq(m[0]), match_eq(m[1])
    if left is None or right is None or right[0] != IOTA:
        return None
    ty, p, q = left
    if not (alpha_eq(p, right[1]) and alpha_eq(q, right[2])):
        return None
    if not (has_type(p, IOTA) and has_type(q, IOTA)):
        return None
    try:
        if common_type(p, q) != ty:
            return None
    except IllTyped:
        return None
    if not alpha_eq(f, iff(eq_at(ty, p, q), eq_at(IOTA, p, q))):
        return None
    return p, q, ty
