"""Terms of the lambda calculus with typed variables and constants.

Variables are identified by (name, type).  Alpha-equivalence is decided on a
nameless key (binders replaced by de Bruijn indices), substitution renames
binders on capture, and reduction is single-step beta/eta.
"""

import re
import threading
from dataclasses import dataclass
from functools import cached_property

from nlogic.errors import FuelExhausted
from nlogic.types import O, Fun, Type, arrow

_FRESH = re.compile(r"^(.*?)\$(\d+)$")


class Term:
    __slots__ = ()

    @cached_property
    def fv(self):
        return frozenset(_free_vars(self))

    @cached_property
    def akey(self):
        """Nameless key; equal keys iff alpha-equivalent."""
        return _closed_key(self)

    @cached_property
    def is_normal(self):
        if isinstance(self, App):
            return (not isinstance(self.fun, Lam)) and self.fun.is_normal and self.arg.is_normal
        if isinstance(self, Lam):
            return not _is_eta_redex(self) and self.body.is_normal
        return True

    @cached_property
    def size(self):
        return _size(self)

    def __call__(self, *args):
        t = self
        for a in args:
            t = App(t, a)
        return t

    def __str__(self):
        from nlogic.surface.printer import print_term
        return print_term(self, resugar=False)


# cached_property needs an instance __dict__, so no __slots__ on the nodes.

@dataclass(frozen=True, eq=True)
class Var(Term):
    name: str
    ty: Type

    def __hash__(self):
        return hash((Var, self.name, self.ty))

    @property
    def base(self):
        m = _FRESH.match(self.name)
        return m.group(1) if m else self.name


@dataclass(frozen=True, eq=True)
class Const(Term):
    """A typed constant.  ``nor`` and ``nex`` are the built-in logical ones;
    anything else is a declared constant."""

    name: str
    ty: Type

    def __hash__(self):
        return hash((Const, self.name, self.ty))

    @property
    def is_nor(self):
        return self.name == "nor"

    @property
    def nex_arg(self):
        """The quantified type if this is a ``nex`` constant, else None."""
        if self.name == "nex":
            return self.ty.dom.dom
        return None


@dataclass(frozen=True, eq=True)
class App(Term):
    fun: Term
    arg: Term

    @cached_property
    def _hash(self):
        return hash((App, self.fun, self.arg))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Lam(Term):
    var: Var
    body: Term

    @cached_property
    def _hash(self):
        return hash((Lam, self.var, self.body))

    def __hash__(self):
        return self._hash


NOR = Const("nor", arrow(O, O, O))


def nex(ty):
    """The "no ... exists" constant quantifying over ``ty``."""
    return Const("nex", Fun(Fun(ty, O), O))


def lams(vars_, body):
    for v in reversed(vars_):
        body = Lam(v, body)
    return body


def head_args(t):
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    return t, args[::-1]


def _free_vars(t):
    if isinstance(t, Var):
        return {t}
    if isinstance(t, App):
        return t.fun.fv | t.arg.fv
    if isinstance(t, Lam):
        return t.body.fv - {t.var}
    return set()


def _size(t):
    if isinstance(t, App):
        return 1 + t.fun.size + t.arg.size
    if isinstance(t, Lam):
        return 1 + t.body.size
    return 1


_INTERN = {}
_INTERN_LOCK = threading.Lock()


def _intern(key):
    hit = _INTERN.get(key)
    if hit is None:
        with _INTERN_LOCK:
            hit = _INTERN.setdefault(key, len(_INTERN))
    return hit


def _closed_key(t):
    # Terms share subterms heavily (~p is nor p p), so keys are interned ints
    # and every walk is memoised per node.
    if isinstance(t, Var):
        return _intern(("v", t.name, t.ty))
    if isinstance(t, Const):
        return _intern(("c", t.name, t.ty))
    if isinstance(t, App):
        return _intern(("@", t.fun.akey, t.arg.akey))
    return _intern(("\\", t.var.ty, _bound_key(t.body, {t.var: 1}, 1, {})))


def _bound_key(t, env, depth, memo):
    rel = frozenset((v, depth - env[v]) for v in t.fv if v in env)
    if not rel:
        return t.akey
    k = (id(t), rel)
    hit = memo.get(k)
    if hit is not None:
        return hit[1]
    if isinstance(t, Var):
        r = _intern(("b", depth - env[t]))
    elif isinstance(t, App):
        r = _intern(("@", _bound_key(t.fun, env, depth, memo),
                     _bound_key(t.arg, env, depth, memo)))
    else:
        inner = dict(env)
        inner[t.var] = depth + 1
        r = _intern(("\\", t.var.ty, _bound_key(t.body, inner, depth + 1, memo)))
    memo[k] = (t, r)
    return r


def free_vars(t):
    return t.fv


def alpha_eq(s, t):
    return s is t or s.akey == t.akey


def names_in(*terms):
    """All variable names occurring anywhere (free or bound) in ``terms``."""
    out = set()
    stack = list(terms)
    seen = set()
    while stack:
        t = stack.pop()
        if id(t) in seen:
            continue
        seen.add(id(t))
        if isinstance(t, Var):
            out.add(t.name)
        elif isinstance(t, App):
            stack += [t.fun, t.arg]
        elif isinstance(t, Lam):
            out.add(t.var.name)
            stack.append(t.body)
    return out


def fresh_var(v, avoid):
    """A variable of ``v``'s type whose name is ``base$n`` and not in ``avoid``.

    ``avoid`` is a set of names.  Names containing ``$`` are reserved for this
    supply, so the result never clashes with a user identifier.
    """
    base = v.base
    n = 1
    while f"{base}${n}" in avoid:
        n += 1
    return Var(f"{base}${n}", v.ty)


def substitute(p, t, x):
    """``p[t/x]``, renaming binders of ``p`` that would capture free vars of ``t``."""
    return _subst(p, t, x, {})


def _subst(p, t, x, memo):
    if x not in p.fv:
        return p
    hit = memo.get(id(p))
    if hit is not None:
        return hit[1]
    if isinstance(p, Var):
        r = t
    elif isinstance(p, App):
        r = App(_subst(p.fun, t, x, memo), _subst(p.arg, t, x, memo))
    else:
        y, body = p.var, p.body
        if y in t.fv:
            avoid = {v.name for v in t.fv | body.fv} | {x.name}
            y2 = fresh_var(y, avoid)
            body = substitute(body, y2, y)
            y = y2
        r = Lam(y, _subst(body, t, x, memo))
    memo[id(p)] = (p, r)
    return r


def _is_eta_redex(t):
    b = t.body
    return isinstance(b, App) and b.arg == t.var and t.var not in b.fun.fv


def reduct_steps(t):
    """Every term reachable by contracting exactly one beta- or eta-redex.

    Redexes are listed outside-in, left to right: the root first, then the
    function part, then the argument.
    """
    out = []
    if isinstance(t, App):
        if isinstance(t.fun, Lam):
            out.append(substitute(t.fun.body, t.arg, t.fun.var))
        out += [App(f, t.arg) for f in reduct_steps(t.fun)]
        out += [App(t.fun, a) for a in reduct_steps(t.arg)]
    elif isinstance(t, Lam):
        if _is_eta_redex(t):
            out.append(t.body.fun)
        out += [Lam(t.var, b) for b in reduct_steps(t.body)]
    return out


def reduces_one(s, t):
    return any(alpha_eq(u, t) for u in reduct_steps(s))


def _step_lo(t):
    if t.is_normal:
        return None
    if isinstance(t, App):
        if isinstance(t.fun, Lam):
            return substitute(t.fun.body, t.arg, t.fun.var)
        f = _step_lo(t.fun)
        if f is not None:
            return App(f, t.arg)
        a = _step_lo(t.arg)
        if a is not None:
            return App(t.fun, a)
    elif isinstance(t, Lam):
        if _is_eta_redex(t):
            return t.body.fun
        b = _step_lo(t.body)
        if b is not None:
            return Lam(t.var, b)
    return None


def _step_ri(t):
    if t.is_normal:
        return None
    if isinstance(t, App):
        a = _step_ri(t.arg)
        if a is not None:
            return App(t.fun, a)
        f = _step_ri(t.fun)
        if f is not None:
            return App(f, t.arg)
        if isinstance(t.fun, Lam):
            return substitute(t.fun.body, t.arg, t.fun.var)
    elif isinstance(t, Lam):
        b = _step_ri(t.body)
        if b is not None:
            return Lam(t.var, b)
        if _is_eta_redex(t):
            return t.body.fun
    return None


STRATEGIES = {"lo": _step_lo, "ri": _step_ri}


def normalize(t, strategy="lo", fuel=10000):
    """Reduce to beta/eta normal form, leftmost-outermost (``"lo"``) or
    rightmost-innermost (``"ri"``).  Raises FuelExhausted after ``fuel`` steps."""
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    step = STRATEGIES[strategy]
    for _ in range(fuel + 1):
        nxt = step(t)
        if nxt is None:
            return t
        t = nxt
    raise FuelExhausted(fuel, t)
