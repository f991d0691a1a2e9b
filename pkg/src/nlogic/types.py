"""Simple types: ``i`` (individuals), ``o`` (truth values) and function types.

Every function type ends in ``o``; a codomain of ``i`` is rejected at
construction time, so no ill-formed Type value can exist.
"""

from dataclasses import dataclass

from nlogic.errors import InvalidType


class Type:
    __slots__ = ()

    def arity(self):
        n, t = 0, self
        while isinstance(t, Fun):
            n, t = n + 1, t.cod
        return n

    def domains(self):
        out, t = [], self
        while isinstance(t, Fun):
            out.append(t.dom)
            t = t.cod
        return out


@dataclass(frozen=True)
class Base(Type):
    name: str

    def __str__(self):
        return self.name


IOTA = Base("i")
O = Base("o")


@dataclass(frozen=True)
class Fun(Type):
    dom: Type
    cod: Type

    def __post_init__(self):
        if self.cod == IOTA:
            raise InvalidType(f"function type {self.dom} -> i has codomain i")

    def __str__(self):
        dom = f"({self.dom})" if isinstance(self.dom, Fun) else str(self.dom)
        return f"{dom} {self.cod}"


def arrow(*tys):
    """``arrow(t1, ..., tn, s)`` is ``t1 (... (tn s))``."""
    *doms, result = tys
    for d in reversed(doms):
        result = Fun(d, result)
    return result


def is_predicate_type(ty):
    return ty == O or isinstance(ty, Fun)
