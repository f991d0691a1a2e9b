"""Theory preludes: typed declarations of free variables and constants.

File format, one declaration per line::

    # comment
    var p : o
    const c : i o
"""

import re

from nlogic.errors import NLError, NLSyntaxError
from nlogic.term import Const, Var

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
RESERVED = {"ex", "all", "true", "false", "nor", "nex", "i", "o"}


class Prelude:
    def __init__(self, decls=()):
        self._decls = {}
        for kind, name, ty in decls:
            self.declare(kind, name, ty)

    def declare(self, kind, name, ty, *, allow_fresh=False):
        if kind not in ("var", "const"):
            raise NLError(f"unknown declaration kind {kind!r}")
        ok = _NAME.match(name) or (allow_fresh and re.match(r"^[A-Za-z_]\w*\$\d+$", name))
        if not ok or name in RESERVED:
            raise NLError(f"invalid or reserved name {name!r}")
        if name in self._decls:
            if self._decls[name] == (kind, ty):
                return
            raise NLError(f"duplicate declaration of {name!r}")
        self._decls[name] = (kind, ty)

    def extended(self, variables):
        """A copy with extra free variables (e.g. eigenvariables) in scope."""
        new = Prelude(self.decls)
        for v in variables:
            new.declare("var", v.name, v.ty, allow_fresh=True)
        return new

    @property
    def decls(self):
        return [(k, n, t) for n, (k, t) in self._decls.items()]

    def lookup(self, name):
        hit = self._decls.get(name)
        if hit is None:
            return None
        kind, ty = hit
        return Var(name, ty) if kind == "var" else Const(name, ty)

    def __contains__(self, name):
        return name in self._decls

    def variables(self):
        return [Var(n, t) for k, n, t in self.decls if k == "var"]

    def to_text(self):
        from nlogic.surface.printer import print_type
        return "".join(f"{k} {n} : {print_type(t)}\n" for k, n, t in self.decls)

    @classmethod
    def parse(cls, text):
        from nlogic.surface.parser import parse_type
        prelude = cls()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            m = re.match(r"^(var|const)\s+(\S+)\s*:\s*(.+)$", line)
            if m is None:
                raise NLSyntaxError(f"line {lineno}: expected 'var|const <name> : <type>'")
            kind, name, tytext = m.groups()
            try:
                prelude.declare(kind, name, parse_type(tytext))
            except NLError as e:
                raise type(e)(f"line {lineno}: {e}") from None
        return prelude

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.parse(fh.read())
