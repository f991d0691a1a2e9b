import re
from dataclasses import dataclass

from nlogic.errors import NLSyntaxError

# Longest tokens first; "\/" must beat the lambda backslash.
_SYMBOLS = [
    "<->", "->", "\\/", "/\\", ".!=", ".=", "===", "!==", "!=", "|-",
    "=", "~", "\\", ".", "'", "(", ")", ":", ",", "[", "]",
]
_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:\$\d+)?)|(?P<sym>"
    + "|".join(re.escape(s) for s in _SYMBOLS)
    + r"))"
)
KEYWORDS = {"ex", "all", "true", "false", "nor", "nex", "i", "o"}


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "kw", "sym" or "eof"
    text: str
    start: int
    end: int

    @property
    def span(self):
        return (self.start, self.end)


def tokenize(text):
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise NLSyntaxError(f"unexpected character {text[pos]!r}", (pos, pos + 1))
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "ident" and value in KEYWORDS:
            kind = "kw"
        out.append(Token(kind, value, start, m.end()))
        pos = m.end()
    out.append(Token("eof", "", len(text), len(text)))
    return out
