"""Sequents, rule instances and proof checking for the seven-rule calculus.

Rules (premise above, conclusion below; axioms have no premise):

    S       p |- q                        p ~ q, or p one beta/eta step to q
    T       G |- D  ==>  p,G |- D   /  G |- D,p      (thinning; reverse = ThinDrop*)
    E       T,p,q,G |- D  ==>  T,q,p,G |- D          (and mirrored on the right)
    C       p,p,G |- D  ==>  p,G |- D                (and G |- D,p,p ==> G |- D,p)
    P       G |- D,p,q  ==>  nor p q,G |- D          axiom: |- p,q,nor p q
    Q       axiom: nex p, p t |-                     px,G |- D ==> G |- D,nex p
    N       axiom: |- p = q <-> p .= q

Every comparison between formulas is up to alpha.  Axioms take no context.
"""

import enum
from dataclasses import dataclass, field

from nlogic.abbrev import match_n_axiom, match_nor
from nlogic.term import App, Const, Var, alpha_eq, reduces_one
from nlogic.typecheck import has_type, is_formula, try_structural_type
from nlogic.types import Fun, O


class Mode(enum.Enum):
    STRICT = "strict"
    PAPER = "paper"


RULES = (
    "S", "ThinAddL", "ThinAddR", "ThinDropL", "ThinDropR", "ExchL", "ExchR",
    "ContrL", "ContrR", "PLeft", "PRightAx", "QLeftAx", "QRight", "NAx",
)
AXIOMS = {"S", "PRightAx", "QLeftAx", "NAx"}


@dataclass(frozen=True)
class Sequent:
    left: tuple = ()
    right: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    @property
    def key(self):
        """Hashable alpha-canonical form."""
        return (tuple(t.akey for t in self.left), tuple(t.akey for t in self.right))

    def formulas(self):
        return self.left + self.right

    def free_vars(self):
        out = set()
        for t in self.formulas():
            out |= t.fv
        return out


@dataclass(frozen=True)
class RuleApp:
    name: str
    pos: int = None
    eigen: Var = None

    def __post_init__(self):
        if self.name not in RULES:
            raise ValueError(f"unknown rule {self.name!r}")

    @property
    def arity(self):
        return 0 if self.name in AXIOMS else 1


@dataclass(frozen=True)
class ProofNode:
    sequent: Sequent
    rule: RuleApp
    premises: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))


class RuleError(Exception):
    KINDS = ("ShapeMismatch", "EigenvariableViolation", "ModeForbidden",
             "NotAnAxiomInstance", "ArityMismatch", "IllFormedSequent")

    def __init__(self, kind, detail):
        assert kind in self.KINDS
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


def wf_sequent(s):
    return all(is_formula(t) for t in s.formulas())


def _same(xs, ys):
    return len(xs) == len(ys) and all(alpha_eq(a, b) for a, b in zip(xs, ys))


def _shape(ok, detail):
    if not ok:
        raise RuleError("ShapeMismatch", detail)


def _axiom(ok, detail):
    if not ok:
        raise RuleError("NotAnAxiomInstance", detail)


def check_rule_app(conclusion, rule, premises, mode=Mode.STRICT):
    """Raise RuleError unless ``premises / conclusion`` is an instance of ``rule``."""
    if len(premises) != rule.arity:
        raise RuleError("ArityMismatch",
                        f"{rule.name} takes {rule.arity} premise(s), got {len(premises)}")
    for s in (conclusion, *premises):
        if not wf_sequent(s):
            raise RuleError("IllFormedSequent", "every member of a sequent must be a formula")
    _CHECKS[rule.name](conclusion, rule, premises[0] if premises else None, mode)


def _check_s(c, rule, _, mode):
    _axiom(len(c.left) == 1 and len(c.right) == 1, "S needs exactly p |- q")
    p, q = c.left[0], c.right[0]
    _axiom(alpha_eq(p, q) or reduces_one(p, q),
           "q is neither an alpha-variant nor a one-step reduct of p")


def _check_thin_add_l(c, rule, prem, mode):
    _shape(len(c.left) >= 1 and _same(c.left[1:], prem.left) and _same(c.right, prem.right),
           "conclusion must be the premise with one formula added at the left end")


def _check_thin_add_r(c, rule, prem, mode):
    _shape(len(c.right) >= 1 and _same(c.right[:-1], prem.right) and _same(c.left, prem.left),
           "conclusion must be the premise with one formula added at the right end")


def _needs_paper(rule, mode):
    if mode != Mode.PAPER:
        raise RuleError("ModeForbidden", f"{rule.name} (reverse thinning) needs paper mode")


def _check_thin_drop_l(c, rule, prem, mode):
    _needs_paper(rule, mode)
    _check_thin_add_l(prem, rule, c, mode)


def _check_thin_drop_r(c, rule, prem, mode):
    _needs_paper(rule, mode)
    _check_thin_add_r(prem, rule, c, mode)


def _swapped(concl, prem, pos):
    _shape(pos is not None and 0 <= pos < len(concl) - 1,
           f"exchange position {pos} out of range")
    swapped = concl[:pos] + (concl[pos + 1], concl[pos]) + concl[pos + 2:]
    _shape(_same(swapped, prem), f"premise is not the conclusion with {pos},{pos + 1} swapped")


def _check_exch_l(c, rule, prem, mode):
    _shape(_same(c.right, prem.right), "right side must be unchanged")
    _swapped(c.left, prem.left, rule.pos)


def _check_exch_r(c, rule, prem, mode):
    _shape(_same(c.left, prem.left), "left side must be unchanged")
    _swapped(c.right, prem.right, rule.pos)


def _check_contr_l(c, rule, prem, mode):
    _shape(len(c.left) >= 1 and _same(prem.left, c.left[:1] + c.left)
           and _same(c.right, prem.right),
           "premise must repeat the first left formula")


def _check_contr_r(c, rule, prem, mode):
    _shape(len(c.right) >= 1 and _same(prem.right, c.right + c.right[-1:])
           and _same(c.left, prem.left),
           "premise must repeat the last right formula")


def _check_p_left(c, rule, prem, mode):
    m = match_nor(c.left[0]) if c.left else None
    _shape(m is not None, "first left formula must be nor p q")
    p, q = m
    _shape(_same(c.left[1:], prem.left) and _same(prem.right, c.right + (p, q)),
           "premise must be G |- D,p,q")


def _check_p_right_ax(c, rule, _, mode):
    _axiom(not c.left and len(c.right) == 3, "PRightAx needs exactly |- p,q,nor p q")
    p, q, r = c.right
    m = match_nor(r)
    _axiom(m is not None and alpha_eq(m[0], p) and alpha_eq(m[1], q),
           "third formula must be nor p q")


def nex_of(t):
    """``(tau, p)`` if ``t`` is ``nex[tau] p``."""
    if isinstance(t, App) and isinstance(t.fun, Const) and t.fun.nex_arg is not None:
        return t.fun.nex_arg, t.arg
    return None


def _check_q_left_ax(c, rule, _, mode):
    _axiom(not c.right and len(c.left) == 2, "QLeftAx needs exactly nex p, p t |-")
    m = nex_of(c.left[0])
    _axiom(m is not None, "first formula must be nex p")
    ty, p = m
    _axiom(try_structural_type(p) == Fun(ty, O), f"p must have structural type {ty} o")
    second = c.left[1]
    _axiom(isinstance(second, App) and alpha_eq(second.fun, p), "second formula must be p t")
    _axiom(has_type(second.arg, ty), f"t must have type {ty}")


def _check_q_right(c, rule, prem, mode):
    m = nex_of(c.right[-1]) if c.right else None
    _shape(m is not None, "last right formula must be nex p")
    ty, p = m
    x = rule.eigen
    _shape(x is not None and x.ty == ty, f"eigenvariable must have type {ty}")
    _shape(len(prem.left) >= 1 and alpha_eq(prem.left[0], App(p, x)),
           "first premise formula must be p x")
    _shape(_same(prem.left[1:], c.left) and _same(prem.right, c.right[:-1]),
           "premise must be p x,G |- D")
    if x in p.fv:
        raise RuleError("EigenvariableViolation", f"{x.name} is free in p")
    for t in c.left + c.right[:-1]:
        if x in t.fv:
            raise RuleError("EigenvariableViolation", f"{x.name} is free in the context")


def _check_n_ax(c, rule, _, mode):
    _axiom(not c.left and len(c.right) == 1, "NAx needs exactly |- p = q <-> p .= q")
    _axiom(match_n_axiom(c.right[0]) is not None, "formula is not p = q <-> p .= q")


_CHECKS = {
    "S": _check_s,
    "ThinAddL": _check_thin_add_l,
    "ThinAddR": _check_thin_add_r,
    "ThinDropL": _check_thin_drop_l,
    "ThinDropR": _check_thin_drop_r,
    "ExchL": _check_exch_l,
    "ExchR": _check_exch_r,
    "ContrL": _check_contr_l,
    "ContrR": _check_contr_r,
    "PLeft": _check_p_left,
    "PRightAx": _check_p_right_ax,
    "QLeftAx": _check_q_left_ax,
    "QRight": _check_q_right,
    "NAx": _check_n_ax,
}


@dataclass
class NodeResult:
    path: tuple
    rule: str
    error: RuleError = None

    @property
    def ok(self):
        return self.error is None


@dataclass
class Report:
    mode: Mode
    nodes: list = field(default_factory=list)

    @property
    def valid(self):
        return all(n.ok for n in self.nodes)

    def failures(self):
        return [n for n in self.nodes if not n.ok]

    def to_json(self):
        return {
            "valid": self.valid,
            "mode": self.mode.value,
            "nodes": [
                {
                    "path": list(n.path),
                    "rule": n.rule,
                    "ok": n.ok,
                    "error": None if n.ok else {"kind": n.error.kind, "detail": n.error.detail},
                }
                for n in self.nodes
            ],
        }

    def to_text(self):
        lines = []
        for n in self.nodes:
            where = "/".join(map(str, n.path)) or "root"
            verdict = "ok" if n.ok else f"FAIL {n.error.kind}: {n.error.detail}"
            lines.append(f"{where} {n.rule} {verdict}")
        lines.append("VALID" if self.valid else "INVALID")
        return "\n".join(lines)


def check_node(node, mode=Mode.STRICT):
    try:
        check_rule_app(node.sequent, node.rule, [p.sequent for p in node.premises], mode)
    except RuleError as e:
        return e
    return None


def check_proof(root, mode=Mode.STRICT):
    """Check every node independently; results are listed in preorder."""
    report = Report(mode)
    stack = [((), root)]
    while stack:
        path, node = stack.pop()
        report.nodes.append(NodeResult(path, node.rule.name, check_node(node, mode)))
        for i in reversed(range(len(node.premises))):
            stack.append((path + (i,), node.premises[i]))
    return report
