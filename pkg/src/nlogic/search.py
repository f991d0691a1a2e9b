"""Bounded backward proof search.

Iterative deepening over the rules in a fixed order: axioms, PLeft, QRight,
contraction, exchange, then (paper mode only) reverse thinning.  ThinAdd is
never run backwards.  A branch never revisits an alpha-equal sequent.
Running out of budget returns None, which is not a disproof.
"""

from dataclasses import dataclass

from nlogic.abbrev import match_nor
from nlogic.calculus import Mode, ProofNode, RuleApp, RuleError, Sequent, check_rule_app, nex_of
from nlogic.term import App, Var, alpha_eq, fresh_var, names_in


@dataclass(frozen=True)
class SearchBudget:
    depth: int = 8
    node_limit: int = 200_000

    def __post_init__(self):
        if self.depth < 1 or self.node_limit < 1:
            raise ValueError("depth and node_limit must be at least 1")


class _OutOfNodes(Exception):
    pass


class Prover:
    def __init__(self, budget, mode):
        self.budget = budget
        self.mode = mode
        self.explored = 0

    def _visit(self):
        if self.explored >= self.budget.node_limit:
            raise _OutOfNodes
        self.explored += 1

    def axiom(self, goal):
        for name in ("S", "PRightAx", "QLeftAx", "NAx"):
            try:
                check_rule_app(goal, RuleApp(name), [], self.mode)
            except RuleError:
                continue
            return ProofNode(goal, RuleApp(name))
        return None

    def backward(self, goal):
        """Yield ``(rule, premise)`` candidates in the fixed rule order."""
        L, R = goal.left, goal.right
        if L:
            m = match_nor(L[0])
            if m is not None:
                yield RuleApp("PLeft"), Sequent(L[1:], R + m)
        if R:
            m = nex_of(R[-1])
            if m is not None:
                ty, p = m
                avoid = names_in(*goal.formulas())
                x = fresh_var(Var("x", ty), avoid)
                yield RuleApp("QRight", eigen=x), Sequent((App(p, x),) + L, R[:-1])
        if L:
            yield RuleApp("ContrL"), Sequent(L[:1] + L, R)
        if R:
            yield RuleApp("ContrR"), Sequent(L, R + R[-1:])
        for i in range(len(L) - 1):
            yield RuleApp("ExchL", pos=i), Sequent(L[:i] + (L[i + 1], L[i]) + L[i + 2:], R)
        for i in range(len(R) - 1):
            yield RuleApp("ExchR", pos=i), Sequent(L, R[:i] + (R[i + 1], R[i]) + R[i + 2:])
        if self.mode == Mode.PAPER:
            for p in _drop_candidates(goal):
                yield RuleApp("ThinDropL"), Sequent((p,) + L, R)
            for p in _drop_candidates(goal):
                yield RuleApp("ThinDropR"), Sequent(L, R + (p,))

    def dfs(self, goal, depth, seen):
        self._visit()
        node = self.axiom(goal)
        if node is not None:
            return node
        if depth <= 1:
            return None
        seen = seen | {goal.key}
        for rule, premise in self.backward(goal):
            if premise.key in seen:
                continue
            sub = self.dfs(premise, depth - 1, seen)
            if sub is not None:
                return ProofNode(goal, rule, (sub,))
        return None


def _drop_candidates(goal):
    """Formulas a reverse thinning may reintroduce: the immediate operands of
    ``nor`` formulas in the goal, deduplicated up to alpha, in order."""
    out = []
    for f in goal.formulas():
        m = match_nor(f)
        if m is None:
            continue
        for p in m:
            if not any(alpha_eq(p, q) for q in out):
                out.append(p)
    return out


def prove(goal, budget=SearchBudget(), mode=Mode.STRICT):
    """Return a ProofNode for ``goal`` or None if none is found within budget."""
    return prove_with_stats(goal, budget, mode)[0]


def prove_with_stats(goal, budget=SearchBudget(), mode=Mode.STRICT):
    """Like :func:`prove` but also return the number of nodes visited."""
    prover = Prover(budget, mode)
    try:
        for depth in range(1, budget.depth + 1):
            node = prover.dfs(goal, depth, frozenset())
            if node is not None:
                return node, prover.explored
    except _OutOfNodes:
        pass
    return None, prover.explored
