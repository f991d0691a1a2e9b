import os
import random
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from nlogic.abbrev import match_n_axiom, numeral, ZERO
from nlogic.calculus import (
    AXIOMS, RULES, Mode, ProofNode, RuleApp, RuleError, Sequent, check_proof,
    check_rule_app, wf_sequent,
)
from nlogic.proofio import load_proof
from nlogic.surface import read_term
from nlogic.term import Var, alpha_eq, substitute
from nlogic.types import IOTA, O, Fun

from proofgen import GOLDEN_DIR, build_exchange_proof, golden_files, replace_at, shuffled, walk
from rule_fixtures import FIXTURES, PRELUDE, build, fixture_id, sequent
from termgen import rename_binders


def verdict(conclusion, rule, premises, mode):
    try:
        check_rule_app(conclusion, rule, premises, mode)
    except RuleError as e:
        return e.kind
    return None


@pytest.mark.parametrize("fx", FIXTURES, ids=fixture_id)
def test_rule_fixture(fx):
    c, r, ps, mode, expected = build(fx)
    assert verdict(c, r, ps, mode) == expected


def test_every_group_has_three_of_each():
    for g in "STECPQN":
        acc = [f for f in FIXTURES if f[0] == g and f[7] is None]
        rej = [f for f in FIXTURES if f[0] == g and f[7] is not None]
        assert len(acc) >= 3 and len(rej) >= 3, g


def test_fixtures_cover_every_rule():
    assert {f[2] for f in FIXTURES} == set(RULES)


# -- the N axiom matcher

def test_match_n_axiom_zero():
    f = read_term("0 = 0 <-> 0 .= 0", PRELUDE)
    p, q, ty = match_n_axiom(f)
    assert alpha_eq(p, ZERO) and alpha_eq(q, ZERO)
    assert ty == Fun(IOTA, O)


def test_match_n_axiom_distinct_numerals():
    p, q, ty = match_n_axiom(read_term("1 = 2 <-> 1 .= 2", PRELUDE))
    assert alpha_eq(p, numeral(1)) and alpha_eq(q, numeral(2))


@pytest.mark.parametrize("text", [
    "p <-> p",
    "0 .= 0 <-> 0 = 0",
    "0 = 0 <-> 0 .= 1",
    "0 = 0 -> 0 .= 0",
    "a = b <-> b .= a",
])
def test_match_n_axiom_rejects(text):
    assert match_n_axiom(read_term(text, PRELUDE)) is None


# -- well-formed sequents

@pytest.mark.parametrize("text,ok", [
    ("p |- q", True),
    ("|-", True),
    ("nex f, f a |- 0 = 0", True),
    ("a |- p", False),
    ("p |- f", False),
    ("0 |-", False),
])
def test_wf_sequent(text, ok):
    assert wf_sequent(sequent(text)) is ok


def test_ill_formed_sequent_is_rejected():
    assert verdict(sequent("a |- a"), RuleApp("S"), [], Mode.STRICT) == "IllFormedSequent"


def test_unknown_rule_name():
    with pytest.raises(ValueError):
        RuleApp("Cut")


# -- reports

def _exchange_example():
    ax = ProofNode(sequent("p |- p"), RuleApp("S"))
    th = ProofNode(sequent("q, p |- p"), RuleApp("ThinAddL"), (ax,))
    return ProofNode(sequent("p, q |- p"), RuleApp("ExchL", pos=0), (th,))


def test_report_lists_nodes_in_preorder():
    rep = check_proof(_exchange_example())
    assert rep.valid
    assert [(n.path, n.rule) for n in rep.nodes] == [
        ((), "ExchL"), ((0,), "ThinAddL"), ((0, 0), "S")]
    assert rep.to_text().splitlines()[-1] == "VALID"


def test_report_pinpoints_failing_node():
    bad = replace_at(_exchange_example(), (), lambda n: replace(n, rule=RuleApp("ExchL", pos=1)))
    rep = check_proof(bad)
    assert not rep.valid
    [f] = rep.failures()
    assert f.path == () and f.error.kind == "ShapeMismatch"
    doc = rep.to_json()
    assert doc["valid"] is False and doc["mode"] == "strict"
    assert doc["nodes"][0]["error"]["kind"] == "ShapeMismatch"
    assert doc["nodes"][1]["error"] is None
    assert "FAIL ShapeMismatch" in rep.to_text()


def test_report_is_deterministic():
    for path in golden_files():
        root, mode, _ = load_proof(path)
        assert check_proof(root, mode).to_json() == check_proof(root, mode).to_json()
        root2, _, _ = load_proof(path)
        assert check_proof(root2, mode).to_text() == check_proof(root, mode).to_text()


# -- invariants

FORMULAS = ["p", "q", "r", "nor p q", "ex y:i. f y", "a .= b"]


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_exchange_closure(n, rng):
    fs = [read_term(t, PRELUDE) for t in FORMULAS[:n]]
    perm = shuffled(n, rng)
    root = build_exchange_proof(fs, perm, _thin_to(fs))
    assert check_proof(root).valid
    assert [str(t) for t in root.sequent.left] == [str(fs[i]) for i in perm]


def _thin_to(fs):
    """Proof of ``fs |- fs[-1]`` by S and ThinAddL."""
    node = ProofNode(Sequent([fs[-1]], [fs[-1]]), RuleApp("S"))
    for k in range(len(fs) - 2, -1, -1):
        node = ProofNode(Sequent(fs[k:], [fs[-1]]), RuleApp("ThinAddL"), (node,))
    return node


# Removing one copy of a duplicated formula is both a contraction and, in
# paper mode, a reverse thinning, so these tag swaps are not mutations.
SAME_INFERENCE = {("ContrL", "ThinDropL"), ("ContrR", "ThinDropR"),
                  ("ThinDropL", "ContrL"), ("ThinDropR", "ContrR")}


def _mutants(root):
    """Single-node mutations that must each be rejected somewhere in the tree."""
    q, p = read_term("q", PRELUDE), read_term("p", PRELUDE)
    for path, node in walk(root):
        for name in RULES:
            if name != node.rule.name and (node.rule.name, name) not in SAME_INFERENCE:
                yield f"{path} tag {name}", replace_at(
                    root, path, lambda n, name=name: replace(n, rule=replace(n.rule, name=name)))
        if node.rule.pos is not None:
            for d in (-1, 1):
                yield f"{path} pos {d}", replace_at(
                    root, path, lambda n, d=d: replace(n, rule=replace(n.rule, pos=n.rule.pos + d)))
        forms = node.sequent.formulas()
        for i, t in enumerate(forms):
            new = p if alpha_eq(t, q) else q
            nl = len(node.sequent.left)

            def swap(n, i=i, new=new, nl=nl):
                L, R = list(n.sequent.left), list(n.sequent.right)
                if i < nl:
                    L[i] = new
                else:
                    R[i - nl] = new
                return replace(n, sequent=Sequent(L, R))
            yield f"{path} formula {i}", replace_at(root, path, swap)


@pytest.mark.parametrize("path", golden_files(), ids=lambda p: p.rsplit("/", 1)[-1])
def test_golden_mutations_are_rejected(path):
    root, mode, _ = load_proof(path)
    assert check_proof(root, mode).valid
    count = 0
    for label, mutant in _mutants(root):
        count += 1
        assert not check_proof(mutant, mode).valid, label
    assert count > 0


def test_captured_eigenvariable_is_rejected():
    root, mode, _ = load_proof(os.path.join(GOLDEN_DIR, "q_right.json"))
    t = Var("t", IOTA)
    assert root.rule.name == "QRight"
    x = root.rule.eigen

    def rename(node):
        seq = Sequent([substitute(f, t, x) for f in node.sequent.left],
                      [substitute(f, t, x) for f in node.sequent.right])
        rule = replace(node.rule, eigen=t) if node.rule.eigen == x else node.rule
        return ProofNode(seq, rule, tuple(rename(p) for p in node.premises))
    rep = check_proof(rename(root), mode)
    assert [f.error.kind for f in rep.failures()] == ["EigenvariableViolation"]


@pytest.mark.parametrize("fx", FIXTURES, ids=fixture_id)
def test_mode_monotonicity(fx):
    c, r, ps, _, _ = build(fx)
    if verdict(c, r, ps, Mode.STRICT) is None:
        assert verdict(c, r, ps, Mode.PAPER) is None


def test_golden_strict_proofs_valid_in_paper_mode():
    for path in golden_files():
        root, mode, _ = load_proof(path)
        if mode == Mode.STRICT:
            assert check_proof(root, Mode.PAPER).valid


@pytest.mark.parametrize("fx", [f for f in FIXTURES if f[2] in AXIOMS and f[7] is None],
                         ids=fixture_id)
@pytest.mark.parametrize("side", ["left", "right"])
def test_axioms_take_no_context(fx, side):
    c, r, ps, mode, _ = build(fx)
    extra = read_term("r", PRELUDE)
    wider = Sequent(c.left + (extra,), c.right) if side == "left" \
        else Sequent(c.left, (extra,) + c.right)
    assert verdict(wider, r, ps, mode) == "NotAnAxiomInstance"


def _rename_sequent(s, rng):
    return Sequent([rename_binders(t, rng) for t in s.left],
                   [rename_binders(t, rng) for t in s.right])


@pytest.mark.parametrize("fx", FIXTURES, ids=fixture_id)
def test_alpha_invariance(fx):
    c, r, ps, mode, expected = build(fx)
    rng = random.Random(fixture_id(fx))
    for _ in range(3):
        c2 = _rename_sequent(c, rng)
        ps2 = [_rename_sequent(s, rng) for s in ps]
        assert verdict(c2, r, ps2, mode) == expected
