"""Regenerate golden/*.json and mutated/*.json.

Golden proofs are built here (the excluded-middle proof by the prover) and
written with dump_proof; each mutant changes exactly one node of a golden
proof, or the file's mode.
"""

import copy
import json
import os
import sys

from nlogic.calculus import Mode, ProofNode, RuleApp, Sequent, check_proof
from nlogic.proofio import dump_proof
from nlogic.search import SearchBudget, prove
from nlogic.surface import Prelude, read_sequent
from nlogic.term import Var
from nlogic.types import IOTA

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GOLDEN = os.path.join(ROOT, "golden")
MUTATED = os.path.join(ROOT, "mutated")
PRELUDE_PATH = os.path.join(GOLDEN, "theory.prelude")


def seq(text, prelude):
    return Sequent(*read_sequent(text, prelude))


def golden_proofs(prelude):
    out = {}
    for name, text, mode, depth in [
        ("identity", "p |- p", Mode.STRICT, 4),
        ("p_right_axiom", "|- p, q, nor p q", Mode.STRICT, 4),
        ("q_left_axiom", "nex f, f t |-", Mode.STRICT, 4),
        ("n_axiom", "|- 0 = 0 <-> 0 .= 0", Mode.STRICT, 4),
        ("excluded_middle", "|- p \\/ ~p", Mode.PAPER, 8),
    ]:
        node = prove(seq(text, prelude), SearchBudget(depth, 200_000), mode)
        assert node is not None, name
        out[name] = (node, mode)

    # Hand-built: the right Q rule with a context formula.
    x = Var("x", IOTA)
    scope = prelude.extended([x])
    ax = ProofNode(seq("nex f, f x |-", scope), RuleApp("QLeftAx"))
    e1 = ProofNode(seq("f x, nex f |-", scope), RuleApp("ExchL", pos=0), [ax])
    th = ProofNode(seq("f t, f x, nex f |-", scope), RuleApp("ThinAddL"), [e1])
    e2 = ProofNode(seq("f x, f t, nex f |-", scope), RuleApp("ExchL", pos=0), [th])
    root = ProofNode(seq("f t, nex f |- nex f", scope), RuleApp("QRight", eigen=x), [e2])
    out["q_right"] = (root, Mode.STRICT)
    return out


def _node_at(doc, path):
    node = doc["root"]
    for i in path:
        node = node["premises"][i]
    return node


def mutants(name, doc):
    """Yield ``(suffix, mutated_doc)`` pairs, each a single change."""
    def mutate(suffix, path, fn):
        d = copy.deepcopy(doc)
        fn(_node_at(d, path))
        return suffix, d

    def set_rule(rule_name):
        def fn(n):
            n["rule"]["name"] = rule_name
        return fn

    def set_formula(side, index, text):
        def fn(n):
            n["sequent"][side][index] = text
        return fn

    if name == "identity":
        yield mutate("rule_tag", (), set_rule("PRightAx"))
        yield mutate("formula", (), set_formula("right", 0, "q"))
    elif name == "p_right_axiom":
        yield mutate("broken", (), set_formula("right", 2, "nor q p"))
        yield mutate("order", (), lambda n: n["sequent"].update(right=["q", "p", "nor p q"]))
        yield mutate("rule_tag", (), set_rule("S"))
    elif name == "q_left_axiom":
        yield mutate("formula", (), set_formula("left", 1, "g t"))
        yield mutate("rule_tag", (), set_rule("QRight"))
    elif name == "n_axiom":
        yield mutate("orientation", (), set_formula("right", 0, "0 .= 0 <-> 0 = 0"))
        yield mutate("rule_tag", (), set_rule("S"))
        yield mutate("formula", (), set_formula("right", 0, "0 = 1 <-> 0 .= 0"))
    elif name == "excluded_middle":
        d = copy.deepcopy(doc)
        d["mode"] = "strict"
        yield "strict_mode", d
        path = ()
        node = doc["root"]
        while node["premises"]:
            rule = node["rule"]["name"]
            if rule in ("ExchL", "ExchR"):
                p = path
                yield mutate(f"exch_pos_{len(p)}", p,
                             lambda n: n["rule"].update(pos=n["rule"]["pos"] + 1))
            elif rule == "ContrR":
                yield mutate("rule_tag", path, lambda n: n["rule"].update(name="ContrL"))
            path += (0,)
            node = node["premises"][0]
        yield mutate("formula", path, set_formula("right", 0, "q"))
    elif name == "q_right":
        # Rename the eigenvariable everywhere to t, which is free in the context.
        d = json.loads(json.dumps(doc).replace("f x", "f t").replace('"x:i"', '"t:i"'))
        yield "eigen_captured", d
        yield mutate("rule_tag", (), set_rule("ThinAddR"))


def main():
    prelude = Prelude.load(PRELUDE_PATH)
    os.makedirs(MUTATED, exist_ok=True)
    for name, (root, mode) in golden_proofs(prelude).items():
        assert check_proof(root, mode).valid, name
        path = os.path.join(GOLDEN, f"{name}.json")
        dump_proof(root, mode, path, PRELUDE_PATH)
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        for suffix, mdoc in mutants(name, doc):
            mdoc["prelude"] = os.path.relpath(PRELUDE_PATH, MUTATED)
            with open(os.path.join(MUTATED, f"{name}_{suffix}.json"), "w", encoding="utf-8") as fh:
                json.dump(mdoc, fh, indent=2)
                fh.write("\n")
        print(f"wrote {name}", file=sys.stderr)


if __name__ == "__main__":
    main()
