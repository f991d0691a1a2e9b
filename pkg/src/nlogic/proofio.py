"""JSON proof files.

Layout::

    {"prelude": "theory.prelude" | null,
     "mode": "strict" | "paper",
     "root": {"sequent": {"left": [...], "right": [...]},
              "rule": {"name": "ExchL", "pos": 0, "eigen": "x:i"},
              "premises": [...]}}

Formulas are surface syntax read against the prelude, whose path is relative
to the proof file.  Eigenvariables named in ``rule.eigen`` are in scope for
every formula of the file.
"""

import json
import os

from nlogic.calculus import RULES, Mode, ProofNode, RuleApp, Sequent
from nlogic.errors import NLError
from nlogic.surface import Prelude, parse_type, print_term, print_type, read_term
from nlogic.term import Var


class ProofFormatError(NLError):
    pass


def _parse_eigen(text):
    name, sep, ty = text.partition(":")
    if not sep:
        raise ProofFormatError(f"eigenvariable {text!r} must be 'name:type'")
    return Var(name.strip(), parse_type(ty))


def _collect_eigen(node, out):
    if not isinstance(node, dict):
        raise ProofFormatError("proof node must be an object")
    rule = node.get("rule") or {}
    if isinstance(rule, dict) and rule.get("eigen"):
        out.append(_parse_eigen(rule["eigen"]))
    for p in node.get("premises", []):
        _collect_eigen(p, out)
    return out


def _read_node(obj, prelude):
    try:
        seq = obj["sequent"]
        rule = obj["rule"]
        name = rule["name"]
    except (KeyError, TypeError) as e:
        raise ProofFormatError(f"malformed proof node: missing {e}") from None
    if name not in RULES:
        raise ProofFormatError(f"unknown rule {name!r}")
    pos = rule.get("pos")
    if pos is not None and not isinstance(pos, int):
        raise ProofFormatError("rule.pos must be an integer")
    eigen = _parse_eigen(rule["eigen"]) if rule.get("eigen") else None
    left = [read_term(t, prelude) for t in seq.get("left", [])]
    right = [read_term(t, prelude) for t in seq.get("right", [])]
    premises = [_read_node(p, prelude) for p in obj.get("premises", [])]
    return ProofNode(Sequent(left, right), RuleApp(name, pos, eigen), premises)


def load_prelude(path):
    if not path or (os.path.basename(path) == "empty" and not os.path.exists(path)):
        return Prelude()
    return Prelude.load(path)


def read_proof(doc, base_dir="."):
    """Return ``(root, mode, prelude)`` from a decoded JSON document."""
    if not isinstance(doc, dict) or "root" not in doc:
        raise ProofFormatError("proof file needs a top-level 'root'")
    prelude_path = doc.get("prelude")
    if prelude_path:
        prelude_path = os.path.join(base_dir, prelude_path)
    prelude = load_prelude(prelude_path)
    try:
        mode = Mode(doc.get("mode", "strict"))
    except ValueError:
        raise ProofFormatError(f"unknown mode {doc.get('mode')!r}") from None
    eigen = _collect_eigen(doc["root"], [])
    prelude = prelude.extended(eigen)
    return _read_node(doc["root"], prelude), mode, prelude


def load_proof(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ProofFormatError(f"invalid JSON: {e}") from None
    return read_proof(doc, os.path.dirname(os.path.abspath(path)))


def node_to_json(node):
    rule = {"name": node.rule.name}
    if node.rule.pos is not None:
        rule["pos"] = node.rule.pos
    if node.rule.eigen is not None:
        rule["eigen"] = f"{node.rule.eigen.name}:{print_type(node.rule.eigen.ty)}"
    return {
        "sequent": {
            "left": [print_term(t, resugar=True) for t in node.sequent.left],
            "right": [print_term(t, resugar=True) for t in node.sequent.right],
        },
        "rule": rule,
        "premises": [node_to_json(p) for p in node.premises],
    }


def proof_to_json(root, mode, prelude_path=None):
    return {"prelude": prelude_path, "mode": mode.value, "root": node_to_json(root)}


def dump_proof(root, mode, path, prelude_path=None):
    """Write ``root`` to ``path``; ``prelude_path`` is stored relative to it."""
    if prelude_path is not None:
        prelude_path = os.path.relpath(os.path.abspath(prelude_path),
                                       os.path.dirname(os.path.abspath(path)))
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(proof_to_json(root, mode, prelude_path), fh, indent=2)
        fh.write("\n")
