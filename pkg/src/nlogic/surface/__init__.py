"""Concrete ASCII syntax: prelude files, parsing, elaboration and printing."""

from nlogic.surface.prelude import Prelude
from nlogic.surface.parser import Node, parse_sequent, parse_term, parse_type
from nlogic.surface.elaborate import elaborate, read_sequent, read_term
from nlogic.surface.printer import print_term, print_type

__all__ = [
    "Prelude", "Node", "parse_sequent", "parse_term", "parse_type",
    "elaborate", "read_sequent", "read_term", "print_term", "print_type",
]
