"""Exact rewriting, normal forms and equality decisions for the red-green
graphical calculi: the stabilizer and single-qubit Clifford+T fragments of
the quantum spider calculus, and the toy-bit calculus with relational
semantics."""

from .diagram import (Diagram, adjoint, bend_inputs, compose_par,
                      compose_seq, decompose_to_generators,
                      structurally_equal)
from .gslc import GsLc, Verdict, VerdictKind, diagram_to_gslc, \
    equal_stabilizer, gslc_to_diagram, reduce_to_rgslc, simplify_pair
from .matrix import ExactMatrix, proportional_equal
from .ring import RingScalar
from .rules import Direction, Redex, RuleId, apply, audit_soundness, \
    find_redexes
from .scalars import ScalarNF, nf_inverse, nf_mul, nf_to_diagram, ring_to_nf, \
    zero_nf_diagram
from .semantics import interpret, interpret_j

__all__ = [
    "Diagram", "ExactMatrix", "GsLc", "Redex", "RingScalar", "RuleId",
    "ScalarNF", "Verdict", "VerdictKind", "Direction",
    "adjoint", "apply", "audit_soundness", "bend_inputs", "compose_par",
    "compose_seq", "decompose_to_generators", "diagram_to_gslc",
    "equal_stabilizer", "find_redexes", "gslc_to_diagram", "interpret",
    "interpret_j", "nf_inverse", "nf_mul", "nf_to_diagram",
    "proportional_equal", "reduce_to_rgslc", "ring_to_nf", "simplify_pair",
    "structurally_equal", "zero_nf_diagram",
]
