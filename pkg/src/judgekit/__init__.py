"""Finite judgemental theories.

A small kernel for working with explicit finite categories, Grothendieck
fibrations over a context category, and the deduction rules (dependent
types, sequent-style entailment) that arise from finite-limit
constructions on them.
"""

__version__ = "0.1.0"
