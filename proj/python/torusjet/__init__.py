"""Finite-difference calculus and Whitney jets for lattice functions on the torus."""

from ._core import (
    DegenerateInput,
    InvalidInput,
    LatticeFunction,
    build_jet,
    constant_report,
    extend,
    random_function,
    seminorm,
    theorem_a_report,
    theta,
    verify,
    whitney_check,
)

__all__ = [
    "DegenerateInput",
    "InvalidInput",
    "LatticeFunction",
    "build_jet",
    "constant_report",
    "extend",
    "random_function",
    "seminorm",
    "theorem_a_report",
    "theta",
    "verify",
    "whitney_check",
]
