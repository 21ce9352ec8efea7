"""Exact solver for c*x**2 + d**(2m+1) = 2*y**n."""

from .model import EquationInstance, SearchBounds, Solution, SolutionSet
from .oracle import brute_search, equivalence_report
from .solver import classify, solve_c1, solve_composite, solve_prime, verify_solution

__all__ = [
    "EquationInstance",
    "SearchBounds",
    "Solution",
    "SolutionSet",
    "brute_search",
    "classify",
    "equivalence_report",
    "solve_c1",
    "solve_composite",
    "solve_prime",
    "verify_solution",
]
