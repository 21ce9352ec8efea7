"""Data types shared by the solver and the exhaustive oracle."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Literal

Completeness = Literal["complete", "bounded", "none"]


@dataclass(frozen=True)
class SearchBounds:
    """Inclusive ceilings for every enumeration. ``x_max=None`` leaves x free."""

    y_max: int = 10**4
    n_max: int = 30
    m_max: int = 3
    x_max: int | None = None
    u_max: int = 99
    k_max: int = 40
    t_max: int = 40

    def __post_init__(self) -> None:
        if self.n_max < 3:
            raise ValueError(f"n_max must be >= 3, got {self.n_max}")
        if self.m_max < 0:
            raise ValueError(f"m_max must be >= 0, got {self.m_max}")
        for name in ("y_max", "u_max", "k_max", "t_max"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.x_max is not None and self.x_max < 1:
            raise ValueError("x_max must be >= 1 or None")

    def with_(self, **changes) -> SearchBounds:
        return replace(self, **changes)

    def admits(self, sol: Solution) -> bool:
        return (
            sol.y <= self.y_max
            and sol.m <= self.m_max
            and sol.n <= self.n_max
            and (self.x_max is None or sol.x <= self.x_max)
        )


@dataclass(frozen=True)
class EquationInstance:
    """c*x**2 + d**(2m+1) = 2*y**n with c, d, n fixed (m optionally fixed)."""

    c: int
    d: int
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.c < 1 or self.d < 1:
            raise ValueError("c and d must be positive")
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")


@dataclass(frozen=True)
class Solution:
    c: int
    d: int
    x: int
    y: int
    m: int
    n: int
    provenance: str = field(default="", compare=False)
    coords: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not verify(self.c, self.d, self.x, self.y, self.m, self.n):
            raise ValueError(f"refusing to build a non-solution {self.as_tuple()}")

    @property
    def trivial(self) -> bool:
        return self.x == 1 and self.y == 1

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.c, self.d, self.x, self.y, self.m, self.n)

    def sort_key(self) -> tuple[int, ...]:
        return (self.c, self.d, self.n, self.m, self.y, self.x)


def verify(c: int, d: int, x: int, y: int, m: int, n: int) -> bool:
    if x < 1 or y < 1 or m < 0 or n < 3 or c < 1 or d < 1:
        return False
    return c * x * x + d ** (2 * m + 1) == 2 * y**n


@dataclass(frozen=True)
class SolutionSet:
    solutions: tuple[Solution, ...] = ()
    completeness: Completeness = "bounded"

    @classmethod
    def of(cls, sols: Iterable[Solution], completeness: Completeness = "bounded") -> SolutionSet:
        uniq: dict[tuple, Solution] = {}
        for s in sols:
            uniq.setdefault(s.as_tuple(), s)
        return cls(tuple(sorted(uniq.values(), key=Solution.sort_key)), completeness)

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def __bool__(self) -> bool:
        return bool(self.solutions)

    def tuples(self) -> set[tuple[int, int, int, int]]:
        """(x, y, m, n) of every member."""
        return {(s.x, s.y, s.m, s.n) for s in self.solutions}

    def restricted(self, bounds: SearchBounds) -> SolutionSet:
        return SolutionSet.of((s for s in self.solutions if bounds.admits(s)), self.completeness)
