"""Exhaustive search over c*x**2 + d**(2m+1) = 2*y**n inside explicit bounds.

The oracle knows nothing about Lehmer pairs or families.  For every y, n and
m it forms T = 2*y**n - d**(2m+1) and recovers x from T / c when that is a
perfect square, so x is never scanned.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt
from pathlib import Path
from typing import Iterable, Sequence

from .model import SearchBounds, Solution, SolutionSet

DEFAULT_CHUNK = 2500


def _scan(c: int, d: int, y_lo: int, y_hi: int, n: int, m_max: int, x_max: int | None) -> list[tuple[int, int, int]]:
    found = []
    dpows = [d ** (2 * m + 1) for m in range(m_max + 1)]
    for y in range(y_lo, y_hi + 1):
        two_yn = 2 * y**n
        for m, dp in enumerate(dpows):
            t = two_yn - dp
            if t <= 0:
                break
            if t % c:
                continue
            s = t // c
            x = isqrt(s)
            if x * x == s and x >= 1 and (x_max is None or x <= x_max):
                found.append((x, y, m))
    return found


def _scan_task(args: tuple) -> tuple[tuple[int, int, int], list[tuple[int, int, int]]]:
    c, d, y_lo, y_hi, n, m_max, x_max = args
    return (y_lo, y_hi, n), _scan(c, d, y_lo, y_hi, n, m_max, x_max)


def _chunks(y_lo: int, y_hi: int, size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + size - 1, y_hi)) for lo in range(y_lo, y_hi + 1, size)]


class Checkpoint:
    """Line-delimited JSON log of completed (y_lo, y_hi, n) tasks."""

    def __init__(self, path: str | os.PathLike, header: dict) -> None:
        self.path = Path(path)
        self.header = header
        self.done: dict[tuple[int, int, int], list[tuple[int, int, int]]] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                rec = json.loads(line)
                if any(rec.get(k) != v for k, v in header.items()):
                    continue
                key = (rec["y_lo"], rec["y_hi"], rec["n"])
                self.done[key] = [tuple(int(v) for v in t) for t in rec["found"]]

    def record(self, key: tuple[int, int, int], found: list[tuple[int, int, int]]) -> None:
        y_lo, y_hi, n = key
        rec = dict(self.header, y_lo=y_lo, y_hi=y_hi, n=n, found=[[str(v) for v in t] for t in found])
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec) + "\n")
        self.done[key] = found


def brute_search(
    c: int,
    d: int,
    bounds: SearchBounds = SearchBounds(),
    *,
    n_values: Iterable[int] | None = None,
    coprime: bool = False,
    x_odd: bool = False,
    y_odd: bool = False,
    y_lo: int = 1,
    workers: int = 1,
    chunk: int = DEFAULT_CHUNK,
    checkpoint: str | os.PathLike | None = None,
) -> SolutionSet:
    """All (x, y, m, n) with y_lo <= y <= y_max, 3 <= n, 0 <= m <= m_max, 1 <= x <= x_max.

    Filters are off by default: the oracle reports non-coprime and even-x
    solutions too.  ``coprime`` keeps gcd(c*x, y) == 1.
    """
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    ns = sorted(set(n_values)) if n_values is not None else list(range(3, bounds.n_max + 1))
    if any(n < 3 for n in ns):
        raise ValueError("exponents must be >= 3")
    tasks = [
        (c, d, lo, hi, n, bounds.m_max, bounds.x_max)
        for lo, hi in _chunks(y_lo, bounds.y_max, chunk)
        for n in ns
    ]
    ckpt = None
    if checkpoint is not None:
        ckpt = Checkpoint(checkpoint, {"c": c, "d": d, "m_max": bounds.m_max, "x_max": bounds.x_max})
        pending = [t for t in tasks if (t[2], t[3], t[4]) not in ckpt.done]
    else:
        pending = tasks

    results: dict[tuple[int, int, int], list[tuple[int, int, int]]] = {}
    if ckpt is not None:
        results.update(ckpt.done)
    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for key, found in pool.map(_scan_task, pending):
                results[key] = found
                if ckpt is not None:
                    ckpt.record(key, found)
    else:
        for task in pending:
            key, found = _scan_task(task)
            results[key] = found
            if ckpt is not None:
                ckpt.record(key, found)

    sols = []
    for (_, _, n), found in results.items():
        if n not in ns:
            continue
        for x, y, m in found:
            if coprime and gcd(c * x, y) != 1:
                continue
            if x_odd and x % 2 == 0:
                continue
            if y_odd and y % 2 == 0:
                continue
            sols.append(Solution(c, d, x, y, m, n, provenance="oracle"))
    return SolutionSet.of(sols, "bounded")


@dataclass(frozen=True)
class EquivalenceDiff:
    c: int
    d: int
    n: int
    mode: str
    solver_only: tuple[tuple[int, int, int, int], ...]
    oracle_only: tuple[tuple[int, int, int, int], ...]

    @property
    def empty(self) -> bool:
        return not self.solver_only and not self.oracle_only


def equivalence_report(
    c: int,
    d: int,
    n: int,
    bounds: SearchBounds = SearchBounds(),
    *,
    oracle: SolutionSet | None = None,
) -> EquivalenceDiff:
    """Diff the theorem-driven solver against the oracle on primitive solutions.

    ``oracle`` may carry a precomputed coprime-filtered search (it is
    restricted to exponent n here).
    """
    from .solver import classify
    from .model import EquationInstance

    report = classify(EquationInstance(c, d, n), bounds)
    mine = report.solutions.restricted(bounds).tuples()
    if oracle is None:
        oracle = brute_search(c, d, bounds, n_values=[n], coprime=True)
    theirs = {t for t in oracle.tuples() if t[3] == n}
    return EquivalenceDiff(
        c, d, n, report.mode,
        tuple(sorted(mine - theirs)),
        tuple(sorted(theirs - mine)),
    )


def merge(parts: Sequence[SolutionSet]) -> SolutionSet:
    return SolutionSet.of((s for p in parts for s in p), "bounded")
