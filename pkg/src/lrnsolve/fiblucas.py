"""Fibonacci and Lucas numbers, their index-shift identities, scans for
terms of the form ``2 * square``, and the negative Pell iterator for y**2 - 2*u**2 = -1.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator

from .arith import is_square


class FibCache:
    """Append-only table k -> (F_k, L_k) for k >= 0."""

    def __init__(self) -> None:
        self._fib = [0, 1]
        self._luc = [2, 1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._fib)

    def _extend(self, k: int) -> None:
        with self._lock:
            fib, luc = self._fib, self._luc
            while len(fib) <= k:
                fib.append(fib[-1] + fib[-2])
                luc.append(luc[-1] + luc[-2])

    def fib(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"negative Fibonacci index {k}")
        if k >= len(self._fib):
            self._extend(k)
        return self._fib[k]

    def lucas(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"negative Lucas index {k}")
        if k >= len(self._luc):
            self._extend(k)
        return self._luc[k]


_CACHE = FibCache()


def fib(k: int) -> int:
    return _CACHE.fib(k)


def lucas(k: int) -> int:
    return _CACHE.lucas(k)


def flp(k: int, eps: int, identity: int = 1) -> tuple[int, int]:
    """Both sides of an index-shift identity, computed separately.

    identity 1:  4*F_k - F_{k-2eps} = L_{k+eps}
    identity 2:  4*L_k - L_{k-2eps} = 5*F_{k+eps}
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if k - 2 * eps < 0 or k + eps < 0:
        raise ValueError(f"index underflow: k={k}, eps={eps}")
    if identity == 1:
        return 4 * fib(k) - fib(k - 2 * eps), lucas(k + eps)
    if identity == 2:
        return 4 * lucas(k) - lucas(k - 2 * eps), 5 * fib(k + eps)
    raise ValueError(f"identity must be 1 or 2, got {identity}")


def _twice_square(n: int) -> bool:
    return n % 2 == 0 and is_square(n // 2)


def cohn_lucas_2sq(k_max: int) -> set[int]:
    """Indices k <= k_max with L_k = 2 * x**2."""
    return {k for k in range(k_max + 1) if _twice_square(lucas(k))}


def cohn_fib_2sq(k_max: int) -> set[int]:
    """Indices k <= k_max with F_k = 2 * x**2 (x = 0 allowed)."""
    return {k for k in range(k_max + 1) if _twice_square(fib(k))}


@dataclass(frozen=True)
class PellPair:
    t: int
    u: int
    y: int

    def __post_init__(self) -> None:
        if self.y**2 - 2 * self.u**2 != -1:
            raise ValueError(f"not a negative Pell pair: {self}")


def iter_neg_pell() -> Iterator[PellPair]:
    u, y, t = 1, 1, 0
    while True:
        yield PellPair(t, u, y)
        u, y, t = 2 * y + 3 * u, 3 * y + 4 * u, t + 1


def neg_pell_iter(t_max: int) -> list[PellPair]:
    """Pairs (u_t, y_t), t = 0..t_max, seeded at (1, 1)."""
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    out = []
    for pair in iter_neg_pell():
        if pair.t > t_max:
            break
        out.append(pair)
    return out
