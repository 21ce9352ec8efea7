"""Solutions of c*x**2 + d**(2m+1) = 2*y**n derived from Lehmer-pair defects.

Route for an odd prime exponent p with p not dividing h(-cd):

* cd odd: a primitive solution factors as
  (x*sqrt(c) + d**m*sqrt(-d)) / sqrt(2) = +-((u*sqrt(c) + v*sqrt(-d)) / sqrt(2))**p
  with y = (u**2*c + v**2*d) / 2.  The pair has parameters (2u**2c, -2v**2d)
  and its p-th Lehmer number is +-d**m / v, so it has no primitive divisor.
* d even: x = 2x' and 2c*x'**2 + (d/2)*(d**m)**2 = y**p, which gives the
  Lehmer parameters (8u**2c, -4v**2(d/2)) with y = 2u**2c + v**2(d/2).
* c even: no solutions (the left side is odd).

The defect list then pins (a, b) up to sign, and every candidate is expanded
exactly and substituted back before it is emitted.  Composite n reduces to a
prime divisor p via Y = y**(n/p) followed by exact root extraction.

Only primitive solutions (gcd(c*x, y) == 1) come out of this route.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .arith import (
    factorize,
    gcd,
    is_power_of_two,
    is_prime,
    is_squarefree,
    perfect_root,
)
from .fiblucas import fib, lucas
from .lehmer import defect_table
from .model import EquationInstance, SearchBounds, Solution, SolutionSet, verify
from .oracle import brute_search
from .quadforms import HypothesisReport, class_number, hypothesis_check


class HypothesisError(ValueError):
    def __init__(self, message: str, report: HypothesisReport | None = None) -> None:
        super().__init__(message)
        self.report = report


def verify_solution(c: int, d: int, x: int, y: int, m: int, n: int) -> bool:
    return verify(c, d, x, y, m, n)


def representation_check(c: int, d: int, u: int, v: int, y: int) -> bool:
    """2y == u**2 c + v**2 d."""
    return 2 * y == u * u * c + v * v * d


# -- the Lehmer route ---------------------------------------------------------


@dataclass(frozen=True)
class _Embedding:
    A: int  # coefficient under sqrt on the real side
    B: int  # coefficient under sqrt(-.) on the imaginary side
    kappa: int  # a = kappa*u**2*A, b = -kappa*v**2*B
    name: str


def _embedding(c: int, d: int) -> _Embedding | None:
    if c % 2 == 0:
        return None
    if d % 2:
        return _Embedding(c, d, 2, "odd")
    return _Embedding(2 * c, d // 2, 4, "even")


def _expand(A: int, B: int, u: int, v: int, p: int) -> tuple[int, int]:
    """(u*sqrt(A) + v*sqrt(-B))**p = X*sqrt(A) + W*sqrt(-B) for odd p."""
    X = W = 0
    for j in range(p + 1):
        term = comb(p, j) * u ** (p - j) * v**j
        if j % 2 == 0:
            X += term * A ** ((p - 1 - j) // 2) * (-B) ** (j // 2)
        else:
            W += term * A ** ((p - j) // 2) * (-B) ** ((j - 1) // 2)
    return X, W


def _exact_log(value: int, base: int) -> int | None:
    if base == 1:
        return None
    e = 0
    while value % base == 0 and value > 1:
        value //= base
        e += 1
    return e if value == 1 else None


def _from_params(c: int, d: int, emb: _Embedding, a: int, b: int, p: int, m_max: int) -> Iterator[tuple[int, int, int, dict]]:
    """Turn Lehmer parameters into (x, Y, m, coords) for c*x**2 + d**(2m+1) = 2*Y**p."""
    if a <= 0 or b >= 0:
        return
    ka, kb = emb.kappa * emb.A, emb.kappa * emb.B
    if a % ka or (-b) % kb:
        return
    u = perfect_root(a // ka, 2)
    v = perfect_root(-b // kb, 2)
    if not u or not v:
        return
    X, W = _expand(emb.A, emb.B, u, v, p)
    if emb.name == "odd":
        scale = 2 ** ((p - 1) // 2)
        if X % scale or W % scale:
            return
        x, W = abs(X) // scale, W // scale
    else:
        x = 2 * abs(X)
    Y = (a - b) // 4
    if d == 1:
        ms = range(m_max + 1) if abs(W) == 1 else range(0)
    else:
        m = _exact_log(abs(W), d)
        ms = [m] if m is not None and m <= m_max else []
    coords = {"u": u, "v": v, "a": a, "b": b, "delta": 1 if W > 0 else -1, "embedding": emb.name}
    for m in ms:
        if x >= 1 and gcd(c * x, Y) == 1 and verify(c, d, x, Y, m, p):
            yield x, Y, m, coords


def _index_bound(y_limit: int) -> int:
    k = 1
    while fib(k) <= y_limit:
        k += 1
    return k + 2


def _prime_candidates(c: int, d: int, emb: _Embedding, p: int, y_limit: int, m_max: int) -> Iterator[tuple[str, int, int, dict]]:
    """(clause, a, b, extra coords) for every defect pair that could fit (c, d)."""
    if p == 3:
        # no primitive divisor for the 3rd term means L_3 = (3a + b)/4 = +-3**k
        ms = [0] if d == 1 else range(m_max + 1)
        for m in ms:
            dm = d**m
            k = 0
            while dm % 3**k == 0:
                v = dm // 3**k
                for sign in (1, -1):
                    num = 4 * sign * 3**k + emb.kappa * v * v * emb.B
                    if num % (3 * emb.kappa) == 0:
                        uA = num // (3 * emb.kappa)
                        clause = "p3-unit" if k == 0 else "p3-power-of-3"
                        if sign < 0:
                            clause += "-flipped"
                        yield clause, emb.kappa * uA, -emb.kappa * v * v * emb.B, {"k": k, "L3": sign * 3**k}
                k += 1
                if dm == 1:
                    break
        return
    if p == 5:
        bound = _index_bound(y_limit)
        for entry in defect_table(5):
            for member in entry.members(bound):
                for sign in (1, -1):
                    a, b = sign * member.a, sign * member.b
                    clause = f"p5-{entry.family}" + ("-flipped" if sign < 0 else "")
                    yield clause, a, b, dict(member.coords)
        return
    if p in (7, 13):
        for entry in defect_table(p):
            for sign in (1, -1):
                a, b = sign * entry.pair[0], sign * entry.pair[1]
                yield f"p{p}-sporadic", a, b, {}
        return
    # every other prime: Lehmer numbers of index p always have primitive divisors


def _prime_route(c: int, d: int, p: int, y_limit: int, m_max: int) -> list[Solution]:
    """Primitive solutions of c*x**2 + d**(2m+1) = 2*Y**p with Y <= y_limit."""
    out = []
    if c == 1 and d == 1:
        out.extend(Solution(1, 1, 1, 1, m, p, "trivial") for m in range(m_max + 1))
    emb = _embedding(c, d)
    if emb is None:
        return out
    for clause, a, b, extra in _prime_candidates(c, d, emb, p, y_limit, m_max):
        for x, Y, m, coords in _from_params(c, d, emb, a, b, p, m_max):
            if Y <= y_limit:
                out.append(Solution(c, d, x, Y, m, p, clause, {**coords, **extra, "Y": Y, "p": p}))
    return out


def _route(c: int, d: int, n: int, p: int, bounds: SearchBounds) -> list[Solution]:
    """Solutions for exponent n through its prime divisor p."""
    e = n // p
    y_limit = bounds.y_max**e
    out = []
    for s in _prime_route(c, d, p, y_limit, bounds.m_max):
        y = perfect_root(s.y, e)
        if y is None:
            continue
        tag = s.provenance if e == 1 else f"{s.provenance}/root-{e}"
        out.append(Solution(c, d, s.x, y, s.m, n, tag, s.coords))
    return [s for s in out if bounds.admits(s)]


def _route_completeness(c: int, p: int) -> str:
    return "complete" if c % 2 == 0 or p >= 7 else "bounded"


# -- hypothesis handling ------------------------------------------------------


def _pick_prime(report: HypothesisReport) -> int | None:
    return max(report.reduction_primes) if report.reduction_primes else None


def _require(report: HypothesisReport, relaxed: bool, what: str) -> None:
    if relaxed:
        return
    if not report.squarefree:
        raise HypothesisError(f"{what}: cd = {report.cd_value} is not squarefree", report)
    if report.residue_mod4 == 3:
        raise HypothesisError(f"{what}: cd = {report.cd_value} is 3 mod 4", report)
    if not report.reduction_primes:
        raise HypothesisError(
            f"{what}: every odd prime of n divides h = {report.class_number}", report
        )


def _largest_odd_prime(n: int) -> int | None:
    odd = [p for p, _ in factorize(n) if p != 2]
    return odd[-1] if odd else None


# -- public solvers -----------------------------------------------------------


def solve_prime(inst: EquationInstance, bounds: SearchBounds = SearchBounds(), *, relaxed: bool = False) -> SolutionSet:
    """All primitive solutions for an odd prime exponent p = inst.n."""
    p = inst.n
    if p < 3 or not is_prime(p):
        raise ValueError(f"exponent must be an odd prime, got {p}")
    report = hypothesis_check(inst.c, inst.d, p)
    _require(report, relaxed, "solve_prime")
    b = bounds if inst.m is None else bounds.with_(m_max=inst.m)
    sols = [s for s in _route(inst.c, inst.d, p, p, b) if inst.m is None or s.m == inst.m]
    return SolutionSet.of(sols, _route_completeness(inst.c, p) if not relaxed else "none")


def p3_family(c: int, u: int, m: int, *, sign: int = -1, relaxed: bool = False) -> Solution | None:
    """Member of the cubic family with d**(2m+1) = 3u**2c + 2*sign.

    sign = -1:  x = u(4u**2c - 3),  y = 2u**2c - 1
    sign = +1:  x = u(4u**2c + 3),  y = 2u**2c + 1   (the sign-flipped pair)
    """
    if u < 1 or u % 2 == 0:
        raise ValueError(f"u must be a positive odd integer, got {u}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    big_d = 3 * u * u * c + 2 * sign
    if big_d < 1:
        return None
    d = perfect_root(big_d, 2 * m + 1)
    if d is None:
        return None
    if not relaxed:
        cd = c * d
        if gcd(c, d) != 1 or not is_squarefree(cd) or cd % 4 == 3:
            return None
    x = u * (4 * u * u * c + 3 * sign)
    y = 2 * u * u * c + sign
    if not verify(c, d, x, y, m, 3):
        return None
    clause = "p3-unit" if sign < 0 else "p3-unit-flipped"
    return Solution(c, d, x, y, m, 3, clause, {"u": u, "v": d**m, "delta": -sign, "embedding": "odd"})


# Reduced-form counting is linear in |disc|; beyond this the class-number gate is
# left undecided and the family member is not emitted in strict mode.
GATE_CD_LIMIT = 10**6


def _gates_ok(c: int, d: int, p: int) -> bool:
    cd = c * d
    if gcd(c, d) != 1 or cd % 4 == 3 or not is_squarefree(cd):
        return False
    return cd <= GATE_CD_LIMIT and class_number(cd) % p != 0


def _square_divisors(n: int, *, odd: bool = True) -> Iterator[int]:
    """u >= 1 with u**2 | n (odd u only unless ``odd`` is False)."""
    root = 1
    for q, e in factorize(n):
        if q != 2 or not odd:
            root *= q ** (e // 2)
    for u in range(1, root + 1, 2 if odd else 1):
        if root % u == 0:
            yield u


def p5_families(bounds: SearchBounds = SearchBounds(), *, relaxed: bool = False) -> SolutionSet:
    """Quintic solutions read off the Fibonacci (k <= k_max) and Lucas (k <= t_max) defect families.

    For each family pair (a, b), every split a = kappa*u**2*A, -b = kappa*v**2*B
    with u, v odd names one equation (c, d); the exponent m follows from the
    imaginary part d**m.  Without ``relaxed`` only admissible (c, d) with
    c*d <= GATE_CD_LIMIT are kept.
    """
    sols = []
    for entry in defect_table(5):
        top = bounds.k_max if entry.family == "fibonacci" else bounds.t_max
        for member in entry.members(top):
            a, b = member.a, member.b
            if a <= 0 or b >= 0 or a % 2:
                continue
            for kappa in (2, 4):
                if a % kappa or b % kappa:
                    continue
                for u in _square_divisors(a // kappa, odd=kappa == 2):
                    big_a = a // (kappa * u * u)
                    for v in _square_divisors(-b // kappa):
                        big_b = -b // (kappa * v * v)
                        if kappa == 2:
                            c, d = big_a, big_b
                        elif big_a % 2 == 0:
                            c, d = big_a // 2, 2 * big_b
                        else:
                            continue
                        if (kappa == 2) != (d % 2 == 1) or c % 2 == 0:
                            continue
                        emb = _embedding(c, d)
                        for x, Y, m, coords in _from_params(c, d, emb, a, b, 5, bounds.m_max):
                            if not relaxed and not _gates_ok(c, d, 5):
                                continue
                            clause = f"p5-{entry.family}"
                            sols.append(Solution(c, d, x, Y, m, 5, clause, {**coords, **member.coords}))
    return SolutionSet.of(sols, "bounded")


# -- composite exponents --------------------------------------------------------


def solve_composite(ell: int, q: int, n: int, bounds: SearchBounds = SearchBounds(), *, relaxed: bool = False) -> SolutionSet:
    """Primitive solutions of ell*x**2 + q**(2m+1) = 2*y**n for distinct odd primes ell, q."""
    if ell == q or not (ell % 2 and q % 2 and is_prime(ell) and is_prime(q)):
        raise HypothesisError(f"need distinct odd primes, got ({ell}, {q})")
    if n <= 2 or is_power_of_two(n):
        raise HypothesisError(f"n must exceed 2 and not be a power of 2, got {n}")
    report = hypothesis_check(ell, q, n)
    _require(report, relaxed, "solve_composite")
    return classify(EquationInstance(ell, q, n), bounds, relaxed=relaxed).solutions


def solve_c1(d: int, n: int, bounds: SearchBounds = SearchBounds(), *, relaxed: bool = False) -> SolutionSet:
    """Primitive solutions of x**2 + d**(2m+1) = 2*y**n for squarefree d = 1 mod 4."""
    if d <= 1 or d % 4 != 1:
        raise HypothesisError(f"d must be > 1 and 1 mod 4, got {d}")
    if n <= 2 or is_power_of_two(n):
        raise HypothesisError(f"n must exceed 2 and not be a power of 2, got {n}")
    report = hypothesis_check(1, d, n)
    _require(report, relaxed, "solve_c1")
    return classify(EquationInstance(1, d, n), bounds, relaxed=relaxed).solutions


@dataclass(frozen=True)
class Pell5Record:
    k: int
    eps: int
    pell_value: int
    integral: bool
    witnesses: tuple[tuple[int, int, int, int], ...] = ()  # (u, ell, q, m)


def pell5_form(k: int, eps: int) -> int:
    """(L_{k+eps} - 5F_{k-2eps})**2 - 20*F_{k-2eps}**2."""
    f, l = fib(k - 2 * eps), lucas(k + eps)
    return (l - 5 * f) ** 2 - 20 * f * f


def _pell5_witnesses(k: int, eps: int) -> tuple[tuple[int, int, int, int], ...]:
    f, l = fib(k - 2 * eps), lucas(k + eps)
    if f % 2 or l % 2:
        return ()
    out = []
    for u in _square_divisors(f // 2):
        ell = f // (2 * u * u)
        if ell % 2 == 0 or not is_prime(ell):
            continue
        half = l // 2
        e = 1
        while 3**e <= half:
            q = perfect_root(half, e)
            if q is not None and q % 2 and is_prime(q):
                out.append((u, ell, q, (e - 1) // 2))
            e += 2
    return tuple(out)


def pell5_scan(k_max: int) -> list[Pell5Record]:
    """(k, eps), 3 <= k <= k_max, where the Pell form equals -16, with integrality witnesses."""
    if k_max < 3:
        raise ValueError(f"k_max must be >= 3, got {k_max}")
    out = []
    for k in range(3, k_max + 1):
        for eps in (1, -1):
            val = pell5_form(k, eps)
            if val == -16:
                wit = _pell5_witnesses(k, eps)
                out.append(Pell5Record(k, eps, val, bool(wit), wit))
    return out


# -- dispatch -------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    instance: EquationInstance
    hypotheses: HypothesisReport
    mode: str  # "theorem", "theorem-reduced", "relaxed", "oracle-only"
    prime: int | None
    clauses: tuple[str, ...]
    solutions: SolutionSet

    @property
    def completeness(self) -> str:
        return self.solutions.completeness


def _clause_summary(c: int, p: int, n: int) -> str:
    if c % 2 == 0:
        return "even-c-parity-empty"
    if p > 7:
        return f"prime-{p}-no-defect-empty"
    if p == 7:
        return "prime-7-sporadic-pair"
    return f"prime-{p}-defect-families"


def classify(inst: EquationInstance, bounds: SearchBounds = SearchBounds(), *, relaxed: bool = False) -> Classification:
    """Route an instance through the Lehmer solver, or to the oracle when hypotheses fail."""
    c, d, n = inst.c, inst.d, inst.n
    report = hypothesis_check(c, d, n)
    b = bounds if inst.m is None else bounds.with_(m_max=inst.m)
    theorem_ok = report.reducible and gcd(c, d) == 1
    if theorem_ok:
        mode = "theorem" if report.admissible else "theorem-reduced"
        p = _pick_prime(report)
    elif relaxed and _largest_odd_prime(n) is not None:
        mode, p = "relaxed", _largest_odd_prime(n)
    else:
        found = brute_search(c, d, b, n_values=[n])
        return Classification(inst, report, "oracle-only", None, ("oracle",), found)

    sols = _route(c, d, n, p, b)
    if inst.m is not None:
        sols = [s for s in sols if s.m == inst.m]
    clauses = [_clause_summary(c, p, n)]
    if n != p:
        clauses.append(f"composite-via-{p}")
    if any(s.trivial for s in sols):
        clauses.append("trivial")
    completeness = _route_completeness(c, p) if mode != "relaxed" else "none"
    return Classification(inst, report, mode, p, tuple(clauses), SolutionSet.of(sols, completeness))
