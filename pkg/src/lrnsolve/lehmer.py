"""Lehmer pairs, Lehmer numbers and primitive divisors.

A Lehmer pair is described by its parameters (a, b) with a = (alpha+beta)**2
and b = a - 4*alpha*beta, so alpha*beta = Q = (a - b) / 4.  Lehmer numbers are
generated with the integer recurrence

    L_1 = L_2 = 1,  L_3 = (3a + b)/4,  L_4 = (a + b)/2,
    L_n = ((a + b)/2) * L_{n-2} - Q**2 * L_{n-4}     (n >= 5),

so no surds are ever formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Literal

from .arith import PrimalityUnproven, _small_primes, factorize, gcd, is_prime
from .fiblucas import fib, lucas


class LehmerPairError(ValueError):
    """Rejected parameter pair; ``code`` names the violated condition."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class LehmerParams:
    a: int
    b: int

    @property
    def q(self) -> int:
        return (self.a - self.b) // 4

    def flipped(self) -> LehmerParams:
        return LehmerParams(-self.a, -self.b)


def validate_pair(a: int, b: int) -> LehmerParams:
    if a == 0 or b == 0:
        raise LehmerPairError("degenerate", f"a and b must be non-zero: ({a}, {b})")
    if (a - b) % 4:
        raise LehmerPairError("non_integral", f"a - b = {a - b} is not divisible by 4")
    q = (a - b) // 4
    if q == 0:
        raise LehmerPairError("zero_q", f"alpha*beta vanishes for ({a}, {b})")
    if gcd(a, q) != 1:
        raise LehmerPairError("not_coprime", f"gcd(a, Q) = {gcd(a, q)} for ({a}, {b})")
    # alpha/beta + beta/alpha = 2(a+b)/(a-b); a root of unity forces this into {0, +-1, +-2}
    num, den = 2 * (a + b), a - b
    if num % den == 0 and abs(num // den) <= 2:
        raise LehmerPairError("root_of_unity", f"alpha/beta is a root of unity for ({a}, {b})")
    return LehmerParams(a, b)


def _checked(params: LehmerParams) -> LehmerParams:
    return validate_pair(params.a, params.b)


class LehmerSeq:
    """Lehmer numbers of one pair, extended on demand."""

    def __init__(self, params: LehmerParams) -> None:
        self.params = _checked(params)
        a, b = self.params.a, self.params.b
        self._half_sum = (a + b) // 2
        self._q2 = self.params.q ** 2
        # index 0 holds L_0 = 0 so the recurrence also covers n = 4
        self.values = [0, 1, 1, (3 * a + b) // 4, (a + b) // 2]

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError(f"Lehmer numbers start at index 1, got {n}")
        vals = self.values
        while len(vals) <= n:
            k = len(vals)
            vals.append(self._half_sum * vals[k - 2] - self._q2 * vals[k - 4])
        return vals[n]


def lehmer_number(params: LehmerParams, n: int) -> int:
    if n < 1:
        raise ValueError(f"Lehmer index must be >= 1, got {n}")
    return LehmerSeq(params)[n]


@dataclass(frozen=True)
class PrimitiveDivisor:
    status: Literal["found", "absent", "undecided"]
    prime: int | None = None
    # product of all primitive prime divisors (with multiplicity); 1 when absent
    primitive_part: int = 1


def primitive_divisor(params: LehmerParams, n: int, *, max_digits: int = 120) -> PrimitiveDivisor:
    """Smallest prime dividing L_n but not a*b*L_1*...*L_{n-1}."""
    if n < 2:
        raise ValueError(f"primitive divisors are defined for n >= 2, got {n}")
    seq = LehmerSeq(params)
    rest = abs(seq[n])
    for other in [params.a * params.b] + [seq[k] for k in range(1, n)]:
        g = gcd(rest, other)
        while g > 1:
            rest //= g
            g = gcd(rest, g)
    if rest == 1:
        return PrimitiveDivisor("absent")
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            return PrimitiveDivisor("found", p, rest)
    try:
        if is_prime(rest):
            return PrimitiveDivisor("found", rest, rest)
        if len(str(rest)) > max_digits:
            return PrimitiveDivisor("undecided", None, rest)
        return PrimitiveDivisor("found", factorize(rest)[0][0], rest)
    except PrimalityUnproven:
        return PrimitiveDivisor("undecided", None, rest)


# -- defect data -----------------------------------------------------------

_FIXED_DEFECTS = {
    7: ((1, -7), (1, -19), (3, -5), (5, -7), (13, -3), (14, -22)),
    13: ((1, -7),),
}


@dataclass(frozen=True)
class DefectMember:
    a: int
    b: int
    coords: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class DefectEntry:
    """One line of the defect list: a fixed pair or a parametric family."""

    ell: int
    pair: tuple[int, int] | None = None
    family: str | None = None

    def members(self, bound: int) -> Iterator[DefectMember]:
        """Pairs of this entry; families are cut at index/parameter ``bound``."""
        if self.pair is not None:
            yield DefectMember(*self.pair)
            return
        if self.family == "fibonacci":
            for k in range(3, bound + 1):
                for eps in (1, -1):
                    a = fib(k - 2 * eps)
                    yield DefectMember(a, a - 4 * fib(k), {"k": k, "eps": eps})
        elif self.family == "lucas":
            # The index runs over all integers k != 1.  Indices below -1 only
            # repeat earlier members up to sign, but k = -1 contributes (1, 5),
            # whose flip (-1, -5) is the excluded k = 1 pair.
            for k in range(-1, bound + 1):
                if k == 1:
                    continue
                for eps in (1, -1):
                    a = _signed_lucas(k - 2 * eps)
                    b = a - 4 * _signed_lucas(k)
                    if a and b:
                        yield DefectMember(a, b, {"k": k, "eps": eps})
        elif self.family == "unit":
            for t in range(-bound, bound + 1):
                if t not in (0, 1):
                    yield DefectMember(1 + t, 1 - 3 * t, {"t": t})
        elif self.family == "power_of_3":
            for k in range(1, bound + 1):
                for t in range(-bound, bound + 1):
                    if t % 3 and (k, t) != (1, 1):
                        yield DefectMember(3**k + t, 3**k - 3 * t, {"k": k, "t": t})
        else:
            raise ValueError(f"unknown family {self.family!r}")


def _signed_lucas(k: int) -> int:
    if k >= 0:
        return lucas(k)
    return -lucas(-k) if k % 2 else lucas(-k)


def _check_ell(ell: int) -> None:
    if not 3 <= ell <= 30 or not is_prime(ell):
        raise ValueError(f"defect data covers primes 3 <= ell <= 30, got {ell}")


def defect_table(ell: int) -> list[DefectEntry]:
    _check_ell(ell)
    if ell == 3:
        return [DefectEntry(3, family="unit"), DefectEntry(3, family="power_of_3")]
    if ell == 5:
        return [DefectEntry(5, family="fibonacci"), DefectEntry(5, family="lucas")]
    return [DefectEntry(ell, pair=p) for p in _FIXED_DEFECTS.get(ell, ())]


def _in_ell3_families(a: int, b: int) -> bool:
    s = 3 * a + b
    if s == 4:
        return a - 1 not in (0, 1)
    if s <= 4 or s % 4:
        return False
    power, k = s // 4, 0
    while power % 3 == 0:
        power //= 3
        k += 1
    if power != 1:
        return False
    t = a - 3**k
    return t != 0 and t % 3 != 0 and (k, t) != (1, 1)


def matches_defect(params: LehmerParams | tuple[int, int], ell: int, *, index_max: int = 200) -> bool:
    """Is (a, b) or (-a, -b) in the defect list for ell?"""
    _check_ell(ell)
    a, b = (params.a, params.b) if isinstance(params, LehmerParams) else params
    candidates = {(a, b), (-a, -b)}
    if ell == 3:
        return any(_in_ell3_families(*p) for p in candidates)
    if ell == 5:
        for entry in defect_table(5):
            for member in entry.members(index_max):
                if (member.a, member.b) in candidates:
                    return True
        return False
    return bool(candidates & set(_FIXED_DEFECTS.get(ell, ())))


def lehmer_values(params: LehmerParams, n_max: int) -> list[int]:
    seq = LehmerSeq(params)
    return [seq[n] for n in range(1, n_max + 1)]
