"""Class numbers of imaginary quadratic fields by counting reduced forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import factorize, gcd, is_squarefree


@dataclass(frozen=True, order=True)
class QuadraticForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (-a < b <= a <= c):
            return False
        if b < 0 and (a == c or a == -b):
            return False
        return True

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1


@dataclass(frozen=True)
class HypothesisReport:
    cd_value: int
    squarefree: bool
    residue_mod4: int
    class_number: int | None
    gcd_with_n: int | None
    admissible: bool
    # odd primes p | n with p not dividing h; any one of them suffices for the
    # prime-exponent reduction even when gcd(n, h) > 1
    reduction_primes: tuple[int, ...] = ()

    @property
    def reducible(self) -> bool:
        return self.squarefree and self.residue_mod4 != 3 and bool(self.reduction_primes)


def field_discriminant(D: int) -> int:
    """Fundamental discriminant of Q(sqrt(-D)) for squarefree D >= 1."""
    if D < 1 or not is_squarefree(D):
        raise ValueError(f"D must be a squarefree positive integer, got {D}")
    return -D if D % 4 == 3 else -4 * D


def reduced_forms(disc: int) -> list[QuadraticForm]:
    """All primitive reduced forms of negative discriminant disc, by (a, b)."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"invalid negative discriminant {disc}")
    forms = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            f = QuadraticForm(a, b, c)
            if f.is_primitive():
                forms.append(f)
        a += 1
    return forms


@lru_cache(maxsize=4096)
def class_number(D: int) -> int:
    return len(reduced_forms(field_discriminant(D)))


def hypothesis_check(c: int, d: int, n: int) -> HypothesisReport:
    if min(c, d, n) < 1:
        raise ValueError("c, d, n must be positive")
    cd = c * d
    sqf = is_squarefree(cd)
    res = cd % 4
    if not sqf:
        return HypothesisReport(cd, False, res, None, None, False)
    h = class_number(cd)
    g = gcd(n, h)
    primes = tuple(p for p, _ in factorize(n) if p != 2 and h % p)
    return HypothesisReport(
        cd_value=cd,
        squarefree=True,
        residue_mod4=res,
        class_number=h,
        gcd_with_n=g,
        admissible=res != 3 and g == 1,
        reduction_primes=primes,
    )
