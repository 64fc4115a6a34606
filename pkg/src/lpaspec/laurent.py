"""Polynomials over Q and GF(p), irreducibility, and the nonzero primes
of the Laurent ring K[x, x^-1].

A nonzero prime of K[x, x^-1] is generated by a unique monic irreducible
polynomial with nonzero constant term, since the units are the monomials
c*x^k. That generator is the canonical representative used here.

Polynomials are tuples of coefficients, constant term first, with no
trailing zeros. Coefficients are ``Fraction`` over Q and ``int`` in
``range(p)`` over GF(p).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import DomainError, NotEnumerableError, PolyFormatError, UndecidedError

Poly = tuple


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """Either Q (``p is None``) or the prime field GF(p)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def element(self, c):
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % self.p == 0:
                raise DomainError(f"{c} is undefined in GF({self.p})")
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inverse(self, c):
        if self.p is None:
            return 1 / Fraction(c)
        return pow(c, -1, self.p)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


RATIONALS = FieldSpec()


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)


def parse_field(text: str) -> FieldSpec:
    """``q`` for the rationals, ``gf:P`` for GF(P)."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return RATIONALS
    m = re.fullmatch(r"gf:(\d+)", t)
    if not m:
        raise DomainError(f"unknown field {text!r}; expected 'q' or 'gf:P'")
    return FieldSpec(int(m.group(1)))


# -- arithmetic -----------------------------------------------------------


def normalize(coeffs: Sequence, k: FieldSpec) -> Poly:
    out = [k.element(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    return len(f) - 1


def poly_divmod(a: Poly, b: Poly, k: FieldSpec) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    lead_inv = k.inverse(b[-1])
    quot = [k.element(0)] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        if c == 0:
            continue
        q = k.element(c * lead_inv)
        quot[shift] = q
        for i, bc in enumerate(b):
            rem[shift + i] = k.element(rem[shift + i] - q * bc)
    return normalize(quot, k), normalize(rem, k)


def poly_mul(a: Poly, b: Poly, k: FieldSpec) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return normalize(out, k)


def make_monic(f: Poly, k: FieldSpec) -> Poly:
    inv = k.inverse(f[-1])
    return normalize([c * inv for c in f], k)


def monic_polys(p: int, d: int) -> Iterator[Poly]:
    """Monic polynomials of degree d over GF(p), by descending coefficients."""
    for lower in itertools.product(range(p), repeat=d):
        yield tuple(reversed(lower)) + (1,)


# -- irreducibility -------------------------------------------------------


def is_irreducible(f: Sequence, k: FieldSpec, assume_irreducible: bool = False) -> bool:
    """Irreducibility test.

    GF(p): trial division by every monic polynomial of degree at most
    deg(f)/2. Q: degree 1 is irreducible, degrees 2 and 3 are irreducible
    iff there is no rational root. Higher degree over Q raises
    ``UndecidedError`` unless ``assume_irreducible`` is set.
    """
    f = normalize(f, k)
    d = degree(f)
    if d < 1:
        raise DomainError("irreducibility needs degree >= 1")
    if d == 1:
        return True
    if k.is_rational:
        if d > 3:
            if assume_irreducible:
                return True
            raise UndecidedError(f"cannot decide irreducibility over Q in degree {d}")
        return not _has_rational_root(f)
    for e in range(1, d // 2 + 1):
        for g in monic_polys(k.p, e):
            if not poly_divmod(f, g, k)[1]:
                return False
    return True


def _has_rational_root(f: Poly) -> bool:
    lcm = math.lcm(*(Fraction(c).denominator for c in f))
    ints = [int(Fraction(c) * lcm) for c in f]
    content = math.gcd(*ints)
    ints = [c // content for c in ints]
    if ints[0] == 0:
        return True
    for num in _divisors(abs(ints[0])):
        for den in _divisors(abs(ints[-1])):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


# -- Laurent primes --------------------------------------------------------


@dataclass(frozen=True)
class LaurentPrime:
    """Canonical generator of a nonzero prime ideal of K[x, x^-1]."""

    generator: Poly
    field: FieldSpec

    @property
    def degree(self) -> int:
        return degree(self.generator)

    def sort_key(self):
        return (self.degree, tuple(reversed(self.generator)))

    def __str__(self):
        return format_poly(self.generator)


def make_laurent_prime(f: Sequence, k: FieldSpec, assume_irreducible: bool = False) -> LaurentPrime:
    """Normalize f to its canonical generator and validate it.

    Multiplying by a unit c*x^j does not change the ideal, so leading
    and trailing powers of x are stripped and the result made monic.
    """
    f = normalize(f, k)
    if not f:
        raise DomainError("the zero ideal is not in Spec*")
    start = 0
    while f[start] == 0:
        start += 1
    f = make_monic(f[start:], k)
    if degree(f) < 1:
        raise DomainError(f"{format_poly(f)} is a unit of K[x, x^-1]")
    if not is_irreducible(f, k, assume_irreducible):
        raise DomainError(f"{format_poly(f)} is reducible over {k}")
    return LaurentPrime(f, k)


def enumerate_laurent_primes(k: FieldSpec, max_degree: int) -> list[LaurentPrime]:
    """Monic irreducibles of degree 1..max_degree with f(0) != 0."""
    if k.is_rational:
        raise NotEnumerableError("Spec(Q[x, x^-1])* is infinite and not enumerable")
    if max_degree < 1:
        raise DomainError("max_degree must be positive")
    out = []
    for d in range(1, max_degree + 1):
        for f in sorted(monic_polys(k.p, d), key=lambda f: tuple(reversed(f))):
            if f[0] != 0 and is_irreducible(f, k):
                out.append(LaurentPrime(f, k))
    return out


# -- text syntax -----------------------------------------------------------

_TERM_RE = re.compile(
    r"(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<x>x(?:\s*\^\s*(?P<exp>\d+))?)?$"
)


def parse_poly(text: str, k: FieldSpec) -> Poly:
    """Parse e.g. ``x^3+x+1``, ``2x^2-1/3x+5`` or ``x^2 + 2*x``."""
    s = text.replace(" ", "")
    if not s:
        raise PolyFormatError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise PolyFormatError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece.lstrip("+-")
        m = _TERM_RE.match(body)
        if not m or not body or (m.group("coef") is None and m.group("x") is None):
            raise PolyFormatError(f"bad term {piece!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if not k.is_rational and coef.denominator != 1:
            raise PolyFormatError(f"fractions are not accepted over {k}")
        if m.group("x"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    top = max(coeffs)
    return normalize([coeffs.get(i, 0) for i in range(top + 1)], k)


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    terms = []
    for exp in range(len(f) - 1, -1, -1):
        c = f[exp]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if exp == 0 else ("x" if exp == 1 else f"x^{exp}")
        num = str(mag) if (mag != 1 or exp == 0) else ""
        terms.append((sign, num + mono))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out
