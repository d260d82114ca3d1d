"""Christoffel words and their structure.

The lower Christoffel word of (a, b) encodes the lattice path from (0, 0)
to (a, b) that stays closest below the straight segment without crossing
it; the upper word is the path closest above.  Construction is a greedy
walk: standing at (x, y), step up exactly when the point (x, y+1) is still
on or below the segment, i.e. (y+1)*a <= x*b, all in exact integers.

Primitive lower Christoffel words of length >= 2 have the shape 0C1 where
C is a central word (a palindrome with coprime periods p, q and length
p + q - 2).  The empty word is treated as central: it fits the definition
with periods (1, 1) and is required so that 01 = 0C1 holds for C = "".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import ContractError
from .lyndon import standard_factorization
from .words import (
    is_palindrome,
    parikh,
    periods_of,
    primitive_root,
    two_palindrome_factorization,
)

PRIMITIVE_LOWER = "primitive-lower"
PRIMITIVE_UPPER = "primitive-upper"
BOTH = "both"
POWER_OF_PRIMITIVE = "power-of-primitive"
NOT_CHRISTOFFEL = "not-christoffel"


@dataclass(frozen=True)
class ChristoffelClass:
    """Outcome of classifying a word against the Christoffel family."""

    kind: str
    root: str | None = None
    exponent: int | None = None

    @property
    def is_christoffel(self) -> bool:
        return self.kind != NOT_CHRISTOFFEL


@dataclass(frozen=True)
class CentralDecomposition:
    central: str
    left_pal: str | None  # P, with central == P·01·Q == Q·10·P
    right_pal: str | None  # Q
    degenerate: bool  # central is a power of a single letter (P, Q absent)


@dataclass(frozen=True)
class FactorizationPoints:
    """Lattice points where the two factorizations split the path."""

    s_point: tuple[int, int]  # standard split: closest interior vertex to the segment
    s_prime_point: tuple[int, int]  # palindromic split: farthest interior vertex


@dataclass(frozen=True)
class ChristoffelFactorizations:
    standard: tuple[str, str]
    palindromic: tuple[str, str]
    points: FactorizationPoints


def _check_pair(a: int, b: int) -> None:
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise ContractError(f"({a},{b}) is not a valid endpoint: need a,b >= 0, not both 0")


@lru_cache(maxsize=None)
def _primitive_lower(a: int, b: int) -> str:
    out = []
    x = y = 0
    while x < a or y < b:
        if (y + 1) * a <= x * b:
            out.append("1")
            y += 1
        else:
            out.append("0")
            x += 1
    return "".join(out)


@lru_cache(maxsize=None)
def _primitive_upper(a: int, b: int) -> str:
    # step right only while (x+1, y) stays on or above the segment
    out = []
    x = y = 0
    while x < a or y < b:
        if x < a and a * y >= b * (x + 1):
            out.append("0")
            x += 1
        else:
            out.append("1")
            y += 1
    return "".join(out)


def christoffel_lower(a: int, b: int) -> str:
    """Lower Christoffel word of (a, b); a power of the primitive root when gcd > 1."""
    _check_pair(a, b)
    d = gcd(a, b)
    return _primitive_lower(a // d, b // d) * d


def christoffel_upper(a: int, b: int) -> str:
    """Upper Christoffel word of (a, b); equals the reversal of the lower word."""
    _check_pair(a, b)
    d = gcd(a, b)
    return _primitive_upper(a // d, b // d) * d


def classify_christoffel(w: str) -> ChristoffelClass:
    """Decide whether w is a Christoffel word and of which kind.

    Powers of a single letter are simultaneously lower and upper words and
    classify as "both".  A power (exponent >= 2) of a primitive Christoffel
    word reports the root and exponent.
    """
    if not w:
        raise ContractError("cannot classify the empty word")
    root, exp = primitive_root(w)
    if root in ("0", "1"):
        return ChristoffelClass(BOTH, root, exp)
    a, b = parikh(root)
    if gcd(a, b) == 1:
        if root == christoffel_lower(a, b):
            kind = PRIMITIVE_LOWER if exp == 1 else POWER_OF_PRIMITIVE
            return ChristoffelClass(kind, root, exp)
        if root == christoffel_upper(a, b):
            kind = PRIMITIVE_UPPER if exp == 1 else POWER_OF_PRIMITIVE
            return ChristoffelClass(kind, root, exp)
    return ChristoffelClass(NOT_CHRISTOFFEL)


def central_word(a: int, b: int) -> str:
    """The palindrome C with christoffel_lower(a, b) == 0C1; needs a, b >= 1 coprime."""
    if a < 1 or b < 1:
        raise ContractError(f"central words need a, b >= 1, got ({a},{b})")
    if gcd(a, b) != 1:
        raise ContractError(f"central words need coprime counts, got ({a},{b})")
    return christoffel_lower(a, b)[1:-1]


def is_central(w: str) -> bool:
    """True when w has coprime periods p, q with |w| == p + q - 2.

    Any p > |w| constrains nothing, and p = |w| + 1 is the largest value a
    witness pair can use, so it is admitted alongside the genuine periods.
    The empty word passes with the pair (1, 1).
    """
    if w == "":
        return True
    n = len(w)
    ps = set(periods_of(w))
    ps.add(n + 1)
    return any((n + 2 - p) in ps and gcd(p, n + 2 - p) == 1 for p in ps)


def central_decomposition(w: str) -> CentralDecomposition:
    """Split a central word as P·01·Q == Q·10·P, or flag it as a letter power."""
    if not is_central(w):
        raise ContractError(f"{w!r} is not a central word")
    if w == "" or set(w) in ({"0"}, {"1"}):
        return CentralDecomposition(w, None, None, True)
    for k in range(len(w) - 1):
        if w[k : k + 2] == "01":
            left, right = w[:k], w[k + 2 :]
            if (
                is_palindrome(left)
                and is_palindrome(right)
                and w == right + "10" + left
            ):
                return CentralDecomposition(w, left, right, False)
    raise AssertionError(f"central word {w!r} admits no P·01·Q split")


def factorizations(w: str) -> ChristoffelFactorizations:
    """Standard and palindromic factorizations of a primitive lower Christoffel word.

    The standard split marks the path vertex S closest to the segment, the
    palindromic split the vertex S' farthest from it; both are returned as
    exact lattice coordinates.
    """
    cls = classify_christoffel(w)
    if len(w) < 2 or cls.kind != PRIMITIVE_LOWER:
        raise ContractError(
            f"factorizations need a primitive lower Christoffel word of length >= 2, got {w!r}"
        )
    u, v = standard_factorization(w)
    pal = two_palindrome_factorization(w)
    assert pal is not None  # every Christoffel word is a conjugate of its reversal
    p1, p2 = pal
    s_point = (u.count("0"), u.count("1"))
    s_prime_point = (p1.count("0"), p1.count("1"))
    return ChristoffelFactorizations(
        (u, v), (p1, p2), FactorizationPoints(s_point, s_prime_point)
    )


def central_periods(a: int, b: int) -> tuple[int, int]:
    """The period pair (a', b') of central_word(a, b): inverses of a, b mod a+b.

    Both lie in 1..a+b-1 and satisfy a' + b' == a + b, so the larger one can
    be |C| + 1, one past the word length.
    """
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise ContractError(f"need coprime a, b >= 1, got ({a},{b})")
    m = a + b
    return pow(a, -1, m), pow(b, -1, m)


def prefix_endpoint(w: str, length: int) -> tuple[int, int]:
    """Lattice point reached after walking the first ``length`` steps of w."""
    prefix = w[:length]
    zeros = prefix.count("0")
    return zeros, len(prefix) - zeros
