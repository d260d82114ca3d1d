"""Binary words over the alphabet {0, 1}.

A word is an ordinary Python string containing only the characters '0' and
'1'; the empty string is the empty word.  Strings give O(1) symbol access,
O(n) slicing, cheap hashing, and built-in lexicographic comparison under
the natural order 0 < 1, which is what nearly every algorithm here needs.
Read as a lattice path from (0, 0), a '0' is a unit step right and a '1' a
unit step up.

All positions reported by this package are 0-based.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import ContractError, ParseError

ORDER_01 = "01"
ORDER_10 = "10"

_COMPLEMENT = str.maketrans("01", "10")


class ParikhVector(NamedTuple):
    """Letter counts (number of 0s, number of 1s); also the path endpoint."""

    zeros: int
    ones: int

    def __str__(self) -> str:
        return f"({self.zeros},{self.ones})"


class Slope(NamedTuple):
    """Exact slope ones/zeros of a nonempty word; denominator 0 means vertical.

    Tuple equality is componentwise (4/8 != 1/2); use :meth:`compare` or the
    ordering operators, which cross-multiply in exact integer arithmetic.
    """

    numerator: int
    denominator: int

    def compare(self, other: "Slope") -> int:
        lhs = self.numerator * other.denominator
        rhs = other.numerator * self.denominator
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    @property
    def is_vertical(self) -> bool:
        return self.denominator == 0

    def __str__(self) -> str:
        if self.denominator == 0:
            return "inf"
        return f"{self.numerator}/{self.denominator}"


def parse_word(text: str) -> str:
    """Validate that ``text`` uses only '0'/'1' and return it as a word."""
    for i, ch in enumerate(text):
        if ch not in "01":
            raise ParseError(
                f"invalid symbol {ch!r} at position {i}: words contain only '0' and '1'",
                position=i,
            )
    return text


def parikh(w: str) -> ParikhVector:
    """Count the 0s and 1s of ``w``."""
    zeros = w.count("0")
    return ParikhVector(zeros, len(w) - zeros)


def slope(w: str) -> Slope:
    """Exact slope of the path encoded by ``w``; undefined for the empty word."""
    if not w:
        raise ContractError("the slope of the empty word is undefined")
    zeros, ones = parikh(w)
    return Slope(ones, zeros)


def reverse(w: str) -> str:
    return w[::-1]


def complement(w: str) -> str:
    """Swap 0s and 1s."""
    return w.translate(_COMPLEMENT)


def lex_compare(u: str, v: str, order: str = ORDER_01) -> int:
    """Three-way lexicographic comparison under the given letter order.

    Returns -1, 0 or 1.  A proper prefix compares below its extensions.
    """
    if order == ORDER_01:
        return (u > v) - (u < v)
    if order != ORDER_10:
        raise ValueError(f"unknown letter order {order!r}")
    for a, b in zip(u, v):
        if a != b:
            return -1 if a == "1" else 1
    return (len(u) > len(v)) - (len(u) < len(v))


def periods_of(w: str) -> list[int]:
    """All periods p with 1 <= p <= |w|, in ascending order.

    p is a period when w[i] == w[i+p] wherever both sides exist, which is
    the same as the length-(|w|-p) suffix equalling the prefix.
    """
    if not w:
        raise ContractError("periods are defined for nonempty words")
    n = len(w)
    return [p for p in range(1, n + 1) if w[p:] == w[: n - p]]


def primitive_root(w: str) -> tuple[str, int]:
    """The shortest word r and exponent e >= 1 with w == r**e."""
    if not w:
        raise ContractError("the empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w == w[:d] * (n // d):
            return w[:d], n // d
    raise AssertionError("unreachable: every word is a power of itself")


def is_primitive(w: str) -> bool:
    """True when w is not a proper power of a shorter word."""
    return primitive_root(w)[1] == 1


def is_unbordered(w: str) -> bool:
    """True when the only border of w is the empty word (smallest period |w|)."""
    if not w:
        raise ContractError("borders are defined for nonempty words")
    n = len(w)
    return not any(w[p:] == w[: n - p] for p in range(1, n))


def is_palindrome(w: str) -> bool:
    """True when w equals its reversal; the empty word counts as a palindrome."""
    return w == w[::-1]


def conjugates(w: str) -> Iterator[str]:
    """All rotations of w, starting from w itself (with repetitions)."""
    for i in range(max(len(w), 1)):
        yield w[i:] + w[:i]


def are_conjugate(u: str, v: str) -> bool:
    return len(u) == len(v) and v in u + u


def two_palindrome_factorization(w: str) -> tuple[str, str] | None:
    """Split w into two palindromes, or None when no such split exists.

    A split exists exactly when w is a conjugate of its reversal.  For a
    primitive w the unordered pair of palindromes is unique; palindromic
    input returns (w, "").  For non-primitive input the split with the
    shortest first palindrome is returned, which makes the choice
    deterministic.
    """
    if not w:
        raise ContractError("the empty word has no two-palindrome factorization")
    splits = [
        i
        for i in range(len(w) + 1)
        if is_palindrome(w[:i]) and is_palindrome(w[i:])
    ]
    if not splits:
        return None
    if is_palindrome(w) and is_primitive(w):
        return w, ""
    i = splits[0]
    return w[:i], w[i:]
