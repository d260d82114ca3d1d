"""Balance and digital convexity, plus minimal forbidden words.

A word is upward digitally convex exactly when every factor of its Lyndon
factorization (order 0<1) is a primitive lower Christoffel word; the
downward check is the same with order 1<0 and upper words.  Each factor is
tested by comparing it against the Christoffel word freshly built from its
own letter counts, so the whole decision costs a Duval pass plus linear
comparisons.

The balance check is the direct sliding-window definition, O(n^2) with
early exit; fine for the intended n <= 10^4, and the convexity decision
never calls it on whole words.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .christoffel import christoffel_lower, christoffel_upper
from .errors import ContractError
from .lyndon import lyndon_factorization, standard_factorization
from .words import ORDER_01, ORDER_10

UPWARD = "upward"
DOWNWARD = "downward"

COMPLEMENT_CONSTRUCTION = "complement"
PROVENCAL_CONSTRUCTION = "provencal"


@dataclass(frozen=True)
class FactorWitness:
    """Occurrence of an offending factor: w[start:end] == factor."""

    start: int
    end: int
    factor: str


@dataclass(frozen=True)
class ConvexityReport:
    """Outcome of one directional convexity check.

    The witness, present exactly when the check fails, is the first Lyndon
    factor that is not a Christoffel word of the matching kind; taken in
    isolation that factor is unbalanced.
    """

    direction: str
    convex: bool
    witness: FactorWitness | None

    def __bool__(self) -> bool:
        return self.convex


def is_balanced(w: str) -> bool:
    """True when 1-counts of equal-length factors never differ by more than 1."""
    n = len(w)
    if n < 2:
        return True
    ones = [0] * (n + 1)
    for i, ch in enumerate(w):
        ones[i + 1] = ones[i] + (ch == "1")
    for size in range(2, n):  # sizes 1 and n cannot violate balance
        lo = hi = ones[size]
        for start in range(1, n - size + 1):
            c = ones[start + size] - ones[start]
            if c < lo:
                lo = c
            elif c > hi:
                hi = c
            if hi - lo > 1:
                return False
    return True


def is_digitally_convex(w: str, direction: str = UPWARD) -> ConvexityReport:
    """Decide digital convexity in the given direction; the empty word is convex."""
    if direction == UPWARD:
        order, build = ORDER_01, christoffel_lower
    elif direction == DOWNWARD:
        order, build = ORDER_10, christoffel_upper
    else:
        raise ValueError(f"unknown direction {direction!r}")
    fact = lyndon_factorization(w, order)
    for start, factor in zip(fact.boundaries, fact.factors):
        zeros = factor.count("0")
        ones = len(factor) - zeros
        if gcd(zeros, ones) == 1 and factor == build(zeros, ones):
            continue
        return ConvexityReport(
            direction, False, FactorWitness(start, start + len(factor), factor)
        )
    return ConvexityReport(direction, True, None)


def mfw_of_word(w: str, max_len: int | None = None) -> list[str]:
    """Minimal forbidden words of the factor language of ``w``, up to ``max_len``.

    These are the words u absent from w whose two maximal proper factors
    u[1:] and u[:-1] both occur in w.  No such word is longer than |w| + 1,
    which is the default cutoff.  Sorted lexicographically.
    """
    if max_len is None:
        max_len = len(w) + 1
    if max_len < 1:
        raise ContractError("max_len must be a positive integer")
    by_length: dict[int, set[str]] = {}
    for size in range(1, min(max_len, len(w)) + 1):
        by_length[size] = {w[i : i + size] for i in range(len(w) - size + 1)}
    out = [ch for ch in "01" if ch not in by_length.get(1, set())]
    for size in range(2, max_len + 1):
        shorter = by_length.get(size - 1, set())
        full = by_length.get(size, set())
        for left in sorted(shorter):
            for ch in "01":
                cand = left + ch
                if cand not in full and cand[1:] in shorter:
                    out.append(cand)
    return sorted(out)


def mfw_balanced(n: int) -> list[str]:
    """Minimal forbidden words of the balanced language at length n.

    Swap the outer letters of every non-primitive Christoffel word of
    length n: the lower word 0v1 contributes 1v0 and the upper word 1v0
    contributes 0v1.
    """
    if n < 2:
        raise ContractError("minimal forbidden words of Bal exist only for n >= 2")
    out = []
    for a in range(1, n):
        b = n - a
        if gcd(a, b) > 1:
            lower = christoffel_lower(a, b)
            out.append("1" + lower[1:-1] + "0")
            upper = christoffel_upper(a, b)
            out.append("0" + upper[1:-1] + "1")
    return sorted(out)


def mfw_dc(n: int, construction: str = COMPLEMENT_CONSTRUCTION) -> list[str]:
    """Minimal forbidden words of the digitally convex language at length n.

    Two equivalent constructions are kept so they can cross-validate each
    other:

    - "complement": take 0w1 for every non-primitive upper Christoffel
      word 1w0 of length n (these are the members of the balanced MFW set
      that start with 0);
    - "provencal": take u·(uv)^k·v for k >= 1 over the standard
      factorizations (u, v) of primitive lower Christoffel words.

    All members are Lyndon words, and there are exactly n - 1 - phi(n).
    """
    if n < 2:
        raise ContractError("minimal forbidden words of DC exist only for n >= 2")
    if construction == COMPLEMENT_CONSTRUCTION:
        out = []
        for a in range(1, n):
            b = n - a
            if gcd(a, b) > 1:
                upper = christoffel_upper(a, b)
                out.append("0" + upper[1:-1] + "1")
        return sorted(out)
    if construction == PROVENCAL_CONSTRUCTION:
        found = set()
        for copies in range(2, n // 2 + 1):
            if n % copies:
                continue
            m = n // copies
            if m < 2:
                continue
            k = copies - 1
            for a in range(1, m):
                b = m - a
                if gcd(a, b) == 1:
                    u, v = standard_factorization(christoffel_lower(a, b))
                    found.add(u + (u + v) * k + v)
        return sorted(found)
    raise ValueError(f"unknown construction {construction!r}")
