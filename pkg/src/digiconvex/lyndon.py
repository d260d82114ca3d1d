"""Lyndon words and the Chen-Fox-Lyndon factorization.

A nonempty word is Lyndon when it is primitive and lexicographically
smaller than all of its proper suffixes.  Both letter orders are supported
and are passed as the two-character string "01" or "10" (smallest letter
first); the comparison is parameterized rather than the input complemented,
so factors always come back as substrings of the original word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .words import ORDER_01, ORDER_10, lex_compare

PRETTY_SEPARATOR = "·"  # middle dot used for human-readable factorizations


@dataclass(frozen=True)
class LyndonFactorization:
    """The unique factorization of a word into non-increasing Lyndon factors."""

    factors: tuple[str, ...]
    boundaries: tuple[int, ...]  # start index of each factor in the source word
    order: str

    @property
    def word(self) -> str:
        return "".join(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def pretty(self) -> str:
        return PRETTY_SEPARATOR.join(self.factors)


def is_lyndon(w: str, order: str = ORDER_01) -> bool:
    """True when w is strictly below all its proper suffixes under ``order``.

    The suffix condition already forces primitivity: a proper power has one
    of its own prefixes as a suffix.
    """
    if not w:
        raise ContractError("the empty word is not eligible to be a Lyndon word")
    return all(lex_compare(w, w[i:], order) < 0 for i in range(1, len(w)))


def lyndon_factorization(w: str, order: str = ORDER_01) -> LyndonFactorization:
    """Duval's algorithm, linear time; the empty word yields no factors."""
    if order == ORDER_01:
        rank = {"0": 0, "1": 1}
    elif order == ORDER_10:
        rank = {"1": 0, "0": 1}
    else:
        raise ValueError(f"unknown letter order {order!r}")
    factors: list[str] = []
    starts: list[int] = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and rank[w[k]] <= rank[w[j]]:
            k = i if rank[w[k]] < rank[w[j]] else k + 1
            j += 1
        step = j - k
        while i <= k:
            factors.append(w[i : i + step])
            starts.append(i)
            i += step
    return LyndonFactorization(tuple(factors), tuple(starts), order)


def standard_factorization(w: str) -> tuple[str, str]:
    """Split a Lyndon word (order 0<1) before its least proper suffix.

    Both parts are Lyndon words.  The right part is found as the last
    factor of the factorization of w[1:]: the smallest suffix of any word
    is the final factor of its Lyndon factorization.
    """
    if len(w) < 2 or not is_lyndon(w):
        raise ContractError(
            "standard factorization needs a Lyndon word of length >= 2, "
            f"got {w!r}"
        )
    v = lyndon_factorization(w[1:]).factors[-1]
    return w[: len(w) - len(v)], v
