"""Exact counting sequences and the Fibonacci-word fixtures.

All counts are plain Python integers, so arithmetic is arbitrary
precision; the number of digitally convex words starting with 0 (OEIS
A061255) is the Euler transform of the totient function and grows
exponentially.
"""

from __future__ import annotations

from dataclasses import dataclass

from .convexity import mfw_dc
from .errors import ContractError

KINDS = ("dc0", "dc", "balanced", "mfw-dc")

# catalog identifiers for the sequences that have one
OEIS_IDS = {"dc0": "A061255"}


@dataclass(frozen=True)
class CountTable:
    """Values of one counting sequence for n = 0..n_max."""

    kind: str
    values: tuple[int, ...]


def totient(n: int) -> int:
    """Euler's phi via trial-division factorization."""
    if n < 1:
        raise ContractError("totient is defined for n >= 1")
    result = m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def totient_table(n_max: int) -> list[int]:
    """phi(0..n_max) by sieve, with the unused index 0 holding 0."""
    if n_max < 0:
        raise ContractError("n_max must be nonnegative")
    phi = list(range(n_max + 1))
    for p in range(2, n_max + 1):
        if phi[p] == p:  # p is prime
            for multiple in range(p, n_max + 1, p):
                phi[multiple] -= phi[multiple] // p
    return phi


def count_dc0_table(n_max: int) -> list[int]:
    """|DC_0(n)| for n = 0..n_max: digitally convex words starting with 0.

    Euler-transform recurrence
        n * |DC_0(n)| = sum_{k=1..n} c(k) * |DC_0(n-k)|,  c(k) = sum_{d|k} d*phi(d),
    with |DC_0(0)| = 1.  The division is checked to be exact.
    """
    if n_max < 0:
        raise ContractError("n_max must be nonnegative")
    phi = totient_table(n_max)
    c = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        term = d * phi[d]
        for k in range(d, n_max + 1, d):
            c[k] += term
    values = [1]
    for n in range(1, n_max + 1):
        total = sum(c[k] * values[n - k] for k in range(1, n + 1))
        quotient, remainder = divmod(total, n)
        if remainder:
            raise AssertionError(f"Euler transform not divisible at n={n}")
        values.append(quotient)
    return values


def count_dc0(n: int) -> int:
    return count_dc0_table(n)[n]


def count_dc(n: int) -> int:
    """|DC(n)| = sum of |DC_0(k)| for k <= n: every convex word is 1^j times one in DC_0."""
    return sum(count_dc0_table(n))


def count_balanced(n: int) -> int:
    """Number of balanced words of length n: 1 + sum_{k=1..n} (n-k+1) phi(k)."""
    if n < 0:
        raise ContractError("n must be nonnegative")
    phi = totient_table(n)
    return 1 + sum((n - k + 1) * phi[k] for k in range(1, n + 1))


def count_table(kind: str, n_max: int) -> CountTable:
    """Table of one sequence for the CLI and the service."""
    if n_max < 0:
        raise ContractError("n_max must be nonnegative")
    if kind == "dc0":
        values = count_dc0_table(n_max)
    elif kind == "dc":
        dc0 = count_dc0_table(n_max)
        total = 0
        values = []
        for v in dc0:
            total += v
            values.append(total)
    elif kind == "balanced":
        values = [count_balanced(n) for n in range(n_max + 1)]
    elif kind == "mfw-dc":
        values = [len(mfw_dc(n)) if n >= 2 else 0 for n in range(n_max + 1)]
    else:
        raise ContractError(f"unknown counting kind {kind!r}; expected one of {KINDS}")
    return CountTable(kind, tuple(values))


def fibonacci_word(length: int) -> str:
    """Prefix of the Fibonacci word 0100101001001..., fixed point of 0->01, 1->0."""
    if length < 0:
        raise ContractError("length must be nonnegative")
    if length == 0:
        return ""
    s = "0"
    while len(s) < length:
        s = "".join("01" if ch == "0" else "0" for ch in s)
    return s[:length]


def lyndon_fib(i: int) -> str:
    """The i-th word of the Christoffel-Lyndon sequence for the Fibonacci word.

    l_1 = 1, l_2 = 0, l_{2n+1} = l_{2n} l_{2n-1}, l_{2n+2} = l_{2n} l_{2n+1};
    |l_i| is the i-th Fibonacci number, and the odd-indexed words are the
    Lyndon factors of the Fibonacci word.
    """
    if i < 1:
        raise ContractError("indices start at 1")
    table = ["", "1", "0"]
    for m in range(3, i + 1):
        if m % 2:
            table.append(table[m - 1] + table[m - 2])
        else:
            table.append(table[m - 2] + table[m - 1])
    return table[i]
