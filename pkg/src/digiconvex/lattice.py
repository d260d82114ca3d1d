"""Dominance order and the inflation/deflation moves on digitally convex words.

The dominance profile of a word is the sequence of 1-counts of its
prefixes.  Over a fixed Parikh class the digitally convex words ordered by
dominance form a lattice whose bottom is the lower Christoffel word and
whose top is 1^b 0^a; a single deflation (swap one 10 into 01) moves one
step down, a single inflation (01 into 10) one step up.

Deflation is local: a swap keeps convexity exactly when it sits on the
boundary between two distinct runs in the Lyndon factorization.  Swapping
inside a run of equal factors f·f always creates a forbidden factor (the
outer-letter swap of f·f), so those boundaries are excluded even though
they also read "10".

Inflation is not local.  Within a single Christoffel factor only the swap
at its palindromic split point can work, which prunes the candidates to
one per factor of length >= 2, but a candidate can still break convexity
across factor boundaries, so every candidate is re-validated with a full
convexity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .christoffel import christoffel_lower
from .convexity import is_digitally_convex
from .errors import ContractError
from .lyndon import lyndon_factorization
from .words import parikh, two_palindrome_factorization

DEFLATION = "deflation"
INFLATION = "inflation"


@dataclass(frozen=True)
class Site:
    """A swap location: w[position:position+2] is "10" (deflation) or "01" (inflation).

    ``factor_index`` is the index of the Lyndon factor to the right of the
    boundary (deflation) or the factor containing the pair (inflation).
    """

    kind: str
    position: int
    factor_index: int


class CoverRelations(NamedTuple):
    """Edge sets over one Parikh class; the two are provably identical."""

    inflation: list[tuple[str, str]]
    dominance: list[tuple[str, str]]


def dominance_profile(w: str) -> tuple[int, ...]:
    """Prefix 1-counts s[i] = |w[:i+1]|_1 for i in range(len(w))."""
    out = []
    c = 0
    for ch in w:
        c += ch == "1"
        out.append(c)
    return tuple(out)


def dominance_le(u: str, v: str) -> bool:
    """True when every prefix of v has at least as many 1s as the same prefix of u."""
    if len(u) != len(v):
        raise ContractError("dominance compares words of equal length")
    cu = cv = 0
    for a, b in zip(u, v):
        cu += a == "1"
        cv += b == "1"
        if cu > cv:
            return False
    return True


def _check_meet_join(u: str, v: str) -> None:
    if len(u) != len(v):
        raise ContractError("meet/join need words of equal length")
    if parikh(u) != parikh(v):
        raise ContractError("meet/join need words with equal Parikh vectors")


def _decode_profile(profile) -> str:
    prev = 0
    chars = []
    for value in profile:
        chars.append("1" if value == prev + 1 else "0")
        prev = value
    return "".join(chars)


def meet(u: str, v: str) -> str:
    """Greatest lower bound in dominance order: pointwise minimum of profiles."""
    _check_meet_join(u, v)
    return _decode_profile(map(min, dominance_profile(u), dominance_profile(v)))


def join(u: str, v: str) -> str:
    """Least upper bound in dominance order: pointwise maximum of profiles."""
    _check_meet_join(u, v)
    return _decode_profile(map(max, dominance_profile(u), dominance_profile(v)))


def _require_dc(w: str) -> None:
    report = is_digitally_convex(w)
    if not report.convex:
        raise ContractError(
            f"word is not upward digitally convex: factor {report.witness.factor!r} "
            f"at position {report.witness.start}"
        )


def deflation_sites(w: str) -> list[Site]:
    """All positions where swapping 10 -> 01 keeps the word digitally convex.

    These are the factorization boundaries between distinct neighbors; at
    such a boundary the left factor necessarily ends with 1 and the right
    one starts with 0.
    """
    _require_dc(w)
    fact = lyndon_factorization(w)
    sites = []
    for idx in range(1, len(fact.factors)):
        if fact.factors[idx - 1] != fact.factors[idx]:
            sites.append(Site(DEFLATION, fact.boundaries[idx] - 1, idx))
    return sites


def _site_position(site: Site | int) -> int:
    return site.position if isinstance(site, Site) else int(site)


def deflate(w: str, site: Site | int) -> str:
    """Apply the 10 -> 01 swap at a valid deflation site."""
    pos = _site_position(site)
    if not any(s.position == pos for s in deflation_sites(w)):
        raise ContractError(f"no convexity-preserving 10 swap at position {pos}")
    return w[:pos] + "01" + w[pos + 2 :]


def inflation_sites(w: str) -> list[Site]:
    """All positions where swapping 01 -> 10 keeps the word digitally convex.

    Candidates are the palindromic split points of the factors of length
    >= 2; each is validated on the whole swapped word.  The result is empty
    exactly for 1^b 0^a.
    """
    _require_dc(w)
    fact = lyndon_factorization(w)
    sites = []
    for idx, (start, factor) in enumerate(zip(fact.boundaries, fact.factors)):
        if len(factor) < 2:
            continue
        pal = two_palindrome_factorization(factor)
        assert pal is not None
        pos = start + len(pal[0]) - 1
        swapped = w[:pos] + "10" + w[pos + 2 :]
        if is_digitally_convex(swapped).convex:
            sites.append(Site(INFLATION, pos, idx))
    return sites


def inflate(w: str, site: Site | int) -> str:
    """Apply the 01 -> 10 swap at a valid inflation site."""
    pos = _site_position(site)
    if not any(s.position == pos for s in inflation_sites(w)):
        raise ContractError(f"no convexity-preserving 01 swap at position {pos}")
    return w[:pos] + "10" + w[pos + 2 :]


def deflation_chain(w: str) -> list[str]:
    """Repeated leftmost deflation from w down to the lower Christoffel word."""
    _require_dc(w)
    chain = [w]
    while True:
        sites = deflation_sites(chain[-1])
        if not sites:
            return chain
        pos = sites[0].position
        current = chain[-1]
        chain.append(current[:pos] + "01" + current[pos + 2 :])


def inflation_chain(w: str) -> list[str]:
    """Repeated leftmost inflation from w up to 1^b 0^a."""
    _require_dc(w)
    chain = [w]
    while True:
        sites = inflation_sites(chain[-1])
        if not sites:
            return chain
        pos = sites[0].position
        current = chain[-1]
        chain.append(current[:pos] + "10" + current[pos + 2 :])


def enumerate_dc(a: int, b: int) -> list[str]:
    """All upward digitally convex words with Parikh vector (a, b), sorted.

    Breadth-first closure of inflation starting from the lower Christoffel
    word, which is the bottom of the lattice.
    """
    start = christoffel_lower(a, b)  # validates the pair
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for word in frontier:
            for site in inflation_sites(word):
                result = word[: site.position] + "10" + word[site.position + 2 :]
                if result not in seen:
                    seen.add(result)
                    nxt.append(result)
        frontier = nxt
    return sorted(seen)


def cover_relations(a: int, b: int) -> CoverRelations:
    """Single-inflation edges and dominance cover edges over one Parikh class.

    Both sets are computed independently; they coincide (the inflation
    order and the dominance order induce the same structure).
    """
    words = enumerate_dc(a, b)
    inflation_edges = set()
    for word in words:
        for site in inflation_sites(word):
            inflation_edges.add(
                (word, word[: site.position] + "10" + word[site.position + 2 :])
            )
    less = {
        (u, v)
        for u in words
        for v in words
        if u != v and dominance_le(u, v)
    }
    dominance_edges = {
        (u, v)
        for (u, v) in less
        if not any((u, z) in less and (z, v) in less for z in words)
    }
    return CoverRelations(sorted(inflation_edges), sorted(dominance_edges))
