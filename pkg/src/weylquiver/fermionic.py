"""Fermionic forms M(lambda, mu, t) for simply-laced types.

A mode sequence m = (m_k^(i)) is stored as a dict {(i, k): count} holding
only the nonzero counts; node indices i are 0-based, part sizes k >= 1.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .cartan import CartanDatum, Weight, integral_root_coords, is_dominant, sub
from .exactpoly import ZERO, LaurentPoly, gauss_binomial

ModeSequence = dict[tuple[int, int], int]


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration goes past the caller's ``max_terms`` bound."""


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples, in colex order."""
    if n < 0:
        return []
    out: list[tuple[int, ...]] = []

    def rec(rest: int, cap: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(1, min(rest, cap) + 1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _counts(parts: tuple[int, ...]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    return counts


def _q(counts: dict[int, int], k: int) -> int:
    """sum_l min(k, l) m_l for one node."""
    return sum(min(k, l) * c for l, c in counts.items())


def root_coords_between(d: CartanDatum, lam: Weight, mu: Weight) -> tuple[int, ...] | None:
    """Simple-root coordinates n of lam - mu, or None unless lam - mu is in Q_+."""
    n = integral_root_coords(d, sub(lam, mu))
    if n is None or any(x < 0 for x in n):
        return None
    return n


def _node_candidates(d: CartanDatum, lam: Weight, n: tuple[int, ...]) -> list[list[dict[int, int]]]:
    """Per-node partitions of n_i that can still give a nonzero summand.

    Neighbours only raise p_k^(i), by at most n_j each, so a partition whose
    vacancy stays negative under that bound at a used part size is dropped.
    """
    out = []
    for i in range(d.rank):
        boost = sum(n[j] for j in d.neighbours(i))
        keep = []
        for parts in partitions(n[i]):
            counts = _counts(parts)
            if all(lam[i] - 2 * _q(counts, k) + boost >= 0 for k in counts):
                keep.append(counts)
        out.append(keep)
    return out


def enumerate_S(
    d: CartanDatum, lam: Weight, mu: Weight, *, prune: bool = False, max_terms: int | None = None
) -> list[ModeSequence]:
    """All m with sum_k k m_k^(i) = n_i, where lam - mu = sum_i n_i alpha_i.

    With ``prune`` set, per-node partitions that are bound to produce a zero
    Gaussian factor are skipped; the result is then a subset of S(lam, mu)
    carrying the same fermionic sum.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = root_coords_between(d, lam, mu)
    if n is None:
        return []
    if prune:
        per_node = _node_candidates(d, lam, n)
    else:
        per_node = [[_counts(p) for p in partitions(n[i])] for i in range(d.rank)]
    out = []
    for combo in product(*per_node):
        if max_terms is not None and len(out) >= max_terms:
            raise BudgetExceeded(
                f"more than {max_terms} mode sequences for lambda={lam}, mu={mu}"
            )
        out.append({(i, k): c for i, counts in enumerate(combo) for k, c in sorted(counts.items())})
    return out


def _by_node(d: CartanDatum, m: ModeSequence) -> list[dict[int, int]]:
    nodes: list[dict[int, int]] = [{} for _ in range(d.rank)]
    for (i, k), c in m.items():
        if c:
            nodes[i][k] = nodes[i].get(k, 0) + c
    return nodes


def vacancy(d: CartanDatum, m: ModeSequence, lam: Weight, i: int, k: int) -> int:
    nodes = _by_node(d, m)
    return lam[i] - sum(d.cartan[i][j] * _q(nodes[j], k) for j in range(d.rank) if nodes[j])


def charge(d: CartanDatum, m: ModeSequence, lam: Weight) -> int:
    nodes = _by_node(d, m)
    quad = 0
    for i in range(d.rank):
        for j in range(d.rank):
            cij = d.cartan[i][j]
            if cij == 0 or not nodes[i] or not nodes[j]:
                continue
            quad += cij * sum(
                min(k, l) * ck * cl for k, ck in nodes[i].items() for l, cl in nodes[j].items()
            )
    half = Fraction(quad, 2)
    if half.denominator != 1:
        raise ArithmeticError(f"non-integral charge for {m}: inconsistent Cartan data")
    linear = sum(lam[i] * c for (i, _), c in m.items())
    return int(half) - linear


def summand(d: CartanDatum, m: ModeSequence, lam: Weight) -> LaurentPoly:
    """t^c(m, lam) times the product of [p + m choose m] over the support of m."""
    term = LaurentPoly.monomial(charge(d, m, lam))
    for (i, k), c in sorted(m.items()):
        if c == 0:
            continue
        factor = gauss_binomial(vacancy(d, m, lam, i, k) + c, c)
        if factor.is_zero():
            return ZERO
        term = term * factor
    return term


_memo: dict[tuple[CartanDatum, Weight, Weight], LaurentPoly] = {}


def _fermionic(d: CartanDatum, lam: Weight, mu: Weight, max_terms: int | None) -> LaurentPoly:
    key = (d, lam, mu)
    if key in _memo:
        return _memo[key]
    total = ZERO
    for m in enumerate_S(d, lam, mu, prune=True, max_terms=max_terms):
        total = total + summand(d, m, lam)
    for e, c in total.items():
        if e > 0 or c < 0:
            raise ArithmeticError(
                f"fermionic form for lambda={lam}, mu={mu} is not a polynomial in "
                f"t^-1 with nonnegative coefficients: {total}"
            )
    _memo[key] = total
    return total


def fermionic_M(d: CartanDatum, lam: Weight, mu: Weight, *, max_terms: int | None = None) -> LaurentPoly:
    lam, mu = tuple(lam), tuple(mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError(f"fermionic form needs dominant weights, got {lam} and {mu}")
    return _fermionic(d, lam, mu, max_terms)
