"""Type A formulas that do not go through the fermionic form.

* the Chari-Loktev sum over decompositions of alpha into positive roots,
* counts of row-increasing tableaux of transposed shape,
* Kostka numbers (semistandard tableaux of given shape and content).

Dominant weights of A_n are identified with partitions of length <= n via
lambda_r = sum_{i >= r} m_i, and weights with vectors on n + 1 letters.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .cartan import CartanDatum, RootElem, Weight, integral_root_coords, sub
from .exactpoly import ONE, ZERO, LaurentPoly, gauss_binomial, substitute_power

Filling = dict[tuple[int, int], int]


def _require_a(d: CartanDatum) -> None:
    if d.series != "A":
        raise ValueError(f"type A only, got {d.name}")


def to_partition(lam: Weight) -> tuple[int, ...]:
    """Fundamental-weight coordinates -> partition on n + 1 coordinates (last one 0)."""
    n = len(lam)
    return tuple(sum(lam[r:]) for r in range(n)) + (0,)


def root_to_epsilon(alpha: RootElem) -> tuple[int, ...]:
    """alpha_i = e_i - e_{i+1}."""
    padded = (0,) + tuple(alpha) + (0,)
    return tuple(padded[r + 1] - padded[r] for r in range(len(alpha) + 1))


def content_of(lam: Weight, alpha: RootElem) -> tuple[int, ...]:
    """Letter content of the weight lam - alpha, summing to |lam|."""
    return tuple(p - e for p, e in zip(to_partition(lam), root_to_epsilon(alpha)))


def enumerate_S_alpha(d: CartanDatum, alpha: RootElem) -> list[Filling]:
    """All (l_ij), 0 <= i <= j < n, with sum l_ij (alpha_i + ... + alpha_j) = alpha."""
    _require_a(d)
    alpha = tuple(alpha)
    if len(alpha) != d.rank:
        raise ValueError(f"alpha {alpha} does not match rank {d.rank}")
    if any(a < 0 for a in alpha):
        return []
    n = d.rank
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    out: list[Filling] = []

    def rec(idx: int, rest: list[int], acc: list[int]) -> None:
        if idx == len(pairs):
            if not any(rest):
                out.append(dict(zip(pairs, acc)))
            return
        i, j = pairs[idx]
        # every root covering coordinate i starts at or before i
        if j == i and idx > 0 and pairs[idx - 1][0] < i and rest[i - 1]:
            return
        top = min(rest[i : j + 1])
        for v in range(top + 1):
            for s in range(i, j + 1):
                rest[s] -= v
            acc.append(v)
            rec(idx + 1, rest, acc)
            acc.pop()
            for s in range(i, j + 1):
                rest[s] += v

    rec(0, list(alpha), [])
    return out


def chari_loktev_polynomial(d: CartanDatum, alpha: RootElem, lam: Weight) -> LaurentPoly:
    """sum over S(alpha) of prod_{i<=j} [lam_i + sum_{s>j} l_{i+1,s} - sum_{s>j} l_{i,s} choose l_ij]_{t^2}."""
    _require_a(d)
    n = d.rank
    total = ZERO
    for l in enumerate_S_alpha(d, alpha):
        term = ONE
        for (i, j), lij in l.items():
            tail_next = sum(l[(i + 1, s)] for s in range(j + 1, n)) if i + 1 < n else 0
            tail_own = sum(l[(i, s)] for s in range(j + 1, n))
            term = term * gauss_binomial(lam[i] + tail_next - tail_own, lij)
            if term.is_zero():
                break
        total = total + term
    return substitute_power(total, 2)


def count_row_increasing_tableaux(d: CartanDatum, alpha: RootElem, lam: Weight) -> int:
    """Fillings of the transposed diagram of lam with strictly increasing rows and
    content lam - alpha; no condition is imposed down the columns."""
    _require_a(d)
    content = content_of(lam, alpha)
    if any(c < 0 for c in content):
        return 0
    rows = _transpose(to_partition(lam))
    letters = len(content)

    @lru_cache(maxsize=None)
    def count(r: int, rest: tuple[int, ...]) -> int:
        if r == len(rows):
            return int(not any(rest))
        total = 0
        avail = [x for x in range(letters) if rest[x] > 0]
        for subset in combinations(avail, rows[r]):
            nxt = list(rest)
            for x in subset:
                nxt[x] -= 1
            total += count(r + 1, tuple(nxt))
        return total

    return count(0, content)


def _transpose(part: tuple[int, ...]) -> tuple[int, ...]:
    part = tuple(p for p in part if p > 0)
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > c) for c in range(part[0]))


def _horizontal_strips(outer: tuple[int, ...], size: int):
    """Partitions inner with outer / inner a horizontal strip of the given size."""
    k = len(outer)

    def rec(r: int, rest: int, acc: list[int]):
        if r == k:
            if rest == 0:
                yield tuple(acc)
            return
        lower = outer[r + 1] if r + 1 < k else 0
        for v in range(max(lower, outer[r] - rest), outer[r] + 1):
            acc.append(v)
            yield from rec(r + 1, rest - (outer[r] - v), acc)
            acc.pop()

    yield from rec(0, size, [])


def kostka_number(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Semistandard tableaux of the given shape and content, by peeling off the
    largest letter as a horizontal strip."""
    shape = tuple(p for p in shape if p > 0)
    content = tuple(content)
    if any(c < 0 for c in content) or sum(shape) != sum(content):
        return 0

    @lru_cache(maxsize=None)
    def rec(outer: tuple[int, ...], letters: int) -> int:
        if letters == 0:
            return int(sum(outer) == 0)
        total = 0
        for inner in _horizontal_strips(outer, content[letters - 1]):
            total += rec(inner, letters - 1)
        return total

    return rec(shape, len(content))


def kostka_multiplicity(d: CartanDatum, lam: Weight, mu: Weight) -> int:
    """Kostka number K_{lam, mu} with mu read as a content on n + 1 letters."""
    _require_a(d)
    alpha = integral_root_coords(d, sub(lam, mu))
    if alpha is None:
        return 0
    return kostka_number(to_partition(lam), content_of(lam, alpha))
