"""Root data for the simply-laced simple Lie algebras A_n, D_n, E_6, E_7, E_8.

Weights are tuples of integers in the fundamental-weight basis, root lattice
elements are tuples of integers in the simple-root basis.  Nodes are indexed
from 0 internally and follow the Bourbaki numbering shifted down by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Weight = tuple[int, ...]
RootElem = tuple[int, ...]


class UnsupportedTypeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CartanDatum:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[RootElem, ...]
    adjacency: tuple[tuple[int, int], ...]

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def simple_root(self, i: int) -> RootElem:
        return tuple(int(j == i) for j in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(j == i) for j in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.cartan[i][j] != 0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CartanDatum):
            return NotImplemented
        return (self.series, self.rank) == (other.series, other.rank)

    def __hash__(self) -> int:
        return hash((self.series, self.rank))

    def __repr__(self) -> str:
        return f"CartanDatum({self.name})"


def _edges(series: str, rank: int) -> list[tuple[int, int]]:
    if series == "A":
        return [(i, i + 1) for i in range(rank - 1)]
    if series == "D":
        chain = [(i, i + 1) for i in range(rank - 2)]
        return chain + [(rank - 3, rank - 1)]
    # E_n in Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4.
    edges = [(0, 2), (1, 3)]
    edges += [(i, i + 1) for i in range(2, rank - 1)]
    return sorted(edges)


def _check_supported(series: str, rank: int) -> None:
    ok = (
        (series == "A" and rank >= 1)
        or (series == "D" and rank >= 4)
        or (series == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise UnsupportedTypeError(
            f"unsupported Cartan type {series}{rank}: only simply-laced types "
            "A_n (n>=1), D_n (n>=4), E6, E7, E8 are available"
        )


def _invert(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[RootElem, ...]:
    """Close the simple roots under adding simple roots, level by level.

    For a positive root beta and a simple root alpha_i with beta != alpha_i, the
    alpha_i-string through beta runs from beta - p*alpha_i to beta + q*alpha_i
    with p - q = <beta, alpha_i>; beta + alpha_i is a root iff q > 0.
    """
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    found = set(simple)
    level = list(simple)
    ordered = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                if beta == simple[i]:
                    continue
                pair = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - pair
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        ordered.extend(nxt)
        level = nxt
    return tuple(ordered)


def build_cartan(series: str, rank: int) -> CartanDatum:
    return _build(series.upper(), int(rank))


@lru_cache(maxsize=None)
def _build(series: str, rank: int) -> CartanDatum:
    _check_supported(series, rank)
    edges = _edges(series, rank)
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        cartan[i][j] = cartan[j][i] = -1
    cartan_t = tuple(tuple(row) for row in cartan)
    return CartanDatum(
        series=series,
        rank=rank,
        cartan=cartan_t,
        cartan_inv=_invert(cartan_t),
        positive_roots=_positive_roots(cartan_t),
        adjacency=tuple(edges),
    )


def parse_type(text: str) -> CartanDatum:
    """Parse a label such as ``"A3"`` or ``"e6"``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise UnsupportedTypeError(f"cannot parse Cartan type {text!r}")
    return build_cartan(text[0], int(text[1:]))


def _check_len(d: CartanDatum, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != d.rank:
            raise ValueError(
                f"vector {tuple(v)} has length {len(v)}, expected rank {d.rank}"
            )


def pairing(d: CartanDatum, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """Invariant form on weights, normalised so that roots have square length 2."""
    _check_len(d, x, y)
    n = d.rank
    return sum(
        (x[i] * d.cartan_inv[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j]),
        Fraction(0),
    )


def root_pairing(d: CartanDatum, a: Sequence[int], b: Sequence[int]) -> int:
    _check_len(d, a, b)
    n = d.rank
    return sum(a[i] * d.cartan[i][j] * b[j] for i in range(n) for j in range(n))


def weight_root_pairing(d: CartanDatum, x: Sequence[int], a: Sequence[int]) -> int:
    """(x, a) for a weight x and a root lattice element a; (varpi_i, alpha_j) = delta_ij."""
    _check_len(d, x, a)
    return sum(xi * ai for xi, ai in zip(x, a))


def root_to_weight(d: CartanDatum, a: Sequence[int]) -> Weight:
    _check_len(d, a)
    return tuple(sum(d.cartan[i][j] * a[j] for j in range(d.rank)) for i in range(d.rank))


def weight_to_root_coords(d: CartanDatum, x: Sequence[int]) -> tuple[Fraction, ...]:
    _check_len(d, x)
    return tuple(
        sum((d.cartan_inv[i][j] * x[j] for j in range(d.rank)), Fraction(0))
        for i in range(d.rank)
    )


def integral_root_coords(d: CartanDatum, x: Sequence[int]) -> RootElem | None:
    """Simple-root coordinates of x, or None when x is not in the root lattice."""
    coords = weight_to_root_coords(d, x)
    if any(c.denominator != 1 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def is_dominant(x: Sequence[int]) -> bool:
    return all(c >= 0 for c in x)


def sub(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(x, y))


def add(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(x, y))


def reflect(d: CartanDatum, x: Sequence[int], i: int) -> Weight:
    """Simple reflection s_i on a weight in fundamental-weight coordinates."""
    c = x[i]
    return tuple(x[j] - c * d.cartan[i][j] for j in range(d.rank))


def dominant_conjugate(d: CartanDatum, x: Sequence[int]) -> Weight:
    _check_len(d, x)
    x = tuple(x)
    while True:
        i = next((j for j, c in enumerate(x) if c < 0), None)
        if i is None:
            return x
        x = reflect(d, x, i)


def weyl_orbit(d: CartanDatum, x: Sequence[int]) -> set[Weight]:
    """All Weyl conjugates of x, by closing under simple reflections."""
    _check_len(d, x)
    start = tuple(x)
    seen = {start}
    stack = [start]
    while stack:
        y = stack.pop()
        for i in range(d.rank):
            if y[i] != 0:
                z = reflect(d, y, i)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return seen
