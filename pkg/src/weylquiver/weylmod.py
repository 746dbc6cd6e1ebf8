"""Graded structure of Weyl modules W(lambda) over the current algebra.

Nothing here builds W(lambda) itself.  The graded multiplicity of V(mu) in
W(lambda) is read off the fermionic form with t -> 1/t, and the grading
filtration is the unique Loewy series, so layers, socle and Loewy length all
follow from that polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum, Weight, is_dominant, pairing, weight_to_root_coords
from .chars import dim_simple, dominant_weights_below
from .exactpoly import LaurentPoly, substitute_power
from .fermionic import fermionic_M

# Bourbaki nodes (0-based) of the minuscule fundamental weights; together with
# 0 they represent the cosets P/Q.
_MINUSCULE = {
    "A": lambda n: list(range(n)),
    "D": lambda n: [0, n - 2, n - 1],
    "E": lambda n: {6: [0, 5], 7: [6], 8: []}[n],
}


def minuscule_nodes(d: CartanDatum) -> list[int]:
    return _MINUSCULE[d.series](d.rank)


def _frac_part(coords) -> tuple[Fraction, ...]:
    return tuple(c - (c.numerator // c.denominator) for c in coords)


def lambda_min(d: CartanDatum, lam: Weight) -> Weight:
    """The minimal dominant weight below lam: 0 or the minuscule weight in its P/Q coset."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    target = _frac_part(weight_to_root_coords(d, lam))
    candidates = [d.zero()] + [d.fundamental_weight(i) for i in minuscule_nodes(d)]
    for cand in candidates:
        if _frac_part(weight_to_root_coords(d, cand)) == target:
            return cand
    raise AssertionError(f"no coset representative for {lam} in {d.name}")


def _half_drop(d: CartanDatum, lam: Weight) -> int:
    lo = lambda_min(d, lam)
    diff = pairing(d, lam, lam) - pairing(d, lo, lo)
    assert diff.denominator == 1 and diff.numerator % 2 == 0, diff
    return int(diff) // 2


def top_degree(d: CartanDatum, lam: Weight) -> int:
    """Highest degree k with W(lam)_k nonzero: ((lam,lam) - (lam_min,lam_min)) / 2."""
    return _half_drop(d, lam)


def loewy_length(d: CartanDatum, lam: Weight) -> int:
    return _half_drop(d, lam) + 1


def socle(d: CartanDatum, lam: Weight) -> Weight:
    return lambda_min(d, lam)


def graded_multiplicity(d: CartanDatum, lam: Weight, mu: Weight, *, max_terms: int | None = None) -> LaurentPoly:
    """sum_k [W(lam)_k : V(mu)] t^k."""
    return substitute_power(fermionic_M(d, lam, mu, max_terms=max_terms), -1)


@dataclass(frozen=True)
class GradedCharacter:
    lam: Weight
    layers: dict[int, dict[Weight, int]]

    @property
    def degrees(self) -> list[int]:
        return sorted(k for k, layer in self.layers.items() if layer)

    def layer(self, k: int) -> dict[Weight, int]:
        return self.layers.get(k, {})

    def dimension(self, d: CartanDatum) -> int:
        return sum(m * dim_simple(d, mu) for layer in self.layers.values() for mu, m in layer.items())

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "layers": [
                {
                    "degree": k,
                    "components": [{"mu": list(mu), "mult": m} for mu, m in self.layers[k].items()],
                }
                for k in self.degrees
            ],
        }


_layer_memo: dict[tuple[CartanDatum, Weight], tuple] = {}


def _layers(d: CartanDatum, lam: Weight, max_terms: int | None) -> tuple:
    if (d, lam) in _layer_memo:
        return _layer_memo[d, lam]
    layers: dict[int, list[tuple[Weight, int]]] = {}
    for mu in sorted(dominant_weights_below(d, lam), reverse=True):
        poly = graded_multiplicity(d, lam, mu, max_terms=max_terms)
        for k, c in poly.items():
            layers.setdefault(k, []).append((mu, c))
    out = tuple((k, tuple(layers[k])) for k in sorted(layers))
    _layer_memo[d, lam] = out
    return out


def graded_character(d: CartanDatum, lam: Weight, *, max_terms: int | None = None) -> GradedCharacter:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return GradedCharacter(lam, {k: dict(layer) for k, layer in _layers(d, lam, max_terms)})


def loewy_report(d: CartanDatum, lam: Weight, *, max_terms: int | None = None) -> dict:
    """Layer table of W(lam), labelled as its unique Loewy series."""
    gch = graded_character(d, lam, max_terms=max_terms)
    return {
        "type": d.name,
        "lambda": list(gch.lam),
        "rigid": True,
        "series": "radical = socle = grading filtration",
        "loewy_length": loewy_length(d, lam),
        "socle": list(socle(d, lam)),
        "top_degree": top_degree(d, lam),
        "dimension": gch.dimension(d),
        "layers": gch.to_json()["layers"],
    }
